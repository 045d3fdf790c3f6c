"""Exact generalized binomial coefficient triangles, their closed forms,
row polynomials with Sturm reality certificates, and the Q_k distribution."""

from .closed_form import FactoredValue, gbc_factored, gbc_hyper, row_sum_series
from .errors import DegenerateParameterError, PreconditionError, ZeroPolynomialError
from .exact import bell, binomial, format_rational, parse_rational, rising_factorial, stirling_first_unsigned, stirling_second
from .poly import Poly
from .qk import QkSpec, density, qk_form1, qk_form2, qk_form3, qk_recurrence
from .rowpoly import phi, phi_product_form
from .sturm import RealityCertificate, certify_all_real, negativity_check, sturm_distinct_real_roots
from .triangle import GBCTable, Params, compute_table, entry, row_sum

__version__ = "0.1.0"
