class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


class DegenerateParameterError(PreconditionError):
    """A closed form would divide by a vanishing parameter."""


class ZeroPolynomialError(PreconditionError):
    pass
