"""Exception types raised by the numerical core."""


class ZeroConstantTerm(ArithmeticError):
    """A series that must be inverted has a (numerically) vanishing constant term."""


class InvalidRadius(ValueError):
    pass


class UnknownCase(KeyError):
    pass


class NoSignChange(ValueError):
    """The supplied bracket does not enclose a sign change."""


class InvalidOrderParam(ValueError):
    """Bessel order outside nu > -1."""
