"""Exception classes raised by the kernel."""


class GwaError(Exception):
    """Base class for every error raised by this package."""


# coefficients


class DivisionByZero(GwaError, ZeroDivisionError):
    pass


class FieldMismatch(GwaError):
    pass


# polynomials


class InexactDivision(GwaError):
    pass


class NotInvertible(GwaError):
    pass


class VariableAbsent(GwaError):
    pass


class ZeroPolynomial(GwaError):
    pass


class RingMismatch(GwaError):
    pass


# presentations and elements


class NonCommutingSigmas(GwaError):
    def __init__(self, i, j):
        super().__init__(f"sigma_{i} and sigma_{j} do not commute")
        self.i, self.j = i, j


class SigmaMovesForeignA(GwaError):
    def __init__(self, i, j):
        super().__init__(f"sigma_{i} does not fix a_{j}")
        self.i, self.j = i, j


class ZeroDefiningElement(GwaError):
    def __init__(self, i):
        super().__init__(f"a_{i} is zero")
        self.i = i


class AlgebraMismatch(GwaError):
    pass


# skew ring


class ContextMismatch(GwaError):
    pass


class NotSurjectiveType(GwaError):
    pass


class NotInImage(GwaError):
    def __init__(self, degree):
        super().__init__(f"coefficient at degree {list(degree)} is not in the image")
        self.degree = tuple(degree)


class NotStabilizerInvariant(GwaError):
    pass


# groups and checkers


class CapExceeded(GwaError):
    pass


class NotDivisible(GwaError):
    pass


class FieldLacksRoots(GwaError):
    pass


class RootOfUnityLambda(GwaError):
    pass


class NonClassicalSetting(GwaError):
    pass


# parsing


class ParseError(GwaError):
    """Base class for errors in textual input."""


class GwaSyntaxError(ParseError):
    def __init__(self, message, position):
        super().__init__(f"{message} at offset {position}")
        self.position = position


class UnknownSymbol(ParseError):
    def __init__(self, name):
        super().__init__(f"unknown symbol {name!r}")
        self.name = name


class RankOutOfRange(ParseError):
    def __init__(self, index, rank):
        super().__init__(f"generator index {index} outside rank {rank}")
        self.index, self.rank = index, rank


class NegativeExponent(ParseError):
    pass
