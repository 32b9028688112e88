"""Exception hierarchy shared by all foldprod modules."""


class FoldprodError(Exception):
    """Base class for all library errors."""


class NonPositiveArgument(FoldprodError):
    """Gamma/log-gamma called with an argument <= 0."""


class TangentPole(FoldprodError):
    """tan(pi*r) requested at r = 1/2 mod 1."""


class DomainError(FoldprodError):
    """Parameter outside the documented domain of an operation."""


class UnequalFactorCounts(FoldprodError):
    """Numerator and denominator root lists have different lengths."""


class NonPositiveFactorOnTail(FoldprodError):
    """Some factor n + root is not positive for an index n >= start."""

    def __init__(self, root, n):
        self.root = root
        self.n = n
        super().__init__(f"factor n + {root} is not positive at n = {n}")


class UnbalancedUnsignedProduct(FoldprodError):
    """Unsigned product with sum(num_roots) != sum(den_roots) diverges."""


class UnbalancedSums(FoldprodError):
    """Gamma-ratio product requires equal root sums."""


class PoleArgument(FoldprodError):
    """A gamma argument lies in {0, -1, -2, ...}."""


class PrecisionUnreachable(FoldprodError):
    """The configured caps do not allow the requested certified accuracy."""


class InvalidG(FoldprodError):
    """The rational map g is not positive where the reduction evaluates it."""


class UsageError(FoldprodError):
    """Malformed command-line request."""
