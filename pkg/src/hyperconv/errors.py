"""Exception types raised across the package."""


class HyperconvError(Exception):
    """Base class for every error raised by this package."""


class NotATopology(HyperconvError):
    pass


class InconsistentSpec(HyperconvError):
    pass


class EmptySpace(HyperconvError):
    pass


class NotIsotone(HyperconvError):
    pass


class NotCentered(HyperconvError):
    def __init__(self, point):
        super().__init__(f"point {point!r} is not a limit of its own point filter")
        self.point = point


class NotMonotone(HyperconvError):
    def __init__(self, kernel, larger):
        super().__init__(
            f"kernel {kernel!r} is contained in {larger!r} but lim of the larger "
            "kernel is not contained in lim of the smaller one")
        self.kernel = kernel
        self.larger = larger


class ArityMismatch(HyperconvError):
    pass


class DegenerateAlpha(HyperconvError):
    pass


class DegenerateFilter(HyperconvError):
    """Two filters have no common refinement (their kernels are disjoint)."""


class EmptyBase(HyperconvError):
    pass


class TruncationInsufficient(HyperconvError):
    pass


class NotSolid(HyperconvError):
    pass


class NonPositiveSlope(HyperconvError):
    pass


class NotACover(HyperconvError):
    def __init__(self, index: int):
        super().__init__(f"cover #{index} is not an alpha-cover of the target open")
        self.index = index


class UnknownLaw(HyperconvError):
    pass


class SizeTooLarge(HyperconvError):
    pass
