"""Exception types raised across the package."""


class FocalError(ValueError):
    """Base class for all rejected inputs."""


class DimensionError(FocalError):
    pass


class OrderError(FocalError):
    """A series is too short for the requested truncation order."""


class NormalizationError(FocalError):
    """A series violates V(0) = 0, V'(0) != 0 or a similar precondition."""


class DegenerateSpectrumError(FocalError):
    """Repeated diagonal entries; carries the colliding index pairs."""

    def __init__(self, message, collisions=()):
        super().__init__(message)
        self.collisions = tuple(collisions)


class SingularError(FocalError):
    pass


class CapExceededError(FocalError):
    """Tensor-product dimension exceeds the configured cap."""

    def __init__(self, message, dim):
        super().__init__(message)
        self.dim = dim


class CommutationError(FocalError):
    """Raising operators of a multivariate system fail to commute."""
