"""Exception types raised across the package."""


class AffineCoresError(ValueError):
    pass


class BoxOutOfRangeError(AffineCoresError):
    pass


class NotACoreError(AffineCoresError):
    pass


class NotASymmetricCoreError(NotACoreError):
    pass


class InvalidWindowError(AffineCoresError):
    pass


class GeneratorIndexError(AffineCoresError):
    pass


class NotInDomainError(AffineCoresError):
    pass


class IdentityAbacusError(AffineCoresError):
    pass


class NotReducedError(AffineCoresError):
    pass


class BoundExceededError(AffineCoresError):
    pass


class RankMismatchError(AffineCoresError):
    pass


class MixedAddableRemovableError(AssertionError):
    """A residue had addable and removable boxes at the same time."""
