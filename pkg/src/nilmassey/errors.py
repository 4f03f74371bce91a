"""Exception types shared across the package."""


class NilMasseyError(Exception):
    """Base class for all package errors."""


class ZeroInverse(NilMasseyError):
    """Inversion of 0 mod l requested."""


class DimensionMismatch(NilMasseyError):
    """Matrix/vector shapes do not line up."""


class ModulusMismatch(NilMasseyError):
    """Operands live over different moduli."""


class BadPrime(NilMasseyError):
    """Modulus is composite or <= 3."""


class BadGenus(NilMasseyError):
    """Genus (or free rank) outside the supported range."""


class ContextMismatch(NilMasseyError):
    """Group elements belong to different contexts."""


class WordSyntaxError(NilMasseyError):
    """Malformed word text; carries the byte offset of the failure."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class UnknownGenerator(NilMasseyError):
    """Word references a generator the context does not have."""


class InvalidHom(NilMasseyError):
    """Generator images do not preserve the surface relation."""


class NotInThirdLayer(NilMasseyError):
    """h_l applied to an element outside the degree-3 layer."""


class PreconditionFailed(NilMasseyError):
    """A stated proposition precondition does not hold."""


class NotInvariant(NilMasseyError):
    """Character is not invariant under the acting automorphism."""


class BadOrder(NilMasseyError):
    """Automorphism order does not divide l."""


class NotInG3(NilMasseyError):
    """Automorphism acts nontrivially where the Johnson map needs triviality."""
