"""Exception hierarchy.  Each class carries a short machine-readable ``code``."""


class ConeWallsError(ValueError):
    code = "invalid"


class SignatureError(ConeWallsError):
    code = "signature"


class DegenerateError(ConeWallsError):
    code = "degenerate"


class BadReferenceError(ConeWallsError):
    code = "reference"


class NotNegativeDefiniteError(ConeWallsError):
    code = "not_negative_definite"


class ZeroVectorError(ConeWallsError):
    code = "zero_vector"


class NotInConeError(ConeWallsError):
    code = "not_in_cone"


class NotAnIsometryError(ConeWallsError):
    code = "isometry"


class PairingError(ConeWallsError):
    code = "pairing"


class PreconditionError(ConeWallsError):
    """Violated geometric precondition (cone position, dependence, ...)."""

    code = "precondition"


class StabilizerError(ConeWallsError):
    """The Dirichlet basepoint is fixed by a non-identity group element."""

    code = "stabilizer"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class MukaiVectorError(ConeWallsError):
    code = "mukai_vector"
