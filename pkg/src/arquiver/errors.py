"""Domain errors.

Every error raised by library operations derives from DomainError and carries
a stable machine-readable name used by the CLI (exit code 2) and the HTTP
service (400 responses).
"""


class DomainError(Exception):
    name = "DomainError"

    def __init__(self, detail="", **data):
        super().__init__(detail)
        self.detail = detail
        self.data = data

    def to_json(self):
        out = {"error": self.name, "detail": self.detail}
        if self.data:
            out["data"] = {k: v for k, v in self.data.items()}
        return out


class CoreCycle(DomainError):
    name = "CoreCycle"


class DanglingArrow(DomainError):
    name = "DanglingArrow"


class EmptyPeriod(DomainError):
    name = "EmptyPeriod"


class UnknownVertex(DomainError):
    name = "UnknownVertex"


class Disconnected(DomainError):
    name = "Disconnected"


class WrongType(DomainError):
    name = "WrongType"


class WrongQuiver(DomainError):
    name = "WrongQuiver"


class ReduciblePolynomial(DomainError):
    name = "ReduciblePolynomial"


class InvalidString(DomainError):
    name = "InvalidString"


class NotFinitelyPresented(DomainError):
    name = "NotFinitelyPresented"


class NotProjective(DomainError):
    name = "NotProjective"


class NotIndecomposable(DomainError):
    name = "NotIndecomposable"


class NotMember(DomainError):
    name = "NotMember"


class UnboundedInteraction(DomainError):
    name = "UnboundedInteraction"


class Undecided(DomainError):
    name = "Undecided"


class BadSeed(DomainError):
    name = "BadSeed"


class BadRepName(DomainError):
    name = "BadRepName"
