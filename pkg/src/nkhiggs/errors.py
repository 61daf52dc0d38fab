"""Named domain errors. The CLI maps every subclass of DomainError to exit code 3."""


class DomainError(Exception):
    @property
    def name(self) -> str:
        return type(self).__name__


class KaehlerCase(DomainError):
    pass


class NegativeGenus(DomainError):
    pass


class InvalidSurface(DomainError):
    pass


class InvalidLineBundle(DomainError):
    pass


class InvalidJump(DomainError):
    pass


class DegenerateInput(DomainError):
    pass


class NotTraceFree(DomainError):
    pass


class DegreeMismatch(DomainError):
    pass


class NestedExtension(DomainError):
    pass


class InconsistentCase(DomainError):
    pass


class PreconditionError(DomainError):
    pass


class LedgerViolation(DomainError):
    pass


class InvalidModification(DomainError):
    pass


class InvalidDescriptor(DomainError):
    pass


class NotNonFiltrable(DomainError):
    pass


class RangeError(DomainError):
    pass


class InconsistentInput(DomainError):
    pass
