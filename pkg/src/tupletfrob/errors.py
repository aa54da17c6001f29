"""Exception types shared across the package."""


class DomainError(Exception):
    """Base class for domain-level failures (CLI exit code 1)."""


class EmptyInputError(DomainError):
    pass


class NonPositiveElementError(DomainError):
    pass


class GcdNotOneError(DomainError):
    def __init__(self, gcd: int):
        self.gcd = gcd
        super().__init__(f"generators have gcd {gcd}, expected 1")


class ModulusNotInSemigroupError(DomainError):
    pass


class SemigroupIsNaturalsError(DomainError):
    pass


class KTooLargeError(DomainError):
    pass


class NotAdmissibleError(DomainError):
    pass


class UnsupportedPatternError(DomainError):
    pass


class ResidueMismatchError(DomainError):
    pass


class KBelowMinimumError(DomainError):
    pass


class BoundExceededError(DomainError):
    pass


class InsufficientSamplesError(DomainError):
    pass
