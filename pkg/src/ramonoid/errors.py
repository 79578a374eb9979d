"""Exception types shared across the package."""


class RingDescriptionError(ValueError):
    """An invalid ring description (bad field, non-prime modulus, ...)."""


class DescriptionSyntaxError(RingDescriptionError):
    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        pointer = " " * position + "^"
        super().__init__(f"{message} at position {position}\n  {text}\n  {pointer}")


class WellDefinednessError(RingDescriptionError):
    """Relations do not define an associative quotient multiplication."""


class BudgetExceeded(RuntimeError):
    """A size budget was hit.

    ``count`` is the partial count reached (or the required size when it is
    known up front) and ``budget`` the limit that was in force.
    """

    def __init__(self, what: str, count: int, budget: int, exact: bool = False):
        self.what = what
        self.count = count
        self.budget = budget
        self.exact = exact
        rel = "=" if exact else ">="
        super().__init__(f"{what}: {rel} {count} (budget {budget})")


class PresentationError(ValueError):
    """A rewriting presentation could not be turned into a finite monoid."""


class NonConfluentError(PresentationError):
    def __init__(self, word: str, forms):
        self.word = word
        self.forms = tuple(sorted(forms))
        super().__init__(f"word {word or '1'!r} has several normal forms: {', '.join(f or '1' for f in self.forms)}")
