"""Exception types shared across the package."""


class ParameterSingular(ZeroDivisionError):
    """A denominator factor vanishes at the requested parameters.

    ``factor`` names the offending Pochhammer symbol or linear factor so
    the caller can report which constraint was hit.
    """

    def __init__(self, factor, detail=""):
        self.factor = factor
        self.detail = detail
        msg = f"singular parameters: {factor} vanishes"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class DivergentIntegral(ValueError):
    """A Beta-type moment integral does not converge."""


class ExpansionTooLarge(MemoryError):
    """A brute-force expansion exceeded the configured term budget."""

    def __init__(self, terms, limit):
        self.terms = terms
        self.limit = limit
        super().__init__(f"expansion has {terms} terms, limit is {limit}")
