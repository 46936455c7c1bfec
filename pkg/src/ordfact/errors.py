class SieveOverflowError(OverflowError):
    """A fixed-width sieve entry would exceed the int64 range."""


class BudgetExceeded(RuntimeError):
    """Divisor-tree construction would exceed its node budget."""

    def __init__(self, n, budget, required):
        self.n = n
        self.budget = budget
        self.required = required
        super().__init__(
            f"divisor tree of {n} needs {required} nodes (kappa0({n})), "
            f"budget is {budget}"
        )


class BFileError(ValueError):
    """Base class for b-file problems."""


class BFileParseError(BFileError):
    def __init__(self, lineno, line, reason="expected 'index value'"):
        self.lineno = lineno
        self.line = line
        super().__init__(f"line {lineno}: {reason}: {line!r}")


class BFileFormatError(BFileError):
    def __init__(self, lineno, expected, got):
        self.lineno = lineno
        self.expected = expected
        self.got = got
        super().__init__(
            f"line {lineno}: index {got} breaks the consecutive run (expected {expected})"
        )
