class GraphFormatError(ValueError):
    """Malformed graph or walk text. ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotConnectedError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """Exact search gave up; ``lower_bound`` is the proven bound on m."""

    def __init__(self, message: str, lower_bound: int):
        super().__init__(f"{message} (m >= {lower_bound})")
        self.lower_bound = lower_bound


class SearchStuck(RuntimeError):
    pass
