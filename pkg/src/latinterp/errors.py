"""Exception types raised by the library."""


class LatticeError(ValueError):
    """Bad lattice construction or an element used with the wrong lattice."""


class ProblemError(ValueError):
    """Malformed interpolation problem (non-strict bounds, wrong table size)."""


class CapExceeded(RuntimeError):
    """An enumeration would exceed its configured cap.

    ``count`` is the number of candidates known at the time of refusal.
    """

    def __init__(self, message, count, cap):
        super().__init__(message)
        self.count = count
        self.cap = cap


class InfeasibleError(ValueError):
    """Raised by operations that require an interpolable problem."""

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


class ParseError(ValueError):
    def __init__(self, message, lineno=None, line=None):
        self.lineno = lineno
        self.line = line
        if lineno is not None:
            message = f"line {lineno}: {message}"
            if line is not None:
                message += f"  [{line.strip()}]"
        super().__init__(message)
