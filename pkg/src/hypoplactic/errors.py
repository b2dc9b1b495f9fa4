class HypoError(Exception):
    """Base class for errors raised by this package."""


class ParseError(HypoError, ValueError):
    def __init__(self, message, token=None):
        super().__init__(message)
        self.token = token


class ResourceLimitError(HypoError, RuntimeError):
    """A search outgrew its configured bound.

    This says nothing about the answer; the input was simply too big for
    the requested exact procedure.
    """

    def __init__(self, what, bound):
        super().__init__(f"{what} exceeded bound of {bound}")
        self.what = what
        self.bound = bound
