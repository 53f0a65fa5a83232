"""Exception hierarchy shared by every module of the package."""


class ImplicativeError(Exception):
    """Base class for all package errors."""


class InvalidArgument(ImplicativeError, ValueError):
    pass


class NotHeytingAlgebra(ImplicativeError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ParseError(ImplicativeError):
    def __init__(self, message, position=None, text=None):
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)
        self.position = position
        self.text = text


class ResourceLimit(ImplicativeError):
    """An enumeration would exceed its configured budget."""


class RankOverflow(ImplicativeError):
    """A witness would land above the caller's rank cap."""

    def __init__(self, rank, cap):
        super().__init__(f"witness has rank {rank}, above cap {cap}")
        self.rank = rank
        self.cap = cap


class VerificationFailure(ImplicativeError):
    """A realizer bound or separator membership failed on a concrete instance."""

    def __init__(self, item, witness=None, detail=""):
        msg = f"verification failed: {item}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.item = item
        self.witness = witness
