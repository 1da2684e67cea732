class InfeasibleError(RuntimeError):
    """The instance exceeds the work or degree bound of the requested backend."""


class UnknownProfileError(KeyError):
    pass
