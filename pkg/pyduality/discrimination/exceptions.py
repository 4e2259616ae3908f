class InvalidPovmError(ValueError):
    pass
