class InvalidStateError(ValueError):
    pass


class DimensionMismatchError(ValueError):
    pass


class NotHermitianError(ValueError):
    pass
