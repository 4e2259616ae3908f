class AngleRangeError(ValueError):
    pass
