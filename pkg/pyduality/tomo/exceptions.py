class InvalidProjectorError(ValueError):
    pass


class IncompleteTomographyError(ValueError):
    pass


class EmptyCountsError(ValueError):
    pass


class RecordSchemaError(ValueError):
    """
    A count record file does not follow the schema.

    Parameters
    ----------
    message: str
        What is wrong.
    line: int, optional
        The offending line of the file, counted from 1 with the header
        on line 1.
    """

    def __init__(self, message: str, line: int = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class MonteCarloError(RuntimeError):
    """
    The pipeline failed on a resampled data set.
    """

    def __init__(self, sample_index: int, cause: Exception):
        super().__init__(
            f"Pipeline failed on Monte-Carlo sample {sample_index}: "
            f"{type(cause).__name__}: {cause}")
        self.sample_index = sample_index
        self.cause = cause
