from .base import Sampler


class SingleCoreSampler(Sampler):
    """
    Evaluate on a single core. No parallelization.
    """

    def _map(self, fun, items):
        return [fun(item) for item in items]
