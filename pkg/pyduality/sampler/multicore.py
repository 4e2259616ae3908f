from concurrent.futures import ThreadPoolExecutor

from .base import Sampler
from .util import nr_cores_available


class MulticoreSampler(Sampler):
    """
    Evaluate on a local thread pool. The heavy lifting is done in numpy and
    scipy routines, which release the GIL.

    Parameters
    ----------
    n_procs: int, optional
        Number of worker threads. Defaults to
        :func:`nr_cores_available`.
    """

    def __init__(self, n_procs: int = None):
        super().__init__()
        self._n_procs = n_procs

    @property
    def n_procs(self) -> int:
        if self._n_procs is not None:
            return self._n_procs
        return nr_cores_available()

    def _map(self, fun, items):
        if self.n_procs <= 1 or len(items) <= 1:
            return [fun(item) for item in items]
        with ThreadPoolExecutor(max_workers=self.n_procs) as executor:
            return list(executor.map(fun, items))
