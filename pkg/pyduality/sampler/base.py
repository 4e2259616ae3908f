from abc import ABC, abstractmethod
from typing import Callable, Iterable, List


class Sampler(ABC):
    """
    Abstract Sampler base class.

    A sampler evaluates a function over independent work items, e.g. the
    Monte-Carlo resamples of a count data set or the grid points of an angle
    sweep. All randomness of a work item is derived from its index, so the
    result never depends on the sampler used.

    Parameters
    ----------

    nr_evaluations_: int
        This is set after each call to :meth:`map` and counts the number
        of function evaluations.
    """

    def __init__(self):
        self.nr_evaluations_ = 0

    def map(self, fun: Callable, items: Iterable) -> List:
        """
        Evaluate ``fun`` on every item.

        Parameters
        ----------

        fun: Callable
            A function of one argument.
        items: Iterable
            The work items.

        Returns
        -------

        results: List
            ``[fun(item) for item in items]``, in the order of ``items``
            regardless of the order of execution.
        """
        items = list(items)
        results = self._map(fun, items)
        self.nr_evaluations_ = len(items)
        return results

    @abstractmethod
    def _map(self, fun: Callable, items: List) -> List:
        """
        Evaluate ``fun`` on ``items`` and return the results in order.
        """
