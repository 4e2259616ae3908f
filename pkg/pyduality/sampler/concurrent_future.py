import cloudpickle as pickle

from .base import Sampler


class ConcurrentFutureSampler(Sampler):
    """
    Parallelize with an arbitrary executor that implements the python
    concurrent futures executor interface. Specifically, it needs to
    implement a "submit" function that is able to evaluate arbitrary function
    handles and return a concurrent future result object.

    Parameters
    ----------

    cfuture_executor: concurrent.futures.Executor, required
        Configured object that implements the concurrent.futures.Executor
        interface.

    default_pickle: bool, optional (default = False)
        Specify if the executor uses python's default pickle to communicate
        the submitted function, as process pools do. In that case a
        cloudpickle based workaround is used so that locally defined
        functions can be submitted, at the cost of an additional pickling
        overhead.

    batch_size: int, optional
        Number of items that are evaluated in one remote execution call.
        Batching reduces the communication overhead for fast evaluations.
        By default, batch_size=1, i.e. no batching is done.
    """

    def __init__(self, cfuture_executor=None, default_pickle: bool = False,
                 batch_size: int = 1):
        super().__init__()
        if cfuture_executor is None:
            raise ValueError("ConcurrentFutureSampler needs an executor.")
        self.my_client = cfuture_executor
        self.default_pickle = default_pickle
        self.batch_size = max(int(batch_size), 1)

    def __getstate__(self):
        d = dict(self.__dict__)
        del d['my_client']
        return d

    def _map(self, fun, items):
        batches = [items[i:i + self.batch_size]
                   for i in range(0, len(items), self.batch_size)]
        if self.default_pickle:
            pickled = pickle.dumps(fun)
            futures = [self.my_client.submit(_run_pickled_batch, pickled, b)
                       for b in batches]
        else:
            futures = [self.my_client.submit(_run_batch, fun, b)
                       for b in batches]
        results = []
        for future in futures:
            results.extend(future.result())
        return results


def _run_batch(fun, batch):
    return [fun(item) for item in batch]


def _run_pickled_batch(pickled_fun, batch):
    return _run_batch(pickle.loads(pickled_fun), batch)
