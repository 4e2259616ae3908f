import functools

import dill as pickle

from .base import Sampler


class MappingSampler(Sampler):
    """
    Parallelize via a map operation.
    This sampler can be applied in a multi-core or in a distributed
    setting.

    Parameters
    ----------

    map_: map like function

        A function which works like the built in `map`.
        Possible candidates include

        * multiprocessing.pool.Pool.map
        * concurrent.futures.Executor.map

    mapper_pickles: bool, optional
        Whether the mapper handles the pickling itself
        or the MappingSampler class should handle serialization.

        The default is `False`: the function is serialized with ``dill``,
        which also handles closures such as the Monte-Carlo pipelines,
        and deserialized in the worker.
    """

    def __init__(self, map_=map, mapper_pickles: bool = False):
        super().__init__()
        self.map_ = map_
        self.pickle, self.unpickle = ((identity, identity)
                                      if mapper_pickles
                                      else (pickle.dumps, pickle.loads))

    def __getstate__(self):
        return self.pickle, self.unpickle, self.nr_evaluations_

    def __setstate__(self, state):
        self.pickle, self.unpickle, self.nr_evaluations_ = state

    def map_function(self, pickled_fun, item):
        fun = self.unpickle(pickled_fun)
        return fun(item)

    def _map(self, fun, items):
        map_function = functools.partial(self.map_function, self.pickle(fun))
        return list(self.map_(map_function, items))


def identity(x):
    return x
