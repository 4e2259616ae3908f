import multiprocessing
from concurrent.futures import ThreadPoolExecutor, ProcessPoolExecutor

import pytest

from pyduality.duality import particle_pipeline, particle_records
from pyduality.sampler import (SingleCoreSampler, MappingSampler,
                               MulticoreSampler, ConcurrentFutureSampler,
                               nr_cores_available, sampler_for_workers)
from pyduality.tomo import monte_carlo_error


def multi_proc_map(f, x):
    with multiprocessing.Pool(2) as pool:
        res = pool.map(f, x)
    return res


class GenericFutureWithProcessPool(ConcurrentFutureSampler):
    def __init__(self, map_=None):
        cfuture_executor = ProcessPoolExecutor(max_workers=2)
        super().__init__(cfuture_executor, default_pickle=True)


class GenericFutureWithThreadPool(ConcurrentFutureSampler):
    def __init__(self, map_=None):
        cfuture_executor = ThreadPoolExecutor(max_workers=2)
        super().__init__(cfuture_executor)


class BatchedFutures(ConcurrentFutureSampler):
    def __init__(self, map_=None):
        super().__init__(ThreadPoolExecutor(max_workers=2), batch_size=3)


class MultiProcessMapping(MappingSampler):
    def __init__(self):
        super().__init__(map_=multi_proc_map)


@pytest.fixture(params=[SingleCoreSampler,
                        MulticoreSampler,
                        MappingSampler,
                        MultiProcessMapping,
                        GenericFutureWithThreadPool,
                        GenericFutureWithProcessPool,
                        BatchedFutures])
def sampler(request):
    return request.param()


def square(x):
    return x * x


def test_map_keeps_order(sampler):
    assert sampler.map(square, range(10)) == [x * x for x in range(10)]
    assert sampler.nr_evaluations_ == 10


def test_local_functions(sampler):
    offset = 3
    assert sampler.map(lambda x: x + offset, [1, 2]) == [4, 5]


def test_monte_carlo_is_sampler_independent(sampler):
    records = particle_records(20, 5000, 10, 0)
    reference = monte_carlo_error(particle_pipeline, records, 6, 1)
    result = monte_carlo_error(particle_pipeline, records, 6, 1, sampler)
    for key, estimate in reference.items():
        assert result[key].mean == estimate.mean
        assert result[key].std_dev == estimate.std_dev


def test_sampler_for_workers():
    assert isinstance(sampler_for_workers(1), SingleCoreSampler)
    assert sampler_for_workers(4).n_procs == 4
    assert sampler_for_workers(0).n_procs == nr_cores_available()


def test_nr_cores(monkeypatch):
    monkeypatch.setenv("NSLOTS", "3")
    assert nr_cores_available() == 3


def test_future_sampler_needs_executor():
    with pytest.raises(ValueError):
        ConcurrentFutureSampler()
