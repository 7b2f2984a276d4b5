#!/usr/bin/env python
"""
Process-pool sharding for the enumeration drivers. Results always come back
in shard order, so merges are independent of the worker count.
"""

import os
import logging
from concurrent.futures import ProcessPoolExecutor

logger = logging.getLogger(__name__)


def default_threads():
    return os.cpu_count() or 1


def run_sharded(worker, shards, threads=1):
    # worker must be a module-level function so it pickles
    shards = list(shards)
    if threads is None:
        threads = default_threads()
    if threads <= 1 or len(shards) <= 1:
        return [worker(shard) for shard in shards]
    logger.debug('running %d shards on %d workers', len(shards), threads)
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(worker, shards))
