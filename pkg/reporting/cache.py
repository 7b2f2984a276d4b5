#!/usr/bin/env python
"""
Append-only results cache: one JSON record per line, keyed by the sha256 of
(command, canonical group, parameters, seed).
"""

import os
import json
import hashlib
import logging

from configuration.settings import cache_path
from reporting.report import canonical_json

logger = logging.getLogger(__name__)


def cache_key(command, group, parameters, seed=None):
    record = [command, group, parameters, seed]
    return hashlib.sha256(canonical_json(record).encode()).hexdigest()


class ResultsCache:

    def __init__(self, path=None):
        self.path = cache_path() if path is None else path

    def lookup(self, key):
        """ The most recent payload stored under key, or None """
        if not os.path.exists(self.path):
            return None
        found = None
        with open(self.path) as cache:
            for number, line in enumerate(cache, start=1):
                try:
                    record = json.loads(line)
                except json.JSONDecodeError:
                    logger.warning('skipping malformed cache line %d in %s', number, self.path)
                    continue
                if record.get('key') == key:
                    found = record
        if found is None:
            return None
        logger.info('cache hit %s (%s)', key[:12], found.get('verdict'))
        return found['payload']

    def store(self, key, report):
        directory = os.path.dirname(self.path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        record = {'key': key, 'verdict': report.verdict, 'digest': report.digest(),
                  'payload': report.payload()}
        with open(self.path, 'a') as cache:
            cache.write(canonical_json(record) + '\n')
        logger.debug('cached %s under %s', report.command, key[:12])
