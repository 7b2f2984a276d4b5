#!/usr/bin/env python

import os
import json
import functools


PARAMETERS_FILE = 'critical_parameters.json'


@functools.lru_cache(maxsize=None)
def load_parameters():
    # expects critical_parameters.json in the configuration directory
    parent_folder = os.path.dirname(os.path.abspath(__file__))
    with open(os.path.join(parent_folder, PARAMETERS_FILE)) as params:
        return json.loads(params.read())


def exit_code(name):
    return load_parameters()['Exit Codes'][name]


def exception_groups():
    return [tuple(factors) for factors in load_parameters()['Exception Groups']]


def oracle_corrections():
    # groups whose exhaustive value exceeds the published closed form
    return [tuple(factors) for factors in load_parameters()['Oracle Corrections']]


def cache_directory():
    cache = load_parameters()['Cache']
    directory = os.environ.get(cache['Environment Variable'])
    if not directory:
        directory = cache['Default Directory']
    return os.path.abspath(os.path.expanduser(directory))


def cache_path():
    return os.path.join(cache_directory(), load_parameters()['Cache']['File Name'])
