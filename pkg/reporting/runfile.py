#!/usr/bin/env python

import os

import yaml

from group_core.exceptions import PreconditionError


class LoadRunfile:
    """
    A YAML run file: `command` plus long option names (dashes or
    underscores) as keys.
    """

    def __init__(self, load_path):
        if not os.path.exists(load_path):
            raise PreconditionError('Path to %s does not exist' % load_path)
        try:
            with open(load_path, 'r') as loadfile:
                self.loaded_dictionary = yaml.safe_load(loadfile)
        except yaml.YAMLError:
            raise PreconditionError('Invalid .yml in %s' % load_path)
        if not isinstance(self.loaded_dictionary, dict):
            raise PreconditionError('%s must hold a mapping of options' % load_path)
        try:
            self.command = self.loaded_dictionary['command']
        except KeyError:
            raise PreconditionError('command not in %s; invalid run file' % load_path)

    def options(self):
        return {key.replace('-', '_'): value for key, value in self.loaded_dictionary.items()
                if key != 'command'}
