#!/usr/bin/env python

import os
import sys
from pathlib import Path

from setuptools import setup, find_packages

setup_path = os.path.abspath(__file__)
critical_number_path = os.path.dirname(setup_path)
workflow_scripts_path = os.path.join(critical_number_path, 'workflow_scripts')


def make_scripts_in_path_executable(path):
    make_executable = []
    for file_or_dir in os.listdir(path):
        if file_or_dir == '__init__.py' or file_or_dir.startswith('test_'):
            continue
        abs_path = os.path.join(path, file_or_dir)
        if Path(abs_path).suffix == '.py' and os.path.exists(abs_path):
            make_executable.append(abs_path)

    for script in make_executable:
        os.chmod(script, 0o755)
        print('Made %s executable' % Path(script).name)


if __name__ == '__main__':
    if len(sys.argv) == 1:
        # bare `python setup.py` keeps the scripts-on-PATH workflow
        make_scripts_in_path_executable(workflow_scripts_path)
    else:
        setup(name='critical_number',
              version='0.1.0',
              description='Critical numbers of finite abelian groups: formula, oracle, '
                          'addition-theorem checks and spanning certificates',
              packages=find_packages(exclude=['examples', 'examples.*']),
              package_data={'configuration': ['*.json'], 'reporting': ['jinja_templates/*.txt']},
              python_requires='>=3.8',
              install_requires=['numpy', 'pyyaml', 'jinja2'],
              extras_require={'dev': ['pycodestyle']},
              entry_points={'console_scripts': [
                  'critical-number=workflow_scripts.critical_number_cli:main']})
