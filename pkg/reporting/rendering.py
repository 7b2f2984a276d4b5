#!/usr/bin/env python

import os

from jinja2 import Environment, FileSystemLoader

TEMPLATE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'jinja_templates')
TEMPLATES = {'certificate': 'certificate.jinja2.txt',
             'report': 'run_report.jinja2.txt'}


def get_template(kind):
    if kind not in TEMPLATES:
        raise KeyError('no template for %s; choose from %s' % (kind, ', '.join(sorted(TEMPLATES))))
    return (TEMPLATE_DIR, TEMPLATES[kind])


def render(kind, keywords):
    (template_dir, template) = get_template(kind)
    env = Environment(loader=FileSystemLoader(template_dir), trim_blocks=True,
                      lstrip_blocks=True, keep_trailing_newline=True)
    return env.get_template(template).render(keywords)
