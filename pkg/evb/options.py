#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Package-wide settings for evb.
"""

__all__ = ['OPTIONS',
           'resolve_store_root',
           'set_metric_field',
           'set_store_root']

import os

DEFAULT_STORE = 'evb-store'
'''Store directory used when nothing else is configured.'''

STORE_ENV_VAR = 'EVB_STORE'

OPTIONS = {'store_root': None,
           'metric_fields': {'phase': 'phase',
                             'effort': 'effort_hours',
                             'date': 'date',
                             'role': 'role',
                             'effort_hours': 'effort_hours'},
           'display_places': 2}
'''Dictionary of package settings.

- `'store_root'`: store directory; `None` defers to the `EVB_STORE`
environment variable, then to `./evb-store`.
- `'metric_fields'`: maps metric names used in quality models to the columns
of a measurement dataset (`date`, `phase`, `role`, `effort_hours`).
- `'display_places'`: decimal places used when numbers are printed.'''

ROW_FIELDS = ('date', 'phase', 'role', 'effort_hours')

def resolve_store_root(root=None):
    '''
    Determine the store directory.

    Parameters
    ----------
    root : str or path-like, optional
        Explicit root.  Takes precedence over everything else.

    Returns
    -------
    str
        `root`, else `OPTIONS['store_root']`, else `$EVB_STORE`, else
        `./evb-store`.

    '''
    for candidate in (root, OPTIONS['store_root'], os.environ.get(STORE_ENV_VAR)):
        if candidate:
            return os.fspath(candidate)
    return os.path.join(os.curdir, DEFAULT_STORE)

def set_store_root(root):
    '''Set the default store directory (`None` to clear it).'''
    OPTIONS['store_root'] = None if root is None else os.fspath(root)

def set_metric_field(metric, column):
    '''
    Map a metric name onto a measurement column.

    Parameters
    ----------
    metric : str
        Metric name as declared in a quality model question.
    column : str
        One of `'date'`, `'phase'`, `'role'`, `'effort_hours'`.

    Raises
    ------
    ValueError
        Unknown column.

    Returns
    -------
    None.

    '''
    if column not in ROW_FIELDS:
        raise ValueError(f'`column` must be one of {ROW_FIELDS}, not "{column}"')
    OPTIONS['metric_fields'][metric] = column
