#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Ordering and aggregation of `Significance` values.

The order is kind-dominant: any formal experiment outranks any case study,
which outranks any survey; within one kind, more validations rank higher.
Significances of different kinds are never merged.
"""

__all__ = ['describe_significance',
           'merge_significance',
           'significance_rank']

from evb.core.model import Significance
from evb.errors import KindMismatch

_NICENAMES = {'formal_experiment': ('formal experiment', 'formal experiments'),
              'case_study': ('case study', 'case studies'),
              'survey': ('survey', 'surveys')}

def significance_rank(s):
    '''
    Return a sortable ordinal for a significance.

    Parameters
    ----------
    s : evb.core.model.Significance

    Returns
    -------
    tuple of int
        `(kind strength, count)`; compare with the usual tuple operators.

    '''
    return s._rank()

def merge_significance(a, b):
    '''
    Combine two independent validations of the same kind.

    Two projects with their own characterization vectors count as two case
    studies, so `case_study(1)` merged with `case_study(1)` is
    `case_study(2)`.

    Parameters
    ----------
    a, b : evb.core.model.Significance

    Raises
    ------
    KindMismatch
        The kinds differ.

    Returns
    -------
    evb.core.model.Significance

    '''
    if a.kind != b.kind:
        raise KindMismatch(f'cannot merge "{a.kind}" with "{b.kind}" significance')
    return Significance(a.kind, a.count + b.count)

def describe_significance(s):
    '''Human text for a significance, e.g. `"1 case study"`.'''
    one, many = _NICENAMES[s.kind]
    return f'{s.count} {one if s.count == 1 else many}'
