#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Reference integrity across a store.
"""

__all__ = ['DanglingReference', 'check_references', 'references_of']

from collections import namedtuple

from evb.core.model import LessonLearned, QualityModel

DanglingReference = namedtuple('DanglingReference', ['source', 'missing'])
"""`source` refers to `missing`, which is not stored."""

def references_of(element):
    '''Ids an element points at: its context and its `@id` references.'''
    refs = []
    if isinstance(element, (QualityModel, LessonLearned)):
        refs.append(element.context)
        refs.extend(element.references)
    return refs

def check_references(store):
    '''
    Find references that resolve to no stored element.

    Returns
    -------
    list of DanglingReference
        Sorted by source id, then missing id; empty when every reference
        resolves.

    '''
    dangling = {DanglingReference(e.id, ref)
                for e in store.elements()
                for ref in references_of(e)
                if ref not in store}
    return sorted(dangling)
