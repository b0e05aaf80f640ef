#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Containers produced by the evidence DSL parser.
"""

__all__ = ['Document', 'ParseError', 'SourceSpan']

from collections import namedtuple
from dataclasses import dataclass
from typing import Tuple

SourceSpan = namedtuple('SourceSpan', ['line', 'column', 'length'])
"""1-based line and column of a piece of source text, and its length."""

ParseError = namedtuple('ParseError', ['span', 'message', 'expected'], defaults=[None])
"""A located parse problem.  `expected` optionally describes the token that
would have been accepted."""

@dataclass(frozen=True)
class Document:
    '''An ordered collection of experience elements with unique ids.'''
    elements: Tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'elements', tuple(self.elements))
        seen = set()
        for e in self.elements:
            if e.id in seen:
                raise ValueError(f'duplicate element id "{e.id}" in document')
            seen.add(e.id)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    @property
    def ids(self):
        return [e.id for e in self.elements]

    def get(self, element_id, default=None):
        '''Return the element with id `element_id`, or `default`.'''
        for e in self.elements:
            if e.id == element_id:
                return e
        return default
