#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Exceptions raised by evb.

Most are also `ValueError` subclasses, so callers that only care about
"bad input" can catch that.  Validation problems found inside an element
are not exceptions; they are returned as `evb.core.validation.Violation`
tuples, and only wrapped in `ValidationFailed` when an operation refuses
to proceed because of them.
"""

__all__ = ['AlreadyPackaged',
           'DocumentError',
           'DuplicateId',
           'EmptyDataset',
           'EvbError',
           'HeaderMismatch',
           'KindMismatch',
           'MissingResult',
           'StoreError',
           'UnknownElement',
           'UnknownMetric',
           'UnknownOrderKey',
           'UnresolvedContext',
           'UnresolvedSubject',
           'ValidationFailed']


class EvbError(Exception):
    '''Base class for all evb errors.'''


class KindMismatch(EvbError, ValueError):
    '''Two significances of different kinds were combined.'''


class AlreadyPackaged(EvbError, ValueError):
    '''A measurement program at its final step was advanced.'''


class HeaderMismatch(EvbError, ValueError):
    '''A measurement CSV does not start with the expected header.'''


class EmptyDataset(EvbError, ValueError):
    '''An indicator cannot be computed because there is nothing to divide.'''


class UnknownOrderKey(EvbError, ValueError):
    '''An indicator `order` names a group key absent from the data.'''

    def __init__(self, keys):
        self.keys = list(keys)
        super().__init__(f'order names keys absent from the dataset: '
                         f'{", ".join(self.keys)}')


class UnknownMetric(EvbError, ValueError):
    '''A metric name cannot be mapped to a measurement column.'''


class DuplicateId(EvbError, ValueError):
    '''An element id is already taken.'''

    def __init__(self, element_id):
        self.element_id = element_id
        super().__init__(f'id "{element_id}" already exists; pass '
                         f'overwrite=True to replace it')


class ValidationFailed(EvbError, ValueError):
    '''An element was rejected because it has violations.'''

    def __init__(self, element_id, violations):
        self.element_id = element_id
        self.violations = list(violations)
        listing = '; '.join(f'{v.field}: {v.message}' for v in self.violations)
        super().__init__(f'"{element_id}" failed validation: {listing}')


class UnresolvedContext(EvbError, ValueError):
    '''A characterization vector reference does not resolve.'''


class UnresolvedSubject(EvbError, ValueError):
    '''The subject of an evidence statement does not resolve.'''


class MissingResult(EvbError, ValueError):
    '''A technology evidence statement was built without a result.'''


class DocumentError(EvbError, ValueError):
    '''Parsing failed.  `errors` holds every `ParseError` found.'''

    def __init__(self, errors):
        self.errors = list(errors)
        first = self.errors[0] if self.errors else None
        msg = f'{len(self.errors)} parse error(s)'
        if first is not None:
            msg += f'; first at {first.span.line}:{first.span.column}: {first.message}'
        super().__init__(msg)


class UnknownElement(EvbError, KeyError):
    '''No stored element has the requested id.'''


class StoreError(EvbError, OSError):
    '''The store could not be read or written.'''
