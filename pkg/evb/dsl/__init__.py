# -*- coding: utf-8 -*-

'''
.. include:: ../../docs/evidence_dsl.md
'''

#imports for package namespace

from .document import Document, ParseError, SourceSpan
from .parser import parse, parse_file
from .serializer import serialize, serialize_element

__all__ = ['Document',
           'ParseError',
           'SourceSpan',
           'parse',
           'parse_file',
           'serialize',
           'serialize_element']
