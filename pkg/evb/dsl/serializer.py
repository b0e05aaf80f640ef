#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Canonical writer for evidence documents.

Canonical form: fields in a fixed order per element kind, two-space
indentation, one blank line between elements, LF line endings, a final
newline.  `references` and `docs` lists are always written, even when empty.
List items are written bare when they read back unchanged, and quoted
otherwise.
"""

__all__ = ['serialize', 'serialize_element']

import re

from evb.core.model import (CharacterizationVector, LessonLearned, Observation,
                            ProcessModelStub, QualityModel)

_BARE_ITEM = re.compile(r'[^\s",\[\]@#][^",\[\]\n]*')

INDENT = '  '

def quote(text):
    '''Double-quote `text`, escaping backslashes, quotes, newlines and tabs.'''
    escaped = (text.replace('\\', '\\\\')
                   .replace('"', '\\"')
                   .replace('\n', '\\n')
                   .replace('\t', '\\t'))
    return f'"{escaped}"'

def _item(text):
    if _BARE_ITEM.fullmatch(text) and text == text.strip():
        return text
    return quote(text)

def _bare_list(items):
    return '[' + ', '.join(_item(i) for i in items) + ']'

def _quoted_list(items):
    return '[' + ', '.join(quote(i) for i in items) + ']'

def _ref_list(ids):
    return '[' + ', '.join(f'@{i}' for i in ids) + ']'

def _significance(s):
    return f'{s.kind}({s.count})'

# ---- Elements

def _context(cv):
    lines = [f'context {quote(cv.id)} {{']
    for f in cv.factors:
        lines.append(f'{INDENT}{quote(f.category)} / {quote(f.name)}: {quote(f.value)}')
    lines.append('}')
    return lines

def _indicator(ind):
    args = [ind.value_metric]
    if ind.group_by is not None:
        args.append(f'by: {ind.group_by}')
    if ind.order is not None:
        args.append(f'order: {_bare_list(ind.order)}')
    return f'indicator {ind.name} = {ind.kind}({", ".join(args)})'

def _quality_model(qm):
    i2 = INDENT * 2
    goal = qm.goal
    model_type = qm.model_type if qm.sub_kind is None else f'{qm.model_type} {quote(qm.sub_kind)}'
    start, end = qm.period
    lines = [f'quality_model {quote(qm.id)} {{',
             f'{INDENT}name: {quote(qm.name)}',
             f'{INDENT}type: {model_type}',
             f'{INDENT}significance: {_significance(qm.significance)}',
             f'{INDENT}period: {start.isoformat()} .. {end.isoformat()}',
             f'{INDENT}goal {{',
             f'{i2}object: {quote(goal.object)}',
             f'{i2}purpose: {quote(goal.purpose)}']
    if goal.quality_focus is not None and not goal.quality_focus_derived:
        lines.append(f'{i2}quality_focus: {quote(goal.quality_focus)}')
    lines += [f'{i2}viewpoint: {quote(goal.viewpoint)}',
              f'{i2}context: @{goal.context}',
              f'{INDENT}}}',
              f'{INDENT}question {quote(qm.question)} {{']
    lines += [f'{i2}metric {m.name}: {m.scale}' for m in qm.metrics]
    lines += [f'{i2}{_indicator(ind)}' for ind in qm.indicators]
    lines.append(f'{INDENT}}}')
    lines += [f'{INDENT}observation {o.label}: {quote(o.text)}' for o in qm.observations]
    for kind, entries in (('interpretation', qm.interpretations),
                          ('consequence', qm.consequences)):
        lines += [f'{INDENT}{kind} {e.label} from {", ".join(e.cites)}: {quote(e.text)}'
                  for e in entries]
    lines += [f'{INDENT}references: {_ref_list(qm.references)}',
              f'{INDENT}docs: {_quoted_list(qm.additional_docs)}',
              '}']
    return lines

def _lesson(ll):
    lines = [f'lesson {quote(ll.id)} {{',
             f'{INDENT}topic: {_bare_list(ll.topic)}',
             f'{INDENT}situation: {quote(ll.situation)}',
             f'{INDENT}significance: {_significance(ll.significance)}',
             f'{INDENT}context: @{ll.context}']
    body = ll.body
    if isinstance(body, Observation):
        lines.append(f'{INDENT}observation: {quote(body.observation)}')
    else:
        for attr in ('problem', 'cause', 'solution_reactive', 'solution_preventive', 'log'):
            value = getattr(body, attr)
            if value is not None:
                lines.append(f'{INDENT}{attr}: {quote(value)}')
    lines += [f'{INDENT}references: {_ref_list(ll.references)}',
              f'{INDENT}docs: {_quoted_list(ll.additional_docs)}',
              '}']
    return lines

def _process_model(pm):
    return [f'process_model {quote(pm.id)} {{',
            f'{INDENT}name: {quote(pm.name)}',
            f'{INDENT}phases: {_bare_list(pm.phases)}',
            '}']

_WRITERS = {CharacterizationVector: _context,
            QualityModel: _quality_model,
            LessonLearned: _lesson,
            ProcessModelStub: _process_model}

def serialize_element(element):
    '''Canonical text of one element, without a trailing newline.'''
    try:
        writer = _WRITERS[type(element)]
    except KeyError:
        raise TypeError(f'cannot serialize object of type {type(element).__name__}')
    return '\n'.join(writer(element))

def serialize(doc):
    '''
    Write a document in canonical form.

    Parameters
    ----------
    doc : evb.dsl.document.Document or iterable of elements

    Returns
    -------
    str
        Canonical text; `''` for an empty document.  Equal documents give
        identical text.

    '''
    blocks = [serialize_element(e) for e in doc]
    return '\n\n'.join(blocks) + '\n' if blocks else ''
