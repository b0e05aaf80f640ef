#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Markdown renderers for experience elements.

Quality models and lessons are rendered as two-column attribute tables, in
the layout of the experience package templates they were documented with.
Numbers are shown with `OPTIONS['display_places']` decimals, rounded half
away from zero; results themselves are never rounded.
"""

__all__ = ['Report',
           'format_number',
           'render_context',
           'render_element',
           'render_evidence_statement',
           'render_lesson',
           'render_process_model',
           'render_quality_model']

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
import re

from evb.core.model import (CharacterizationVector, LessonLearned, Observation,
                            ProcessModelStub, QualityModel)
from evb.core.significance import describe_significance
from evb.options import OPTIONS

_PLACEHOLDER = re.compile(r'\{\{.*?\}\}')

@dataclass(frozen=True)
class Report:
    '''A rendered Markdown document.'''
    title: str
    body: str

    def __post_init__(self):
        if not self.body or not self.body.strip():
            raise ValueError(f'report "{self.title}" has an empty body')
        if _PLACEHOLDER.search(self.body):
            raise ValueError(f'report "{self.title}" contains an unresolved placeholder')

    def __str__(self):
        return self.body

def format_number(x, places=None):
    '''
    Format a number for display.

    Parameters
    ----------
    x : int, float or Decimal
        Number to format.
    places : int, optional
        Decimal places. The default is `OPTIONS['display_places']`.

    Returns
    -------
    str
        E.g. `format_number(24.137931)` gives `'24.14'` and
        `format_number(0.125)` gives `'0.13'`.

    '''
    places = OPTIONS['display_places'] if places is None else places
    exponent = Decimal(1).scaleb(-places)
    return format(Decimal(str(x)).quantize(exponent, rounding=ROUND_HALF_UP), 'f')

# ---- Table helpers

def _cell(text):
    return str(text).replace('|', '\\|').replace('\n', '<br>')

def _attribute_table(title, rows):
    lines = [f'# {title}', '', '| Attribute | Value |', '| --- | --- |']
    lines += [f'| {label} | {value} |' for label, value in rows if value]
    return '\n'.join(lines) + '\n'

def _period(period):
    start, end = period
    return f'{start.isoformat()} – {end.isoformat()}'

def _model_type(qm):
    parts = ['Quality model', qm.model_type.replace('_', '-')]
    if qm.sub_kind:
        parts.append(qm.sub_kind)
    return '/'.join(parts)

def _quality_focus(goal):
    if not goal.quality_focus:
        return None
    if goal.quality_focus_derived:
        return f'{_cell(goal.quality_focus)} (derived from model type)'
    return _cell(goal.quality_focus)

def _result_table(qm, result):
    ind = qm.indicator
    value_name = ind.value_metric.capitalize()
    metric = qm.metric(ind.value_metric)
    if metric is not None and metric.scale == 'hours':
        value_name += ' (h)'
    key_name = ind.group_by.capitalize() if ind.group_by else 'Indicator'
    share_name = f'{ind.value_metric.capitalize()} (%)'
    if ind.kind == 'cumulative_distribution':
        share_name = f'Cumulated {share_name}'
    share = 'cumulative_percent' if ind.kind == 'cumulative_distribution' else 'percent'

    cells = [f'<tr><th>{key_name}</th><th>{value_name}</th><th>{share_name}</th></tr>']
    for row in result.rows:
        cells.append(f'<tr><td>{_cell(row.key)}</td><td>{format_number(row.value)}</td>'
                     f'<td>{format_number(getattr(row, share))}</td></tr>')
    return '<table>' + ''.join(cells) + '</table>'

def _labeled(entries):
    return '<br>'.join(f'{e.label}: {_cell(e.text)}' for e in entries)

def _cited(entries):
    return '<br>'.join(f'{e.label} ({", ".join(e.cites)}): {_cell(e.text)}' for e in entries)

# ---- Renderers

def render_quality_model(qm, result=None):
    '''
    Render a quality model as an attribute table.

    Parameters
    ----------
    qm : evb.core.model.QualityModel
        A valid quality model.
    result : evb.measurement.indicators.IndicatorResult, optional
        Result of the model's indicator.  When given, the Indicator row shows
        the data as an inline table. The default is None.

    Returns
    -------
    Report
        Titled with the model name.

    '''
    goal = qm.goal
    indicator = _cell(qm.question)
    if result is not None:
        indicator += '<br>' + _result_table(qm, result)
    rows = [('Model Id.', _cell(qm.id)),
            ('Model Name', _cell(qm.name)),
            ('Model Type', _cell(_model_type(qm))),
            ('Significance', describe_significance(qm.significance)),
            ('Measurement Period', _period(qm.period)),
            ('Object', _cell(goal.object)),
            ('Purpose', _cell(goal.purpose)),
            ('Quality Focus', _quality_focus(goal)),
            ('Viewpoint', _cell(goal.viewpoint)),
            ('Characterization Vector / Context', f'see characterization vector {goal.context}'),
            ('Indicator', indicator),
            ('Observations', _labeled(qm.observations)),
            ('Interpretations', _cited(qm.interpretations)),
            ('Consequences', _cited(qm.consequences)),
            ('References', ', '.join(qm.references)),
            ('Additional Documentation', '<br>'.join(_cell(d) for d in qm.additional_docs))]
    return Report(qm.name, _attribute_table(qm.name, rows))

def render_lesson(ll):
    '''
    Render a lesson learned as an attribute table.

    Observations get an Observation row.  Problem/solution pairs get
    Problem, Cause, Solution (reactive), Solution (preventive) and Log rows;
    absent ones are left out.
    '''
    rows = [('Topic', _cell(', '.join(ll.topic))),
            ('Situation', _cell(ll.situation)),
            ('Significance', describe_significance(ll.significance)),
            ('Characterization Vector / Context', f'see characterization vector {ll.context}')]
    body = ll.body
    if isinstance(body, Observation):
        rows.append(('Observation', _cell(body.observation)))
    else:
        for label, attr in (('Problem', 'problem'),
                            ('Cause', 'cause'),
                            ('Solution (reactive)', 'solution_reactive'),
                            ('Solution (preventive)', 'solution_preventive'),
                            ('Log', 'log')):
            value = getattr(body, attr)
            rows.append((label, None if value is None else _cell(value)))
    rows += [('References', ', '.join(ll.references)),
             ('Additional Documentation', '<br>'.join(_cell(d) for d in ll.additional_docs))]
    title = f'Lesson learned {ll.id}'
    return Report(title, _attribute_table(title, rows))

def render_context(cv):
    '''Render a characterization vector with one row per factor; the
    customization factor (category) is only repeated when it changes.'''
    title = f'Characterization vector {cv.id}'
    lines = [f'# {title}', '',
             f'| Customization factor | Characteristic | {_cell(cv.id)} |',
             '| --- | --- | --- |']
    previous = None
    for f in cv.factors:
        category = '' if f.category == previous else _cell(f.category)
        previous = f.category
        lines.append(f'| {category} | {_cell(f.name)} | {_cell(f.value)} |')
    return Report(title, '\n'.join(lines) + '\n')

def render_process_model(pm):
    rows = [('Model Id.', _cell(pm.id)),
            ('Model Name', _cell(pm.name)),
            ('Phases', _cell(', '.join(pm.phases)))]
    return Report(pm.name, _attribute_table(pm.name, rows))

def render_evidence_statement(es):
    '''
    Render an evidence statement as one sentence, e.g. "There is evidence
    with significance 1 case study that process model PM1PX11 was followed
    within context CV1PX11."
    '''
    prefix = f'There is evidence with significance {describe_significance(es.significance)}'
    if es.kind == 'technology_applied':
        return (f'{prefix} that technology {es.subject} was applied within context '
                f'{es.context} with the result {es.result}.')
    if es.kind == 'process_followed':
        return f'{prefix} that process model {es.subject} was followed within context {es.context}.'
    if es.kind == 'problem_solved':
        return (f'{prefix} that the problem {es.subject} arose and was solved within '
                f'the context {es.context}.')
    raise ValueError(f'unknown evidence statement kind "{es.kind}"')

def render_element(element, result=None):
    '''
    Render any stored element.

    Parameters
    ----------
    element : CharacterizationVector, QualityModel, LessonLearned or ProcessModelStub
        Element to render.
    result : IndicatorResult, optional
        Only used for quality models. The default is None.

    Raises
    ------
    TypeError
        Not an element.

    Returns
    -------
    Report

    '''
    if isinstance(element, QualityModel):
        return render_quality_model(element, result)
    if isinstance(element, LessonLearned):
        return render_lesson(element)
    if isinstance(element, CharacterizationVector):
        return render_context(element)
    if isinstance(element, ProcessModelStub):
        return render_process_model(element)
    raise TypeError(f'cannot render object of type {type(element).__name__}')
