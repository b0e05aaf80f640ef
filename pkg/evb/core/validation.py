#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Invariant checks for experience elements.

The `validate_*` functions never raise for bad content.  They return a list
of `Violation` tuples, empty when the element is sound.  `Violation.field`
uses a small vocabulary that the DSL parser also uses to locate problems in
source text:

- plain attribute names: `'id'`, `'name'`, `'significance'`, ...
- dotted goal facets: `'goal.context'`, `'goal.quality_focus'`, ...
- labeled entries: `'metric effort'`, `'indicator effort_distribution'`,
`'observation O1'`, `'interpretation I2'`, `'consequence C1'`, `'factor 3'`
"""

__all__ = ['Violation',
           'validate',
           'validate_lesson',
           'validate_process_model',
           'validate_quality_model',
           'validate_vector']

from collections import Counter, namedtuple

from evb.core.model import (CharacterizationVector, DISTRIBUTION_KINDS,
                            ID_PATTERN, INDICATOR_KINDS, LessonLearned,
                            METRIC_SCALES, MODEL_TYPES, NAME_PATTERN, Observation,
                            ProblemSolution, ProcessModelStub, QualityModel)

Violation = namedtuple('Violation', ['field', 'message'])
"""One broken rule: the offending field and what is wrong with it."""

# ---- Helpers

def _blank(text):
    return text is None or not str(text).strip()

def _check_id(value, field='id'):
    if _blank(value):
        return [Violation(field, 'id must be non-empty')]
    if not ID_PATTERN.fullmatch(value):
        return [Violation(field, f'id "{value}" may only contain letters, '
                                 f'digits, "_", "." and "-"')]
    return []

def _check_name(value, field, what):
    if _blank(value):
        return [Violation(field, f'{what} must be non-empty')]
    if not NAME_PATTERN.fullmatch(value):
        return [Violation(field, f'{what} "{value}" must be a letter or "_" followed by '
                                 f'letters, digits or "_"')]
    return []

def _check_references(refs):
    out = []
    for ref in refs:
        out += _check_id(ref, field='references')
    return out

def _check_required(pairs):
    return [Violation(f, 'must be non-empty') for f, v in pairs if _blank(v)]

# ---- Element validators

def validate_vector(cv):
    '''
    Check a characterization vector.

    Parameters
    ----------
    cv : evb.core.model.CharacterizationVector

    Returns
    -------
    list of Violation

    '''
    out = _check_id(cv.id)
    if not cv.factors:
        out.append(Violation('factors', 'a characterization vector needs at least one factor'))
    seen = set()
    for i, f in enumerate(cv.factors, start=1):
        where = f'factor {i}'
        for attr in ('category', 'name', 'value'):
            if _blank(getattr(f, attr)):
                out.append(Violation(where, f'factor {attr} must be non-empty'))
        key = (str(f.category).strip(), str(f.name).strip())
        if key in seen:
            out.append(Violation(where, f'duplicate factor "{key[0]}" / "{key[1]}"'))
        seen.add(key)
    return out

def validate_quality_model(qm):
    '''
    Check a quality model against the quality-model template rules.

    Among others: the model aggregates exactly one indicator, the
    measurement period is not inverted, labels are unique, and every label
    cited by an interpretation (consequence) names an existing observation
    (interpretation).

    Parameters
    ----------
    qm : evb.core.model.QualityModel

    Returns
    -------
    list of Violation
        Empty iff every rule holds.

    '''
    out = _check_id(qm.id)
    out += _check_required([('name', qm.name), ('question', qm.question)])

    if qm.model_type not in MODEL_TYPES:
        out.append(Violation('model_type', f'model type must be one of {MODEL_TYPES}, '
                                           f'not "{qm.model_type}"'))

    start, end = qm.period
    if start > end:
        out.append(Violation('period', f'period start after end ({start} > {end})'))

    goal = qm.goal
    out += _check_required([('goal.object', goal.object),
                            ('goal.purpose', goal.purpose),
                            ('goal.quality_focus', goal.quality_focus),
                            ('goal.viewpoint', goal.viewpoint)])
    out += _check_id(goal.context, field='goal.context')

    # metrics & indicator
    names = Counter(m.name for m in qm.metrics)
    for m in qm.metrics:
        where = f'metric {m.name}'
        out += _check_name(m.name, where, 'metric name')
        if m.scale not in METRIC_SCALES:
            out.append(Violation(where, f'scale must be one of {METRIC_SCALES}, not "{m.scale}"'))
    for name, n in names.items():
        if n > 1:
            out.append(Violation(f'metric {name}', f'metric "{name}" declared {n} times'))

    if len(qm.indicators) != 1:
        out.append(Violation('indicator', f'indicator count {len(qm.indicators)} ≠ 1'))
    for ind in qm.indicators:
        out += _check_indicator(ind, names)

    # observations / interpretations / consequences
    labels = Counter([o.label for o in qm.observations] +
                     [i.label for i in qm.interpretations] +
                     [c.label for c in qm.consequences])
    for label, n in labels.items():
        if n > 1:
            out.append(Violation('labels', f'label "{label}" used {n} times'))

    obs_labels = {o.label for o in qm.observations}
    int_labels = {i.label for i in qm.interpretations}
    for o in qm.observations:
        out += _check_name(o.label, f'observation {o.label}', 'label')
        if _blank(o.text):
            out.append(Violation(f'observation {o.label}', 'text must be non-empty'))
    out += _check_citations(qm.interpretations, 'interpretation', 'observation', obs_labels)
    out += _check_citations(qm.consequences, 'consequence', 'interpretation', int_labels)

    out += _check_references(qm.references)
    return out

def _check_indicator(ind, metric_names):
    where = f'indicator {ind.name}'
    out = _check_name(ind.name, where, 'indicator name')
    if ind.kind not in INDICATOR_KINDS:
        out.append(Violation(where, f'kind must be one of {INDICATOR_KINDS}, not "{ind.kind}"'))
    if ind.value_metric not in metric_names:
        out.append(Violation(where, f'value metric "{ind.value_metric}" is not declared'))
    if ind.group_by is not None and ind.group_by not in metric_names:
        out.append(Violation(where, f'group-by metric "{ind.group_by}" is not declared'))
    if ind.kind in DISTRIBUTION_KINDS and ind.group_by is None:
        out.append(Violation(where, f'{ind.kind} indicators require a group-by metric'))
    if ind.order is not None:
        dupes = [k for k, n in Counter(ind.order).items() if n > 1]
        if dupes:
            out.append(Violation(where, f'order repeats keys: {", ".join(dupes)}'))
    return out

def _check_citations(entries, kind, cited_kind, known):
    out = []
    for e in entries:
        where = f'{kind} {e.label}'
        out += _check_name(e.label, where, 'label')
        if _blank(e.text):
            out.append(Violation(where, 'text must be non-empty'))
        if not e.cites:
            out.append(Violation(where, f'must cite at least one {cited_kind}'))
        for cited in e.cites:
            if cited not in known:
                out.append(Violation(where, f'cites unknown {cited_kind} label "{cited}"'))
    return out

def validate_lesson(ll):
    '''
    Check a lesson learned.

    Parameters
    ----------
    ll : evb.core.model.LessonLearned

    Returns
    -------
    list of Violation
        Empty iff every rule holds.

    '''
    out = _check_id(ll.id)
    if not ll.topic:
        out.append(Violation('topic', 'topic needs at least one keyword'))
    for kw in ll.topic:
        if _blank(kw):
            out.append(Violation('topic', 'topic keywords must be non-blank'))
    out += _check_required([('situation', ll.situation)])
    out += _check_id(ll.context, field='context')

    body = ll.body
    if isinstance(body, Observation):
        out += _check_required([('observation', body.observation)])
    elif isinstance(body, ProblemSolution):
        out += _check_required([('problem', body.problem), ('cause', body.cause)])
        if _blank(body.solution_reactive) and _blank(body.solution_preventive):
            out.append(Violation('solution', 'a problem/solution pair needs a '
                                             'reactive or a preventive solution'))
    else:
        out.append(Violation('body', 'lesson body must be an observation or '
                                     'a problem/solution pair'))

    out += _check_references(ll.references)
    return out

def validate_process_model(pm):
    '''Check a process model stub: id, name, and unique phase ids.'''
    out = _check_id(pm.id)
    out += _check_required([('name', pm.name)])
    if not pm.phases:
        out.append(Violation('phases', 'a process model needs at least one phase'))
    for phase in pm.phases:
        if _blank(phase):
            out.append(Violation('phases', 'phase identifiers must be non-blank'))
    dupes = [p for p, n in Counter(pm.phases).items() if n > 1]
    if dupes:
        out.append(Violation('phases', f'duplicate phases: {", ".join(dupes)}'))
    return out

_VALIDATORS = {CharacterizationVector: validate_vector,
               QualityModel: validate_quality_model,
               LessonLearned: validate_lesson,
               ProcessModelStub: validate_process_model}

def validate(element):
    '''
    Validate any document element.

    Raises
    ------
    TypeError
        `element` is not one of the four element types.

    Returns
    -------
    list of Violation

    '''
    try:
        func = _VALIDATORS[type(element)]
    except KeyError:
        raise TypeError(f'cannot validate object of type {type(element).__name__}')
    return func(element)
