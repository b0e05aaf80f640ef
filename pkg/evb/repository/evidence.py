#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Evidence statements.

A statement links stored elements into a claim of one of three shapes:

- a technology was applied within a context, with a quality model as result
(`'technology_applied'`);
- a process model was followed within a context (`'process_followed'`);
- a problem arose and was solved within a context (`'problem_solved'`).

Every statement carries the significance backing it.  Turning a statement
into a sentence is done by `evb.reporting.render_evidence_statement`.
"""

__all__ = ['EVIDENCE_KINDS', 'EvidenceStatement', 'make_evidence_statement']

from dataclasses import dataclass
from typing import Optional, Union

from evb.core.model import (CharacterizationVector, LessonLearned,
                            ProblemSolution, ProcessModelStub, QualityModel,
                            Significance, TechnologyRef)
from evb.errors import MissingResult, UnknownElement, UnresolvedContext, UnresolvedSubject

EVIDENCE_KINDS = ('technology_applied', 'process_followed', 'problem_solved')

@dataclass(frozen=True)
class EvidenceStatement:
    '''`subject` is a `TechnologyRef` for technology statements and an
    element id otherwise; `result` is a quality model id.'''
    kind: str
    subject: Union[TechnologyRef, str]
    context: str
    significance: Significance
    result: Optional[str] = None

def _lookup(store, element_id, cls):
    try:
        element = store.get(element_id)
    except UnknownElement:
        return None
    return element if isinstance(element, cls) else None

def make_evidence_statement(store, kind, subject, context, significance, result=None):
    '''
    Build an evidence statement over stored elements.

    Parameters
    ----------
    store : evb.repository.store.Store
        Store the ids refer to.
    kind : str
        One of `'technology_applied'`, `'process_followed'`,
        `'problem_solved'`.
    subject : TechnologyRef or str
        The technology (a plain name is accepted), the process model id, or
        the problem/solution lesson id.
    context : str
        Characterization vector id.
    significance : evb.core.model.Significance
        How the claim was validated.
    result : str, optional
        Quality model id.  Required for `'technology_applied'`, not allowed
        otherwise. The default is None.

    Raises
    ------
    UnresolvedContext
        `context` is not a stored characterization vector.
    UnresolvedSubject
        The subject (or result) does not resolve to the right element kind.
    MissingResult
        A technology statement without a result.

    Returns
    -------
    EvidenceStatement

    '''
    if kind not in EVIDENCE_KINDS:
        raise ValueError(f'`kind` must be one of {EVIDENCE_KINDS}, not "{kind}"')
    if not isinstance(significance, Significance):
        raise TypeError(f'`significance` must be a Significance, not '
                        f'{type(significance).__name__}')
    if _lookup(store, context, CharacterizationVector) is None:
        raise UnresolvedContext(f'context "{context}" is not a stored characterization vector')

    if kind == 'technology_applied':
        if isinstance(subject, str):
            subject = TechnologyRef(subject)
        if result is None:
            raise MissingResult(f'evidence that technology "{subject}" was applied '
                                f'needs a quality model as result')
        if _lookup(store, result, QualityModel) is None:
            raise UnresolvedSubject(f'result "{result}" is not a stored quality model')
        return EvidenceStatement(kind, subject, context, significance, result)

    if result is not None:
        raise ValueError(f'`result` only applies to technology_applied statements, '
                         f'not {kind}')
    if kind == 'process_followed':
        if _lookup(store, subject, ProcessModelStub) is None:
            raise UnresolvedSubject(f'subject "{subject}" is not a stored process model')
    else:
        lesson = _lookup(store, subject, LessonLearned)
        if lesson is None or not isinstance(lesson.body, ProblemSolution):
            raise UnresolvedSubject(f'subject "{subject}" is not a stored '
                                    f'problem/solution lesson')
    return EvidenceStatement(kind, subject, context, significance)
