#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Context matching.

Experience only transfers between similar environments, so candidates are
ranked by how much of a query characterization vector their own vector
shares.  Factors are compared as exact `(category, name, value)` triples and
all factors weigh the same.
"""

__all__ = ['MatchScore',
           'context_vector',
           'match_context',
           'vector_score']

from collections import namedtuple

from evb.core.model import CharacterizationVector, LessonLearned, QualityModel
from evb.core.significance import significance_rank
from evb.errors import UnknownElement, UnresolvedContext

MatchScore = namedtuple('MatchScore', ['id', 'score', 'matched', 'query_count'])
"""Share of the query triples (`score`, in [0, 1]) found in a candidate's
vector; `matched` of `query_count` triples."""

def context_vector(store, element_id):
    '''
    Return the characterization vector scoping a stored element.

    A vector is its own context; quality models and lessons point at theirs.

    Raises
    ------
    UnresolvedContext
        The element is missing, has no context, or its context is not a
        stored characterization vector.

    '''
    try:
        element = store.get(element_id)
    except UnknownElement:
        raise UnresolvedContext(f'candidate "{element_id}" is not in the store')
    if isinstance(element, CharacterizationVector):
        return element
    if isinstance(element, (QualityModel, LessonLearned)):
        context_id = element.context
    else:
        raise UnresolvedContext(f'candidate "{element_id}" has no context')

    try:
        cv = store.get(context_id)
    except UnknownElement:
        cv = None
    if not isinstance(cv, CharacterizationVector):
        raise UnresolvedContext(f'context "{context_id}" of candidate "{element_id}" '
                                f'is not a stored characterization vector')
    return cv

def vector_score(query, candidate):
    '''Return `(matched, query_count)` for two characterization vectors.'''
    q = query.triples()
    return len(q & candidate.triples()), len(q)

def _rank(element):
    if isinstance(element, CharacterizationVector):
        return (0, 0)
    return significance_rank(element.significance)

def match_context(store, query, candidates):
    '''
    Rank stored elements by context similarity.

    Parameters
    ----------
    store : evb.repository.store.Store
        Store holding the candidates and their vectors.
    query : evb.core.model.CharacterizationVector
        Vector of the situation at hand.
    candidates : list of str
        Element ids to rank.  Repeated ids are scored once.

    Raises
    ------
    ValueError
        The query vector has no factors.
    UnresolvedContext
        A candidate's vector cannot be found.

    Returns
    -------
    list of MatchScore
        Highest score first, then highest significance (vectors themselves
        rank lowest), then by id.

    '''
    if not query.factors:
        raise ValueError(f'query vector "{query.id}" has no factors')

    scores = []
    for element_id in dict.fromkeys(candidates):
        matched, total = vector_score(query, context_vector(store, element_id))
        scores.append(MatchScore(element_id, matched / total, matched, total))

    scores.sort(key=lambda m: m.id)
    scores.sort(key=lambda m: (m.score, _rank(store.get(m.id))), reverse=True)
    return scores
