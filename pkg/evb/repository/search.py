#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Keyword search over lesson topics.

A query keyword matches a lesson when its words occur, in order and next to
each other, inside one of the lesson's topic keywords.  Matching ignores
case and works on whole words: `"push"` finds the topic keyword
`"Push technology"`, `"UDP"` does not find `"UDPX"`.
"""

__all__ = ['find_by_keywords', 'keyword_scores', 'tokenize']

from evb.core.significance import significance_rank

def tokenize(text):
    '''Lowercase words of `text`, as a tuple.'''
    return tuple(text.lower().split())

def _contains(tokens, query):
    n = len(query)
    return any(tokens[i:i + n] == query for i in range(len(tokens) - n + 1))

def keyword_scores(store, keywords):
    '''
    Like `find_by_keywords()`, but return `(lesson id, matched keyword
    count)` pairs in the same order.
    '''
    queries = {tokenize(k) for k in keywords} - {()}
    if not queries:
        raise ValueError('`keywords` must contain at least one non-blank keyword')

    matched = {}
    for keyword, lesson_ids in store.topic_index().items():
        tokens = tokenize(keyword)
        hits = {q for q in queries if _contains(tokens, q)}
        if hits:
            for lesson_id in lesson_ids:
                matched.setdefault(lesson_id, set()).update(hits)

    ranked = sorted(matched)
    ranked.sort(key=lambda i: (len(matched[i]), significance_rank(store.get(i).significance)),
                reverse=True)
    return [(i, len(matched[i])) for i in ranked]

def find_by_keywords(store, keywords):
    '''
    Find lessons by topic keywords.

    Parameters
    ----------
    store : evb.repository.store.Store
        Store to search.
    keywords : list of str
        Query keywords.  Order, case and repeats do not matter.

    Raises
    ------
    ValueError
        No keywords given.

    Returns
    -------
    list of str
        Ids of lessons matching at least one keyword, most matched keywords
        first, then highest significance, then by id.

    '''
    return [i for i, _ in keyword_scores(store, keywords)]
