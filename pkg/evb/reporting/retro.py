#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Questions for collecting lessons learned at the end of a project.
"""

__all__ = ['RETROSPECTIVE_QUESTIONS',
           'render_retrospective',
           'retrospective_questions']

from evb.reporting.markdown import Report

RETROSPECTIVE_QUESTIONS = ("What did we do well, which we might forget if we don't discuss it?",
                           "What did we learn?",
                           "What should we do differently next time?",
                           "What still puzzles us?")

def retrospective_questions():
    '''The four retrospective questions, in the order they are asked.'''
    return list(RETROSPECTIVE_QUESTIONS)

def render_retrospective(title='Retrospective'):
    '''
    A Markdown worksheet with one section per retrospective question, for
    taking notes during an interview or meeting.  Answers that turn out to
    be worth keeping are then documented as lessons learned.
    '''
    lines = [f'# {title}', '']
    for i, question in enumerate(RETROSPECTIVE_QUESTIONS, start=1):
        lines += [f'## {i}. {question}', '', '- ', '']
    return Report(title, '\n'.join(lines))
