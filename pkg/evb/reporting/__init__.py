# -*- coding: utf-8 -*-
'''This package renders experience elements, indicator results and evidence
statements as Markdown.

All renderers are pure functions returning a `Report` (a title and a Markdown
body), except `render_evidence_statement()`, which returns a single sentence.
Rendering the same input twice gives identical text.
'''

#imports for package namespace

from .markdown import (Report,
                       format_number,
                       render_context,
                       render_element,
                       render_evidence_statement,
                       render_lesson,
                       render_process_model,
                       render_quality_model)

from .retro import RETROSPECTIVE_QUESTIONS, render_retrospective, retrospective_questions

__all__ = ['Report',
           'format_number',
           'render_context',
           'render_element',
           'render_evidence_statement',
           'render_lesson',
           'render_process_model',
           'render_quality_model',
           'RETROSPECTIVE_QUESTIONS',
           'render_retrospective',
           'retrospective_questions']
