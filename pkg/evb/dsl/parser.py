#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Parser for `.evb` evidence documents.

The parser is a hand-written recursive descent over the raw text.  It keeps
going after an error: a broken element is skipped up to its closing brace
and parsing resumes with the next one, so a file with several mistakes
reports all of them.  Every parsed element is then run through
`evb.core.validation`, and each violation becomes a `ParseError` located at
the field it concerns.

See `evb.dsl` for the grammar.
"""

__all__ = ['parse', 'parse_file']

from bisect import bisect_right
import datetime as dt
import re

from evb.core.model import (CharacterizationVector, Citation, Factor, GqmGoal,
                            IndicatorDef, LabeledText, LessonLearned, MetricDef,
                            NAME_PATTERN, Observation, ProblemSolution, ProcessModelStub,
                            QualityModel, SIGNIFICANCE_KINDS, Significance,
                            with_derived_quality_focus)
from evb.core.validation import validate
from evb.dsl.document import Document, ParseError, SourceSpan
from evb.errors import DocumentError

ELEMENT_KEYWORDS = ('context', 'quality_model', 'lesson', 'process_model')

_IDENT = NAME_PATTERN
_REF = re.compile(r'@([A-Za-z0-9_.\-]+)')
_SIG = re.compile(r'([A-Za-z_][A-Za-z0-9_]*)\s*\(([^()\n]*)\)')
_DATE_WORD = re.compile(r'[0-9][0-9A-Za-z/\-]*')
_ISO_DATE = re.compile(r'\d{4}-\d{2}-\d{2}')
_US_DATE = re.compile(r'(\d{1,2})[-/](\d{1,2})[-/](\d{4})')
_ESCAPES = {'"': '"', '\\': '\\', 'n': '\n', 't': '\t'}

_PROBLEM_FIELDS = ('problem', 'cause', 'solution_reactive', 'solution_preventive', 'log')

class _Abort(Exception):
    '''Unwinds the parse of the current element.'''

    def __init__(self, error):
        super().__init__(error.message)
        self.error = error

class _Fields:
    '''Values and source spans collected for one element.'''

    def __init__(self, parser, kind, header):
        self.parser = parser
        self.kind = kind
        self.header = header
        self.values = {}
        self.spans = {'id': header}

    def set(self, key, value, span):
        if key in self.values:
            self.parser.error(span, f'duplicate field "{key}" in {self.kind}')
            return
        self.values[key] = value
        self.spans[key] = span

    def get(self, key, default=None):
        return self.values.get(key, default)

    def require(self, *keys):
        for key in keys:
            if key not in self.values:
                self.parser.error(self.header, f'missing required field "{key}" in {self.kind}',
                                  expected=key)

class _Parser:

    def __init__(self, text):
        if text.startswith('\ufeff'):
            text = text[1:]
        self.text = text.replace('\r\n', '\n')
        self.n = len(self.text)
        self.pos = 0
        self.errors = []
        self._line_starts = [0] + [m.end() for m in re.finditer('\n', self.text)]

    # ---- Location & errors

    def span(self, pos=None, length=0):
        pos = self.pos if pos is None else pos
        pos = min(max(pos, 0), self.n)
        line = bisect_right(self._line_starts, pos)
        column = pos - self._line_starts[line - 1] + 1
        return SourceSpan(line, column, max(0, min(length, self.n - pos)))

    def error(self, span, message, expected=None):
        self.errors.append(ParseError(span, message, expected))

    def fail(self, message, pos=None, length=1, expected=None):
        raise _Abort(ParseError(self.span(pos, length), message, expected))

    # ---- Scanning

    def skip(self):
        text, n = self.text, self.n
        while self.pos < n:
            c = text[self.pos]
            if c in ' \t\n\r':
                self.pos += 1
            elif c == '#':
                end = text.find('\n', self.pos)
                self.pos = n if end == -1 else end
            else:
                break

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < self.n else ''

    def expect(self, literal, what=None):
        self.skip()
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return
        what = what or f'"{literal}"'
        found = self.text[self.pos] if self.pos < self.n else 'end of input'
        self.fail(f'expected {what}, found "{found}"' if self.pos < self.n
                  else f'expected {what} before end of input', expected=what)

    def ident(self, what='identifier'):
        self.skip()
        m = _IDENT.match(self.text, self.pos)
        if not m:
            self.fail(f'expected {what}', expected=what)
        self.pos = m.end()
        return m.group(), self.span(m.start(), m.end() - m.start())

    def string(self, what='string'):
        self.skip()
        start = self.pos
        if self.pos >= self.n or self.text[self.pos] != '"':
            self.fail(f'expected {what} in double quotes', expected=what)
        self.pos += 1
        out = []
        while True:
            if self.pos >= self.n or self.text[self.pos] == '\n':
                self.fail('unterminated string', pos=start, length=self.pos - start)
            c = self.text[self.pos]
            if c == '"':
                self.pos += 1
                break
            if c == '\\':
                esc = self.text[self.pos + 1] if self.pos + 1 < self.n else ''
                if esc not in _ESCAPES:
                    self.fail(f'unknown escape "\\{esc}"', length=2)
                out.append(_ESCAPES[esc])
                self.pos += 2
                continue
            out.append(c)
            self.pos += 1
        return ''.join(out), self.span(start, self.pos - start)

    def colon_string(self, what='string'):
        self.expect(':')
        return self.string(what)

    def ref(self):
        self.skip()
        m = _REF.match(self.text, self.pos)
        if not m:
            self.fail('expected @id reference', expected='@id')
        self.pos = m.end()
        return m.group(1), self.span(m.start(), m.end() - m.start())

    def significance(self):
        self.skip()
        start = self.pos
        m = _SIG.match(self.text, self.pos)
        if not m:
            self.fail('malformed significance; expected KIND(COUNT), e.g. case_study(1)',
                      expected='KIND(COUNT)')
        kind, count = m.group(1), m.group(2).strip()
        if kind not in SIGNIFICANCE_KINDS:
            self.fail(f'malformed significance: unknown kind "{kind}"', length=len(kind),
                      expected=', '.join(SIGNIFICANCE_KINDS))
        if not re.fullmatch(r'[0-9]+', count) or int(count) < 1:
            self.fail(f'malformed significance: count must be a positive integer, not "{count}"',
                      pos=m.start(2), length=len(m.group(2)))
        self.pos = m.end()
        return Significance(kind, int(count)), self.span(start, self.pos - start)

    def date(self):
        self.skip()
        m = _DATE_WORD.match(self.text, self.pos)
        if not m:
            self.fail('malformed date; expected YYYY-MM-DD', expected='YYYY-MM-DD')
        word = m.group()
        length = len(word)
        if _ISO_DATE.fullmatch(word):
            try:
                value = dt.date.fromisoformat(word)
            except ValueError:
                self.fail(f'malformed date "{word}": not a calendar date', length=length)
            self.pos = m.end()
            return value
        us = _US_DATE.fullmatch(word)
        if us:
            month, day, year = us.groups()
            hint = f'{year}-{int(month):02d}-{int(day):02d}'
            self.fail(f'malformed date "{word}": dates must be ISO 8601 (YYYY-MM-DD), '
                      f'e.g. {hint}', length=length, expected='YYYY-MM-DD')
        self.fail(f'malformed date "{word}"; expected YYYY-MM-DD', length=length,
                  expected='YYYY-MM-DD')

    def items(self):
        '''Parse `[a, "b", @c]` into `(kind, value, span)` triples, where
        kind is `'bare'`, `'string'` or `'ref'`.'''
        self.expect('[')
        out = []
        if self.peek() == ']':
            self.pos += 1
            return out
        while True:
            c = self.peek()
            start = self.pos
            if c == '"':
                value, span = self.string()
                out.append(('string', value, span))
            elif c == '@':
                value, span = self.ref()
                out.append(('ref', value, span))
            elif c in (',', ']', ''):
                self.fail('empty list item', expected='list item')
            else:
                end = start
                while end < self.n and self.text[end] not in ',]\n':
                    end += 1
                raw = self.text[start:end]
                value = raw.strip()
                self.pos = end
                out.append(('bare', value, self.span(start, len(raw.rstrip()))))
            c = self.peek()
            if c == ',':
                self.pos += 1
            elif c == ']':
                self.pos += 1
                return out
            else:
                self.fail('expected "," or "]" in list', expected='"," or "]"')

    def text_items(self, what):
        out = []
        for kind, value, span in self.items():
            if kind == 'ref':
                self.fail(f'{what} cannot contain @id references', pos=None, length=0)
            out.append(value)
        return tuple(out)

    def ref_items(self):
        out = []
        for kind, value, span in self.items():
            if kind != 'ref':
                raise _Abort(ParseError(span, f'expected @id reference, found "{value}"', '@id'))
            out.append(value)
        return tuple(out)

    def recover(self, start):
        '''Skip from `start` past the brace block that closes the element.'''
        text, n = self.text, self.n
        pos, depth, opened = start, 0, False
        while pos < n:
            c = text[pos]
            if c == '"':
                pos += 1
                while pos < n and text[pos] not in '"\n':
                    pos += 2 if text[pos] == '\\' else 1
            elif c == '#':
                end = text.find('\n', pos)
                pos = n if end == -1 else end
                continue
            elif c == '{':
                depth += 1
                opened = True
            elif c == '}':
                depth -= 1
                if opened and depth <= 0:
                    self.pos = pos + 1
                    return
            pos += 1
        self.pos = n

    def body(self, fields, handlers):
        '''Dispatch `keyword ...` entries to handlers until the closing brace.'''
        while True:
            c = self.peek()
            if c == '}':
                self.pos += 1
                return
            if c == '':
                self.fail(f'unexpected end of input in {fields.kind}; missing "}}"',
                          length=0, expected='}')
            kw, span = self.ident('field name')
            handler = handlers.get(kw)
            if handler is None:
                self.fail(f'unknown keyword "{kw}" in {fields.kind}', pos=self.pos - len(kw),
                          length=len(kw), expected=', '.join(handlers))
            handler(kw, span)

    # ---- Document

    def document(self):
        elements = []
        seen = set()
        builders = {'context': self.context,
                    'quality_model': self.quality_model,
                    'lesson': self.lesson,
                    'process_model': self.process_model}
        while self.peek():
            start = self.pos
            before = len(self.errors)
            element_id = element = None
            try:
                kw, kw_span = self.ident('element keyword')
                if kw not in builders:
                    self.fail(f'unknown keyword "{kw}"', pos=start, length=len(kw),
                              expected=', '.join(ELEMENT_KEYWORDS))
                element_id, id_span = self.string('element id')
                self.expect('{')
                fields = _Fields(self, kw, id_span)
                element = builders[kw](element_id, fields)
            except _Abort as abort:
                self.errors.append(abort.error)
                self.recover(start)
            # ids count as taken even when their element is broken
            if element_id is not None:
                if element_id in seen:
                    self.error(id_span, f'duplicate id "{element_id}"')
                    continue
                seen.add(element_id)
            if len(self.errors) > before or element is None:
                continue
            violations = validate(element)
            for v in violations:
                self.error(_locate(fields.spans, v.field, id_span), f'{v.field}: {v.message}')
            if violations:
                continue
            elements.append(element)
        return Document(tuple(elements))

    # ---- Elements

    def context(self, element_id, fields):
        factors = []
        while True:
            c = self.peek()
            if c == '}':
                self.pos += 1
                break
            if c != '"':
                if _IDENT.match(self.text, self.pos):
                    kw = _IDENT.match(self.text, self.pos).group()
                    self.fail(f'unknown keyword "{kw}" in context', length=len(kw),
                              expected='"category" / "name": "value"')
                self.fail('expected factor "category" / "name": "value"',
                          expected='"category" / "name": "value"')
            category, span = self.string('factor category')
            self.expect('/')
            name, _ = self.string('factor name')
            self.expect(':')
            value, _ = self.string('factor value')
            factors.append(Factor(category, name, value))
            fields.spans[f'factor {len(factors)}'] = span
        return CharacterizationVector(element_id, tuple(factors))

    def quality_model(self, element_id, fields):
        lists = {'metrics': [], 'indicators': [], 'observation': [],
                 'interpretation': [], 'consequence': []}

        def name(kw, span):
            fields.set('name', self.colon_string()[0], span)

        def type_(kw, span):
            self.expect(':')
            model_type, _ = self.ident('model type')
            sub_kind = self.string('model sub-kind')[0] if self.peek() == '"' else None
            fields.set('type', (model_type, sub_kind), span)
            fields.spans['model_type'] = span

        def significance(kw, span):
            self.expect(':')
            fields.set('significance', self.significance()[0], span)

        def period(kw, span):
            self.expect(':')
            start = self.date()
            self.expect('..')
            end = self.date()
            fields.set('period', (start, end), span)

        def goal(kw, span):
            facets = _Fields(self, 'goal', span)

            def facet(kw, span):
                facets.set(kw, self.colon_string()[0], span)
                fields.spans[f'goal.{kw}'] = span

            def context(kw, span):
                self.expect(':')
                facets.set('context', self.ref()[0], span)
                fields.spans['goal.context'] = span

            self.expect('{')
            self.body(facets, {'object': facet, 'purpose': facet,
                               'quality_focus': facet, 'viewpoint': facet,
                               'context': context})
            facets.require('object', 'purpose', 'viewpoint', 'context')
            fields.set('goal', facets.values, span)

        def question(kw, span):
            text, _ = self.string('question text')
            qfields = _Fields(self, 'question', span)

            def metric(kw, span):
                mname, mspan = self.ident('metric name')
                self.expect(':')
                scale, _ = self.ident('metric scale')
                lists['metrics'].append(MetricDef(mname, scale))
                fields.spans[f'metric {mname}'] = mspan

            def indicator(kw, span):
                lists['indicators'].append(self.indicator(fields))
                fields.spans['indicator'] = span

            self.expect('{')
            self.body(qfields, {'metric': metric, 'indicator': indicator})
            fields.set('question', text, span)
            fields.spans.setdefault('indicator', span)

        def observation(kw, span):
            label, lspan = self.ident('label')
            text, _ = self.colon_string()
            lists['observation'].append(LabeledText(label, text))
            fields.spans[f'observation {label}'] = lspan

        def citation(kw, span):
            label, lspan = self.ident('label')
            word, wspan = self.ident('"from"')
            if word != 'from':
                self.fail(f'expected "from", found "{word}"', pos=self.pos - len(word),
                          length=len(word), expected='from')
            cites = [self.ident('cited label')[0]]
            while self.peek() == ',':
                self.pos += 1
                cites.append(self.ident('cited label')[0])
            text, _ = self.colon_string()
            lists[kw].append(Citation(label, tuple(cites), text))
            fields.spans[f'{kw} {label}'] = lspan

        def references(kw, span):
            self.expect(':')
            fields.set('references', self.ref_items(), span)

        def docs(kw, span):
            self.expect(':')
            fields.set('docs', self.text_items('docs'), span)
            fields.spans['additional_docs'] = span

        self.body(fields, {'name': name, 'type': type_, 'significance': significance,
                           'period': period, 'goal': goal, 'question': question,
                           'observation': observation, 'interpretation': citation,
                           'consequence': citation, 'references': references,
                           'docs': docs})
        fields.require('name', 'type', 'significance', 'period', 'goal', 'question')
        if any(k not in fields.values for k in ('name', 'type', 'significance',
                                                 'period', 'goal', 'question')):
            return None
        g = fields.get('goal')
        if any(k not in g for k in ('object', 'purpose', 'viewpoint', 'context')):
            return None
        model_type, sub_kind = fields.get('type')
        qm = QualityModel(id=element_id,
                          name=fields.get('name'),
                          model_type=model_type,
                          sub_kind=sub_kind,
                          significance=fields.get('significance'),
                          period=fields.get('period'),
                          goal=GqmGoal(object=g['object'], purpose=g['purpose'],
                                       quality_focus=g.get('quality_focus'),
                                       viewpoint=g['viewpoint'], context=g['context']),
                          question=fields.get('question'),
                          metrics=tuple(lists['metrics']),
                          indicators=tuple(lists['indicators']),
                          observations=tuple(lists['observation']),
                          interpretations=tuple(lists['interpretation']),
                          consequences=tuple(lists['consequence']),
                          references=fields.get('references', ()),
                          additional_docs=fields.get('docs', ()))
        return with_derived_quality_focus(qm)

    def indicator(self, fields):
        name, span = self.ident('indicator name')
        fields.spans[f'indicator {name}'] = span
        self.expect('=')
        kind, _ = self.ident('indicator kind')
        self.expect('(')
        value_metric, _ = self.ident('value metric')
        options = {}
        while self.peek() == ',':
            self.pos += 1
            opt, ospan = self.ident('indicator option')
            if opt in options:
                self.fail(f'duplicate indicator option "{opt}"', pos=self.pos - len(opt),
                          length=len(opt))
            self.expect(':')
            if opt == 'by':
                options[opt] = self.ident('group-by metric')[0]
            elif opt == 'order':
                options[opt] = self.text_items('order')
            else:
                self.fail(f'unknown indicator option "{opt}"', pos=self.pos - len(opt),
                          length=len(opt), expected='by, order')
        self.expect(')')
        return IndicatorDef(name=name, kind=kind, value_metric=value_metric,
                            group_by=options.get('by'), order=options.get('order'))

    def lesson(self, element_id, fields):

        def topic(kw, span):
            self.expect(':')
            fields.set('topic', self.text_items('topic'), span)

        def text(kw, span):
            fields.set(kw, self.colon_string()[0], span)

        def significance(kw, span):
            self.expect(':')
            fields.set('significance', self.significance()[0], span)

        def context(kw, span):
            self.expect(':')
            fields.set('context', self.ref()[0], span)

        def references(kw, span):
            self.expect(':')
            fields.set('references', self.ref_items(), span)

        def docs(kw, span):
            self.expect(':')
            fields.set('docs', self.text_items('docs'), span)
            fields.spans['additional_docs'] = span

        handlers = {'topic': topic, 'situation': text, 'significance': significance,
                    'context': context, 'observation': text, 'references': references,
                    'docs': docs}
        handlers.update({k: text for k in _PROBLEM_FIELDS})
        self.body(fields, handlers)
        fields.require('topic', 'situation', 'significance', 'context')

        problem_keys = [k for k in _PROBLEM_FIELDS if k in fields.values]
        if 'observation' in fields.values and problem_keys:
            self.error(fields.spans[problem_keys[0]],
                       'a lesson is either an observation or a problem/solution pair, not both')
            return None
        if 'observation' in fields.values:
            body = Observation(fields.get('observation'))
        elif problem_keys:
            fields.spans.setdefault('solution', fields.spans[problem_keys[0]])
            fields.require('problem', 'cause')
            body = ProblemSolution(problem=fields.get('problem'),
                                   cause=fields.get('cause'),
                                   solution_reactive=fields.get('solution_reactive'),
                                   solution_preventive=fields.get('solution_preventive'),
                                   log=fields.get('log'))
        else:
            self.error(fields.header, 'missing required field "observation" or "problem" in lesson',
                       expected='observation, problem')
            return None
        if any(k not in fields.values for k in ('topic', 'situation', 'significance', 'context')):
            return None
        return LessonLearned(id=element_id,
                             topic=fields.get('topic'),
                             situation=fields.get('situation'),
                             significance=fields.get('significance'),
                             context=fields.get('context'),
                             body=body,
                             references=fields.get('references', ()),
                             additional_docs=fields.get('docs', ()))

    def process_model(self, element_id, fields):

        def name(kw, span):
            fields.set('name', self.colon_string()[0], span)

        def phases(kw, span):
            self.expect(':')
            fields.set('phases', self.text_items('phases'), span)

        self.body(fields, {'name': name, 'phases': phases})
        fields.require('name', 'phases')
        if 'name' not in fields.values or 'phases' not in fields.values:
            return None
        return ProcessModelStub(element_id, fields.get('name'), fields.get('phases'))

def _locate(spans, field, default):
    for key in (field, field.split(' ')[0], field.split('.')[0]):
        if key in spans:
            return spans[key]
    return default

def parse(text):
    '''
    Parse an evidence document.

    Parameters
    ----------
    text : str
        Document source.  A leading byte order mark and CRLF line endings
        are accepted.

    Raises
    ------
    DocumentError
        The text has syntax errors, or an element breaks one of its
        invariants.  `DocumentError.errors` lists every `ParseError`, in
        source order.

    Returns
    -------
    evb.dsl.document.Document

    '''
    parser = _Parser(text)
    doc = parser.document()
    if parser.errors:
        errors = sorted(parser.errors, key=lambda e: (e.span.line, e.span.column))
        raise DocumentError(errors)
    return doc

def parse_file(path):
    '''
    Read a UTF-8 `.evb` file and `parse()` it.

    Raises
    ------
    OSError
        The file cannot be read.
    DocumentError
        As for `parse()`; bytes that are not UTF-8 are reported as a parse
        error at their line and column.

    '''
    with open(path, 'rb') as f:
        data = f.read()
    try:
        text = data.decode('utf-8')
    except UnicodeDecodeError as e:
        raise DocumentError([_decode_error(data, e)]) from e
    return parse(text)

def _decode_error(data, e):
    line_start = data.rfind(b'\n', 0, e.start) + 1
    line = data.count(b'\n', 0, e.start) + 1
    column = len(data[line_start:e.start].decode('utf-8', errors='replace')) + 1
    return ParseError(SourceSpan(line, column, e.end - e.start),
                      f'invalid UTF-8 byte 0x{data[e.start]:02x}')
