# -*- coding: utf-8 -*-

import os

import pytest

from evb.core.model import Observation, ProblemSolution, Significance
from evb.dsl import parse, parse_file, serialize
from evb.errors import DocumentError
from evb.examples import DATADIR, example_path

EXAMPLE_FILES = sorted(f for f in os.listdir(os.path.join(DATADIR, 'wise_pilot_x'))
                       if f.endswith('.evb'))

def read(name):
    with open(example_path('wise_pilot_x', name), encoding='utf-8') as f:
        return f.read()

def errors_of(text):
    with pytest.raises(DocumentError) as info:
        parse(text)
    return info.value.errors

# ---- Examples

@pytest.mark.parametrize('name', EXAMPLE_FILES)
def test_examples_round_trip_byte_identical(name):
    text = read(name)
    assert serialize(parse(text)) == text

def test_quality_model_fields(examples):
    qm = examples['WISE-QM3PX11']
    assert qm.name == 'Effort Characterization Pilot X Iteration 1 Server Side'
    assert qm.model_type == 'process_oriented'
    assert qm.sub_kind == 'effort model'
    assert qm.significance == Significance('case_study', 1)
    assert [d.isoformat() for d in qm.period] == ['2001-07-22', '2002-12-31']
    assert qm.goal.context == 'CV1PX11'
    assert qm.indicator.order == ('RP', 'DP', 'CP', 'IP', 'AP')
    assert [c.cites for c in qm.interpretations] == [('O1',), ('O2',), ('O2',)]
    assert qm.references == ('PM1PX11',)
    assert qm.additional_docs == ('D8-V1 “Evaluation - Indicators”',)

def test_lessons(examples):
    obs = examples['LL3PXI2-1']
    assert isinstance(obs.body, Observation)
    assert obs.topic == ('J2ME', 'WAP 1.0', 'Push technology', 'Information system',
                         'Cellular phone Nokia 6110')
    pair = examples['LL1PX11-1']
    assert isinstance(pair.body, ProblemSolution)
    assert pair.body.solution_reactive == 'See preventive solution.'
    assert pair.body.log is None

def test_parse_file_equals_parse():
    path = example_path('wise_pilot_x', 'lessons.evb')
    assert parse_file(path) == parse(read('lessons.evb'))

def test_empty_document():
    assert len(parse('')) == 0
    assert serialize(parse('  # nothing here\n')) == ''

# ---- Lenient input, canonical output

def test_fields_in_any_order_comments_and_crlf():
    text = ('\ufeff# a process model\r\n'
            'process_model "PM9" {\r\n'
            '  phases: [A, "B", C ]   # three phases\r\n'
            '  name: "Nine"\r\n'
            '}\r\n')
    doc = parse(text)
    assert doc.get('PM9').phases == ('A', 'B', 'C')
    assert serialize(doc) == ('process_model "PM9" {\n'
                              '  name: "Nine"\n'
                              '  phases: [A, B, C]\n'
                              '}\n')

def test_canonical_form_is_a_fixed_point():
    text = '\n\n'.join(read(n).strip() for n in EXAMPLE_FILES)
    once = serialize(parse(text))
    assert serialize(parse(once)) == once

def test_explicit_quality_focus_is_kept():
    text = read('quality_model.evb').replace('    viewpoint:', '    quality_focus: "cost"\n    viewpoint:')
    qm = parse(text).get('WISE-QM3PX11')
    assert qm.goal.quality_focus == 'cost'
    assert not qm.goal.quality_focus_derived
    assert serialize(parse(text)) == text

def test_strings_with_escapes_survive():
    text = ('process_model "PM1" {\n'
            '  name: "A \\"quoted\\" name\\twith a tab\\\\"\n'
            '  phases: ["a, b", "[x]", "@y", " padded "]\n'
            '}\n')
    doc = parse(text)
    pm = doc.get('PM1')
    assert pm.name == 'A "quoted" name\twith a tab\\'
    assert pm.phases == ('a, b', '[x]', '@y', ' padded ')
    assert serialize(doc) == text

# ---- Errors

def test_duplicate_id():
    text = 'process_model "P" {\n  name: "x"\n  phases: [A]\n}\n' * 2
    errors = errors_of(text)
    assert len(errors) == 1
    assert errors[0].message == 'duplicate id "P"'
    assert (errors[0].span.line, errors[0].span.column) == (5, 15)

@pytest.mark.parametrize('first', ['process_model "A" {\n  name: "a"\n  phases: [A, A]\n}\n',
                                   'process_model "A" {\n  name: "a"\n}\n\n'])
def test_duplicate_id_after_invalid_element(first):
    text = first + 'process_model "A" {\n  name: "b"\n  phases: [B]\n}\n'
    errors = errors_of(text)
    assert len(errors) == 2
    assert errors[1].message == 'duplicate id "A"'
    assert (errors[1].span.line, errors[1].span.column) == (5, 15)

def test_bytes_that_are_not_utf8(tmp_path):
    path = tmp_path / 'bad.evb'
    path.write_bytes(b'process_model "A" {\n  name: "\xc3\xa9\xff"\n  phases: [X]\n}\n')
    with pytest.raises(DocumentError) as info:
        parse_file(str(path))
    [error] = info.value.errors
    assert error.message == 'invalid UTF-8 byte 0xff'
    assert (error.span.line, error.span.column) == (2, 11)

def test_us_date_gets_iso_hint():
    text = read('quality_model.evb').replace('2001-07-22', '7-22-2001')
    errors = errors_of(text)
    assert len(errors) == 1
    assert '2001-07-22' in errors[0].message
    assert 'ISO 8601' in errors[0].message
    assert errors[0].span.line == 5

def test_inverted_period_is_located():
    text = read('quality_model.evb').replace('2001-07-22 .. 2002-12-31', '2002-12-31 .. 2001-07-22')
    errors = errors_of(text)
    assert [e.span.line for e in errors] == [5]
    assert errors[0].message.startswith('period:')

def test_unknown_observation_label_is_located():
    text = read('quality_model.evb').replace('interpretation I1 from O1', 'interpretation I1 from O7')
    errors = errors_of(text)
    assert len(errors) == 1
    assert errors[0].span.line == 19
    assert '"O7"' in errors[0].message

def test_two_indicators():
    text = read('quality_model.evb').replace(
        '    metric effort: hours\n',
        '    metric effort: hours\n    indicator total = sum(effort)\n')
    errors = errors_of(text)
    assert len(errors) == 1
    assert 'indicator count 2' in errors[0].message

@pytest.mark.parametrize('sig', ['case_study', 'case_study()', 'case_study(0)',
                                 'case_study(x)', 'anecdote(1)'])
def test_malformed_significance(sig):
    text = read('lessons.evb').replace('significance: case_study(1)', f'significance: {sig}', 1)
    errors = errors_of(text)
    assert len(errors) == 1
    assert 'significance' in errors[0].message
    assert errors[0].span.line == 4

def test_errors_in_several_elements_are_all_reported():
    text = ('process_model "A" {\n  name: "a"\n}\n'
            'widget "B" {\n  name: "b"\n}\n'
            'process_model "C" {\n  name: "c"\n  name: "again"\n  phases: [X]\n}\n'
            'process_model "D" {\n  name: "d"\n  phases: [X]\n}\n')
    errors = errors_of(text)
    assert [e.span.line for e in errors] == [1, 4, 9]
    assert 'missing required field "phases"' in errors[0].message
    assert errors[1].message == 'unknown keyword "widget"'
    assert 'duplicate field "name"' in errors[2].message

def test_unterminated_string():
    errors = errors_of('process_model "A" {\n  name: "a\n  phases: [X]\n}\n')
    assert errors[0].message == 'unterminated string'
    assert errors[0].span.line == 2

def test_lesson_cannot_be_both_kinds():
    text = read('lessons.evb').replace('  references: []\n',
                                       '  cause: "Because."\n  references: []\n')
    errors = errors_of(text)
    assert len(errors) == 1
    assert 'either an observation or a problem/solution pair' in errors[0].message

def test_document_error_message_names_first_error():
    with pytest.raises(DocumentError, match=r'1 parse error\(s\); first at 1:1'):
        parse('widget "A" {}\n')
