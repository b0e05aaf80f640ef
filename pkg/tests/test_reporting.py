# -*- coding: utf-8 -*-

from dataclasses import replace
from decimal import Decimal
import os

import pytest

from evb.core.model import Significance
from evb.measurement import evaluate_question
from evb.options import OPTIONS
from evb.reporting import (Report, format_number, render_context, render_element,
                           render_evidence_statement, render_lesson,
                           render_process_model, render_quality_model,
                           render_retrospective, retrospective_questions)
from evb.repository import make_evidence_statement

SNAPSHOT_DIR = os.path.join(os.path.dirname(__file__), '__snapshots__', 'test_reporting')

def stored_snapshot(name):
    with open(os.path.join(SNAPSHOT_DIR, name), encoding='utf-8', newline='') as f:
        return f.read()

# ---- Snapshots

def test_quality_model_with_result(examples, effort_dataset, markdown_snapshot):
    qm = examples['WISE-QM3PX11']
    result = evaluate_question(qm, effort_dataset).result
    report = render_quality_model(qm, result)
    assert report.title == 'Effort Characterization Pilot X Iteration 1 Server Side'
    assert report.body == markdown_snapshot

def test_quality_model_without_result(examples):
    body = render_quality_model(examples['WISE-QM3PX11']).body
    indicator = [line for line in body.splitlines() if line.startswith('| Indicator |')]
    assert indicator == ['| Indicator | What is the effort distribution (broken down by phases)? |']
    stored = stored_snapshot('test_quality_model_with_result.md')
    assert body.splitlines()[4:14] == stored.splitlines()[4:14]

def test_lesson_problem_solution(examples, markdown_snapshot):
    assert render_lesson(examples['LL1PX11-1']).body == markdown_snapshot

def test_lesson_observation(examples, markdown_snapshot):
    report = render_lesson(examples['LL3PXI2-1'])
    assert report.title == 'Lesson learned LL3PXI2-1'
    assert report.body == markdown_snapshot

def test_evidence_statements(pilot_store, text_snapshot):
    one = Significance('case_study', 1)
    statements = [
        make_evidence_statement(pilot_store, 'technology_applied', 'J2ME', 'CV1PX11', one,
                                result='WISE-QM3PX11'),
        make_evidence_statement(pilot_store, 'process_followed', 'PM1PX11', 'CV1PX11', one),
        make_evidence_statement(pilot_store, 'problem_solved', 'LL1PX11-1', 'CV1PX11',
                                Significance('case_study', 2)),
    ]
    text = ''.join(render_evidence_statement(es) + '\n' for es in statements)
    assert text == text_snapshot

# ---- Other renderers

def test_render_context(examples):
    lines = render_context(examples['CV1PX11']).body.splitlines()
    assert lines[:4] == ['# Characterization vector CV1PX11', '',
                         '| Customization factor | Characteristic | CV1PX11 |',
                         '| --- | --- | --- |']
    assert lines[4] == ('| Domain characteristics | Application type | '
                        'Computation-intensive system |')
    assert lines[5] == '|  | Business area | Mobile online entertainment services |'
    assert lines[6].startswith('| Development characteristics | Project type |')
    assert len(lines) == 10

def test_render_process_model(examples):
    assert render_process_model(examples['PM1PX11']).body.splitlines()[-1] == \
        '| Phases | RP, DP, CP, IP, AP |'

def test_render_element(examples):
    for element in examples.values():
        assert render_element(element).body
    with pytest.raises(TypeError):
        render_element('WISE-QM3PX11')

def test_cells_are_escaped(examples):
    ll = replace(examples['LL3PXI2-1'], situation='a | b\nc')
    assert '| Situation | a \\| b<br>c |' in render_lesson(ll).body.splitlines()

def test_every_field_is_rendered(examples):
    qm = examples['WISE-QM3PX11']
    body = render_quality_model(qm).body
    values = [qm.id, qm.name, qm.goal.object, qm.goal.purpose, qm.goal.viewpoint,
              qm.goal.context, qm.question]
    values += [e.text for e in qm.observations + qm.interpretations + qm.consequences]
    values += list(qm.references) + list(qm.additional_docs)
    for value in values:
        assert value in body

    for ll in (examples['LL1PX11-1'], examples['LL3PXI2-1']):
        body = render_lesson(ll).body
        for value in (ll.situation, ll.context, *ll.topic, *ll.references, *ll.additional_docs):
            assert value in body

# ---- Numbers and reports

@pytest.mark.parametrize('x, places, text', [
    (24.137931034482758, None, '24.14'),
    (0.125, None, '0.13'),
    (100.0, None, '100.00'),
    (Decimal('150.0'), None, '150.00'),
    (Decimal('74.5'), 0, '75'),
    (2.5, 3, '2.500'),
    (-0.005, None, '-0.01'),
])
def test_format_number(x, places, text):
    assert format_number(x, places) == text

def test_display_places_option():
    OPTIONS['display_places'] = 1
    assert format_number(48.275862) == '48.3'

@pytest.mark.parametrize('body', ['', '  \n', '# Title\n\n{{ indicator }}\n'])
def test_report_rejects(body):
    with pytest.raises(ValueError):
        Report('title', body)

def test_retrospective():
    questions = retrospective_questions()
    assert len(questions) == 4
    assert questions[1] == 'What did we learn?'
    questions.append('changed')
    assert len(retrospective_questions()) == 4

    lines = render_retrospective().body.splitlines()
    assert lines[0] == '# Retrospective'
    assert [line for line in lines if line.startswith('## ')] == \
        [f'## {i}. {q}' for i, q in enumerate(retrospective_questions(), start=1)]

def test_context_row_label_is_shared(examples):
    label = '| Characterization Vector / Context |'
    for report in (render_quality_model(examples['WISE-QM3PX11']),
                   render_lesson(examples['LL1PX11-1'])):
        assert sum(line.startswith(label) for line in report.body.splitlines()) == 1
