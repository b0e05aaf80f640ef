# -*- coding: utf-8 -*-

import pytest

from evb.core.model import Significance, TechnologyRef
from evb.errors import MissingResult, UnresolvedContext, UnresolvedSubject
from evb.repository import EvidenceStatement, make_evidence_statement

ONE_CASE = Significance('case_study', 1)

def test_technology_applied(pilot_store):
    es = make_evidence_statement(pilot_store, 'technology_applied', 'J2ME', 'CV1PX11',
                                 ONE_CASE, result='WISE-QM3PX11')
    assert es == EvidenceStatement('technology_applied', TechnologyRef('J2ME'), 'CV1PX11',
                                   ONE_CASE, 'WISE-QM3PX11')

def test_process_followed(pilot_store):
    es = make_evidence_statement(pilot_store, 'process_followed', 'PM1PX11', 'CV1PX11', ONE_CASE)
    assert (es.subject, es.result) == ('PM1PX11', None)

def test_problem_solved(pilot_store):
    es = make_evidence_statement(pilot_store, 'problem_solved', 'LL1PX11-1', 'CV1PX11',
                                 Significance('case_study', 2))
    assert es.significance.count == 2

def test_missing_result(pilot_store):
    with pytest.raises(MissingResult):
        make_evidence_statement(pilot_store, 'technology_applied', TechnologyRef('J2ME', '1.0'),
                                'CV1PX11', ONE_CASE)

@pytest.mark.parametrize('kind, subject, result', [
    ('technology_applied', 'J2ME', 'LL1PX11-1'),
    ('technology_applied', 'J2ME', 'QM9'),
    ('process_followed', 'CV1PX11', None),
    ('process_followed', 'PM1PXI1', None),
    ('problem_solved', 'LL3PXI2-1', None),
    ('problem_solved', 'WISE-QM3PX11', None),
])
def test_unresolved_subject(pilot_store, kind, subject, result):
    with pytest.raises(UnresolvedSubject):
        make_evidence_statement(pilot_store, kind, subject, 'CV1PX11', ONE_CASE, result=result)

@pytest.mark.parametrize('context', ['CV9', 'LL1PX11-1'])
def test_unresolved_context(pilot_store, context):
    with pytest.raises(UnresolvedContext):
        make_evidence_statement(pilot_store, 'process_followed', 'PM1PX11', context, ONE_CASE)

def test_bad_arguments(pilot_store):
    with pytest.raises(ValueError, match='must be one of'):
        make_evidence_statement(pilot_store, 'lesson_learned', 'PM1PX11', 'CV1PX11', ONE_CASE)
    with pytest.raises(TypeError):
        make_evidence_statement(pilot_store, 'process_followed', 'PM1PX11', 'CV1PX11',
                                ('case_study', 1))
    with pytest.raises(ValueError, match='only applies'):
        make_evidence_statement(pilot_store, 'process_followed', 'PM1PX11', 'CV1PX11',
                                ONE_CASE, result='WISE-QM3PX11')
