# -*- coding: utf-8 -*-

import datetime as dt
from dataclasses import replace
from decimal import Decimal
import io

import numpy as np
import pytest

from evb.core.model import IndicatorDef
from evb.errors import EmptyDataset, HeaderMismatch, UnknownMetric, UnknownOrderKey, ValidationFailed
from evb.measurement import (MeasurementDataset, MeasurementRow, compute_indicator,
                             evaluate_question, get_indicator, ingest_csv,
                             list_indicators, verify_result, write_csv)
from evb.options import set_metric_field

HEADER = 'date,phase,role,effort_hours\n'
DAY = dt.date(2002, 3, 4)

CUMULATIVE = IndicatorDef('effort_distribution', 'cumulative_distribution', 'effort',
                          group_by='phase')

def dataset(pairs, ds_id='ds'):
    return MeasurementDataset(ds_id, [MeasurementRow(DAY, phase, 'dev', Decimal(str(h)))
                                      for phase, h in pairs])

def random_pairs(rng, n):
    phases = ['RP', 'DP', 'CP', 'IP', 'AP', 'QA']
    return [(phases[rng.integers(len(phases))], Decimal(int(rng.integers(0, 10001))) / 100)
            for _ in range(n)]

def brute_force(pairs):
    '''Per-group filter and sum, groups in order of first appearance.'''
    keys = list(dict.fromkeys(k for k, _ in pairs))
    sums = [sum((h for k2, h in pairs if k2 == k), Decimal(0)) for k in keys]
    total = sum(sums, Decimal(0))
    running, cumulative = Decimal(0), []
    for s in sums:
        running += s
        cumulative.append(float(running / total * 100))
    return keys, sums, [float(s / total * 100) for s in sums], cumulative

# ---- Oracle values

def test_pilot_x_effort_distribution(examples, effort_dataset):
    answer = evaluate_question(examples['WISE-QM3PX11'], effort_dataset)
    result = answer.result
    assert answer.question == 'What is the effort distribution (broken down by phases)?'
    assert result.keys == ['RP', 'DP', 'CP', 'IP', 'AP']
    assert result.values == [350, 350, 550, 150, 50]
    assert result.total == 1450
    expected = [24.14, 48.28, 86.21, 96.55, 100.00]
    for row, cum in zip(result.rows, expected):
        assert abs(row.cumulative_percent - cum) <= 0.005
    assert result.rows[-1].cumulative_percent == 100
    percents = [24.14, 24.14, 37.93, 10.34, 3.45]
    for row, pct in zip(result.rows, percents):
        assert abs(row.percent - pct) <= 0.005
    assert verify_result(result) == []

def test_single_group():
    result = compute_indicator(CUMULATIVE, dataset([('CP', 10)]))
    assert [(r.key, r.percent, r.cumulative_percent) for r in result.rows] == [('CP', 100, 100)]

def test_two_equal_groups():
    result = compute_indicator(CUMULATIVE, dataset([('A', 5), ('B', 5)]))
    assert [r.percent for r in result.rows] == [50, 50]
    assert [r.cumulative_percent for r in result.rows] == [50, 100]

def test_huge_values_keep_finite_shares():
    result = compute_indicator(CUMULATIVE, dataset([('A', '1e400'), ('B', '1e400')]))
    assert result.total == Decimal('2e400')
    assert [r.percent for r in result.rows] == [50, 50]
    assert [r.cumulative_percent for r in result.rows] == [50, 100]
    assert verify_result(result) == []

def test_first_appearance_order():
    result = compute_indicator(CUMULATIVE, dataset([('DP', 1), ('AP', 2), ('DP', 3), ('CP', 4)]))
    assert result.keys == ['DP', 'AP', 'CP']
    assert result.values == [4, 2, 4]

def test_explicit_order():
    ind = replace(CUMULATIVE, order=('AP', 'RP'))
    result = compute_indicator(ind, dataset([('RP', 3), ('AP', 1)]))
    assert result.keys == ['AP', 'RP']
    assert [r.cumulative_percent for r in result.rows] == [25, 100]

def test_order_naming_absent_key():
    ind = replace(CUMULATIVE, order=('RP', 'DP', 'CP'))
    with pytest.raises(UnknownOrderKey) as info:
        compute_indicator(ind, dataset([('RP', 3), ('CP', 1)]))
    assert info.value.keys == ['DP']

def test_keys_missing_from_order_are_appended_sorted():
    ind = replace(CUMULATIVE, order=('RP',))
    with pytest.warns(RuntimeWarning, match='appended'):
        result = compute_indicator(ind, dataset([('ZP', 1), ('RP', 3), ('CP', 1)]))
    assert result.keys == ['RP', 'CP', 'ZP']

@pytest.mark.parametrize('pairs', [[], [('RP', 0), ('DP', 0)]])
def test_distribution_of_nothing(pairs):
    with pytest.raises(EmptyDataset):
        compute_indicator(CUMULATIVE, dataset(pairs))

def test_empty_dataset_propagates(examples):
    with pytest.raises(EmptyDataset):
        evaluate_question(examples['WISE-QM3PX11'], dataset([]))

def test_invalid_model_is_rejected(examples, effort_dataset):
    qm = examples['WISE-QM3PX11']
    with pytest.raises(ValidationFailed) as info:
        evaluate_question(replace(qm, indicators=()), effort_dataset)
    assert 'indicator' in [v.field for v in info.value.violations]

def test_scalar_indicators():
    ds = dataset([('RP', '1.5'), ('DP', '2.5'), ('RP', '2')])
    total = compute_indicator(IndicatorDef('t', 'sum', 'effort'), ds)
    mean = compute_indicator(IndicatorDef('m', 'mean', 'effort'), ds)
    count = compute_indicator(IndicatorDef('c', 'count', 'phase'), ds)
    assert total.rows[0] == ('sum', Decimal('6.0'), 100.0, 100.0)
    assert mean.total == Decimal(2)
    assert count.total == 3
    assert compute_indicator(IndicatorDef('t', 'sum', 'effort'), dataset([])).total == 0
    with pytest.raises(EmptyDataset):
        compute_indicator(IndicatorDef('m', 'mean', 'effort'), dataset([]))

def test_unknown_metric():
    with pytest.raises(UnknownMetric):
        compute_indicator(replace(CUMULATIVE, value_metric='cost'), dataset([('RP', 1)]))
    with pytest.raises(UnknownMetric):
        compute_indicator(replace(CUMULATIVE, value_metric='phase'), dataset([('RP', 1)]))

def test_custom_fields():
    ind = IndicatorDef('by_role', 'distribution', 'hours', group_by='who')
    ds = dataset([('RP', 1), ('DP', 3)])
    result = compute_indicator(ind, ds, fields={'hours': 'effort_hours', 'who': 'role'})
    assert result.keys == ['dev']

def test_indicator_registry():
    assert list_indicators() == ['distribution', 'cumulative_distribution', 'sum', 'mean', 'count']
    assert get_indicator('sum').nicename == 'Sum'
    with pytest.raises(ValueError, match='not recognized'):
        get_indicator('median')

# ---- Properties

def test_random_datasets_match_brute_force():
    rng = np.random.default_rng(2004)
    checked = 0
    for _ in range(1000):
        pairs = random_pairs(rng, int(rng.integers(1, 21)))
        if sum(h for _, h in pairs) == 0:
            with pytest.raises(EmptyDataset):
                compute_indicator(CUMULATIVE, dataset(pairs))
            continue
        result = compute_indicator(CUMULATIVE, dataset(pairs))
        keys, sums, percents, cumulative = brute_force(pairs)
        assert result.keys == keys
        assert result.values == sums
        assert result.total == sum(sums, Decimal(0))
        assert np.allclose([r.percent for r in result.rows], percents, rtol=0, atol=1e-9)
        assert np.allclose([r.cumulative_percent for r in result.rows], cumulative, rtol=0, atol=1e-9)
        assert abs(sum(r.percent for r in result.rows) - 100) <= 1e-9
        assert all(np.diff([r.cumulative_percent for r in result.rows]) >= 0)
        assert verify_result(result) == []
        checked += 1
    assert checked > 900

def test_scale_equivariance():
    rng = np.random.default_rng(1450)
    for _ in range(500):
        pairs = random_pairs(rng, int(rng.integers(1, 21)))
        if sum(h for _, h in pairs) == 0:
            continue
        k = Decimal(repr(float(rng.uniform(1e-3, 100))))
        base = compute_indicator(CUMULATIVE, dataset(pairs))
        scaled = compute_indicator(CUMULATIVE, dataset([(p, h * k) for p, h in pairs]))
        assert scaled.keys == base.keys
        assert scaled.total == base.total * k
        for a, b in zip(base.rows, scaled.rows):
            assert b.value == a.value * k
            assert abs(a.percent - b.percent) <= 1e-9
            assert abs(a.cumulative_percent - b.cumulative_percent) <= 1e-9

def test_permutation_invariance_with_explicit_order():
    rng = np.random.default_rng(6)
    ind = replace(CUMULATIVE, order=('RP', 'DP', 'CP', 'IP', 'AP', 'QA'))
    for _ in range(200):
        pairs = [(p, Decimal(int(rng.integers(1, 5000))) / 100)
                 for p in ind.order for _ in range(int(rng.integers(1, 4)))]
        base = compute_indicator(ind, dataset(pairs))
        rng.shuffle(pairs)
        assert compute_indicator(ind, dataset(pairs)) == base

# ---- Ingestion

def test_ingest_well_formed_row():
    ds, errors = ingest_csv(io.StringIO(HEADER + '2002-03-04,CP,developer,7.5\n'))
    assert errors == []
    assert ds.rows == (MeasurementRow(DAY, 'CP', 'developer', Decimal('7.5')),)

def test_ingest_header_only():
    ds, errors = ingest_csv(io.StringIO(HEADER))
    assert len(ds) == 0 and errors == []

def test_ingest_collects_row_errors():
    text = (HEADER +
            '2002-03-04,CP,developer,-1\n'
            '2002-03-04,CP,developer,2\n'
            '3-4-2002,CP,developer,2\n'
            '2002-03-04,CP,developer\n'
            '2002-03-04,,developer,1\n'
            '2002-03-04,CP,developer,lots\n'
            '\n'
            '2002-03-05,DP,designer,3.25\n')
    ds, errors = ingest_csv(io.StringIO(text), dataset_id='sheet')
    assert ds.id == 'sheet'
    assert [r.effort_hours for r in ds.rows] == [Decimal(2), Decimal('3.25')]
    assert [e.line for e in errors] == [2, 4, 5, 6, 7]
    assert 'negative' in errors[0].message
    assert 'date' in errors[1].message
    assert 'fields' in errors[2].message

def test_ingest_crlf_and_bom():
    text = '\ufeff' + HEADER.replace('\n', '\r\n') + '2002-03-04,CP,developer,7.5\r\n'
    ds, errors = ingest_csv(io.StringIO(text, newline=''))
    assert errors == [] and len(ds) == 1

@pytest.mark.parametrize('header', ['date,phase,effort_hours\n', 'Date,Phase,Role,Effort_Hours\n', ''])
def test_header_mismatch(header):
    with pytest.raises(HeaderMismatch):
        ingest_csv(io.StringIO(header + '2002-03-04,CP,developer,7.5\n'))

def test_write_csv_reads_back(effort_dataset):
    out = io.StringIO()
    write_csv(effort_dataset, out)
    assert out.getvalue().startswith(HEADER)
    ds, errors = ingest_csv(io.StringIO(out.getvalue()), dataset_id=effort_dataset.id)
    assert errors == [] and ds == effort_dataset

def test_to_frame(effort_dataset):
    frame = effort_dataset.to_frame()
    assert list(frame.columns) == ['date', 'phase', 'role', 'effort_hours']
    assert len(frame) == 10
    assert sum(frame.loc[frame['phase'] == 'CP', 'effort_hours']) == 550

def test_set_metric_field():
    set_metric_field('hours', 'effort_hours')
    ind = IndicatorDef('t', 'sum', 'hours')
    assert compute_indicator(ind, dataset([('RP', 2), ('DP', 3)])).total == 5
    with pytest.raises(ValueError, match='must be one of'):
        set_metric_field('cost', 'euros')
