#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Indicator functions.

An indicator traces the relationship between input variables (e.g. phase
identifiers) and output variables (e.g. effort spent on each phase).  It is
not a final result, but an objective basis for interpretation.

The indicator functions defined here all follow the same principles:

- They take an `IndicatorDef`, a pandas DataFrame of measurement rows (see
`evb.measurement.dataset.MeasurementDataset.to_frame`), and a mapping from
metric names to frame columns.
- They return an `IndicatorResult`.
- Values are summed as exact decimals; shares are decimal ratios, reported
as floats.

Distribution indicators group by a key and report each group's share of the
total and the running (cumulated) share.  Groups come in order of first
appearance in the data, unless the indicator gives an explicit `order`.
"""

__pdoc__ = {'Indicator': False}

__all__ = ['IndicatorResult',
           'IndicatorRow',
           'QuestionAnswer',
           'compute_indicator',
           'evaluate_question',
           'get_indicator',
           'list_indicators',
           'verify_result']

from collections import namedtuple
from dataclasses import dataclass
from decimal import Decimal
from itertools import accumulate
from typing import Tuple
import warnings

import numpy as np

from evb.core.validation import validate_quality_model
from evb.errors import EmptyDataset, UnknownMetric, UnknownOrderKey, ValidationFailed
from evb.options import OPTIONS

NUMERIC_COLUMNS = ('effort_hours',)

IndicatorRow = namedtuple('IndicatorRow', ['key', 'value', 'percent', 'cumulative_percent'])
"""One group of an indicator: its key, its exact value, its share of the
total, and the running share up to and including it (both in percent)."""

QuestionAnswer = namedtuple('QuestionAnswer', ['question', 'result'])
"""A GQM question paired with the indicator result answering it."""

@dataclass(frozen=True)
class IndicatorResult:
    indicator: str
    rows: Tuple[IndicatorRow, ...]
    total: Decimal

    @property
    def keys(self):
        return [r.key for r in self.rows]

    @property
    def values(self):
        return [r.value for r in self.rows]

# ---- General helpers

def _exact_sum(values):
    return sum(values, Decimal(0))

def _column(metric, fields, numeric=False):
    try:
        col = fields[metric]
    except KeyError:
        known = ', '.join(f'"{m}"' for m in fields)
        raise UnknownMetric(f'metric "{metric}" is not mapped to a dataset column. '
                            f'Mapped metrics are: {known}.')
    if numeric and col not in NUMERIC_COLUMNS:
        raise UnknownMetric(f'metric "{metric}" maps to column "{col}", which is not numeric')
    return col

def _share_rows(keys, values):
    '''Percent and cumulative percent for each group.  Ratios are taken
    between decimals, so values beyond the float range still give finite
    shares, and the last cumulative share is exactly 100.'''
    total = _exact_sum(values)
    shares = np.array([float(v / total) for v in values], dtype=float)
    sums = list(accumulate(values, initial=Decimal(0)))[1:]
    running = np.array([float(r / total) for r in sums], dtype=float)
    percents = shares * 100
    cumulative = running * 100
    return tuple(IndicatorRow(k, v, float(p), float(c))
                 for k, v, p, c in zip(keys, values, percents, cumulative))

def _apply_order(ind, keys, values):
    if ind.order is None:
        return keys, values
    by_key = dict(zip(keys, values))
    missing = [k for k in ind.order if k not in by_key]
    if missing:
        raise UnknownOrderKey(missing)
    rest = sorted(k for k in keys if k not in set(ind.order))
    if rest:
        warnings.warn(f'Groups {rest} are not named in the order of indicator '
                      f'"{ind.name}"; they are appended in sorted order.',
                      RuntimeWarning)
    ordered = list(ind.order) + rest
    return ordered, [by_key[k] for k in ordered]

def _scalar(ind, value):
    share = 100.0 if value > 0 else 0.0
    return IndicatorResult(ind.name, (IndicatorRow(ind.kind, value, share, share),), value)

# ---- Indicator functions

def distribution(ind, frame, fields):
    '''Sum of the value metric per group, with each group's share of the
    total and the cumulated share.'''
    if ind.group_by is None:
        raise ValueError(f'indicator "{ind.name}" of kind "{ind.kind}" needs a group-by metric')
    key_col = _column(ind.group_by, fields)
    value_col = _column(ind.value_metric, fields, numeric=True)
    if frame.empty:
        raise EmptyDataset(f'indicator "{ind.name}": the dataset has no rows')

    grouped = frame.groupby(key_col, sort=False)[value_col].agg(_exact_sum)
    keys = [str(k) if not hasattr(k, 'isoformat') else k.isoformat() for k in grouped.index]
    values = [Decimal(v) for v in grouped.values]
    keys, values = _apply_order(ind, keys, values)

    total = _exact_sum(values)
    if total == 0:
        raise EmptyDataset(f'indicator "{ind.name}": total {value_col} is 0')
    return IndicatorResult(ind.name, _share_rows(keys, values), total)

def total(ind, frame, fields):
    '''Sum of the value metric over all rows.'''
    col = _column(ind.value_metric, fields, numeric=True)
    return _scalar(ind, _exact_sum(frame[col]))

def mean(ind, frame, fields):
    '''Mean of the value metric over all rows.'''
    col = _column(ind.value_metric, fields, numeric=True)
    if frame.empty:
        raise EmptyDataset(f'indicator "{ind.name}": cannot average an empty dataset')
    return _scalar(ind, _exact_sum(frame[col]) / Decimal(len(frame)))

def count(ind, frame, fields):
    '''Number of rows.'''
    _column(ind.value_metric, fields)
    return _scalar(ind, Decimal(len(frame)))

# ---- Indicator access

def get_indicator(kind):
    '''
    Return an indicator function from its kind.

    Parameters
    ----------
    kind : str
        Indicator kind, e.g. `'cumulative_distribution'`.

    Raises
    ------
    ValueError
        Kind not recognized.

    Returns
    -------
    namedtuple
        Named tuple with a `func` and `nicename` attribute.

    '''
    try:
        return INDICATORS[kind]
    except KeyError:
        kinds = ', '.join(f"'{k}'" for k in INDICATORS)
        raise ValueError(f'Indicator kind "{kind}" is not recognized. Possible kinds are: '
                         f'{kinds}.')

def list_indicators():
    '''List all available indicator kinds.'''
    return list(INDICATORS.keys())

def compute_indicator(ind, ds, fields=None):
    '''
    Evaluate an indicator over a dataset.

    Parameters
    ----------
    ind : evb.core.model.IndicatorDef
        Indicator to evaluate.
    ds : evb.measurement.dataset.MeasurementDataset
        Raw measurement data.
    fields : dict, optional
        Maps metric names to dataset columns. The default is
        `OPTIONS['metric_fields']` (`phase` → `phase`, `effort` →
        `effort_hours`, ...).

    Raises
    ------
    EmptyDataset
        A distribution indicator over data whose total is 0 (or a mean over
        no rows).
    UnknownOrderKey
        `ind.order` names a key that does not occur in the data.
    UnknownMetric
        A metric cannot be mapped to a column.

    Returns
    -------
    IndicatorResult

    '''
    fields = OPTIONS['metric_fields'] if fields is None else fields
    func = get_indicator(ind.kind).func
    return func(ind, ds.to_frame(), fields)

def evaluate_question(qm, ds, fields=None):
    '''
    Answer a quality model's question with its indicator.

    Parameters
    ----------
    qm : evb.core.model.QualityModel
        A valid quality model.
    ds : evb.measurement.dataset.MeasurementDataset
        Raw measurement data.
    fields : dict, optional
        See `compute_indicator()`.

    Raises
    ------
    ValidationFailed
        The quality model has violations.

    Returns
    -------
    QuestionAnswer
        `(question text, IndicatorResult)`.

    '''
    violations = validate_quality_model(qm)
    if violations:
        raise ValidationFailed(qm.id, violations)
    return QuestionAnswer(qm.question, compute_indicator(qm.indicator, ds, fields=fields))

def verify_result(result, tol=1e-9):
    '''
    Check an indicator result for internal consistency.

    Returns
    -------
    list of str
        Problems found; empty when the percents sum to 100, the cumulated
        percents never decrease and end at 100, and the values add up to
        the total.

    '''
    problems = []
    if sum(result.values, Decimal(0)) != result.total:
        problems.append('values do not add up to the total')
    if result.total > 0 and result.rows:
        percents = np.array([r.percent for r in result.rows])
        cumulative = np.array([r.cumulative_percent for r in result.rows])
        if not np.isclose(percents.sum(), 100, rtol=0, atol=tol):
            problems.append(f'percents sum to {percents.sum()}, not 100')
        if np.any(np.diff(cumulative) < 0):
            problems.append('cumulative percents decrease')
        if not np.isclose(cumulative[-1], 100, rtol=0, atol=tol):
            problems.append(f'final cumulative percent is {cumulative[-1]}, not 100')
    return problems

# link kinds to their function
Indicator = namedtuple('Indicator', ['func', 'nicename'])
"""Lightweight class for indicator functions and their display names."""

INDICATORS = {'distribution'            : Indicator(distribution, 'Distribution'),
              'cumulative_distribution' : Indicator(distribution, 'Cumulated distribution'),
              'sum'                     : Indicator(total, 'Sum'),
              'mean'                    : Indicator(mean, 'Mean'),
              'count'                   : Indicator(count, 'Count')}
'''Dictionary of all indicator functions, keyed by indicator kind.'''
