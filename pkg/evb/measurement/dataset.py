#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Raw effort data, as collected on data collection sheets.

A sheet is a CSV file with the header `date,phase,role,effort_hours`, one row
per booking.  `ingest_csv` keeps every valid row and reports the others with
their line number instead of stopping at the first bad one.
"""

__all__ = ['HEADER',
           'MeasurementDataset',
           'MeasurementRow',
           'RowError',
           'ingest_csv',
           'load_csv',
           'write_csv']

from collections import namedtuple
import csv
from dataclasses import dataclass
import datetime as dt
from decimal import Decimal, InvalidOperation
import logging
import os
from typing import Tuple

import pandas as pd

from evb.errors import HeaderMismatch

logger = logging.getLogger(__name__)

HEADER = ('date', 'phase', 'role', 'effort_hours')

RowError = namedtuple('RowError', ['line', 'message'])
"""A rejected CSV row and why it was rejected."""

@dataclass(frozen=True)
class MeasurementRow:
    date: dt.date
    phase: str
    role: str
    effort_hours: Decimal

    def __post_init__(self):
        if not self.phase or not self.phase.strip():
            raise ValueError('`phase` must be non-empty')
        if not isinstance(self.effort_hours, Decimal):
            object.__setattr__(self, 'effort_hours', Decimal(str(self.effort_hours)))
        if not self.effort_hours.is_finite() or self.effort_hours < 0:
            raise ValueError(f'`effort_hours` must be a non-negative number, '
                             f'not {self.effort_hours}')

@dataclass(frozen=True)
class MeasurementDataset:
    '''Effort rows from which indicators are computed.'''
    id: str
    rows: Tuple[MeasurementRow, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'rows', tuple(self.rows))

    def __len__(self):
        return len(self.rows)

    def to_frame(self):
        '''
        Return the rows as a pandas DataFrame with columns `date`, `phase`,
        `role` and `effort_hours`.  Efforts stay `decimal.Decimal` objects
        (object dtype) so sums are exact.
        '''
        return pd.DataFrame([(r.date, r.phase, r.role, r.effort_hours) for r in self.rows],
                            columns=list(HEADER))

def _parse_row(fields):
    if len(fields) != len(HEADER):
        raise ValueError(f'expected {len(HEADER)} fields, found {len(fields)}')
    date, phase, role, hours = (f.strip() for f in fields)
    try:
        date = dt.date.fromisoformat(date)
    except ValueError:
        raise ValueError(f'bad date "{date}"; expected YYYY-MM-DD')
    try:
        hours = Decimal(hours)
    except InvalidOperation:
        raise ValueError(f'bad effort_hours "{hours}"')
    if not hours.is_finite():
        raise ValueError(f'bad effort_hours "{hours}"')
    if hours < 0:
        raise ValueError(f'negative effort_hours {hours}')
    if not phase:
        raise ValueError('empty phase')
    return MeasurementRow(date, phase, role, hours)

def ingest_csv(stream, dataset_id='dataset'):
    '''
    Read a data collection sheet.

    Parameters
    ----------
    stream : text stream
        Open CSV text.  LF and CRLF line endings are accepted.
    dataset_id : str, optional
        Id for the new dataset. The default is 'dataset'.

    Raises
    ------
    HeaderMismatch
        The first line is not exactly `date,phase,role,effort_hours`.

    Returns
    -------
    dataset : MeasurementDataset
        Valid rows, in input order.
    errors : list of RowError
        One entry per rejected row, with its 1-based line number.

    '''
    header = stream.readline().rstrip('\r\n')
    if header.startswith('\ufeff'):
        header = header[1:]
    if header != ','.join(HEADER):
        raise HeaderMismatch(f'expected header "{",".join(HEADER)}", found "{header}"')

    rows, errors = [], []
    reader = csv.reader(stream)
    for fields in reader:
        line = reader.line_num + 1
        if not fields or (len(fields) == 1 and not fields[0].strip()):
            continue
        try:
            rows.append(_parse_row(fields))
        except ValueError as e:
            errors.append(RowError(line, str(e)))

    logger.info('ingested %d rows into dataset "%s" (%d rejected)',
                len(rows), dataset_id, len(errors))
    return MeasurementDataset(dataset_id, tuple(rows)), errors

def load_csv(path, dataset_id=None):
    '''`ingest_csv()` for a file path; the dataset id defaults to the file
    name without extension.'''
    if dataset_id is None:
        dataset_id = os.path.splitext(os.path.basename(path))[0]
    with open(path, encoding='utf-8', newline='') as f:
        return ingest_csv(f, dataset_id=dataset_id)

def write_csv(ds, stream):
    '''Write a dataset as a data collection sheet (LF line endings).'''
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(HEADER)
    for r in ds.rows:
        writer.writerow((r.date.isoformat(), r.phase, r.role, str(r.effort_hours)))
