#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Lifecycle of a GQM measurement program.

A program moves through six steps, one at a time, and records when it
entered each of them.  `advance_program` is the only way forward; there is
no way to skip a step or go back.
"""

__all__ = ['MeasurementProgram',
           'STEP_NAMES',
           'advance_program',
           'new_program',
           'step_name']

from dataclasses import dataclass, replace
import datetime as dt
from typing import Tuple

from evb.errors import AlreadyPackaged

STEP_NAMES = ('Characterize the environment',
              'Identify measurement goals and develop measurement plans',
              'Define data collection procedures',
              'Collect, analyze and interpret data',
              'Perform post-mortem analysis and interpret data',
              'Package experience')
'''The six steps, in order.  Step `n` is `STEP_NAMES[n - 1]`.'''

FINAL_STEP = len(STEP_NAMES)

def _now():
    return dt.datetime.now(dt.timezone.utc)

@dataclass(frozen=True)
class MeasurementProgram:
    '''A measurement program for the quality model `plan`.  `history` holds
    `(step, timestamp)` pairs for steps 1 to `step`.'''
    id: str
    plan: str
    step: int
    history: Tuple[Tuple[int, dt.datetime], ...]

    def __post_init__(self):
        if not 1 <= self.step <= FINAL_STEP:
            raise ValueError(f'`step` must be in [1, {FINAL_STEP}], not {self.step}')
        steps = [s for s, _ in self.history]
        if steps != list(range(1, self.step + 1)):
            raise ValueError(f'history steps must run 1..{self.step} without gaps, '
                             f'not {steps}')

    @property
    def packaged(self):
        return self.step == FINAL_STEP

def new_program(id, plan, at=None):
    '''
    Start a measurement program at step 1.

    Parameters
    ----------
    id : str
        Program id.
    plan : str
        Id of the quality model the program measures for.
    at : datetime.datetime, optional
        Start time. The default is now (UTC).

    Returns
    -------
    MeasurementProgram

    '''
    at = _now() if at is None else at
    return MeasurementProgram(id=id, plan=plan, step=1, history=((1, at),))

def advance_program(p, at=None):
    '''
    Move a program to its next step.

    Parameters
    ----------
    p : MeasurementProgram
        Program to advance.
    at : datetime.datetime, optional
        Time the next step starts. The default is now (UTC).

    Raises
    ------
    AlreadyPackaged
        The program is at step 6.

    Returns
    -------
    MeasurementProgram
        New program value; `p` is unchanged.

    '''
    if p.step >= FINAL_STEP:
        raise AlreadyPackaged(f'program "{p.id}" is already at step {FINAL_STEP} '
                              f'({STEP_NAMES[-1]})')
    at = _now() if at is None else at
    nxt = p.step + 1
    return replace(p, step=nxt, history=p.history + ((nxt, at),))

def step_name(p):
    '''Name of the step a program is at.'''
    return STEP_NAMES[p.step - 1]
