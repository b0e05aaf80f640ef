#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Value types for the experience base.

Every experience element is scoped by a characterization vector (the context
in which it holds) and a significance (how, and how often, it was validated).
Three element kinds carry evidence:

- `QualityModel`: a packaged GQM measurement result with exactly one
indicator, plus labeled observations, interpretations and consequences.
- `LessonLearned`: either an `Observation` or a `ProblemSolution` pair.
- `ProcessModelStub`: a referenceable process model, reduced to its phases.

All types are frozen dataclasses holding tuples, so they are hashable values
and safe to share between threads.  Construction does not check the element
invariants; that is the job of `evb.core.validation`, which reports problems
as data.  The small scalar types (`Significance`, `TechnologyRef`) do check
themselves, since an invalid one has no sensible meaning at all.
"""

__all__ = ['CharacterizationVector',
           'Citation',
           'ELEMENT_TYPES',
           'Factor',
           'GqmGoal',
           'IndicatorDef',
           'LabeledText',
           'LessonLearned',
           'MetricDef',
           'NAME_PATTERN',
           'MODEL_TYPES',
           'METRIC_SCALES',
           'INDICATOR_KINDS',
           'DISTRIBUTION_KINDS',
           'Observation',
           'ProblemSolution',
           'ProcessModelStub',
           'QualityModel',
           'SIGNIFICANCE_KINDS',
           'Significance',
           'TechnologyRef',
           'derive_quality_focus',
           'with_derived_quality_focus']

from dataclasses import dataclass, field, replace
import datetime as dt
import re
from typing import Optional, Tuple, Union

SIGNIFICANCE_KINDS = ('formal_experiment', 'case_study', 'survey')
'''Significance kinds, strongest validation first.'''

MODEL_TYPES = ('project_oriented', 'process_oriented', 'product_oriented')

METRIC_SCALES = ('category', 'hours', 'count', 'ratio', 'text')

DISTRIBUTION_KINDS = ('distribution', 'cumulative_distribution')

INDICATOR_KINDS = DISTRIBUTION_KINDS + ('sum', 'mean', 'count')

ID_PATTERN = re.compile(r'[A-Za-z0-9_.\-]+')
'''Ids double as file names and `@id` references.'''

NAME_PATTERN = re.compile(r'[A-Za-z_][A-Za-z0-9_]*')
'''Metric, indicator and entry label names, written bare in evidence documents.'''

# ---- Scope

@dataclass(frozen=True)
class Factor:
    '''One row of a characterization vector, e.g.
    `Factor("Domain characteristics", "Application type",
    "Computation-intensive system")`.'''
    category: str
    name: str
    value: str

    @property
    def triple(self):
        return (self.category, self.name, self.value)

@dataclass(frozen=True)
class CharacterizationVector:
    '''The context in which an experience element is valid.'''
    id: str
    factors: Tuple[Factor, ...] = ()

    def triples(self):
        '''Set of `(category, name, value)` triples.'''
        return {f.triple for f in self.factors}

@dataclass(frozen=True)
class Significance:
    '''How an element was validated (`kind`) and how many times (`count`).

    Instances compare by `evb.core.significance.significance_rank`, so
    `Significance('formal_experiment', 1) > Significance('case_study', 5)`.'''
    kind: str
    count: int = 1

    def __post_init__(self):
        if self.kind not in SIGNIFICANCE_KINDS:
            raise ValueError(f'`kind` must be one of {SIGNIFICANCE_KINDS}, '
                             f'not "{self.kind}"')
        if isinstance(self.count, bool) or not isinstance(self.count, int) or self.count < 1:
            raise ValueError(f'`count` must be a positive integer, not {self.count!r}')

    def _rank(self):
        return (len(SIGNIFICANCE_KINDS) - SIGNIFICANCE_KINDS.index(self.kind), self.count)

    def __lt__(self, other):
        if not isinstance(other, Significance):
            return NotImplemented
        return self._rank() < other._rank()

    def __le__(self, other):
        if not isinstance(other, Significance):
            return NotImplemented
        return self._rank() <= other._rank()

    def __gt__(self, other):
        if not isinstance(other, Significance):
            return NotImplemented
        return self._rank() > other._rank()

    def __ge__(self, other):
        if not isinstance(other, Significance):
            return NotImplemented
        return self._rank() >= other._rank()

@dataclass(frozen=True)
class TechnologyRef:
    '''A technology an evidence statement can be about.'''
    name: str
    version: Optional[str] = None

    def __post_init__(self):
        if not self.name or not self.name.strip():
            raise ValueError('TechnologyRef `name` must be non-empty')

    def __str__(self):
        return self.name if self.version is None else f'{self.name} {self.version}'

# ---- Quality models

@dataclass(frozen=True)
class GqmGoal:
    '''The five facets of a GQM goal.  `context` is a characterization
    vector id.  `quality_focus_derived` marks a focus filled in from the
    model sub-kind rather than given explicitly.'''
    object: str
    purpose: str
    quality_focus: Optional[str]
    viewpoint: str
    context: str
    quality_focus_derived: bool = False

@dataclass(frozen=True)
class MetricDef:
    name: str
    scale: str

@dataclass(frozen=True)
class IndicatorDef:
    '''A function from input variables (`group_by`) to output variables
    (`value_metric`).  `order` optionally fixes the order of group keys.'''
    name: str
    kind: str
    value_metric: str
    group_by: Optional[str] = None
    order: Optional[Tuple[str, ...]] = None

@dataclass(frozen=True)
class LabeledText:
    '''An observation such as `O1: Lowest effort is spent on ...`.'''
    label: str
    text: str

@dataclass(frozen=True)
class Citation:
    '''An interpretation or consequence, citing the labels it rests on, such
    as `I3 (O2): Client-Server interaction was not properly defined.`'''
    label: str
    cites: Tuple[str, ...]
    text: str

@dataclass(frozen=True)
class QualityModel:
    id: str
    name: str
    model_type: str
    significance: Significance
    period: Tuple[dt.date, dt.date]
    goal: GqmGoal
    question: str
    sub_kind: Optional[str] = None
    metrics: Tuple[MetricDef, ...] = ()
    indicators: Tuple[IndicatorDef, ...] = ()
    observations: Tuple[LabeledText, ...] = ()
    interpretations: Tuple[Citation, ...] = ()
    consequences: Tuple[Citation, ...] = ()
    references: Tuple[str, ...] = ()
    additional_docs: Tuple[str, ...] = ()

    @property
    def context(self):
        return self.goal.context

    @property
    def indicator(self):
        '''The single indicator of a valid model.'''
        if len(self.indicators) != 1:
            raise ValueError(f'quality model "{self.id}" has '
                             f'{len(self.indicators)} indicators, not 1')
        return self.indicators[0]

    def metric(self, name):
        '''Return the metric called `name`, or None.'''
        for m in self.metrics:
            if m.name == name:
                return m
        return None

# ---- Lessons learned

@dataclass(frozen=True)
class Observation:
    observation: str

@dataclass(frozen=True)
class ProblemSolution:
    problem: str
    cause: str
    solution_reactive: Optional[str] = None
    solution_preventive: Optional[str] = None
    log: Optional[str] = None

@dataclass(frozen=True)
class LessonLearned:
    id: str
    topic: Tuple[str, ...]
    situation: str
    significance: Significance
    context: str
    body: Union[Observation, ProblemSolution]
    references: Tuple[str, ...] = ()
    additional_docs: Tuple[str, ...] = ()

    @property
    def is_observation(self):
        return isinstance(self.body, Observation)

# ---- Process models

@dataclass(frozen=True)
class ProcessModelStub:
    '''A process model reduced to an ordered list of phase identifiers.'''
    id: str
    name: str
    phases: Tuple[str, ...] = field(default_factory=tuple)

ELEMENT_TYPES = (CharacterizationVector, QualityModel, LessonLearned, ProcessModelStub)

# ---- Quality focus

def derive_quality_focus(sub_kind):
    '''
    Derive a quality focus from a model sub-kind, e.g. `"effort model"`
    gives `"effort"`.  Returns None when nothing can be derived.
    '''
    if not sub_kind or not sub_kind.strip():
        return None
    focus = re.sub(r'(^|\s+)model$', '', sub_kind.strip(), flags=re.IGNORECASE).strip()
    return focus or None

def with_derived_quality_focus(qm):
    '''
    Return `qm` with its goal's quality focus filled in from the sub-kind
    when the focus is None.  Models that state a focus (even a blank one,
    which validation then reports), or whose sub-kind yields nothing, are
    returned unchanged.
    '''
    goal = qm.goal
    if goal.quality_focus is not None:
        return qm
    focus = derive_quality_focus(qm.sub_kind)
    if focus is None:
        return qm
    return replace(qm, goal=replace(goal, quality_focus=focus,
                                    quality_focus_derived=True))
