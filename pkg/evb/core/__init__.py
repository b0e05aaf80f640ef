# -*- coding: utf-8 -*-
'''This package defines the value types of the experience base
(`evb.core.model`), the significance algebra (`evb.core.significance`),
validation of elements (`evb.core.validation`), and the measurement program
lifecycle (`evb.core.program`).'''

#imports for package namespace

from .model import (CharacterizationVector,
                    Citation,
                    Factor,
                    GqmGoal,
                    IndicatorDef,
                    LabeledText,
                    LessonLearned,
                    MetricDef,
                    Observation,
                    ProblemSolution,
                    ProcessModelStub,
                    QualityModel,
                    Significance,
                    TechnologyRef)

from .program import (STEP_NAMES,
                      MeasurementProgram,
                      advance_program,
                      new_program,
                      step_name)

from .significance import (describe_significance,
                           merge_significance,
                           significance_rank)

from .validation import (Violation,
                         validate,
                         validate_lesson,
                         validate_process_model,
                         validate_quality_model,
                         validate_vector)

__all__ = ['CharacterizationVector',
           'Citation',
           'Factor',
           'GqmGoal',
           'IndicatorDef',
           'LabeledText',
           'LessonLearned',
           'MetricDef',
           'Observation',
           'ProblemSolution',
           'ProcessModelStub',
           'QualityModel',
           'Significance',
           'TechnologyRef',
           'STEP_NAMES',
           'MeasurementProgram',
           'advance_program',
           'new_program',
           'step_name',
           'describe_significance',
           'merge_significance',
           'significance_rank',
           'Violation',
           'validate',
           'validate_lesson',
           'validate_process_model',
           'validate_quality_model',
           'validate_vector']
