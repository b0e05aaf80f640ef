# -*- coding: utf-8 -*-

'''evb is a Python package for building an experience base: characterization
vectors, GQM quality models, lessons learned and the measurement data behind
them.'''

# set warnings style to remove reprinting of warning
import warnings as __warnings

def __warning_on_one_line(message, category, filename, lineno, file=None, line=None):
        return '%s:%s: %s: %s\n' % (filename, lineno, category.__name__, message)

__warnings.formatwarning = __warning_on_one_line

# version
from ._version import v
__version__ = v
del v

#imports for package namespace
from evb.core import (CharacterizationVector,
                      Factor,
                      LessonLearned,
                      ProcessModelStub,
                      QualityModel,
                      Significance,
                      TechnologyRef,
                      advance_program,
                      merge_significance,
                      new_program,
                      significance_rank,
                      validate)

from evb.dsl import parse, parse_file, serialize

from evb.examples import list_examples, load_example_datasets, load_examples

from evb.measurement import (compute_indicator,
                             evaluate_question,
                             get_indicator,
                             ingest_csv,
                             list_indicators,
                             load_csv)

from evb.options import set_metric_field, set_store_root

from evb.repository import (Store,
                            check_references,
                            find_by_keywords,
                            make_evidence_statement,
                            match_context)

from evb.reporting import (render_element,
                           render_evidence_statement,
                           render_lesson,
                           render_quality_model,
                           retrospective_questions)

__all__ = [
    'CharacterizationVector',
    'Factor',
    'LessonLearned',
    'ProcessModelStub',
    'QualityModel',
    'Significance',
    'TechnologyRef',
    'advance_program',
    'merge_significance',
    'new_program',
    'significance_rank',
    'validate',
    'parse',
    'parse_file',
    'serialize',
    'list_examples',
    'load_example_datasets',
    'load_examples',
    'compute_indicator',
    'evaluate_question',
    'get_indicator',
    'ingest_csv',
    'list_indicators',
    'load_csv',
    'set_metric_field',
    'set_store_root',
    'Store',
    'check_references',
    'find_by_keywords',
    'make_evidence_statement',
    'match_context',
    'render_element',
    'render_evidence_statement',
    'render_lesson',
    'render_quality_model',
    'retrospective_questions'
    ]
