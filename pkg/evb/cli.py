#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Command line interface: `evb <command> ...` or `python -m evb <command> ...`.

Machine-readable output goes to standard output, diagnostics to standard
error.  Exit codes:

- 0: success
- 1: parse or validation failures, rejected input, dangling references
- 2: usage error (unknown or missing flags)
- 3: I/O or store error
"""

__all__ = ['EXIT_OK', 'EXIT_INVALID', 'EXIT_USAGE', 'EXIT_IO', 'main']

import argparse
import logging
import sys

from evb._version import v as __version__
from evb.core.model import SIGNIFICANCE_KINDS, QualityModel, Significance
from evb.dsl.parser import parse_file
from evb.errors import DocumentError, EvbError, StoreError
from evb.measurement.dataset import load_csv
from evb.measurement.indicators import evaluate_question
from evb.options import resolve_store_root
from evb.reporting.markdown import format_number, render_element, render_evidence_statement
from evb.reporting.retro import render_retrospective, retrospective_questions
from evb.repository.evidence import EVIDENCE_KINDS, make_evidence_statement
from evb.repository.integrity import check_references
from evb.repository.matching import context_vector, match_context
from evb.repository.search import keyword_scores
from evb.repository.store import Store

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_IO = 3

STORE_HELP = 'Store directory (default: $EVB_STORE, else ./evb-store).'

def _err(message):
    print(message, file=sys.stderr)

def _print_document_errors(path, error):
    for e in error.errors:
        _err(f'{path}:{e.span.line}:{e.span.column}: {e.message}')

# ---- Commands

def cmd_validate(args):
    status = EXIT_OK
    for path in args.paths:
        try:
            doc = parse_file(path)
        except OSError as e:
            _err(f'{path}: {e.strerror or e}')
            status = max(status, EXIT_IO)
            continue
        except DocumentError as e:
            _print_document_errors(path, e)
            status = max(status, EXIT_INVALID)
            continue
        logger.info('%s: %d element(s) ok', path, len(doc))
    return status

def cmd_ingest(args):
    try:
        ds, errors = load_csv(args.csv, dataset_id=args.dataset)
    except OSError as e:
        _err(f'{args.csv}: {e.strerror or e}')
        return EXIT_IO
    for e in errors:
        _err(f'{args.csv}:{e.line}: {e.message}')
    store = Store(args.store)
    store.put_dataset(ds, overwrite=args.overwrite)
    print(f'{ds.id}\t{len(ds)}')
    return EXIT_INVALID if errors else EXIT_OK

def cmd_indicator(args):
    store = Store(args.store, create=False)
    qm = store.get(args.model)
    if not isinstance(qm, QualityModel):
        _err(f'"{args.model}" is a {store.kind_of(args.model)}, not a quality model')
        return EXIT_INVALID
    answer = evaluate_question(qm, store.get_dataset(args.dataset))
    ind = qm.indicator
    print(f'{ind.group_by or "indicator"}\t{ind.value_metric}\tpercent\tcumulative_percent')
    for row in answer.result.rows:
        print(f'{row.key}\t{format_number(row.value)}\t{format_number(row.percent)}\t'
              f'{format_number(row.cumulative_percent)}')
    return EXIT_OK

def cmd_put(args):
    store = Store(args.store)
    status = EXIT_OK
    for path in args.paths:
        try:
            doc = parse_file(path)
        except OSError as e:
            _err(f'{path}: {e.strerror or e}')
            status = max(status, EXIT_IO)
            continue
        except DocumentError as e:
            _print_document_errors(path, e)
            status = max(status, EXIT_INVALID)
            continue
        for element in doc:
            print(store.put(element, overwrite=args.overwrite))
    return status

def cmd_query(args):
    store = Store(args.store, create=False)
    if args.keywords is not None:
        keywords = [k for k in args.keywords.split(',') if k.strip()]
        hits = keyword_scores(store, keywords)
    else:
        hits = None

    if args.context is None:
        lines = [(i, str(n)) for i, n in hits]
    else:
        query = context_vector(store, args.context)
        if hits is None:
            candidates = store.ids('quality_model') + store.ids('lesson')
        else:
            candidates = [i for i, _ in hits]
        lines = [(m.id, format_number(m.score)) for m in match_context(store, query, candidates)]

    if args.top is not None:
        lines = lines[:args.top]
    for element_id, score in lines:
        print(f'{element_id}\t{score}')
    return EXIT_OK

def cmd_report(args):
    store = Store(args.store, create=False)
    element = store.get(args.id)
    result = None
    if args.dataset is not None:
        if not isinstance(element, QualityModel):
            _err(f'--dataset only applies to quality models, not a {store.kind_of(args.id)}')
            return EXIT_INVALID
        result = evaluate_question(element, store.get_dataset(args.dataset)).result
    report = render_element(element, result)
    if args.out is None:
        sys.stdout.write(report.body)
    else:
        try:
            with open(args.out, 'w', encoding='utf-8', newline='\n') as f:
                f.write(report.body)
        except OSError as e:
            _err(f'{args.out}: {e.strerror or e}')
            return EXIT_IO
    return EXIT_OK

def cmd_refs(args):
    store = Store(args.store, create=False)
    dangling = check_references(store)
    for ref in dangling:
        print(f'{ref.source}\t{ref.missing}')
    return EXIT_INVALID if dangling else EXIT_OK

def cmd_statement(args):
    store = Store(args.store, create=False)
    statement = make_evidence_statement(store, args.kind, args.subject, args.context,
                                        Significance(args.significance, args.count),
                                        result=args.result)
    print(render_evidence_statement(statement))
    return EXIT_OK

def cmd_retro(args):
    if args.markdown:
        sys.stdout.write(render_retrospective().body)
    else:
        for question in retrospective_questions():
            print(question)
    return EXIT_OK

# ---- Parser

def build_parser():
    parser = argparse.ArgumentParser(
        prog='evb',
        description='Experience base: validate, store, search and report '
                    'software engineering experience.',
        allow_abbrev=False,
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='Log progress to standard error (-vv for debug output).')
    parser.add_argument('--store', default=None, help=STORE_HELP)
    subparsers = parser.add_subparsers(dest='command', required=True)

    # --store is also accepted after the command name
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--store', default=argparse.SUPPRESS, help=STORE_HELP)

    p = subparsers.add_parser('validate', parents=[common], help='Parse and validate evidence documents.')
    p.add_argument('paths', nargs='+', help='.evb files to check.')
    p.set_defaults(func=cmd_validate)

    p = subparsers.add_parser('ingest', parents=[common], help='Store a data collection sheet as a dataset.')
    p.add_argument('--csv', required=True, help='CSV file with header date,phase,role,effort_hours.')
    p.add_argument('--dataset', required=True, help='Dataset id.')
    p.add_argument('--overwrite', action='store_true', help='Replace an existing dataset.')
    p.set_defaults(func=cmd_ingest)

    p = subparsers.add_parser('indicator', parents=[common], help="Evaluate a quality model's indicator.")
    p.add_argument('--model', required=True, help='Quality model id.')
    p.add_argument('--dataset', required=True, help='Dataset id.')
    p.set_defaults(func=cmd_indicator)

    p = subparsers.add_parser('put', parents=[common], help='Store the elements of evidence documents.')
    p.add_argument('paths', nargs='+', help='.evb files to store.')
    p.add_argument('--overwrite', action='store_true', help='Replace elements with the same id.')
    p.set_defaults(func=cmd_put)

    p = subparsers.add_parser('query', parents=[common], help='Search lessons by keyword and/or rank by context.')
    p.add_argument('--keywords', default=None, help='Comma-separated topic keywords.')
    p.add_argument('--context', default=None, help='Characterization vector id to rank against.')
    p.add_argument('--top', type=int, default=None, help='Print at most N hits.')
    p.set_defaults(func=cmd_query)

    p = subparsers.add_parser('report', parents=[common], help='Render a stored element as Markdown.')
    p.add_argument('--id', required=True, help='Element id.')
    p.add_argument('--dataset', default=None, help='Dataset for a quality model indicator.')
    p.add_argument('--out', default=None, help='Output file (default: standard output).')
    p.set_defaults(func=cmd_report)

    p = subparsers.add_parser('refs', parents=[common], help='List references to missing elements.')
    p.set_defaults(func=cmd_refs)

    p = subparsers.add_parser('statement', parents=[common], help='Render an evidence statement.')
    p.add_argument('--kind', required=True, choices=EVIDENCE_KINDS)
    p.add_argument('--subject', required=True,
                   help='Technology name, process model id or problem/solution lesson id.')
    p.add_argument('--context', required=True, help='Characterization vector id.')
    p.add_argument('--result', default=None, help='Quality model id (technology_applied only).')
    p.add_argument('--significance', default='case_study', choices=SIGNIFICANCE_KINDS)
    p.add_argument('--count', type=int, default=1, help='Number of validations.')
    p.set_defaults(func=cmd_statement)

    p = subparsers.add_parser('retro', parents=[common], help='Print the retrospective questions.')
    p.add_argument('--markdown', action='store_true', help='Print a Markdown worksheet instead.')
    p.set_defaults(func=cmd_retro)

    return parser

def main(argv=None):
    '''
    Run the command line.

    Parameters
    ----------
    argv : list of str, optional
        Arguments without the program name. The default is `sys.argv[1:]`.

    Returns
    -------
    int
        Exit code.  Usage errors exit through `SystemExit(2)` raised by
        argparse.

    '''
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == 'query' and args.keywords is None and args.context is None:
        parser.error('query needs --keywords, --context, or both')

    level = logging.WARNING if args.verbose == 0 else (
        logging.INFO if args.verbose == 1 else logging.DEBUG)
    logging.basicConfig(stream=sys.stderr, level=level,
                        format='%(levelname)s %(name)s: %(message)s')
    args.store = resolve_store_root(args.store)

    try:
        return args.func(args)
    except StoreError as e:
        _err(f'evb: {e}')
        return EXIT_IO
    except (EvbError, ValueError, KeyError) as e:
        message = e.args[0] if isinstance(e, KeyError) and e.args else e
        _err(f'evb: {message}')
        return EXIT_INVALID
