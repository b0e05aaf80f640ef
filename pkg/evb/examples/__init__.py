# -*- coding: utf-8 -*-
'''This package provides example data for evb.  The package comes bundled
with evidence documents (`.evb`) and data collection sheets (`.csv`), which
can be loaded as `evb.dsl.Document` and
`evb.measurement.MeasurementDataset` objects.

evb uses this package to create reproducible examples for the documentation
and the tests.

Datasets
-----

### WISE pilot service X (`wise_pilot_x`)
Experience packaged after the first two iterations of a mobile pilot service:

- characterization vectors `CV1PX11` (iteration 1, a computation-intensive
multi-client game) and `CV3PXI2` (iteration 2, porting an information system
from WAP 1.0 to J2ME),
- the quality model `WISE-QM3PX11`, characterizing the effort distribution
over the phases of the server side development,
- the observation `LL3PXI2-1` and the problem/solution pair `LL1PX11-1`,
- the process model `PM1PX11` with the phases RP, DP, CP, IP and AP,
- the dataset `effort_pilot_x_iteration1`, whose effort sums to 350, 350,
550, 150 and 50 hours for those phases.

`LL1PX11-1` refers to `PM1PXI1`, which is not part of the example, so
`evb.check_references()` has something to report.

'''

__all__ = ['DATADIR',
           'example_path',
           'list_examples',
           'load_example_datasets',
           'load_examples']

import logging
import os

from evb.dsl.parser import parse_file
from evb.measurement.dataset import load_csv

logger = logging.getLogger(__name__)

# module variables
DATADIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')

def list_examples():
    '''
    List all the available example data sets - specifically the string
    keys which can be provided to `load_examples()`.

    Returns
    -------
    list
        All available keys.
    '''

    examples = []
    for folder in sorted(os.listdir(DATADIR)):
        fullfolder = os.path.join(DATADIR, folder)
        if not os.path.isdir(fullfolder): continue;
        examples.append(folder)

    return examples

def example_path(key, name):
    '''
    Return the full path of one example file.

    Raises
    ------
    KeyError
        Unrecognized key or file name.
    '''
    path = os.path.join(DATADIR, key, name)
    if not os.path.isfile(path):
        raise KeyError(f'No example file "{name}" for key "{key}".')
    return path

def _files(key, ext):
    example_folder = os.path.join(DATADIR, key)
    if not os.path.isdir(example_folder):
        raise KeyError(f'Example key "{key}" is not recognized. Possible keys are: '
                       f'{list_examples()}.')
    logger.debug('loading %s files from %s', ext, example_folder)
    for file in sorted(os.listdir(example_folder)):
        if os.path.splitext(file)[1].lower() == ext:
            yield os.path.join(example_folder, file)

def load_examples(key):
    '''
    Load the evidence documents linked to a given key.

    Parameters
    ----------
    key : str
        Example to load.

    Raises
    ------
    KeyError
        Unrecognized key.

    Returns
    -------
    list
        Example documents (`evb.dsl.Document`), in file name order.

    '''
    return [parse_file(path) for path in _files(key, '.evb')]

def load_example_datasets(key):
    '''
    Load the measurement datasets linked to a given key.  Dataset ids are the
    file names without extension.

    Raises
    ------
    KeyError
        Unrecognized key.

    Returns
    -------
    list
        `evb.measurement.MeasurementDataset` objects, in file name order.

    '''
    datasets = []
    for path in _files(key, '.csv'):
        ds, errors = load_csv(path)
        for e in errors:
            logger.warning('%s:%d: %s', path, e.line, e.message)
        datasets.append(ds)
    return datasets
