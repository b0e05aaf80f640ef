#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
File-backed experience base.

Each element is one canonical evidence document at `<root>/<kind>/<id>.evb`,
where `kind` is one of `context`, `quality_model`, `lesson` or
`process_model`.  Measurement datasets live beside them at
`<root>/dataset/<id>.csv`.  The in-memory index is rebuilt by scanning the
directory whenever a `Store` is opened.

Writes go to a temporary file in the target directory which is then renamed
over the old file, so readers see either the old or the new element.  One
`Store` object serializes its own writes; running several writers on the same
directory is not supported.
"""

__all__ = ['DATASET_DIR',
           'ELEMENT_KINDS',
           'Store',
           'kind_name']

from collections import namedtuple
import logging
import os
import tempfile
import threading
import warnings

from evb.core.model import (CharacterizationVector, ID_PATTERN, LessonLearned,
                            ProcessModelStub, QualityModel)
from evb.core.validation import validate
from evb.dsl.parser import parse, parse_file
from evb.dsl.serializer import serialize_element
from evb.errors import (DocumentError, DuplicateId, StoreError, UnknownElement,
                        ValidationFailed)
from evb.measurement.dataset import load_csv, write_csv
from evb.options import resolve_store_root

logger = logging.getLogger(__name__)

ELEMENT_KINDS = {CharacterizationVector: 'context',
                 QualityModel: 'quality_model',
                 LessonLearned: 'lesson',
                 ProcessModelStub: 'process_model'}
'''Directory name for each element type.'''

DATASET_DIR = 'dataset'

_Entry = namedtuple('_Entry', ['kind', 'path', 'element'])

def kind_name(element):
    '''Return the store kind of an element, e.g. `'lesson'`.'''
    try:
        return ELEMENT_KINDS[type(element)]
    except KeyError:
        raise TypeError(f'cannot store object of type {type(element).__name__}')

def _check_kind(kind):
    kinds = tuple(ELEMENT_KINDS.values())
    if kind is not None and kind not in kinds:
        raise ValueError(f'`kind` must be one of {kinds}, not "{kind}"')

def _check_id(element_id):
    if not isinstance(element_id, str) or not ID_PATTERN.fullmatch(element_id):
        raise ValueError(f'"{element_id}" is not a valid id; ids may only contain '
                         f'letters, digits, "_", "." and "-"')

def _atomic_write(path, write):
    folder = os.path.dirname(path)
    try:
        os.makedirs(folder, exist_ok=True)
        with tempfile.NamedTemporaryFile('w', encoding='utf-8', newline='',
                                         dir=folder, suffix='.tmp',
                                         delete=False) as tmp:
            tmp_path = tmp.name
            try:
                write(tmp)
                tmp.flush()
                os.fsync(tmp.fileno())
            except BaseException:
                tmp.close()
                os.remove(tmp_path)
                raise
        os.replace(tmp_path, path)
    except OSError as e:
        raise StoreError(f'could not write {path}: {e}') from e

class Store:
    '''
    An experience base rooted at a directory.

    Parameters
    ----------
    root : str or path-like, optional
        Store directory.  The default is resolved by
        `evb.options.resolve_store_root()`.
    create : bool, optional
        Create the directory if it does not exist. The default is True.

    Raises
    ------
    StoreError
        The root is missing (with `create=False`) or cannot be created.

    '''

    def __init__(self, root=None, create=True):
        self.root = resolve_store_root(root)
        self._lock = threading.Lock()
        self._index = {}
        self._topics = {}
        self._datasets = {}
        if create:
            try:
                os.makedirs(self.root, exist_ok=True)
            except OSError as e:
                raise StoreError(f'could not create store at {self.root}: {e}') from e
        elif not os.path.isdir(self.root):
            raise StoreError(f'no store at {self.root}')
        self._scan()

    def __repr__(self):
        return f'Store({self.root!r}, {len(self._index)} elements)'

    def __len__(self):
        return len(self._index)

    def __contains__(self, element_id):
        return element_id in self._index

    # ---- Index

    def _scan(self):
        for kind in ELEMENT_KINDS.values():
            folder = os.path.join(self.root, kind)
            if not os.path.isdir(folder):
                continue
            for file in sorted(os.listdir(folder)):
                if not file.endswith('.evb'):
                    continue
                path = os.path.join(folder, file)
                try:
                    doc = parse_file(path)
                except (DocumentError, OSError) as e:
                    logger.warning('skipping unreadable store file %s: %s', path, e)
                    warnings.warn(f'Skipping unreadable store file {path}: {e}',
                                  RuntimeWarning)
                    continue
                for element in doc:
                    if element.id in self._index:
                        warnings.warn(f'Id "{element.id}" in {path} is already '
                                      f'stored in {self._index[element.id].path}; '
                                      f'skipped.', RuntimeWarning)
                        continue
                    self._add(element, kind_name(element), path)

        folder = os.path.join(self.root, DATASET_DIR)
        if os.path.isdir(folder):
            for file in sorted(os.listdir(folder)):
                name, ext = os.path.splitext(file)
                if ext == '.csv':
                    self._datasets[name] = os.path.join(folder, file)

        logger.info('opened store %s: %d elements, %d datasets',
                    self.root, len(self._index), len(self._datasets))

    def _add(self, element, kind, path):
        self._index[element.id] = _Entry(kind, path, element)
        self._topics.pop(element.id, None)
        if isinstance(element, LessonLearned):
            self._topics[element.id] = tuple(element.topic)

    def _path(self, kind, element_id):
        return os.path.join(self.root, kind, f'{element_id}.evb')

    def topic_index(self):
        '''
        Return the keyword index.

        Returns
        -------
        dict
            Lowercase topic keyword → sorted list of lesson ids.

        '''
        index = {}
        for lesson_id, topic in self._topics.items():
            for keyword in topic:
                index.setdefault(keyword.lower(), set()).add(lesson_id)
        return {k: sorted(v) for k, v in sorted(index.items())}

    # ---- Elements

    def put(self, element, overwrite=False):
        '''
        Store an element in canonical form.

        Parameters
        ----------
        element : CharacterizationVector, QualityModel, LessonLearned or ProcessModelStub
            Element to store.
        overwrite : bool, optional
            Replace an element with the same id. The default is False.

        Raises
        ------
        ValidationFailed
            The element has violations; nothing is written.
        DuplicateId
            The id is taken and `overwrite` is False.
        StoreError
            Writing failed.

        Returns
        -------
        str
            The stored id.

        '''
        kind = kind_name(element)
        violations = validate(element)
        if violations:
            raise ValidationFailed(element.id, violations)
        text = serialize_element(element) + '\n'
        stored = parse(text).elements[0]

        with self._lock:
            existing = self._index.get(element.id)
            if existing is not None and not overwrite:
                raise DuplicateId(element.id)
            path = self._path(kind, element.id)
            _atomic_write(path, lambda f: f.write(text))
            if existing is not None and existing.path != path:
                try:
                    os.remove(existing.path)
                except OSError as e:
                    raise StoreError(f'could not remove {existing.path}: {e}') from e
            self._add(stored, kind, path)

        logger.info('stored %s "%s"%s', kind, element.id,
                    ' (overwritten)' if existing is not None else '')
        return element.id

    def get(self, element_id):
        '''Return the element stored under `element_id`; raises `UnknownElement`.'''
        try:
            return self._index[element_id].element
        except KeyError:
            raise UnknownElement(f'no element "{element_id}" in store {self.root}')

    def kind_of(self, element_id):
        self.get(element_id)
        return self._index[element_id].kind

    def ids(self, kind=None):
        '''Sorted ids, optionally only those of one kind (e.g. `'lesson'`).'''
        _check_kind(kind)
        return sorted(i for i, entry in self._index.items()
                      if kind is None or entry.kind == kind)

    def elements(self, kind=None):
        '''Stored elements in id order, optionally only those of one kind.'''
        return [self._index[i].element for i in self.ids(kind)]

    # ---- Datasets

    def put_dataset(self, ds, overwrite=False):
        '''
        Store a measurement dataset as `<root>/dataset/<id>.csv`.

        Raises
        ------
        DuplicateId
            A dataset with the same id exists and `overwrite` is False.
        StoreError
            Writing failed.

        Returns
        -------
        str
            The dataset id.

        '''
        _check_id(ds.id)
        with self._lock:
            if ds.id in self._datasets and not overwrite:
                raise DuplicateId(ds.id)
            path = os.path.join(self.root, DATASET_DIR, f'{ds.id}.csv')
            _atomic_write(path, lambda f: write_csv(ds, f))
            self._datasets[ds.id] = path
        logger.info('stored dataset "%s" (%d rows)', ds.id, len(ds))
        return ds.id

    def get_dataset(self, dataset_id):
        '''Load a stored dataset; raises `UnknownElement` for an unknown id.'''
        try:
            path = self._datasets[dataset_id]
        except KeyError:
            raise UnknownElement(f'no dataset "{dataset_id}" in store {self.root}')
        try:
            ds, errors = load_csv(path, dataset_id=dataset_id)
        except (OSError, ValueError) as e:
            raise StoreError(f'could not read dataset {path}: {e}') from e
        if errors:
            warnings.warn(f'Dataset {path} has {len(errors)} invalid row(s); first at '
                          f'line {errors[0].line}: {errors[0].message}', RuntimeWarning)
        return ds

    def dataset_ids(self):
        return sorted(self._datasets)
