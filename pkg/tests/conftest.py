# -*- coding: utf-8 -*-
"""Shared fixtures: the bundled pilot X example, throwaway stores and report snapshots."""

import copy

import pytest
from syrupy.extensions.single_file import SingleFileSnapshotExtension, WriteMode

from evb.examples import load_example_datasets, load_examples
from evb.options import OPTIONS, STORE_ENV_VAR
from evb.repository.store import Store

class MarkdownSnapshotExtension(SingleFileSnapshotExtension):
    '''One checked-in Markdown file per test, compared byte for byte.'''
    _write_mode = WriteMode.TEXT
    file_extension = 'md'

class TextSnapshotExtension(MarkdownSnapshotExtension):
    file_extension = 'txt'

@pytest.fixture
def markdown_snapshot(snapshot):
    return snapshot.use_extension(MarkdownSnapshotExtension)

@pytest.fixture
def text_snapshot(snapshot):
    return snapshot.use_extension(TextSnapshotExtension)

@pytest.fixture(autouse=True)
def clean_options(monkeypatch):
    saved = copy.deepcopy(OPTIONS)
    monkeypatch.delenv(STORE_ENV_VAR, raising=False)
    yield
    OPTIONS.clear()
    OPTIONS.update(saved)

@pytest.fixture
def examples():
    '''Pilot X elements keyed by id.'''
    return {e.id: e for doc in load_examples('wise_pilot_x') for e in doc}

@pytest.fixture
def effort_dataset():
    return load_example_datasets('wise_pilot_x')[0]

@pytest.fixture
def store(tmp_path):
    return Store(tmp_path / 'store')

@pytest.fixture
def pilot_store(store, examples):
    '''A store holding every pilot X element.'''
    for element in examples.values():
        store.put(element)
    return store
