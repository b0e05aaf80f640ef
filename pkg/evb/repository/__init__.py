# -*- coding: utf-8 -*-
'''This package persists experience elements and retrieves them again.

`evb.repository.store.Store` keeps one canonical evidence document per
element in a directory tree.  On top of it:

- `evb.repository.find_by_keywords()` searches lesson topics,
- `evb.repository.match_context()` ranks elements by how well their
characterization vector fits a query vector,
- `evb.repository.check_references()` lists references to missing elements,
- `evb.repository.make_evidence_statement()` links stored elements into an
evidence statement.

```python
>>> import evb
>>> store = evb.Store('evb-store')
>>> for doc in evb.load_examples('wise_pilot_x'):
...     for element in doc:
...         store.put(element, overwrite=True)
>>> evb.find_by_keywords(store, ['push'])
['LL3PXI2-1']
```
'''

#imports for package namespace

from .evidence import EVIDENCE_KINDS, EvidenceStatement, make_evidence_statement
from .integrity import DanglingReference, check_references
from .matching import MatchScore, context_vector, match_context
from .search import find_by_keywords, keyword_scores
from .store import Store, kind_name

__all__ = ['EVIDENCE_KINDS',
           'EvidenceStatement',
           'make_evidence_statement',
           'DanglingReference',
           'check_references',
           'MatchScore',
           'context_vector',
           'match_context',
           'find_by_keywords',
           'keyword_scores',
           'Store',
           'kind_name']
