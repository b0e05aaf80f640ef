# -*- coding: utf-8 -*-
'''This package reads raw measurement data and evaluates GQM indicators over
it.

`evb.measurement.dataset` handles data collection sheets: CSV files with the
header `date,phase,role,effort_hours`.  `evb.measurement.indicators` defines
the indicator functions, which turn a dataset into an `IndicatorResult`
answering the question of a quality model.

Indicator functions are looked up by kind.  There are two public functions for accessing them: `evb.measurement.get_indicator()`
and `evb.measurement.list_indicators()`:

```python
>>> import evb
>>> evb.list_indicators()
['distribution', 'cumulative_distribution', 'sum', 'mean', 'count']
```

Metric names used by quality models are mapped to dataset columns with
`evb.options.OPTIONS['metric_fields']`; `evb.options.set_metric_field()`
adds a mapping.
'''

#imports for package namespace

from .dataset import (HEADER,
                      MeasurementDataset,
                      MeasurementRow,
                      RowError,
                      ingest_csv,
                      load_csv,
                      write_csv)

from .indicators import (IndicatorResult,
                         IndicatorRow,
                         QuestionAnswer,
                         compute_indicator,
                         evaluate_question,
                         get_indicator,
                         list_indicators,
                         verify_result)

__all__ = ['HEADER',
           'MeasurementDataset',
           'MeasurementRow',
           'RowError',
           'ingest_csv',
           'load_csv',
           'write_csv',
           'IndicatorResult',
           'IndicatorRow',
           'QuestionAnswer',
           'compute_indicator',
           'evaluate_question',
           'get_indicator',
           'list_indicators',
           'verify_result']
