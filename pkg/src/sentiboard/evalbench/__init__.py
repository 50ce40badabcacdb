"""Desk-scale accuracy evaluation of the registered engines."""

from .sentiment140 import (
    AccuracyReport,
    DatasetParseError,
    LabeledPost,
    Sentiment140Data,
    evaluate,
    load_sentiment140,
    report_table,
)
from .synth import generate_rows, write_benchmark

__all__ = [
    "AccuracyReport",
    "DatasetParseError",
    "LabeledPost",
    "Sentiment140Data",
    "evaluate",
    "generate_rows",
    "load_sentiment140",
    "report_table",
    "write_benchmark",
]
