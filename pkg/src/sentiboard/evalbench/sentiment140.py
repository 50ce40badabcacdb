"""Accuracy evaluation on Sentiment140-format data.

Input format: 6-column CSV rows ``polarity,id,date,query,user,text`` with
polarity 0 (negative) or 4 (positive). Rows with any other polarity are
skipped and counted; structurally broken rows are an error.
"""

from __future__ import annotations

import csv
import random
import time
from dataclasses import dataclass, field
from pathlib import Path

from ..engines import EngineRegistry, default_registry
from ..errors import ContractError, SentiboardError
from ..models import NEGATIVE, POSITIVE


class DatasetParseError(SentiboardError):
    code = "dataset_parse_error"

    def __init__(self, message: str, row_no: int):
        super().__init__(f"row {row_no}: {message}")
        self.row_no = row_no


@dataclass(frozen=True)
class LabeledPost:
    text: str
    gold: str  # positive | negative


@dataclass(frozen=True)
class Sentiment140Data:
    posts: list[LabeledPost]
    skipped: int

    def __len__(self) -> int:
        return len(self.posts)


@dataclass(frozen=True)
class AccuracyReport:
    algorithm: str
    total: int
    correct: int
    accuracy: float  # percent, 2 decimals
    confusion: dict[str, int] = field(default_factory=dict)
    elapsed_seconds: float = 0.0


_GOLD = {"0": NEGATIVE, "4": POSITIVE}


def _read_rows(path: Path):
    raw = path.read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError:
        text = raw.decode("latin-1")  # the published corpus uses latin-1
    return csv.reader(text.splitlines())


def load_sentiment140(path: str | Path, sample_n: int | None = None,
                      seed: int = 0) -> Sentiment140Data:
    """Load (and optionally stratify-sample) a Sentiment140 CSV.

    Sampling takes sample_n // 2 posts per class after a seeded shuffle,
    so the same seed always yields the same evaluation set.
    """
    path = Path(path)
    positive: list[LabeledPost] = []
    negative: list[LabeledPost] = []
    skipped = 0
    for row_no, row in enumerate(_read_rows(path), start=1):
        if not row:
            continue
        if len(row) != 6:
            raise DatasetParseError(f"expected 6 columns, got {len(row)}", row_no)
        gold = _GOLD.get(row[0].strip())
        if gold is None:
            skipped += 1
            continue
        bucket = positive if gold == POSITIVE else negative
        bucket.append(LabeledPost(text=row[5], gold=gold))

    if sample_n is None:
        posts = negative + positive
    else:
        half = sample_n // 2
        if len(positive) < half or len(negative) < half:
            raise ContractError(
                f"need {half} posts per class, have {len(positive)} positive"
                f" and {len(negative)} negative")
        rng = random.Random(seed)
        rng.shuffle(positive)
        rng.shuffle(negative)
        posts = positive[:half] + negative[:half]
        rng.shuffle(posts)
    return Sentiment140Data(posts=posts, skipped=skipped)


def evaluate(algorithm: str, data: Sentiment140Data | list[LabeledPost],
             registry: EngineRegistry | None = None) -> AccuracyReport:
    """Binary accuracy with the standard collapse: compound >= 0 is positive."""
    posts = data.posts if isinstance(data, Sentiment140Data) else data
    if not posts:
        raise ContractError("cannot evaluate on empty data")
    engine = (registry or default_registry()).get(algorithm)
    started = time.perf_counter()
    confusion = {"tp": 0, "fp": 0, "tn": 0, "fn": 0}
    for post in posts:
        predicted = POSITIVE if engine.score(post.text).compound >= 0 else NEGATIVE
        if post.gold == POSITIVE:
            confusion["tp" if predicted == POSITIVE else "fn"] += 1
        else:
            confusion["fp" if predicted == POSITIVE else "tn"] += 1
    correct = confusion["tp"] + confusion["tn"]
    return AccuracyReport(
        algorithm=algorithm,
        total=len(posts),
        correct=correct,
        accuracy=round(100.0 * correct / len(posts), 2),
        confusion=confusion,
        elapsed_seconds=time.perf_counter() - started,
    )


def report_table(reports: list[AccuracyReport], dataset: str) -> str:
    """Aligned text table, one engine per row."""
    header = f"{'Model':<18} {'Dataset':<14} {'N':>6} {'Accuracy':>9}"
    lines = [header, "-" * len(header)]
    for r in reports:
        lines.append(f"{r.algorithm:<18} {dataset:<14} {r.total:>6} {r.accuracy:>8.2f}%")
    return "\n".join(lines)
