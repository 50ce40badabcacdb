"""Shared scoring pieces: thresholds, label mapping, normalization."""

from __future__ import annotations

import math
from typing import Protocol

from ..errors import ContractError
from ..models import NEGATIVE, NEUTRAL, POSITIVE, SentimentScore

POS_THRESHOLD = 0.05
NEG_THRESHOLD = -0.05

#: Normalization constant approximating the largest expected raw sum.
ALPHA = 15.0


class SentimentEngine(Protocol):
    algorithm: str
    description: str

    def score(self, text: str) -> SentimentScore: ...


def classify(compound: float, pos_threshold: float = POS_THRESHOLD,
             neg_threshold: float = NEG_THRESHOLD) -> str:
    """Map a compound score onto positive/negative/neutral.

    Boundaries are inclusive: compound == pos_threshold is positive.
    """
    if neg_threshold > pos_threshold:
        raise ContractError(
            f"neg_threshold {neg_threshold} must not exceed pos_threshold {pos_threshold}"
        )
    if compound >= pos_threshold:
        return POSITIVE
    if compound <= neg_threshold:
        return NEGATIVE
    return NEUTRAL


def normalize(raw: float, alpha: float = ALPHA) -> float:
    """Squash an unbounded raw sum into [-1, 1] via s/sqrt(s^2 + alpha)."""
    norm = raw / math.sqrt(raw * raw + alpha)
    if norm < -1.0:
        return -1.0
    if norm > 1.0:
        return 1.0
    return norm


def clamp_unit(value: float) -> float:
    """Guard against float drift pushing a mean just past +/-1."""
    if value < -1.0:
        return -1.0
    if value > 1.0:
        return 1.0
    return value
