"""Pattern-average engine: mean polarity of matched lexicon tokens.

Much simpler than the valence-rule engine, on purpose: no caps or
punctuation handling, and the only context rule is that a negator
immediately before a match multiplies that match's polarity by -0.5.
The compound is the arithmetic mean over matches (0.0 with no matches).
"""

from __future__ import annotations

from ..models import SentimentScore
from ._kernel import mean_polarity
from .base import NEG_THRESHOLD, POS_THRESHOLD, classify, clamp_unit
from .lexicon import PATTERN_AVERAGE, Lexicon
from .tokenizer import tokenize, truncate_text


class PatternAverageEngine:
    algorithm = PATTERN_AVERAGE
    description = "Mean polarity of matched lexicon tokens with immediate-negator flip"

    def __init__(self, lexicon: Lexicon,
                 pos_threshold: float = POS_THRESHOLD,
                 neg_threshold: float = NEG_THRESHOLD):
        self.lexicon = lexicon
        self.pos_threshold = pos_threshold
        self.neg_threshold = neg_threshold

    def score(self, text: str) -> SentimentScore:
        text, truncated = truncate_text(text)
        lower = [tok.lower() for tok in tokenize(text)]
        compound = clamp_unit(mean_polarity(lower, self.lexicon.entries, self.lexicon.negators))
        label = classify(compound, self.pos_threshold, self.neg_threshold)
        return SentimentScore(compound=compound, label=label,
                              algorithm=self.algorithm, truncated=truncated)
