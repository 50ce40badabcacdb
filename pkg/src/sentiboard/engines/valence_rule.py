"""Valence-rule engine: lexicon scoring with contextual heuristics.

The rule set, applied per matched token (nearest modifier first):

  1. case-insensitive valence lookup, valences in [-4, 4];
  2. an ALL-CAPS token gets +/-0.733 emphasis when the text as a whole is
     not all caps (sign follows the valence; zero valence is left alone);
  3. a booster/dampener up to 3 tokens back adds its increment, scaled by
     distance (x1.0, x0.95, x0.90) and sign-aligned with the valence at
     the moment it applies;
  4. a negator up to 3 tokens back multiplies the valence by -0.74 (each
     occurrence applies, so double negation flips back);
  5. tokens before the first "but" are weighted x0.5, tokens after x1.5;
  6. up to 4 trailing "!" each add 0.292 to the magnitude of the summed
     score;
  7. compound = s / sqrt(s^2 + 15).

Texts longer than 10,000 characters are truncated at a whitespace
boundary and the result carries ``truncated=True``.
"""

from __future__ import annotations

from ..models import SentimentScore
from ._kernel import raw_intensity
from .base import NEG_THRESHOLD, POS_THRESHOLD, classify, normalize
from .lexicon import VALENCE_RULE, Lexicon
from .tokenizer import mixed_case, tokenize, truncate_text

MAX_BANGS = 4


def trailing_bangs(text: str) -> int:
    """Count consecutive '!' at the end of the text, capped at 4."""
    tail = text.rstrip()
    n = 0
    while n < len(tail) and tail[-1 - n] == "!":
        n += 1
    return min(n, MAX_BANGS)


class ValenceRuleEngine:
    algorithm = VALENCE_RULE
    description = "Valence lexicon with negation, booster, caps and punctuation heuristics"

    def __init__(self, lexicon: Lexicon,
                 pos_threshold: float = POS_THRESHOLD,
                 neg_threshold: float = NEG_THRESHOLD):
        self.lexicon = lexicon
        self.pos_threshold = pos_threshold
        self.neg_threshold = neg_threshold

    def score(self, text: str) -> SentimentScore:
        text, truncated = truncate_text(text)
        tokens = tokenize(text)
        lower = [tok.lower() for tok in tokens]
        try:
            but_index = lower.index("but")
        except ValueError:
            but_index = -1
        raw = raw_intensity(
            tokens,
            lower,
            self.lexicon.entries,
            self.lexicon.boosters,
            self.lexicon.negators,
            mixed_case(tokens),
            but_index,
            trailing_bangs(text),
        )
        compound = normalize(raw)
        label = classify(compound, self.pos_threshold, self.neg_threshold)
        return SentimentScore(compound=compound, label=label,
                              algorithm=self.algorithm, truncated=truncated)
