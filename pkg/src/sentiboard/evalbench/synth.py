"""Seeded generator for a Sentiment140-format benchmark corpus.

The published corpus cannot be redistributed here, so tests and the demo
use a synthetic stand-in that mimics how the original was built: binary
labels derived from emoticons that were then stripped from the text.
That labeling process is noisy and the text often carries weaker (or no)
lexical signal than the label implies, which the generator reproduces:

  * ``QUIET_RATE``: posts with no sentiment-bearing words at all (the
    emoticon carried the feeling);
  * ``LABEL_FLIP_RATE``: outright mislabels (sarcasm, ambiguous emoticons);
  * ``OOV_RATE``: opinion expressed in slang/mangled words no fixed
    lexicon can know;
  * ``MIXED_RATE``: a clause of the opposite polarity alongside the
    main one;
  * negations phrased with gap words ("not a fan of", "not really"),
    which defeat narrow negation windows.

The rates were calibrated once against the desk-scale accuracy bands the
engines are expected to hit and are then frozen; the engines themselves
take no part in generation.
"""

from __future__ import annotations

import csv
import io
import random
from pathlib import Path

from ..engines.lexicon import PATTERN_AVERAGE, VALENCE_RULE, bundled_lexicon

QUIET_RATE = 0.22
LABEL_FLIP_RATE = 0.10
OOV_RATE = 0.22
MIXED_RATE = 0.12
NEGATED_PHRASE_RATE = 0.14
GAPPED_NEGATION_RATE = 0.45  # fraction of negations with a filler word gap
SHARED_VOCAB_RATE = 0.75     # opinion words known to both lexicons (adjectives)

FILLER = """
today tomorrow morning tonight weekend monday friday coffee lunch dinner bus
train traffic office work school class homework meeting email phone laptop
update version app game match episode movie show song album track playlist
weather rain sun snow news story post thread pic photo video clip stream
shop store price ticket flight hotel trip road town city park gym run walk
dog cat kid family folks crew team boss client neighbor doctor queue line
thing stuff time day week year moment minute hour plan idea point note list
""".split()

OPENERS = ["so", "ok", "well", "honestly", "tbh", "btw", "man", "ugh no wait",
           "just saying", "real talk", "heads up", "psa", "update:", "fyi"]

NEUTRAL_HASHTAGS = ["#monday", "#nowplaying", "#news", "#random", "#daily",
                    "#2009", "#life", "#work", "#commute", "#weekend"]

# Out-of-vocabulary opinion words; anything that turns out to be in the
# bundled lexicon is filtered away at build time.
OOV_POSITIVE = """
goated baller clutch ace mint groovy tubular wavy zippy primo neato boss
bomb dank swaggy rockin on-point sheesh valid peak kino crackin bangin
amazin brill smashin lovelyy wicked-good top-tier 10/10 a+ chefskiss
""".split()

OOV_NEGATIVE = """
wack whack jank dogwater scuffed ratchet naff manky grotty dodgy duff bunk
cruddy chintzy dreck fugly lemon moot rubbish shambolic trash-tier yucky
zonked cringey crusty mid-tier 0/10 d- paintrain nothx bleurgh
""".split()

BOOST_WORDS = ["really", "so", "very", "totally", "super", "kinda", "pretty"]
NEGATors = ["not", "never", "dont", "don't", "isnt", "isn't", "cant", "aint"]
GAP_WORDS = ["a", "the", "really", "that", "even", "exactly", "remotely"]

_MONTHS = ["Jan", "Feb", "Mar", "Apr", "May", "Jun"]
_DAYS = ["Mon", "Tue", "Wed", "Thu", "Fri", "Sat", "Sun"]


class _Pools:
    """Sentiment word pools split by polarity and lexicon membership."""

    def __init__(self):
        valence = bundled_lexicon(VALENCE_RULE)
        polarity = bundled_lexicon(PATTERN_AVERAGE)
        entries = valence.entries
        known = [t for t in entries
                 if t.isalpha() and 3 <= len(t) <= 12 and abs(entries[t]) >= 1.2]
        # adjective-flavored words live in both lexicons; verbs/nouns/slang
        # only in the valence one
        self.shared_pos = sorted(t for t in known
                                 if entries[t] > 0 and t in polarity.entries)
        self.shared_neg = sorted(t for t in known
                                 if entries[t] < 0 and t in polarity.entries)
        self.in_vocab_pos = sorted(t for t in known
                                   if entries[t] > 0 and t not in polarity.entries)
        self.in_vocab_neg = sorted(t for t in known
                                   if entries[t] < 0 and t not in polarity.entries)
        self.oov_pos = [w for w in OOV_POSITIVE if w not in entries]
        self.oov_neg = [w for w in OOV_NEGATIVE if w not in entries]
        assert self.oov_pos and self.oov_neg, "OOV pools must stay non-empty"
        self.entries = entries


def _mangle(word: str, rng: random.Random) -> str:
    """Typo that knocks a word out of any lexicon."""
    if len(word) < 4:
        return word + word[-1]
    i = rng.randrange(1, len(word) - 2)
    return word[:i] + word[i + 1] + word[i] + word[i + 2:]


def _pick_in_vocab(pools: _Pools, positive: bool, rng: random.Random) -> str:
    if rng.random() < SHARED_VOCAB_RATE:
        return rng.choice(pools.shared_pos if positive else pools.shared_neg)
    return rng.choice(pools.in_vocab_pos if positive else pools.in_vocab_neg)


def _opinion_words(pools: _Pools, positive: bool, rng: random.Random) -> str:
    """One opinion expression of the requested polarity."""
    use_oov = rng.random() < OOV_RATE
    if rng.random() < NEGATED_PHRASE_RATE:
        # express polarity by negating its opposite
        word = _pick_in_vocab(pools, not positive, rng)
        negator = rng.choice(NEGATors)
        if rng.random() < GAPPED_NEGATION_RATE:
            return f"{negator} {rng.choice(GAP_WORDS)} {word}"
        return f"{negator} {word}"

    if use_oov:
        word = rng.choice(pools.oov_pos if positive else pools.oov_neg)
    else:
        word = _pick_in_vocab(pools, positive, rng)
    if not use_oov and rng.random() < 0.06:
        word = _mangle(word, rng)  # typos become OOV too
    if rng.random() < 0.15:
        word = f"{rng.choice(BOOST_WORDS)} {word}"
    if rng.random() < 0.05:
        word = word.upper()
    if rng.random() < 0.1:
        word += "!" * rng.randrange(1, 4)
    return word


def _chatter(rng: random.Random, n: int) -> list[str]:
    return [rng.choice(FILLER) for _ in range(n)]


def generate_post_text(pools: _Pools, positive: bool, rng: random.Random) -> str:
    parts: list[str] = []
    if rng.random() < 0.2:
        parts.append(f"@{rng.choice(FILLER)}{rng.randrange(100)}")
    if rng.random() < 0.25:
        parts.append(rng.choice(OPENERS))
    parts.extend(_chatter(rng, rng.randrange(1, 4)))

    if rng.random() >= QUIET_RATE:
        parts.append(_opinion_words(pools, positive, rng))
        if rng.random() < 0.35:
            parts.extend(_chatter(rng, rng.randrange(1, 3)))
            parts.append(_opinion_words(pools, positive, rng))
        if rng.random() < MIXED_RATE:
            parts.append("but" if rng.random() < 0.4 else rng.choice(FILLER))
            parts.append(_opinion_words(pools, not positive, rng))
    else:
        parts.extend(_chatter(rng, rng.randrange(2, 5)))

    if rng.random() < 0.12:
        parts.append(rng.choice(NEUTRAL_HASHTAGS))
    if rng.random() < 0.08:
        parts.append(f"http://t.co/{rng.randrange(16**5):05x}")
    return " ".join(parts)


def _fake_date(rng: random.Random) -> str:
    return (f"{rng.choice(_DAYS)} {rng.choice(_MONTHS)} {rng.randrange(1, 29):02d} "
            f"{rng.randrange(24):02d}:{rng.randrange(60):02d}:{rng.randrange(60):02d} "
            f"PDT 2009")


def generate_rows(rows: int, seed: int):
    """Yield Sentiment140-format rows, half per class, label noise included."""
    pools = _Pools()
    rng = random.Random(seed)
    for i in range(rows):
        positive = i % 2 == 0
        text = generate_post_text(pools, positive, rng)
        gold_positive = positive if rng.random() >= LABEL_FLIP_RATE else not positive
        yield (
            "4" if gold_positive else "0",
            str(1_400_000_000 + i),
            _fake_date(rng),
            "NO_QUERY",
            f"user_{rng.randrange(10_000):04d}",
            text,
        )


def write_benchmark(path: str | Path, rows: int = 6000, seed: int = 7) -> Path:
    """Write a synthetic benchmark CSV (quoted like the original corpus)."""
    path = Path(path)
    buffer = io.StringIO()
    writer = csv.writer(buffer, quoting=csv.QUOTE_ALL, lineterminator="\n")
    for row in generate_rows(rows, seed):
        writer.writerow(row)
    path.write_text(buffer.getvalue(), encoding="utf-8")
    return path
