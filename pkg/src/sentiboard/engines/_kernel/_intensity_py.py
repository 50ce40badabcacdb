"""Pure-Python scoring kernels.

These are the reference implementations of the hot inner loops. The
compiled twin in ``_intensity_cy.pyx`` implements the identical
arithmetic in the identical order and must agree bit for bit; keep the
two files in sync.
"""

from __future__ import annotations

KERNEL_NAME = "python"

_CAPS_EMPHASIS = 0.733
_NEGATION_SCALAR = -0.74
_DISTANCE_SCALE = (1.0, 0.95, 0.90)
_BUT_BEFORE = 0.5
_BUT_AFTER = 1.5
_BANG_BOOST = 0.292


def raw_intensity(tokens, lower, valences, boosters, negators, is_mixed, but_index, bang_count):
    """Summed, rule-adjusted valence of one token sequence.

    tokens/lower: original-case and lowercased token lists (same length).
    but_index: index of the pivot contrast token, -1 when absent.
    bang_count: trailing exclamation marks, already capped by the caller.
    Returns the raw intensity sum; normalization happens outside.
    """
    total = 0.0
    n = len(lower)
    for i in range(n):
        valence = valences.get(lower[i])
        if valence is None:
            continue
        v = valence
        if v != 0.0 and is_mixed and tokens[i].isupper():
            if v > 0.0:
                v += _CAPS_EMPHASIS
            else:
                v -= _CAPS_EMPHASIS
        for dist in (1, 2, 3):
            j = i - dist
            if j < 0:
                break
            prev = lower[j]
            if v != 0.0:
                inc = boosters.get(prev)
                if inc is not None:
                    if v < 0.0:
                        inc = -inc
                    v += inc * _DISTANCE_SCALE[dist - 1]
            if prev in negators:
                v *= _NEGATION_SCALAR
        if but_index >= 0:
            if i < but_index:
                v *= _BUT_BEFORE
            elif i > but_index:
                v *= _BUT_AFTER
        total += v
    if total > 0.0:
        total += _BANG_BOOST * bang_count
    elif total < 0.0:
        total -= _BANG_BOOST * bang_count
    return total


def mean_polarity(lower, polarities, negators):
    """Average matched polarity; an immediately preceding negator halves
    and flips the match. Returns 0.0 when nothing matches."""
    total = 0.0
    count = 0
    n = len(lower)
    for i in range(n):
        p = polarities.get(lower[i])
        if p is None:
            continue
        if i > 0 and lower[i - 1] in negators:
            p = p * -0.5
        total += p
        count += 1
    if count == 0:
        return 0.0
    return total / count
