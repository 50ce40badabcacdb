# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled scoring kernels.

Twin of ``_intensity_py.py``: identical arithmetic in identical order so
results agree bit for bit (plain IEEE doubles, no fast-math). Keep the
two files in sync.
"""

KERNEL_NAME = "cython"

cdef double _CAPS_EMPHASIS = 0.733
cdef double _NEGATION_SCALAR = -0.74
cdef double _BUT_BEFORE = 0.5
cdef double _BUT_AFTER = 1.5
cdef double _BANG_BOOST = 0.292


def raw_intensity(list tokens, list lower, dict valences, dict boosters,
                  frozenset negators, bint is_mixed, Py_ssize_t but_index,
                  int bang_count):
    """Summed, rule-adjusted valence of one token sequence."""
    cdef double total = 0.0
    cdef double v, inc, scale
    cdef Py_ssize_t i, j, dist
    cdef Py_ssize_t n = len(lower)
    cdef object valence, inc_obj, prev
    for i in range(n):
        valence = valences.get(lower[i])
        if valence is None:
            continue
        v = <double> valence
        if v != 0.0 and is_mixed and (<str> tokens[i]).isupper():
            if v > 0.0:
                v += _CAPS_EMPHASIS
            else:
                v -= _CAPS_EMPHASIS
        for dist in range(1, 4):
            j = i - dist
            if j < 0:
                break
            prev = lower[j]
            if v != 0.0:
                inc_obj = boosters.get(prev)
                if inc_obj is not None:
                    inc = <double> inc_obj
                    if v < 0.0:
                        inc = -inc
                    if dist == 1:
                        scale = 1.0
                    elif dist == 2:
                        scale = 0.95
                    else:
                        scale = 0.90
                    v += inc * scale
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


def mean_polarity(list lower, dict polarities, frozenset negators):
    """Average matched polarity; an immediately preceding negator halves
    and flips the match. Returns 0.0 when nothing matches."""
    cdef double total = 0.0
    cdef Py_ssize_t count = 0
    cdef double p
    cdef Py_ssize_t i
    cdef Py_ssize_t n = len(lower)
    cdef object p_obj
    for i in range(n):
        p_obj = polarities.get(lower[i])
        if p_obj is None:
            continue
        p = <double> p_obj
        if i > 0 and lower[i - 1] in negators:
            p = p * -0.5
        total += p
        count += 1
    if count == 0:
        return 0.0
    return total / count
