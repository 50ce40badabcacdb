"""Property tests for the engine invariants."""

from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from sentiboard.engines import PatternAverageEngine, ValenceRuleEngine
from sentiboard.engines.lexicon import Lexicon

token = st.from_regex(r"[a-z]{3,9}", fullmatch=True)
valence = st.integers(-40, 40).map(lambda i: i / 10)
increment = st.integers(-10, 10).map(lambda i: i / 10)

entry_maps = st.dictionaries(token.map(lambda t: "w" + t), valence, min_size=1, max_size=15)
booster_maps = st.dictionaries(token.map(lambda t: "b" + t), increment, max_size=4)
negator_sets = st.sets(token.map(lambda t: "n" + t), max_size=3).map(frozenset)


@st.composite
def lexicon_and_text(draw):
    entries = draw(entry_maps)
    boosters = draw(booster_maps)
    negators = draw(negator_sets)
    vocab = list(entries) + list(boosters) + list(negators) + ["but", "zzz"]
    indices = draw(st.lists(st.integers(0, len(vocab) - 1), max_size=12))
    words = []
    for ix in indices:
        word = vocab[ix]
        if draw(st.booleans()):
            word = word.upper()
        words.append(word)
    bangs = draw(st.integers(0, 5))
    text = " ".join(words) + "!" * bangs
    return Lexicon(entries, boosters, negators), text


@given(lexicon_and_text())
@settings(max_examples=400)
def test_compound_always_in_unit_range(case):
    lexicon, text = case
    assert -1.0 <= ValenceRuleEngine(lexicon).score(text).compound <= 1.0


@given(st.text(max_size=200))
@settings(max_examples=300)
def test_compound_in_range_on_arbitrary_unicode(registry, text):
    for algorithm in ("valence-rule", "pattern-average"):
        assert -1.0 <= registry.get(algorithm).score(text).compound <= 1.0


@given(lexicon_and_text())
@settings(max_examples=400)
def test_sign_symmetry_is_exact(case):
    lexicon, text = case
    mirrored = Lexicon(
        {tok: -v for tok, v in lexicon.entries.items()},
        lexicon.boosters,
        lexicon.negators,
    )
    original = ValenceRuleEngine(lexicon).score(text).compound
    assert ValenceRuleEngine(mirrored).score(text).compound == -original


@given(entry_maps, token)
@settings(max_examples=400)
def test_single_negator_flips_sign(entries, neg_suffix):
    negator = "n" + neg_suffix
    lexicon = Lexicon(entries, negators=frozenset({negator}))
    engine = ValenceRuleEngine(lexicon)
    for tok, v in entries.items():
        if v == 0.0:
            continue
        alone = engine.score(tok).compound
        negated = engine.score(f"{negator} {tok}").compound
        assert (alone > 0) != (negated > 0)
        break


@given(lexicon_and_text())
@settings(max_examples=400)
def test_neutral_identity_without_matches(case):
    lexicon, _ = case
    engine = ValenceRuleEngine(lexicon)
    # tokens share no prefix with any entry key ("w..."), so never match
    assert engine.score("zzz qqq but rrr!!").compound == 0.0


@settings(max_examples=200)
@given(st.sampled_from("abcdefghijklmnopqrstuvwxyz"))
def test_booster_monotone_on_bundled_positive_tokens(registry, letter):
    # one alphabet slice per example keeps the quantification exhaustive
    # across runs while staying fast per case
    engine = registry.get("valence-rule")
    tokens = [t for t, v in engine.lexicon.entries.items()
              if v > 0 and t.startswith(letter)]
    for tok in tokens[:40]:
        assert engine.score(f"very {tok}").compound >= engine.score(tok).compound


@given(lexicon_and_text())
@settings(max_examples=300)
def test_scoring_is_pure(case):
    lexicon, text = case
    engine = ValenceRuleEngine(lexicon)
    first = engine.score(text)
    assert engine.score(text) == first
    assert engine.score(text).compound == first.compound


@given(entry_maps.map(lambda e: {k: max(-1.0, min(1.0, v / 4)) for k, v in e.items()}),
       negator_sets, st.lists(st.integers(0, 30), max_size=12))
@settings(max_examples=300)
def test_pattern_average_bounded_and_pure(entries, negators, picks):
    lexicon = Lexicon(entries, negators=negators)
    vocab = list(entries) + list(negators) + ["zzz"]
    text = " ".join(vocab[i % len(vocab)] for i in picks)
    engine = PatternAverageEngine(lexicon)
    compound = engine.score(text).compound
    assert -1.0 <= compound <= 1.0
    assert engine.score(text).compound == compound
