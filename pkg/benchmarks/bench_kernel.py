#!/usr/bin/env python3
"""Benchmark the compiled scoring kernel against the pure-Python twin.

    python3 benchmarks/bench_kernel.py [--texts 20000]

Scores a seeded batch of synthetic posts with both kernels through the
full engine path and reports throughput, plus a correctness check that
the two paths agree bit for bit on every text.
"""

from __future__ import annotations

import argparse
import random
import time

from sentiboard.engines import ValenceRuleEngine
from sentiboard.engines._kernel import _intensity_py
from sentiboard.engines.lexicon import VALENCE_RULE, bundled_lexicon
from sentiboard.evalbench import synth


def make_texts(n: int, seed: int = 3) -> list[str]:
    pools = synth._Pools()
    rng = random.Random(seed)
    return [synth.generate_post_text(pools, positive=i % 2 == 0, rng=rng)
            for i in range(n)]


def run(engine: ValenceRuleEngine, texts: list[str]) -> tuple[float, list[float]]:
    started = time.perf_counter()
    compounds = [engine.score(t).compound for t in texts]
    return time.perf_counter() - started, compounds


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--texts", type=int, default=20_000)
    args = parser.parse_args()

    try:
        from sentiboard.engines._kernel import _intensity_cy
    except ImportError:
        _intensity_cy = None

    lexicon = bundled_lexicon(VALENCE_RULE)
    texts = make_texts(args.texts)
    engine = ValenceRuleEngine(lexicon)

    import sentiboard.engines.valence_rule as vr

    results = {}
    kernels = [("python", _intensity_py.raw_intensity)]
    if _intensity_cy is not None:
        kernels.append(("cython", _intensity_cy.raw_intensity))
    for name, kernel in kernels:
        vr.raw_intensity = kernel
        elapsed, compounds = run(engine, texts)  # warm-up
        elapsed, compounds = run(engine, texts)
        results[name] = (elapsed, compounds)
        print(f"{name:>7}: {args.texts / elapsed:>10,.0f} texts/s  ({elapsed:.3f}s)")

    if len(results) == 2:
        py_vals, cy_vals = results["python"][1], results["cython"][1]
        assert py_vals == cy_vals, "kernel twins disagree"
        speedup = results["python"][0] / results["cython"][0]
        print(f"full engine path speedup: {speedup:.2f}x, "
              f"outputs bit-identical on {args.texts} texts")

    # inner-loop microbenchmark: tokenization/prep factored out
    from sentiboard.engines.tokenizer import mixed_case, tokenize

    prepared = []
    for text in texts:
        tokens = tokenize(text)
        lower = [t.lower() for t in tokens]
        but_index = lower.index("but") if "but" in lower else -1
        prepared.append((tokens, lower, lexicon.entries, lexicon.boosters,
                         lexicon.negators, mixed_case(tokens), but_index, 1))
    micro = {}
    for name, kernel in kernels:
        for _ in range(2):  # second pass is the measured one
            started = time.perf_counter()
            values = [kernel(*args_) for args_ in prepared]
            micro[name] = (time.perf_counter() - started, values)
        elapsed = micro[name][0]
        print(f"{name:>7} kernel only: {args.texts / elapsed:>10,.0f} calls/s")
    if len(micro) == 2:
        assert micro["python"][1] == micro["cython"][1]
        print(f"kernel-only speedup: {micro['python'][0] / micro['cython'][0]:.2f}x")


if __name__ == "__main__":
    main()
