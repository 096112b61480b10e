#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Builds a synthetic lexicon and article stream for the multi-pattern scan,
and a synthetic postings set for BM25 accumulation, then times both
backends on identical inputs and checks they produce identical results.
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from condensedly.fixtures import CONTENT_WORDS
from condensedly.kernels import Automaton, pure

try:
    from condensedly.kernels import _speedups
except ImportError:
    _speedups = None


def build_scan_workload(rng: random.Random):
    patterns = []
    for word in CONTENT_WORDS:
        patterns.append(word)
        patterns.append(word + " level")
        patterns.append("chronic " + word)
    automaton = Automaton(patterns)
    words = CONTENT_WORDS + ["the", "of", "and", "in", "chronic", "level"]
    text = " ".join(rng.choice(words) for _ in range(200_000))
    return automaton, text


def build_bm25_workload(rng: random.Random):
    n_docs = 50_000
    n_postings = 20_000
    doc_idx = np.asarray(sorted(rng.sample(range(n_docs), n_postings)),
                         dtype=np.int64)
    tfs = np.asarray([rng.randint(1, 20) for _ in range(n_postings)],
                     dtype=np.int64)
    doc_lengths = np.asarray([rng.randint(50, 2000) for _ in range(n_docs)],
                             dtype=np.int64)
    return doc_idx, tfs, doc_lengths, float(doc_lengths.mean())


def timeit(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        started = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - started)
    return best


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    rng = random.Random(1)
    automaton, text = build_scan_workload(rng)
    doc_idx, tfs, doc_lengths, avgdl = build_bm25_workload(rng)

    rows = []

    pure_matches = pure.ac_scan(automaton, text)
    pure_scan = timeit(lambda: pure.ac_scan(automaton, text), args.repeat)
    row = ["ac_scan", f"{pure_scan * 1000:9.1f}", "      n/a", "   n/a"]
    if _speedups is not None:
        fast_matches = _speedups.ac_scan(automaton, text)
        assert fast_matches == pure_matches, "backend results differ"
        fast_scan = timeit(lambda: _speedups.ac_scan(automaton, text),
                           args.repeat)
        row[2] = f"{fast_scan * 1000:9.1f}"
        row[3] = f"{pure_scan / fast_scan:5.1f}x"
    rows.append(row)

    def run_pure_bm25():
        scores = np.zeros(len(doc_lengths))
        pure.bm25_accumulate(doc_idx, tfs, doc_lengths, 1.7, 1.2, 0.75,
                             avgdl, scores)
        return scores

    pure_scores = run_pure_bm25()
    pure_bm25 = timeit(run_pure_bm25, args.repeat)
    row = ["bm25_accumulate", f"{pure_bm25 * 1000:9.1f}", "      n/a", "   n/a"]
    if _speedups is not None:

        def run_fast_bm25():
            scores = np.zeros(len(doc_lengths))
            _speedups.bm25_accumulate(doc_idx, tfs, doc_lengths, 1.7, 1.2,
                                      0.75, avgdl, scores)
            return scores

        fast_scores = run_fast_bm25()
        assert fast_scores.tolist() == pure_scores.tolist(), \
            "backend results differ"
        fast_bm25 = timeit(run_fast_bm25, args.repeat)
        row[2] = f"{fast_bm25 * 1000:9.1f}"
        row[3] = f"{pure_bm25 / fast_bm25:5.1f}x"
    rows.append(row)

    print(f"{'kernel':<18} {'pure (ms)':>9} {'cython (ms)':>11} {'speedup':>7}")
    for name, pure_ms, fast_ms, speedup in rows:
        print(f"{name:<18} {pure_ms:>9} {fast_ms:>11} {speedup:>7}")
    if _speedups is None:
        print("compiled backend not available; showing pure timings only")


if __name__ == "__main__":
    main()
