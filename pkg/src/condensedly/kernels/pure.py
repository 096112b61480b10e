"""Pure-Python kernels, semantically identical to the compiled ones.

These are the reference implementations: the compiled backend must return
bit-identical results (same match order, same float operation order).
"""

from __future__ import annotations

import bisect

from .automaton import Automaton, fold_codepoints


def ac_scan(automaton: Automaton, text: str) -> list[tuple[int, int]]:
    """All pattern occurrences as (start, pattern_id), in scan order."""
    codes = fold_codepoints(text)
    trans_offsets = automaton.trans_offsets
    trans_chars = automaton.trans_chars
    trans_targets = automaton.trans_targets
    fail = automaton.fail
    out_offsets = automaton.out_offsets
    out_patterns = automaton.out_patterns
    lengths = automaton.pattern_lengths

    def step(state: int, code: int) -> int:
        while True:
            lo = int(trans_offsets[state])
            hi = int(trans_offsets[state + 1])
            pos = bisect.bisect_left(trans_chars, code, lo, hi)
            if pos < hi and trans_chars[pos] == code:
                return int(trans_targets[pos])
            if state == 0:
                return 0
            state = int(fail[state])

    matches: list[tuple[int, int]] = []
    state = 0
    for i, code in enumerate(codes.tolist()):
        state = step(state, code)
        for k in range(int(out_offsets[state]), int(out_offsets[state + 1])):
            pid = int(out_patterns[k])
            matches.append((i + 1 - int(lengths[pid]), pid))
    return matches


def bm25_accumulate(doc_indices, tfs, doc_lengths, idf: float, k1: float,
                    b: float, avgdl: float, scores) -> None:
    """Add one term's BM25 contributions into the per-document scores."""
    for i in range(len(doc_indices)):
        d = doc_indices[i]
        tf = float(tfs[i])
        dl = float(doc_lengths[d])
        scores[d] += idf * (tf * (k1 + 1.0)) / (tf + k1 * (1.0 - b + b * dl / avgdl))
