"""Flattened Aho-Corasick automaton shared by both scan backends.

The automaton is built once per lexicon in plain Python (build time is
negligible next to scanning) and stored as flat numpy arrays so the
compiled kernel can walk it without touching Python objects. Transitions
per state are kept sorted by codepoint for binary search.

Patterns and text are matched on ASCII-lowercased codepoints; non-ASCII
characters compare verbatim.
"""

from __future__ import annotations

import numpy as np


def fold_codepoints(text: str) -> np.ndarray:
    """Codepoint array with ASCII A-Z lowered, dtype uint32."""
    arr = np.frombuffer(text.encode("utf-32-le"), dtype=np.uint32).copy()
    upper = (arr >= 65) & (arr <= 90)
    arr[upper] += 32
    return arr


class Automaton:
    """Immutable matcher over a fixed pattern list."""

    __slots__ = (
        "n_patterns", "pattern_lengths",
        "trans_offsets", "trans_chars", "trans_targets",
        "fail", "out_offsets", "out_patterns",
    )

    def __init__(self, patterns: list[str]):
        goto: list[dict[int, int]] = [{}]
        outputs: list[list[int]] = [[]]
        lengths = []
        for pid, pattern in enumerate(patterns):
            codes = fold_codepoints(pattern)
            lengths.append(len(codes))
            state = 0
            for code in codes:
                nxt = goto[state].get(int(code))
                if nxt is None:
                    nxt = len(goto)
                    goto[state][int(code)] = nxt
                    goto.append({})
                    outputs.append([])
                state = nxt
            outputs[state].append(pid)

        n_states = len(goto)
        fail = [0] * n_states
        queue = list(goto[0].values())
        head = 0
        while head < len(queue):
            state = queue[head]
            head += 1
            for code, nxt in goto[state].items():
                queue.append(nxt)
                f = fail[state]
                while f and code not in goto[f]:
                    f = fail[f]
                fail[nxt] = goto[f].get(code, 0)
                if fail[nxt] == nxt:
                    fail[nxt] = 0
                outputs[nxt].extend(outputs[fail[nxt]])

        trans_offsets = np.zeros(n_states + 1, dtype=np.int64)
        chars: list[int] = []
        targets: list[int] = []
        for state in range(n_states):
            items = sorted(goto[state].items())
            trans_offsets[state + 1] = trans_offsets[state] + len(items)
            chars.extend(c for c, _ in items)
            targets.extend(t for _, t in items)
        out_offsets = np.zeros(n_states + 1, dtype=np.int64)
        out_flat: list[int] = []
        for state in range(n_states):
            pats = sorted(outputs[state])
            out_offsets[state + 1] = out_offsets[state] + len(pats)
            out_flat.extend(pats)

        self.n_patterns = len(patterns)
        self.pattern_lengths = np.asarray(lengths, dtype=np.int64)
        self.trans_offsets = trans_offsets
        self.trans_chars = np.asarray(chars, dtype=np.uint32)
        self.trans_targets = np.asarray(targets, dtype=np.int64)
        self.fail = np.asarray(fail, dtype=np.int64)
        self.out_offsets = out_offsets
        self.out_patterns = np.asarray(out_flat, dtype=np.int64)
