"""ROUGE-N scoring and the IO-vs-importance correlation harness.

ROUGE uses plain lowercase word tokens (no stemming, no stopword removal)
so the metric stays independent of the keyword pipeline. The correlation
harness buckets per-paragraph IO by importance level and computes
Spearman rank correlation; rank arithmetic runs on exact rationals so a
strictly monotone pairing yields exactly 1.0.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, sqrt

from .docmodel import Document
from .errors import EmptyLabels, EmptyReference, UnknownParagraph
from .ranking import io_ratio
from .textproc import tokenize


@dataclass(frozen=True)
class RougeScore:
    recall: float
    precision: float
    f1: float


@dataclass(frozen=True)
class ImportanceLabel:
    doc_id: str
    paragraph_id: str
    level: int  # 1 (trivial) .. 5 (important)


@dataclass(frozen=True)
class CorrelationReport:
    level_means: dict[int, float]  # only levels with >= 1 paragraph
    spearman_rho: float
    n_paragraphs: int
    degenerate: bool  # zero variance in levels or IO values


def _ngrams(text: str, n: int) -> Counter:
    words = [t.text for t in tokenize(text)]
    return Counter(
        tuple(words[i:i + n]) for i in range(len(words) - n + 1)
    )


def rouge_n(candidate: str, reference: str, n: int = 1) -> RougeScore:
    """Clipped n-gram overlap recall/precision/F1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ref_grams = _ngrams(reference, n)
    ref_total = sum(ref_grams.values())
    if ref_total == 0:
        raise EmptyReference(f"reference has fewer than {n} tokens")
    cand_grams = _ngrams(candidate, n)
    cand_total = sum(cand_grams.values())
    overlap = sum(
        min(count, ref_grams[gram])
        for gram, count in cand_grams.items()
        if gram in ref_grams
    )
    recall = overlap / ref_total
    precision = overlap / cand_total if cand_total else 0.0
    if recall + precision == 0.0:
        f1 = 0.0
    else:
        f1 = 2.0 * recall * precision / (recall + precision)
    return RougeScore(recall, precision, f1)


def rouge_condensed_vs_abstract(doc: Document, ct, n: int = 1,
                                reference: str | None = None) -> RougeScore:
    """ROUGE of the rendered condensed text against the abstract (or a
    caller-supplied reference)."""
    by_id = {p.paragraph_id: p.text for p in doc.all_paragraphs()}
    candidate = " ".join(by_id[pid] for pid in ct.rendered_paragraph_ids)
    if reference is None:
        reference = " ".join(s.text for s in doc.abstract_sentences)
    return rouge_n(candidate, reference, n)


def _average_ranks(values: list) -> list[Fraction]:
    """Ranks 1..n with ties getting the average of their positions."""
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks: list[Fraction] = [Fraction(0)] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        avg = Fraction(i + 1 + j + 1, 2)
        for k in range(i, j + 1):
            ranks[order[k]] = avg
        i = j + 1
    return ranks


def spearman_rho(xs: list, ys: list) -> tuple[float, bool]:
    """Spearman correlation with average-rank ties, computed exactly.

    Returns (rho, degenerate); degenerate pairings (zero variance on
    either side) report rho = 0.
    """
    if len(xs) != len(ys) or not xs:
        raise ValueError("need two equal-length non-empty sequences")
    rx = _average_ranks(xs)
    ry = _average_ranks(ys)
    n = len(xs)
    mean_x = sum(rx, Fraction(0)) / n
    mean_y = sum(ry, Fraction(0)) / n
    cov = sum((a - mean_x) * (b - mean_y) for a, b in zip(rx, ry))
    var_x = sum((a - mean_x) ** 2 for a in rx)
    var_y = sum((b - mean_y) ** 2 for b in ry)
    if var_x == 0 or var_y == 0:
        return 0.0, True
    denom_sq = var_x * var_y
    # Exact when the square root is rational (always true for rho = +/-1).
    num, den = denom_sq.numerator, denom_sq.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return float(cov / Fraction(rn, rd)), False
    return float(cov) / sqrt(float(denom_sq)), False


def io_by_level(labels: list[ImportanceLabel],
                corpus: list[Document]) -> CorrelationReport:
    """Bucket per-paragraph IO (max over abstract sentences) by importance
    level and correlate level with IO."""
    if not labels:
        raise EmptyLabels("no importance labels")
    docs = {d.doc_id: d for d in corpus}
    seen: set[tuple[str, str]] = set()
    levels: list[int] = []
    ios: list[float] = []
    by_level: dict[int, list[float]] = {}
    for label in labels:
        if not 1 <= label.level <= 5:
            raise ValueError(f"level {label.level} outside 1..5")
        key = (label.doc_id, label.paragraph_id)
        if key in seen:
            raise ValueError(f"duplicate label for {key}")
        seen.add(key)
        doc = docs.get(label.doc_id)
        if doc is None:
            raise UnknownParagraph(f"unknown document {label.doc_id}")
        paragraph = doc.paragraph_by_id(label.paragraph_id)
        if paragraph is None:
            raise UnknownParagraph(
                f"{label.doc_id}: unknown paragraph {label.paragraph_id}")
        io = max(io_ratio(qs, paragraph) for qs in doc.abstract_sentences)
        levels.append(label.level)
        ios.append(io)
        by_level.setdefault(label.level, []).append(io)
    rho, degenerate = spearman_rho(levels, ios)
    means = {
        level: sum(values) / len(values)
        for level, values in sorted(by_level.items())
    }
    return CorrelationReport(means, rho, len(labels), degenerate)


def report_to_dict(report: CorrelationReport) -> dict:
    return {
        "level_means": {str(k): v for k, v in report.level_means.items()},
        "spearman_rho": report.spearman_rho,
        "n_paragraphs": report.n_paragraphs,
        "degenerate": report.degenerate,
    }


def read_labels_tsv(text: str) -> list[ImportanceLabel]:
    """Parse a labels file: doc_id <tab> paragraph_id <tab> level."""
    labels = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected 3 TSV fields")
        labels.append(ImportanceLabel(parts[0], parts[1], int(parts[2])))
    return labels
