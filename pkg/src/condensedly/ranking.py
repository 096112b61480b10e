"""Paragraph ranking and condensed-text construction.

Three scores drive selection, all derived from the shared keyword
pipeline:

* io_ratio: fraction of a query sentence's keywords found in a paragraph.
* pr_isr: sum over shared keywords of the paragraph's length-normalized
  stem frequency times ln(1 + m/sr), where m is the number of abstract
  sentences and sr(k) how many of them contain keyword k. Keywords shared
  by many abstract sentences are discounted.
* rss: section-level coverage (fraction of query keywords present
  anywhere in the section) times spread (fraction of the section's
  paragraphs sharing at least one query keyword).

Condensing picks, per abstract sentence, the best not-yet-used paragraph
from the best-scoring section, falling through to lower-ranked sections
when a section is exhausted. The global no-reuse rule plus fall-through
keeps a single section from dominating the output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .docmodel import AbstractSentence, Document, Paragraph, Section
from .errors import EmptyParagraph, EmptySection, KeywordNotInAbstract
from .jsonutil import canonical_dumps
from .textproc import stem_token


@dataclass(frozen=True)
class SentenceParagraphScore:
    qs_index: int
    paragraph_id: str
    io: float
    pr_isr: float


@dataclass(frozen=True)
class SectionScore:
    qs_index: int
    section_id: int
    coverage: float
    spread: float
    rss: float


@dataclass(frozen=True)
class CondensedEntry:
    qs_index: int
    section_id: int
    paragraph_id: str
    section_score: SectionScore
    paragraph_score: SentenceParagraphScore


@dataclass(frozen=True)
class CondensedText:
    doc_id: str
    entries: tuple[CondensedEntry, ...]
    rendered_paragraph_ids: tuple[str, ...]

    def entry_for(self, qs_index: int) -> CondensedEntry | None:
        for entry in self.entries:
            if entry.qs_index == qs_index:
                return entry
        return None


def io_ratio(qs: AbstractSentence, paragraph: Paragraph) -> float:
    """Keyword association ratio |K(qs) & K(p)| / |K(qs)|; 0 for empty K(qs)."""
    if not qs.keywords:
        return 0.0
    return len(qs.keywords & paragraph.keywords) / len(qs.keywords)


def sentence_frequency(keyword: str, abstract: list[AbstractSentence] | tuple) -> int:
    return sum(1 for s in abstract if keyword in s.keywords)


def isr(keyword: str, abstract: list[AbstractSentence] | tuple) -> float:
    """Inverse sentence relevance ln(1 + m/sr(k)); decreasing in sr."""
    sr = sentence_frequency(keyword, abstract)
    if sr == 0:
        raise KeywordNotInAbstract(keyword)
    return math.log(1.0 + len(abstract) / sr)


def pr_isr(
    qs: AbstractSentence,
    paragraph: Paragraph,
    abstract: list[AbstractSentence] | tuple,
) -> float:
    """Paragraph relevance-inverse sentence relevance for one (qs, p) pair."""
    if not paragraph.tokens:
        raise EmptyParagraph(paragraph.paragraph_id)
    shared = qs.keywords & paragraph.keywords
    if not shared:
        return 0.0
    counts: dict[str, int] = {}
    for token in paragraph.tokens:
        stemmed = stem_token(token.text)
        if stemmed in shared:
            counts[stemmed] = counts.get(stemmed, 0) + 1
    total = len(paragraph.tokens)
    score = 0.0
    for keyword in sorted(shared):
        score += (counts.get(keyword, 0) / total) * isr(keyword, abstract)
    return score


def rss(qs: AbstractSentence, section: Section) -> SectionScore:
    """Relevant section score = coverage x spread."""
    if not section.paragraphs:
        raise EmptySection(str(section.section_id))
    if not qs.keywords:
        return SectionScore(qs.index, section.section_id, 0.0, 0.0, 0.0)
    union: set[str] = set()
    touched = 0
    for paragraph in section.paragraphs:
        overlap = qs.keywords & paragraph.keywords
        union |= overlap
        if overlap:
            touched += 1
    coverage = len(union) / len(qs.keywords)
    spread = touched / len(section.paragraphs)
    return SectionScore(qs.index, section.section_id, coverage, spread,
                        coverage * spread)


def condense(doc: Document) -> CondensedText:
    """Build the condensed text: one paragraph per eligible abstract sentence.

    Per sentence, sections are visited in descending rss (ties broken by
    document order); within the first section that still has an unused
    paragraph with positive pr_isr, the argmax paragraph is selected and
    globally marked used. Sentences with no signal contribute nothing.
    """
    abstract = doc.abstract_sentences
    used: set[str] = set()
    entries: list[CondensedEntry] = []
    for qs in abstract:
        section_scores = [rss(qs, section) for section in doc.sections]
        order = sorted(
            (s for s in section_scores if s.rss > 0.0),
            key=lambda s: (-s.rss, s.section_id),
        )
        for sec_score in order:
            section = doc.sections[sec_score.section_id]
            best: Paragraph | None = None
            best_score = 0.0
            for paragraph in section.paragraphs:
                if paragraph.paragraph_id in used:
                    continue
                score = pr_isr(qs, paragraph, abstract)
                if best is None or score > best_score:
                    best, best_score = paragraph, score
            if best is None or best_score == 0.0:
                continue
            used.add(best.paragraph_id)
            entries.append(
                CondensedEntry(
                    qs.index,
                    section.section_id,
                    best.paragraph_id,
                    sec_score,
                    SentenceParagraphScore(
                        qs.index, best.paragraph_id,
                        io_ratio(qs, best), best_score,
                    ),
                )
            )
            break
    rendered = tuple(
        p.paragraph_id for p in doc.all_paragraphs() if p.paragraph_id in used
    )
    return CondensedText(doc.doc_id, tuple(entries), rendered)


def condensed_to_dict(ct: CondensedText) -> dict:
    return {
        "doc_id": ct.doc_id,
        "entries": [
            {
                "qs_index": e.qs_index,
                "section_id": e.section_id,
                "paragraph_id": e.paragraph_id,
                "rss": {
                    "coverage": e.section_score.coverage,
                    "spread": e.section_score.spread,
                    "rss": e.section_score.rss,
                },
                "scores": {
                    "io": e.paragraph_score.io,
                    "pr_isr": e.paragraph_score.pr_isr,
                },
            }
            for e in ct.entries
        ],
        "rendered_paragraph_ids": list(ct.rendered_paragraph_ids),
    }


def condensed_to_json(ct: CondensedText) -> str:
    """Canonical JSON, keys sorted, reals at 6 decimals."""
    return canonical_dumps(condensed_to_dict(ct))
