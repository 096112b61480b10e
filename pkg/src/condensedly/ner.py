"""Bio-entity recognition over eight classes.

Six classes (gene, chemical, disease, drug, species, MeSH term) come from
TSV lexicons matched with a shared multi-pattern scanner; SNP mentions
come from an rs-number pattern; abbreviations come from parenthesized
short forms paired with a preceding long-form definition by right-to-left
character matching.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .docmodel import Document
from .errors import CondensedlyError
from .kernels import Automaton, ac_scan
from .textproc import STOPWORDS


class EntityClass(str, Enum):
    GENE = "Gene"
    CHEMICAL = "Chemical"
    DISEASE = "Disease"
    DRUG = "Drug"
    SNP = "SNP"
    SPECIES = "Species"
    MESH = "MeSH"
    ABBREVIATION = "Abbreviation"


LEXICON_CLASSES = (
    EntityClass.GENE, EntityClass.CHEMICAL, EntityClass.DISEASE,
    EntityClass.DRUG, EntityClass.SPECIES, EntityClass.MESH,
)

# Synonyms this short match case-sensitively to limit false positives.
CASE_SENSITIVE_MAX_LEN = 3


@dataclass(frozen=True)
class Entity:
    entity_class: EntityClass
    surface: str
    start: int
    end: int
    normalized: str | None = None

    @property
    def key(self) -> str:
        return self.normalized if self.normalized is not None else self.surface


@dataclass(frozen=True)
class AbbreviationPair:
    short: str
    long: str
    short_span: tuple[int, int]
    long_span: tuple[int, int]


_PUNCT_ONLY_RE = re.compile(r"^[^\w]+$")


class Lexicon:
    """One entity class's dictionary: normalized id -> surface synonyms."""

    def __init__(self, entity_class: EntityClass,
                 entries: dict[str, list[str]]):
        if entity_class not in LEXICON_CLASSES:
            raise CondensedlyError(
                f"{entity_class.value} entities are not lexicon-based")
        for normalized, synonyms in entries.items():
            if not synonyms:
                raise CondensedlyError(f"{normalized}: no synonyms")
            for syn in synonyms:
                if not syn or _PUNCT_ONLY_RE.match(syn):
                    raise CondensedlyError(
                        f"{normalized}: invalid synonym {syn!r}")
                if syn.lower() in STOPWORDS:
                    raise CondensedlyError(
                        f"{normalized}: synonym {syn!r} is a stopword")
        self.entity_class = entity_class
        self.entries = {k: list(v) for k, v in sorted(entries.items())}
        # pattern id -> (normalized id, exact surface); patterns may repeat
        # across ids, resolution prefers the smallest normalized id.
        self._patterns: list[str] = []
        self._pattern_meta: list[tuple[str, str]] = []
        for normalized, synonyms in self.entries.items():
            for syn in sorted(set(synonyms)):
                self._patterns.append(syn)
                self._pattern_meta.append((normalized, syn))
        self._automaton = Automaton(self._patterns)

    def scan(self, text: str) -> list[Entity]:
        """Word-bounded matches with per-class overlap resolution:
        longest match wins, then leftmost."""
        candidates: list[tuple[int, int, str]] = []
        seen: set[tuple[int, int, str]] = set()
        for start, pid in ac_scan(self._automaton, text):
            normalized, synonym = self._pattern_meta[pid]
            end = start + len(synonym)
            if not _word_bounded(text, start, end):
                continue
            if len(synonym) <= CASE_SENSITIVE_MAX_LEN \
                    and text[start:end] != synonym:
                continue
            key = (start, end, normalized)
            if key not in seen:
                seen.add(key)
                candidates.append((start, end, normalized))
        # Longest first, then leftmost, then smallest id; keep non-overlapping.
        candidates.sort(key=lambda c: (-(c[1] - c[0]), c[0], c[2]))
        chosen: list[tuple[int, int, str]] = []
        for start, end, normalized in candidates:
            if any(start < e and s < end for s, e, _ in chosen):
                continue
            chosen.append((start, end, normalized))
        chosen.sort()
        return [
            Entity(self.entity_class, text[s:e], s, e, normalized=n)
            for s, e, n in chosen
        ]


def _word_bounded(text: str, start: int, end: int) -> bool:
    if start > 0 and text[start - 1].isalnum():
        return False
    if end < len(text) and text[end].isalnum():
        return False
    return True


def load_lexicon_file(path: str | Path) -> list[Lexicon]:
    """Read TSV rows (class, normalized_id, synonym) into per-class lexicons."""
    by_class: dict[EntityClass, dict[str, list[str]]] = {}
    path = Path(path)
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = line.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise CondensedlyError(f"{path}:{lineno}: expected 3 TSV fields")
        class_name, normalized, synonym = parts
        try:
            entity_class = EntityClass(class_name)
        except ValueError:
            raise CondensedlyError(
                f"{path}:{lineno}: unknown entity class {class_name!r}") from None
        by_class.setdefault(entity_class, {}).setdefault(normalized, []).append(synonym)
    return [Lexicon(cls, entries) for cls, entries in sorted(
        by_class.items(), key=lambda item: item[0].value)]


def load_lexicon_dir(directory: str | Path) -> list[Lexicon]:
    lexicons: list[Lexicon] = []
    for path in sorted(Path(directory).glob("*.tsv")):
        lexicons.extend(load_lexicon_file(path))
    return merge_lexicons(lexicons)


def merge_lexicons(lexicons: list[Lexicon]) -> list[Lexicon]:
    """Collapse multiple lexicons of the same class into one."""
    by_class: dict[EntityClass, dict[str, list[str]]] = {}
    for lexicon in lexicons:
        target = by_class.setdefault(lexicon.entity_class, {})
        for normalized, synonyms in lexicon.entries.items():
            target.setdefault(normalized, []).extend(synonyms)
    return [Lexicon(cls, entries) for cls, entries in sorted(
        by_class.items(), key=lambda item: item[0].value)]


def match_lexicon(text: str, lexicons: list[Lexicon]) -> list[Entity]:
    """Entities from all lexicons; classes may overlap each other."""
    entities: list[Entity] = []
    for lexicon in lexicons:
        entities.extend(lexicon.scan(text))
    entities.sort(key=_entity_order)
    return entities


def _entity_order(entity: Entity):
    return (entity.start, entity.end, entity.entity_class.value,
            entity.key)


_SNP_RE = re.compile(r"rs[1-9][0-9]*")


def find_snps(text: str) -> list[Entity]:
    """Word-bounded dbSNP identifiers (rs followed by digits, no leading 0)."""
    return [
        Entity(EntityClass.SNP, m.group(), m.start(), m.end())
        for m in _SNP_RE.finditer(text)
        if _word_bounded(text, m.start(), m.end())
    ]


_PAREN_RE = re.compile(r"\(([^()]*)\)")


def find_abbreviations(text: str) -> list[AbbreviationPair]:
    """Pair parenthesized short forms with preceding long-form definitions.

    A candidate short form has 2-10 characters, at most 2 words, and at
    least one letter. Its characters are matched right-to-left against the
    words before the parenthesis; the first character must match at a word
    start. The long form may span at most min(|SF|+5, |SF|*2) words, |SF|
    counted in alphanumeric characters.
    """
    pairs: list[AbbreviationPair] = []
    for m in _PAREN_RE.finditer(text):
        short = m.group(1).strip()
        if not _valid_short_form(short):
            continue
        short_start = m.start(1) + m.group(1).index(short)
        alnum_count = sum(1 for c in short if c.isalnum())
        if alnum_count == 0:
            continue
        max_words = min(alnum_count + 5, alnum_count * 2)
        clause_start = _clause_start(text, m.start(), max_words)
        clause = text[clause_start:m.start()].rstrip()
        long_form = _match_long_form(short, clause)
        if long_form is None:
            continue
        long_start = clause_start + len(clause) - len(long_form)
        if len(long_form.split()) > max_words or len(long_form) < len(short):
            continue
        pairs.append(
            AbbreviationPair(
                short,
                long_form,
                (short_start, short_start + len(short)),
                (long_start, long_start + len(long_form)),
            )
        )
    return pairs


def _valid_short_form(short: str) -> bool:
    return (
        2 <= len(short) <= 10
        and len(short.split()) <= 2
        and any(c.isalpha() for c in short)
    )


def _clause_start(text: str, paren_start: int, max_words: int) -> int:
    """Start offset of the last `max_words` whitespace-separated words
    before the parenthesis."""
    i = paren_start
    words = 0
    while i > 0 and words < max_words:
        while i > 0 and text[i - 1].isspace():
            i -= 1
        start = i
        while i > 0 and not text[i - 1].isspace():
            i -= 1
        if start == i:
            break
        words += 1
    return i


def _match_long_form(short: str, clause: str) -> str | None:
    """Right-to-left character matching; returns the matched long form."""
    s = len(short) - 1
    l = len(clause) - 1
    while s >= 0:
        c = short[s].lower()
        if not c.isalnum():
            s -= 1
            continue
        while l >= 0 and (
            clause[l].lower() != c
            or (s == 0 and l > 0 and clause[l - 1].isalnum())
        ):
            l -= 1
        if l < 0:
            return None
        s -= 1
        l -= 1
    start = clause.rfind(" ", 0, l + 1) + 1
    long_form = clause[start:]
    return long_form or None


def annotate_text(text: str, lexicons: list[Lexicon]) -> list[Entity]:
    """All entities in one text unit: lexicon + SNP + abbreviation matches."""
    entities = match_lexicon(text, lexicons)
    entities.extend(find_snps(text))
    for pair in find_abbreviations(text):
        start, end = pair.short_span
        entities.append(
            Entity(EntityClass.ABBREVIATION, pair.short, start, end)
        )
    entities.sort(key=_entity_order)
    return entities


@dataclass(frozen=True)
class DocumentAnnotations:
    doc_id: str
    abstract: tuple[tuple[Entity, ...], ...]  # one tuple per sentence
    paragraphs: dict[str, tuple[Entity, ...]]  # paragraph_id -> entities


def annotate(doc: Document, lexicons: list[Lexicon]) -> DocumentAnnotations:
    """Annotate every abstract sentence and paragraph; offsets are
    relative to each text unit."""
    abstract = tuple(
        tuple(annotate_text(s.text, lexicons)) for s in doc.abstract_sentences
    )
    paragraphs = {
        p.paragraph_id: tuple(annotate_text(p.text, lexicons))
        for p in doc.all_paragraphs()
    }
    return DocumentAnnotations(doc.doc_id, abstract, paragraphs)


def entity_frequencies(
    annotations: DocumentAnnotations,
) -> list[tuple[EntityClass, str, int]]:
    """Per-(class, key) counts across the article, most frequent first,
    ties broken by key then class name."""
    counts: Counter[tuple[EntityClass, str]] = Counter()
    for entities in annotations.abstract:
        for entity in entities:
            counts[(entity.entity_class, entity.key)] += 1
    for entities in annotations.paragraphs.values():
        for entity in entities:
            counts[(entity.entity_class, entity.key)] += 1
    return sorted(
        ((cls, key, n) for (cls, key), n in counts.items()),
        key=lambda item: (-item[2], item[1], item[0].value),
    )


def entities_to_dicts(entities) -> list[dict]:
    return [
        {
            "class": e.entity_class.value,
            "surface": e.surface,
            "start": e.start,
            "end": e.end,
            "normalized": e.normalized,
        }
        for e in entities
    ]
