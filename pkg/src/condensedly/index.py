"""Inverted index with a Boolean query language and BM25 ranking.

Terms are keywords from the shared normalization pipeline, drawn from
title + abstract + body. Queries support AND/OR/NOT (uppercase only),
parentheses, implicit AND between adjacent terms, and pmid:<digits>
lookups. Matching documents are scored by BM25 (k1=1.2, b=0.75) summed
over the query's positive terms.

The on-disk format is little-endian: magic "CNDX", a u16 version, a
doc table, delta-encoded postings, and a trailing CRC32.
"""

from __future__ import annotations

import math
import re
import struct
import zlib
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .docmodel import Document
from .kernels import bm25_accumulate
from .errors import (
    ChecksumMismatch,
    DuplicateDocId,
    FormatVersionMismatch,
    IndexIoError,
    PureNegationError,
    QuerySyntaxError,
)
from .textproc import STOPWORDS, stem_token, tokenize

BM25_K1 = 1.2
BM25_B = 0.75

MAGIC = b"CNDX"
FORMAT_VERSION = 1


class InvertedIndex:
    """Immutable term -> postings map over a fixed document table."""

    def __init__(self, doc_ids: list[str], titles: list[str],
                 doc_lengths: list[int],
                 postings: dict[str, tuple[np.ndarray, np.ndarray]],
                 avg_doc_length: float):
        self.doc_ids = doc_ids  # sorted ascending; position = doc index
        self.titles = titles
        self.doc_lengths = np.asarray(doc_lengths, dtype=np.int64)
        self.postings = postings  # term -> (doc indices asc, tfs), int64
        self.avg_doc_length = avg_doc_length
        self._id_to_index = {d: i for i, d in enumerate(doc_ids)}

    @property
    def doc_count(self) -> int:
        return len(self.doc_ids)

    def term_count(self) -> int:
        return len(self.postings)

    def postings_list(self, term: str) -> list[tuple[str, int]]:
        """Postings as (doc_id, term_frequency), sorted by doc_id."""
        entry = self.postings.get(term)
        if entry is None:
            return []
        idxs, tfs = entry
        return [(self.doc_ids[i], int(tf)) for i, tf in zip(idxs, tfs)]

    def doc_index(self, doc_id: str) -> int | None:
        return self._id_to_index.get(doc_id)


def document_terms(doc: Document) -> list[str]:
    """Keyword-term occurrences for indexing: title + abstract + body."""
    terms: list[str] = []
    parts = [doc.title]
    parts.extend(s.text for s in doc.abstract_sentences)
    parts.extend(p.text for p in doc.all_paragraphs())
    for part in parts:
        for token in tokenize(part):
            if token.text in STOPWORDS:
                continue
            stemmed = stem_token(token.text)
            if stemmed and stemmed not in STOPWORDS:
                terms.append(stemmed)
    return terms


def build_index(docs: list[Document]) -> InvertedIndex:
    seen: set[str] = set()
    for doc in docs:
        if doc.doc_id in seen:
            raise DuplicateDocId(doc.doc_id)
        seen.add(doc.doc_id)
    ordered = sorted(docs, key=lambda d: d.doc_id)
    doc_ids = [d.doc_id for d in ordered]
    titles = [d.title for d in ordered]
    doc_lengths: list[int] = []
    term_docs: dict[str, dict[int, int]] = {}
    for i, doc in enumerate(ordered):
        terms = document_terms(doc)
        doc_lengths.append(len(terms))
        for term in terms:
            slots = term_docs.setdefault(term, {})
            slots[i] = slots.get(i, 0) + 1
    postings = {
        term: (
            np.asarray(sorted(slots), dtype=np.int64),
            np.asarray([slots[i] for i in sorted(slots)], dtype=np.int64),
        )
        for term, slots in term_docs.items()
    }
    avg = (sum(doc_lengths) / len(doc_lengths)) if doc_lengths else 0.0
    return InvertedIndex(doc_ids, titles, doc_lengths, postings, avg)


# --- query language ---

@dataclass(frozen=True)
class Term:
    stem: str | None  # None: a word the pipeline reduced to nothing


@dataclass(frozen=True)
class And:
    left: "QueryAst"
    right: "QueryAst"


@dataclass(frozen=True)
class Or:
    left: "QueryAst"
    right: "QueryAst"


@dataclass(frozen=True)
class Not:
    operand: "QueryAst"


@dataclass(frozen=True)
class Pmid:
    value: str


QueryAst = Term | And | Or | Not | Pmid

_PMID_RE = re.compile(r"^pmid:(\d+)$")
_QUERY_TOKEN_RE = re.compile(r"\(|\)|[^\s()]+")


def _normalize_query_word(word: str) -> list[str]:
    """Run one query word through the keyword pipeline; may yield several
    stems ("won't" -> won, t) or none (pure stopword)."""
    stems = []
    for token in tokenize(word):
        if token.text in STOPWORDS:
            continue
        stemmed = stem_token(token.text)
        if stemmed and stemmed not in STOPWORDS:
            stems.append(stemmed)
    return stems


def parse_query(q: str) -> QueryAst:
    """Parse the Boolean query grammar.

    Precedence: NOT > AND > OR; adjacency is implicit AND; operators are
    recognized uppercase only; terms are normalized by the keyword
    pipeline. Raises QuerySyntaxError for malformed input and
    PureNegationError for queries with no positive component.
    """
    if not q or not q.strip():
        raise QuerySyntaxError("empty query")
    tokens = _QUERY_TOKEN_RE.findall(q)
    pos = 0

    def peek() -> str | None:
        return tokens[pos] if pos < len(tokens) else None

    def advance() -> str:
        nonlocal pos
        token = tokens[pos]
        pos += 1
        return token

    def parse_or() -> QueryAst:
        node = parse_and()
        while peek() == "OR":
            advance()
            node = Or(node, parse_and())
        return node

    def parse_and() -> QueryAst:
        node = parse_unary()
        while True:
            nxt = peek()
            if nxt == "AND":
                advance()
                node = And(node, parse_unary())
            elif nxt is not None and nxt not in (")", "OR"):
                node = And(node, parse_unary())
            else:
                return node

    def parse_unary() -> QueryAst:
        nxt = peek()
        if nxt == "NOT":
            advance()
            return Not(parse_unary())
        return parse_atom()

    def parse_atom() -> QueryAst:
        nxt = peek()
        if nxt is None:
            raise QuerySyntaxError("dangling operator")
        if nxt == "(":
            advance()
            node = parse_or()
            if peek() != ")":
                raise QuerySyntaxError("unbalanced parentheses")
            advance()
            return node
        if nxt in (")", "AND", "OR"):
            raise QuerySyntaxError(f"unexpected {nxt!r}")
        word = advance()
        pmid = _PMID_RE.match(word.lower())
        if pmid:
            return Pmid(pmid.group(1))
        stems = _normalize_query_word(word)
        if not stems:
            return Term(None)
        node: QueryAst = Term(stems[0])
        for stem in stems[1:]:
            node = And(node, Term(stem))
        return node

    ast = parse_or()
    if pos != len(tokens):
        raise QuerySyntaxError("unbalanced parentheses")
    _check_executable(ast)
    return ast


def _check_executable(ast: QueryAst) -> None:
    """Not is only executable as set difference inside And; reject queries
    whose value would require complementing the corpus."""

    def walk(node: QueryAst) -> None:
        if isinstance(node, Not):
            raise PureNegationError("negation without a positive conjunct")
        if isinstance(node, And):
            left_neg = isinstance(node.left, Not)
            right_neg = isinstance(node.right, Not)
            if left_neg and right_neg:
                raise PureNegationError("negation without a positive conjunct")
            walk(node.left.operand if left_neg else node.left)
            walk(node.right.operand if right_neg else node.right)
        elif isinstance(node, Or):
            walk(node.left)
            walk(node.right)

    walk(ast)


@dataclass(frozen=True)
class SearchHit:
    doc_id: str
    score: float
    title: str


def _doc_set(ast: QueryAst, index: InvertedIndex) -> set[int]:
    if isinstance(ast, Term):
        entry = index.postings.get(ast.stem) if ast.stem is not None else None
        return set(entry[0].tolist()) if entry is not None else set()
    if isinstance(ast, Pmid):
        idx = index.doc_index(ast.value)
        return {idx} if idx is not None else set()
    if isinstance(ast, Or):
        return _doc_set(ast.left, index) | _doc_set(ast.right, index)
    if isinstance(ast, And):
        if isinstance(ast.left, Not):
            return _doc_set(ast.right, index) - _doc_set(ast.left.operand, index)
        if isinstance(ast.right, Not):
            return _doc_set(ast.left, index) - _doc_set(ast.right.operand, index)
        return _doc_set(ast.left, index) & _doc_set(ast.right, index)
    raise QuerySyntaxError(f"unexpected node {ast!r}")


def positive_terms(ast: QueryAst) -> list[str]:
    """Scoreable term stems, document order, negated subtrees excluded."""
    stems: list[str] = []

    def walk(node: QueryAst) -> None:
        if isinstance(node, Term):
            if node.stem is not None:
                stems.append(node.stem)
        elif isinstance(node, (And, Or)):
            walk(node.left)
            walk(node.right)
        # Not subtrees contribute no scoring terms.

    walk(ast)
    return stems


def execute(ast: QueryAst, index: InvertedIndex) -> list[SearchHit]:
    """Evaluate Boolean semantics, then rank survivors by summed BM25."""
    survivors = _doc_set(ast, index)
    if not survivors:
        return []
    scores = np.zeros(index.doc_count, dtype=np.float64)
    terms = positive_terms(ast)
    for term in dict.fromkeys(terms):  # each distinct term scored once
        entry = index.postings.get(term)
        if entry is None:
            continue
        idxs, tfs = entry
        df = len(idxs)
        idf = math.log(1.0 + (index.doc_count - df + 0.5) / (df + 0.5))
        bm25_accumulate(idxs, tfs, index.doc_lengths, idf, BM25_K1, BM25_B,
                        index.avg_doc_length, scores)
    if not terms:
        hits = [
            SearchHit(index.doc_ids[i], 1.0, index.titles[i])
            for i in survivors
        ]
    else:
        hits = [
            SearchHit(index.doc_ids[i], float(scores[i]), index.titles[i])
            for i in survivors
        ]
    hits.sort(key=lambda h: (-h.score, h.doc_id))
    return hits


def search(q: str, index: InvertedIndex, limit: int = 20) -> list[SearchHit]:
    return execute(parse_query(q), index)[:limit]


# --- persistence ---

def _pack_str(value: str) -> bytes:
    raw = value.encode("utf-8")
    return struct.pack("<I", len(raw)) + raw


class _Reader:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def take(self, n: int) -> bytes:
        if self.pos + n > len(self.data):
            raise ChecksumMismatch("truncated index file")
        chunk = self.data[self.pos:self.pos + n]
        self.pos += n
        return chunk

    def u16(self) -> int:
        return struct.unpack("<H", self.take(2))[0]

    def u32(self) -> int:
        return struct.unpack("<I", self.take(4))[0]

    def f64(self) -> float:
        return struct.unpack("<d", self.take(8))[0]

    def string(self) -> str:
        return self.take(self.u32()).decode("utf-8")


def save_index(index: InvertedIndex, path: str | Path) -> None:
    out = bytearray()
    out += MAGIC
    out += struct.pack("<H", FORMAT_VERSION)
    out += struct.pack("<I", index.doc_count)
    for i in range(index.doc_count):
        out += _pack_str(index.doc_ids[i])
        out += _pack_str(index.titles[i])
        out += struct.pack("<I", int(index.doc_lengths[i]))
    out += struct.pack("<d", index.avg_doc_length)
    out += struct.pack("<I", len(index.postings))
    for term in sorted(index.postings):
        idxs, tfs = index.postings[term]
        out += _pack_str(term)
        out += struct.pack("<I", len(idxs))
        prev = 0
        for idx, tf in zip(idxs.tolist(), tfs.tolist()):
            out += struct.pack("<II", idx - prev, tf)
            prev = idx
    out += struct.pack("<I", zlib.crc32(bytes(out)))
    try:
        Path(path).write_bytes(bytes(out))
    except OSError as exc:
        raise IndexIoError(str(exc)) from exc


def load_index(path: str | Path) -> InvertedIndex:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise IndexIoError(str(exc)) from exc
    if len(data) < 10:
        raise ChecksumMismatch("file too short")
    if data[:4] != MAGIC:
        raise FormatVersionMismatch("not a condensedly index file")
    version = struct.unpack("<H", data[4:6])[0]
    if version != FORMAT_VERSION:
        raise FormatVersionMismatch(f"unsupported version {version}")
    payload, stored = data[:-4], struct.unpack("<I", data[-4:])[0]
    if zlib.crc32(payload) != stored:
        raise ChecksumMismatch("CRC32 mismatch")
    reader = _Reader(payload)
    reader.take(6)  # magic + version
    doc_count = reader.u32()
    doc_ids, titles, doc_lengths = [], [], []
    for _ in range(doc_count):
        doc_ids.append(reader.string())
        titles.append(reader.string())
        doc_lengths.append(reader.u32())
    avg = reader.f64()
    term_count = reader.u32()
    postings: dict[str, tuple[np.ndarray, np.ndarray]] = {}
    for _ in range(term_count):
        term = reader.string()
        n = reader.u32()
        idxs = np.empty(n, dtype=np.int64)
        tfs = np.empty(n, dtype=np.int64)
        prev = 0
        for i in range(n):
            delta = reader.u32()
            tf = reader.u32()
            prev += delta
            idxs[i] = prev
            tfs[i] = tf
        postings[term] = (idxs, tfs)
    if reader.pos != len(payload):
        raise ChecksumMismatch("trailing bytes in index file")
    return InvertedIndex(doc_ids, titles, doc_lengths, postings, avg)
