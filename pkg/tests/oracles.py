"""Independent reference implementations used to check the real ones.

The Boolean-retrieval oracle evaluates a query per document by direct
predicate recursion over the document's own term multiset; it shares no
code with the inverted index or its postings machinery.
"""

from __future__ import annotations

import random

from condensedly.docmodel import Document
from condensedly.index import And, Not, Or, Pmid, QueryAst, Term
from condensedly.index import document_terms


def doc_term_sets(docs: list[Document]) -> dict[str, set[str]]:
    return {d.doc_id: set(document_terms(d)) for d in docs}


def _matches(ast: QueryAst, doc_id: str, terms: set[str]) -> bool:
    if isinstance(ast, Term):
        return ast.stem is not None and ast.stem in terms
    if isinstance(ast, Pmid):
        return doc_id == ast.value
    if isinstance(ast, And):
        if isinstance(ast.left, Not):
            return (_matches(ast.right, doc_id, terms)
                    and not _matches(ast.left.operand, doc_id, terms))
        if isinstance(ast.right, Not):
            return (_matches(ast.left, doc_id, terms)
                    and not _matches(ast.right.operand, doc_id, terms))
        return (_matches(ast.left, doc_id, terms)
                and _matches(ast.right, doc_id, terms))
    if isinstance(ast, Or):
        return (_matches(ast.left, doc_id, terms)
                or _matches(ast.right, doc_id, terms))
    raise AssertionError(f"unexpected node {ast!r}")


def linear_scan(ast: QueryAst, docs: list[Document],
                term_sets: dict[str, set[str]] | None = None) -> set[str]:
    """Doc ids matching the query, by exhaustive per-document evaluation."""
    if term_sets is None:
        term_sets = doc_term_sets(docs)
    return {
        d.doc_id for d in docs if _matches(ast, d.doc_id, term_sets[d.doc_id])
    }


def random_query(rng: random.Random, vocabulary: list[str],
                 doc_ids: list[str], depth: int = 0) -> str:
    """A random well-formed query string (never purely negative)."""
    if depth >= 3 or rng.random() < 0.4:
        if rng.random() < 0.05 and doc_ids:
            return f"pmid:{rng.choice(doc_ids)}"
        if rng.random() < 0.1:
            return f"zz{rng.randrange(1000)}unknown"
        return rng.choice(vocabulary)
    shape = rng.random()
    left = random_query(rng, vocabulary, doc_ids, depth + 1)
    right = random_query(rng, vocabulary, doc_ids, depth + 1)
    if shape < 0.35:
        return f"({left} AND {right})"
    if shape < 0.6:
        return f"({left} OR {right})"
    if shape < 0.8:
        return f"({left} AND NOT {right})"
    return f"({left} {right})"  # implicit AND
