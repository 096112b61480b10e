from __future__ import annotations

import dataclasses
import random
from pathlib import Path

import pytest

from condensedly import index as index_mod
from condensedly import ner
from condensedly.docmodel import Document, build_document, parse_jats
from condensedly.fixtures import gen_random_document

FIXTURES = Path(__file__).parent / "fixtures"


def pytest_runtest_logreport(report):
    """One pass/fail line per acceptance criterion."""
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        verdict = "PASS" if report.passed else "FAIL"
        print(f"[acceptance] {verdict} {name}")


@pytest.fixture(scope="session")
def shared_article() -> Document:
    """The handcrafted article used by service, CLI and UI tests."""
    return parse_jats((FIXTURES / "articles" / "12345.xml").read_bytes())


@pytest.fixture(scope="session")
def core_lexicons() -> list[ner.Lexicon]:
    return ner.load_lexicon_dir(FIXTURES / "lexicons")


@pytest.fixture()
def scoring_doc() -> Document:
    """Two abstract sentences sharing keywords with one 4-token paragraph;
    the pr_isr arithmetic fixture."""
    return build_document(
        "d1",
        "Scoring fixture",
        ["Genes are expressed. Proteins are expressed."],
        [("Methods", ["gene genes protein expressed", "The protein folds."])],
    )


def numbered_random_corpus(seed: int, n_docs: int) -> list[Document]:
    """Random documents relabeled with numeric doc ids (usable as PMIDs)."""
    rng = random.Random(seed)
    docs = []
    for i in range(n_docs):
        doc = gen_random_document(i, rng)
        docs.append(dataclasses.replace(doc, doc_id=str(10000 + i)))
    return docs


@pytest.fixture(scope="session")
def small_corpus() -> list[Document]:
    return numbered_random_corpus(seed=7, n_docs=12)


@pytest.fixture(scope="session")
def small_index(small_corpus) -> index_mod.InvertedIndex:
    return index_mod.build_index(small_corpus)
