"""Seeded synthetic corpora for evaluation properties and randomized tests.

Two generators:

* correlation corpus: documents whose paragraphs each target one abstract
  sentence and include a level-dependent share of its keywords, so
  per-paragraph IO grows with the importance label. Marker words are
  letter+digit coinages that the stemmer leaves untouched, making keyword
  overlap exact by construction.
* random documents: messier articles (shared vocabulary, stopword glue,
  SNP ids, abbreviation definitions) for replay, search-oracle and NER
  span tests.

Everything is driven by random.Random(seed): same seed, same corpus.
"""

from __future__ import annotations

import random
from pathlib import Path

from .docmodel import Document, build_document, document_to_json
from .evaluation import ImportanceLabel

# Keywords included per importance level, out of 6 per abstract sentence.
LEVEL_KEYWORDS = {1: 1, 2: 2, 3: 3, 4: 4, 5: 6}
MARKERS_PER_SENTENCE = 6
SENTENCES_PER_DOC = 5

CONTENT_WORDS = [
    "gene", "protein", "cell", "tumor", "cancer", "pathway", "expression",
    "mutation", "receptor", "kinase", "signaling", "binding", "domain",
    "sequence", "analysis", "patient", "treatment", "therapy", "clinical",
    "trial", "growth", "factor", "inhibitor", "target", "dose", "response",
    "survival", "risk", "association", "variant", "allele", "genome",
    "transcription", "regulation", "apoptosis", "proliferation", "migration",
    "invasion", "metastasis", "biomarker", "diagnosis", "prognosis",
    "cohort", "sample", "tissue", "serum", "plasma", "antibody", "immune",
    "inflammation", "infection", "virus", "species", "model", "mouse",
    "human", "assay", "method", "cluster", "network",
]

GLUE_WORDS = ["the", "of", "in", "with", "for", "and", "was", "were", "a"]

SECTION_TITLES = ["Background", "Methods", "Results", "Discussion"]


def _marker(doc_num: int, sentence: int, k: int) -> str:
    return f"t{doc_num}s{sentence}k{k}"


def gen_correlation_document(doc_num: int, rng: random.Random) -> tuple[Document, list[ImportanceLabel]]:
    """One document plus labels for every paragraph."""
    markers = [
        [_marker(doc_num, t, k) for k in range(MARKERS_PER_SENTENCE)]
        for t in range(SENTENCES_PER_DOC)
    ]
    abstract_sentences = []
    for t in range(SENTENCES_PER_DOC):
        words = markers[t][:]
        sentence = " ".join(words)
        abstract_sentences.append(sentence[0].upper() + sentence[1:] + ".")
    abstract = " ".join(abstract_sentences)

    # Two sections, five paragraphs each; levels cycle so every level
    # appears, with rng shuffling the assignment.
    levels = [1, 2, 3, 4, 5] * 2
    rng.shuffle(levels)
    paragraphs_per_section = 5
    section_specs = []
    labels: list[ImportanceLabel] = []
    para_index = 0
    for s in range(2):
        texts = []
        for _ in range(paragraphs_per_section):
            level = levels[para_index]
            target = rng.randrange(SENTENCES_PER_DOC)
            included = markers[target][: LEVEL_KEYWORDS[level]]
            fillers = [f"fill{doc_num}x{para_index}n{j}" for j in range(3)]
            words = included + fillers
            rng.shuffle(words)
            text = " ".join(words)
            texts.append(text[0].upper() + text[1:] + ".")
            labels.append(
                ImportanceLabel(f"SYN{doc_num:04d}",
                                f"{s}:{len(texts) - 1}", level)
            )
            para_index += 1
        section_specs.append((SECTION_TITLES[s], texts))
    doc = build_document(
        f"SYN{doc_num:04d}",
        f"Synthetic correlation article {doc_num}",
        [abstract],
        section_specs,
    )
    return doc, labels


def gen_correlation_corpus(seed: int, n_docs: int = 20) -> tuple[list[Document], list[ImportanceLabel]]:
    rng = random.Random(seed)
    docs: list[Document] = []
    labels: list[ImportanceLabel] = []
    for doc_num in range(n_docs):
        doc, doc_labels = gen_correlation_document(doc_num, rng)
        docs.append(doc)
        labels.extend(doc_labels)
    return docs, labels


def _random_sentence(rng: random.Random, vocab: list[str],
                     n_words: int) -> str:
    words = []
    for _ in range(n_words):
        if rng.random() < 0.3:
            words.append(rng.choice(GLUE_WORDS))
        else:
            words.append(rng.choice(vocab))
    sentence = " ".join(words)
    return sentence[0].upper() + sentence[1:] + "."


def gen_random_document(doc_num: int, rng: random.Random) -> Document:
    """A randomized article sharing vocabulary between abstract and body,
    with occasional SNP ids and abbreviation definitions."""
    vocab = rng.sample(CONTENT_WORDS, 25)
    n_sentences = rng.randint(2, 5)
    abstract_parts = []
    for _ in range(n_sentences):
        if rng.random() < 0.08:
            abstract_parts.append("It is so.")  # all-stopword sentence
        else:
            abstract_parts.append(_random_sentence(rng, vocab, rng.randint(3, 8)))
    abstract = " ".join(abstract_parts)

    section_specs = []
    n_sections = rng.randint(1, 4)
    for s in range(n_sections):
        n_paragraphs = rng.randint(1, 4)
        texts = []
        for _ in range(n_paragraphs):
            sentences = [
                _random_sentence(rng, vocab, rng.randint(4, 12))
                for _ in range(rng.randint(1, 3))
            ]
            if rng.random() < 0.25:
                sentences.append(f"Variant rs{rng.randint(1, 99999)} was genotyped.")
            if rng.random() < 0.2:
                long_words = [rng.choice(vocab), rng.choice(vocab)]
                short = "".join(w[0] for w in long_words).upper()
                sentences.append(
                    f"We measured {long_words[0]} {long_words[1]} ({short}) levels."
                )
            texts.append(" ".join(sentences))
        section_specs.append((SECTION_TITLES[s % len(SECTION_TITLES)], texts))
    return build_document(
        f"RND{doc_num:05d}",
        _random_sentence(rng, vocab, rng.randint(4, 8)).rstrip("."),
        [abstract],
        section_specs,
    )


def gen_random_corpus(seed: int, n_docs: int) -> list[Document]:
    rng = random.Random(seed)
    return [gen_random_document(i, rng) for i in range(n_docs)]


DEMO_LEXICON_ROWS = [
    ("Gene", "GENE:TP53", "p53"),
    ("Gene", "GENE:TP53", "TP53"),
    ("Gene", "GENE:KINASE", "kinase"),
    ("Gene", "GENE:RECEPTOR", "receptor"),
    ("Chemical", "CHEM:SERUM", "serum"),
    ("Chemical", "CHEM:PLASMA", "plasma"),
    ("Disease", "DIS:CANCER", "cancer"),
    ("Disease", "DIS:TUMOR", "tumor"),
    ("Disease", "DIS:INFLAMMATION", "inflammation"),
    ("Drug", "DRUG:INHIBITOR", "inhibitor"),
    ("Species", "SPEC:MOUSE", "mouse"),
    ("Species", "SPEC:HUMAN", "human"),
    ("Species", "SPEC:VIRUS", "virus"),
    ("MeSH", "MESH:APOPTOSIS", "apoptosis"),
    ("MeSH", "MESH:BIOMARKER", "biomarker"),
]


def write_fixture_tree(out_dir: str | Path, seed: int, n_docs: int = 20) -> int:
    """Write corpus/*.json, labels.tsv and lexicons/demo.tsv; returns the
    number of documents written."""
    out = Path(out_dir)
    corpus_dir = out / "corpus"
    corpus_dir.mkdir(parents=True, exist_ok=True)
    docs, labels = gen_correlation_corpus(seed, n_docs)
    for doc in docs:
        (corpus_dir / f"{doc.doc_id}.json").write_text(
            document_to_json(doc), encoding="utf-8")
    label_lines = [
        f"{label.doc_id}\t{label.paragraph_id}\t{label.level}"
        for label in labels
    ]
    (out / "labels.tsv").write_text("\n".join(label_lines) + "\n",
                                    encoding="utf-8")
    lexicon_dir = out / "lexicons"
    lexicon_dir.mkdir(exist_ok=True)
    lexicon_lines = ["\t".join(row) for row in DEMO_LEXICON_ROWS]
    (lexicon_dir / "demo.tsv").write_text("\n".join(lexicon_lines) + "\n",
                                          encoding="utf-8")
    return len(docs)
