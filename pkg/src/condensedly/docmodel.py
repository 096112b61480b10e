"""Article model and parsers (JATS-subset XML and a plain-text fallback).

A parsed document is immutable: ordered abstract sentences with their
keyword sets, and ordered sections of ordered paragraphs carrying token
spans and keywords. Nested XML sections are flattened in document order
with titles joined by " / ", because the section scoring downstream is
defined over flat sections.
"""

from __future__ import annotations

import hashlib
import json
import re
import xml.etree.ElementTree as ET
from dataclasses import dataclass

from .errors import EmptyBody, MalformedXml, MissingAbstract
from .jsonutil import canonical_dumps
from .textproc import Token, extract_keywords, segment_sentences, tokenize


@dataclass(frozen=True)
class AbstractSentence:
    index: int
    text: str
    keywords: frozenset[str]


@dataclass(frozen=True)
class Paragraph:
    paragraph_id: str
    text: str
    tokens: tuple[Token, ...]
    keywords: frozenset[str]


@dataclass(frozen=True)
class Section:
    section_id: int
    title: str
    paragraphs: tuple[Paragraph, ...]


@dataclass(frozen=True)
class Document:
    doc_id: str
    title: str
    abstract_sentences: tuple[AbstractSentence, ...]
    sections: tuple[Section, ...]

    def paragraph_by_id(self, paragraph_id: str) -> Paragraph | None:
        for section in self.sections:
            for paragraph in section.paragraphs:
                if paragraph.paragraph_id == paragraph_id:
                    return paragraph
        return None

    def all_paragraphs(self) -> list[Paragraph]:
        return [p for s in self.sections for p in s.paragraphs]


_WS_RE = re.compile(r"\s+")


def _normalize_ws(text: str) -> str:
    return _WS_RE.sub(" ", text).strip()


def build_document(
    doc_id: str,
    title: str,
    abstract_paragraphs: list[str],
    section_specs: list[tuple[str, list[str]]],
) -> Document:
    """Assemble a Document from raw texts, running the full text pipeline."""
    if not doc_id:
        raise ValueError("doc_id must be non-empty")
    sentences = []
    for block in abstract_paragraphs:
        for sent in segment_sentences(_normalize_ws(block)):
            sentences.append(
                AbstractSentence(len(sentences), sent, extract_keywords(sent))
            )
    if not sentences:
        raise MissingAbstract(f"{doc_id}: no abstract sentences")

    sections = []
    for sec_title, para_texts in section_specs:
        paragraphs = []
        for text in para_texts:
            text = _normalize_ws(text)
            if not text:
                continue
            pid = f"{len(sections)}:{len(paragraphs)}"
            paragraphs.append(
                Paragraph(pid, text, tokenize(text), extract_keywords(text))
            )
        if paragraphs:
            sections.append(
                Section(len(sections), _normalize_ws(sec_title), tuple(paragraphs))
            )
    if not sections:
        raise EmptyBody(f"{doc_id}: no body paragraphs")
    return Document(doc_id, _normalize_ws(title), tuple(sentences), tuple(sections))


# --- JATS-subset XML parsing ---

# Subtrees that contribute no body text.
_SKIP_TAGS = {"fig", "table-wrap", "table", "caption", "ref-list", "fn-group",
              "supplementary-material", "graphic", "media"}
# Math is replaced by a placeholder token rather than parsed.
_MATH_TAGS = {"math", "inline-formula", "disp-formula", "tex-math",
              "alternatives"}


def _local(tag) -> str:
    if not isinstance(tag, str):
        return ""
    return tag.rpartition("}")[2]


def _element_text(element: ET.Element) -> str:
    parts: list[str] = []

    def walk(el: ET.Element) -> None:
        tag = _local(el.tag)
        if tag in _SKIP_TAGS:
            return
        if tag in _MATH_TAGS:
            parts.append(" [formula] ")
            return
        if el.text:
            parts.append(el.text)
        for child in el:
            walk(child)
            if child.tail:
                parts.append(child.tail)

    walk(element)
    return _normalize_ws("".join(parts))


def _collect_sections(
    element: ET.Element, title_path: str, out: list[tuple[str, list[str]]]
) -> None:
    """Flatten the section tree in document order. Runs of direct
    paragraphs become one section titled by the current path; nested
    sections are emitted at their position with titles joined by " / ".
    Unknown wrapper elements are descended into transparently."""
    pending: list[str] = []

    def flush() -> None:
        texts = [t for t in pending if t]
        if texts:
            out.append((title_path, texts))
        pending.clear()

    def scan(el: ET.Element) -> None:
        for child in el:
            tag = _local(child.tag)
            if tag == "p":
                pending.append(_element_text(child))
            elif tag == "sec":
                flush()
                sub_title = ""
                for sub_child in child:
                    if _local(sub_child.tag) == "title":
                        sub_title = _element_text(sub_child)
                        break
                joined = f"{title_path} / {sub_title}" \
                    if title_path and sub_title else (sub_title or title_path)
                _collect_sections(child, joined, out)
            elif tag == "title" or tag in _SKIP_TAGS or tag in _MATH_TAGS:
                continue
            else:
                scan(child)

    scan(element)
    flush()


def _find_first(root: ET.Element, tag: str) -> ET.Element | None:
    for el in root.iter():
        if _local(el.tag) == tag:
            return el
    return None


def parse_jats(xml_bytes: bytes, fallback_id: str | None = None) -> Document:
    """Parse a JATS-style article into a Document.

    Figure/table captions and reference lists are excluded; nested
    sections are flattened; abstract paragraphs are sentence-split.
    Raises MalformedXml, MissingAbstract or EmptyBody.
    """
    try:
        root = ET.fromstring(xml_bytes)
    except ET.ParseError as exc:
        raise MalformedXml(str(exc)) from exc
    if _local(root.tag) != "article":
        raise MalformedXml(f"root element is <{_local(root.tag)}>, not <article>")

    front = _find_first(root, "front")
    scope = front if front is not None else root

    doc_id = None
    for el in scope.iter():
        if _local(el.tag) == "article-id" and el.get("pub-id-type") == "pmid":
            doc_id = (el.text or "").strip() or None
            break
    if doc_id is None:
        doc_id = fallback_id or hashlib.sha1(xml_bytes).hexdigest()[:12]

    title_el = _find_first(scope, "article-title")
    title = _element_text(title_el) if title_el is not None else ""

    abstract_el = None
    for el in scope.iter():
        if _local(el.tag) == "abstract":
            abstract_el = el
            break
    if abstract_el is None:
        raise MissingAbstract(f"{doc_id}: no abstract element")
    abstract_paragraphs = [
        t for t in _iter_abstract_paragraphs(abstract_el) if t
    ]
    if not abstract_paragraphs:
        raise MissingAbstract(f"{doc_id}: abstract has no text")

    body = _find_first(root, "body")
    if body is None:
        raise EmptyBody(f"{doc_id}: no body element")
    section_specs: list[tuple[str, list[str]]] = []
    _collect_sections(body, "", section_specs)
    section_specs = [(t, [p for p in ps if p]) for t, ps in section_specs]
    section_specs = [(t, ps) for t, ps in section_specs if ps]
    if not section_specs:
        raise EmptyBody(f"{doc_id}: no body paragraphs")

    return build_document(doc_id, title, abstract_paragraphs, section_specs)


def _iter_abstract_paragraphs(abstract_el: ET.Element) -> list[str]:
    """All paragraph texts under the abstract, including structured
    abstracts (sec/p); falls back to the element's own text."""
    texts: list[str] = []

    def scan(el: ET.Element) -> None:
        for child in el:
            tag = _local(child.tag)
            if tag == "p":
                texts.append(_element_text(child))
            elif tag in _SKIP_TAGS or tag in _MATH_TAGS or tag == "title":
                continue
            else:
                scan(child)

    scan(abstract_el)
    if not texts:
        own = _element_text(abstract_el)
        if own:
            texts.append(own)
    return texts


# --- plain-text fallback format ---

def parse_txt(text: str, doc_id: str) -> Document:
    """Fallback format: blank-line-separated blocks. First block is the
    abstract; each later block is a one-paragraph section with an optional
    "## title" header line. An optional leading "# title" line names the
    document."""
    blocks = [b.strip() for b in re.split(r"\n\s*\n", text) if b.strip()]
    title = ""
    if blocks and blocks[0].startswith("# ") and "\n" not in blocks[0]:
        title = blocks[0][2:].strip()
        blocks = blocks[1:]
    if not blocks:
        raise MissingAbstract(f"{doc_id}: empty file")
    abstract = blocks[0]
    sections: list[tuple[str, list[str]]] = []
    for block in blocks[1:]:
        sec_title = ""
        if block.startswith("## "):
            first, _, rest = block.partition("\n")
            sec_title = first[3:].strip()
            block = rest.strip()
        if block:
            sections.append((sec_title, [block]))
    return build_document(doc_id, title, [abstract], sections)


# --- canonical serialization ---

def document_to_dict(doc: Document) -> dict:
    return {
        "doc_id": doc.doc_id,
        "title": doc.title,
        "abstract_sentences": [
            {"index": s.index, "text": s.text, "keywords": sorted(s.keywords)}
            for s in doc.abstract_sentences
        ],
        "sections": [
            {
                "section_id": sec.section_id,
                "title": sec.title,
                "paragraphs": [
                    {
                        "paragraph_id": p.paragraph_id,
                        "text": p.text,
                        "tokens": [
                            {"text": t.text, "start": t.start, "end": t.end}
                            for t in p.tokens
                        ],
                        "keywords": sorted(p.keywords),
                    }
                    for p in sec.paragraphs
                ],
            }
            for sec in doc.sections
        ],
    }


def document_to_json(doc: Document) -> str:
    """Canonical JSON: UTF-8, keys sorted, stable across runs."""
    return canonical_dumps(document_to_dict(doc))


def document_from_dict(data: dict) -> Document:
    sentences = tuple(
        AbstractSentence(s["index"], s["text"], frozenset(s["keywords"]))
        for s in data["abstract_sentences"]
    )
    sections = tuple(
        Section(
            sec["section_id"],
            sec["title"],
            tuple(
                Paragraph(
                    p["paragraph_id"],
                    p["text"],
                    tuple(Token(t["text"], t["start"], t["end"])
                          for t in p["tokens"]),
                    frozenset(p["keywords"]),
                )
                for p in sec["paragraphs"]
            ),
        )
        for sec in data["sections"]
    )
    return Document(data["doc_id"], data["title"], sentences, sections)


def document_from_json(text: str) -> Document:
    return document_from_dict(json.loads(text))
