"""Parser contracts: JATS subset, text fallback, canonical serialization."""

import pytest

from condensedly.docmodel import (
    build_document,
    document_from_json,
    document_to_json,
    parse_jats,
    parse_txt,
)
from condensedly.errors import EmptyBody, MalformedXml, MissingAbstract
from condensedly.textproc import extract_keywords

MINIMAL = b"""<article>
  <front><article-meta>
    <article-id pub-id-type="pmid">77</article-id>
    <title-group><article-title>Minimal</article-title></title-group>
    <abstract><p>Genes act. Proteins fold.</p></abstract>
  </article-meta></front>
  <body>
    <sec><title>Methods</title>
      <p>First paragraph on genes.</p>
      <p>Second paragraph on proteins.</p>
    </sec>
  </body>
</article>"""

NESTED = b"""<article>
  <front><article-meta>
    <abstract><p>One sentence only.</p></abstract>
  </article-meta></front>
  <body>
    <sec><title>Results</title>
      <p>Top-level result text.</p>
      <sec><title>Subanalysis</title><p>Nested analysis text.</p></sec>
    </sec>
  </body>
</article>"""


class TestParseJats:
    def test_minimal_counts(self):
        doc = parse_jats(MINIMAL)
        assert doc.doc_id == "77"
        assert doc.title == "Minimal"
        assert len(doc.abstract_sentences) == 2
        assert len(doc.sections) == 1
        assert len(doc.sections[0].paragraphs) == 2

    def test_missing_abstract(self):
        xml = b"<article><front/><body><sec><p>x y z.</p></sec></body></article>"
        with pytest.raises(MissingAbstract):
            parse_jats(xml)

    def test_nested_sections_flattened(self):
        doc = parse_jats(NESTED)
        titles = [s.title for s in doc.sections]
        assert titles == ["Results", "Results / Subanalysis"]

    def test_malformed(self):
        with pytest.raises(MalformedXml):
            parse_jats(b"<article><unclosed>")
        with pytest.raises(MalformedXml):
            parse_jats(b"<notanarticle/>")

    def test_empty_body(self):
        xml = b"""<article><front><article-meta>
          <abstract><p>Words here now.</p></abstract>
        </article-meta></front><body/></article>"""
        with pytest.raises(EmptyBody):
            parse_jats(xml)

    def test_captions_and_reflists_excluded(self):
        xml = b"""<article>
          <front><article-meta><abstract><p>Abstract text here.</p></abstract>
          </article-meta></front>
          <body><sec><title>S</title>
            <p>Kept paragraph text.</p>
            <fig><caption><p>CAPTIONWORD must vanish.</p></caption></fig>
            <table-wrap><caption><p>TABLEWORD gone.</p></caption></table-wrap>
          </sec></body>
          <back><ref-list><ref><mixed-citation>REFWORD</mixed-citation></ref></ref-list></back>
        </article>"""
        doc = parse_jats(xml)
        text = " ".join(p.text for p in doc.all_paragraphs())
        assert "CAPTIONWORD" not in text
        assert "TABLEWORD" not in text
        assert "REFWORD" not in text

    def test_math_placeholder(self):
        xml = b"""<article>
          <front><article-meta><abstract><p>Abstract text here.</p></abstract>
          </article-meta></front>
          <body><sec><p>Energy equals <inline-formula>E=mc^2</inline-formula> as shown.</p></sec></body>
        </article>"""
        doc = parse_jats(xml)
        assert "[formula]" in doc.all_paragraphs()[0].text
        assert "mc" not in doc.all_paragraphs()[0].text

    def test_fallback_id_from_content_hash(self):
        xml = MINIMAL.replace(b'<article-id pub-id-type="pmid">77</article-id>', b"")
        doc_a = parse_jats(xml)
        doc_b = parse_jats(xml)
        assert doc_a.doc_id and doc_a.doc_id == doc_b.doc_id
        assert parse_jats(xml, fallback_id="myfile").doc_id == "myfile"

    def test_determinism(self):
        assert document_to_json(parse_jats(MINIMAL)) == \
            document_to_json(parse_jats(MINIMAL))

    def test_document_order_with_trailing_paragraph(self):
        xml = b"""<article>
          <front><article-meta><abstract><p>Abstract text here.</p></abstract>
          </article-meta></front>
          <body>
            <sec><title>A</title><p>Inside section.</p></sec>
            <p>After the section.</p>
          </body></article>"""
        doc = parse_jats(xml)
        assert [s.title for s in doc.sections] == ["A", ""]
        assert doc.sections[1].paragraphs[0].text == "After the section."


class TestParseTxt:
    def test_blocks(self):
        text = ("# My title\n\nAbstract one. Abstract two.\n\n"
                "## Methods\nBody paragraph here.\n\nUntitled block text.")
        doc = parse_txt(text, "file1")
        assert doc.doc_id == "file1"
        assert doc.title == "My title"
        assert len(doc.abstract_sentences) == 2
        assert [s.title for s in doc.sections] == ["Methods", ""]

    def test_empty_raises(self):
        with pytest.raises(MissingAbstract):
            parse_txt("", "x")

    def test_abstract_only_raises_empty_body(self):
        with pytest.raises(EmptyBody):
            parse_txt("Only an abstract here.", "x")


class TestInvariants:
    def test_paragraph_keywords_match_pipeline(self):
        doc = parse_jats(MINIMAL)
        for p in doc.all_paragraphs():
            assert p.keywords == extract_keywords(p.text)
        for s in doc.abstract_sentences:
            assert s.keywords == extract_keywords(s.text)

    def test_abstract_indexes_contiguous(self):
        doc = parse_jats(MINIMAL)
        assert [s.index for s in doc.abstract_sentences] == \
            list(range(len(doc.abstract_sentences)))

    def test_paragraph_ids_unique_and_ordered(self):
        doc = parse_jats(NESTED)
        ids = [p.paragraph_id for p in doc.all_paragraphs()]
        assert len(ids) == len(set(ids))
        for sec in doc.sections:
            for i, p in enumerate(sec.paragraphs):
                assert p.paragraph_id == f"{sec.section_id}:{i}"

    def test_json_roundtrip(self):
        doc = parse_jats(MINIMAL)
        again = document_from_json(document_to_json(doc))
        assert again == doc
        assert document_to_json(again) == document_to_json(doc)

    def test_build_document_rejects_empty_docid(self):
        with pytest.raises(ValueError):
            build_document("", "t", ["Some words."], [("s", ["Body words."])])
