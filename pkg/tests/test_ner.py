"""Entity matcher behavior: lexicons, SNP pattern, abbreviation pairing."""

import random

import pytest

from condensedly import ner
from condensedly.errors import CondensedlyError
from condensedly.fixtures import gen_random_document
from condensedly.ner import (
    AbbreviationPair,
    Entity,
    EntityClass,
    Lexicon,
    annotate,
    annotate_text,
    entity_frequencies,
    find_abbreviations,
    find_snps,
    match_lexicon,
)


def gene_lexicon(**entries):
    return Lexicon(EntityClass.GENE, {k: list(v) for k, v in entries.items()})


class TestMatchLexicon:
    def test_single_pattern(self):
        lex = gene_lexicon(**{"GENE:TP53": ["p53"]})
        entities = match_lexicon("The p53 pathway", [lex])
        assert entities == [Entity(EntityClass.GENE, "p53", 4, 7, "GENE:TP53")]

    def test_empty_lexicons(self):
        assert match_lexicon("any text at all", []) == []

    def test_longest_match_wins(self):
        lex = Lexicon(EntityClass.DISEASE, {
            "DIS:BC": ["breast cancer"], "DIS:C": ["cancer"],
        })
        entities = match_lexicon("breast cancer risk", [lex])
        assert [e.surface for e in entities] == ["breast cancer"]

    def test_word_boundaries(self):
        lex = gene_lexicon(**{"GENE:RAS": ["nras"]})
        assert match_lexicon("the nras gene", [lex])
        assert match_lexicon("the nras5 gene", [lex]) == []
        assert match_lexicon("xnras here", [lex]) == []

    def test_case_insensitive_long_synonyms(self):
        lex = gene_lexicon(**{"GENE:KIN": ["kinase"]})
        assert match_lexicon("KINASE Kinase kinase", [lex])

    def test_short_synonyms_case_sensitive(self):
        lex = gene_lexicon(**{"GENE:ABL": ["ABL"]})
        assert match_lexicon("the ABL gene", [lex])
        assert match_lexicon("the abl gene", [lex]) == []

    def test_cross_class_overlaps_kept(self):
        gene = gene_lexicon(**{"GENE:HS": ["shock protein"]})
        chem = Lexicon(EntityClass.CHEMICAL, {"CHEM:HSP": ["heat shock protein"]})
        entities = match_lexicon("heat shock protein levels", [gene, chem])
        assert {e.entity_class for e in entities} == \
            {EntityClass.GENE, EntityClass.CHEMICAL}

    def test_order_independent_of_lexicon_order(self):
        gene = gene_lexicon(**{"GENE:A": ["alpha protein"]})
        chem = Lexicon(EntityClass.CHEMICAL, {"CHEM:B": ["protein"]})
        text = "alpha protein assay"
        assert match_lexicon(text, [gene, chem]) == \
            match_lexicon(text, [chem, gene])

    def test_validation(self):
        with pytest.raises(CondensedlyError):
            Lexicon(EntityClass.GENE, {"X": []})
        with pytest.raises(CondensedlyError):
            Lexicon(EntityClass.GENE, {"X": ["..."]})
        with pytest.raises(CondensedlyError):
            Lexicon(EntityClass.GENE, {"X": ["the"]})
        with pytest.raises(CondensedlyError):
            Lexicon(EntityClass.SNP, {"X": ["rs1"]})


class TestFindSnps:
    def test_basic(self):
        entities = find_snps("variant rs334 was found")
        assert [(e.surface, e.start, e.end) for e in entities] == \
            [("rs334", 8, 13)]

    def test_leading_zero_rejected(self):
        assert find_snps("rs0123") == []

    def test_word_boundary(self):
        assert find_snps("Mrs. Smith and mrs334") == []
        assert find_snps("(rs42)") != []


class TestFindAbbreviations:
    def test_dna(self):
        pairs = find_abbreviations("deoxyribonucleic acid (DNA) is stable")
        assert pairs == [AbbreviationPair(
            "DNA", "deoxyribonucleic acid", (23, 26), (0, 21))]

    def test_non_abbreviation_parenthetical(self):
        assert find_abbreviations("(see Figure 1)") == []

    def test_hsp(self):
        pairs = find_abbreviations("heat shock protein (HSP)")
        assert len(pairs) == 1
        assert pairs[0].short == "HSP"
        assert pairs[0].long == "heat shock protein"

    def test_long_form_must_match(self):
        assert find_abbreviations("p53 (TP53 homolog) and rs334") == []

    def test_interior_digits(self):
        pairs = find_abbreviations("tumor protein 53 (TP53)")
        assert pairs and pairs[0].long == "tumor protein 53"

    def test_word_budget_enforced(self):
        # |SF|=2 allows min(2+5, 2*2)=4 words; the definition would need 5.
        assert find_abbreviations("a big warm cozy bed (AB)") == []
        assert find_abbreviations("a warm cozy bed (AB)") != []

    def test_stable_under_appended_text(self):
        base = "heat shock protein (HSP)"
        tail = " and then some completely unrelated trailing words"
        assert find_abbreviations(base) == find_abbreviations(base + tail)

    def test_spans_slice_source(self):
        text = "the heat shock protein (HSP) level"
        for pair in find_abbreviations(text):
            assert text[slice(*pair.short_span)] == pair.short
            assert text[slice(*pair.long_span)] == pair.long
            assert len(pair.short) <= len(pair.long)


class TestAnnotate:
    def test_composite(self):
        lex = [gene_lexicon(**{"GENE:TP53": ["p53"]})]
        entities = annotate_text("p53 (TP53 homolog) and rs334", lex)
        classes = [e.entity_class for e in entities]
        assert classes == [EntityClass.GENE, EntityClass.SNP]

    def test_abbreviation_added(self):
        lex = [gene_lexicon(**{"GENE:TP53": ["p53"]})]
        entities = annotate_text("tumor protein 53 (TP53) and rs334", lex)
        assert [e.entity_class for e in entities] == \
            [EntityClass.ABBREVIATION, EntityClass.SNP]
        abbrev = entities[0]
        assert abbrev.surface == "TP53"

    def test_no_hits(self):
        assert annotate_text("plain words only", []) == []

    def test_document_annotation_units(self, shared_article, core_lexicons):
        ann = annotate(shared_article, core_lexicons)
        assert len(ann.abstract) == len(shared_article.abstract_sentences)
        assert set(ann.paragraphs) == {
            p.paragraph_id for p in shared_article.all_paragraphs()
        }

    def test_surface_slices_valid_on_random_docs(self, core_lexicons):
        rng = random.Random(17)
        for i in range(40):
            doc = gen_random_document(i, rng)
            ann = annotate(doc, core_lexicons)
            units = [(s.text, ann.abstract[s.index])
                     for s in doc.abstract_sentences]
            units += [(p.text, ann.paragraphs[p.paragraph_id])
                      for p in doc.all_paragraphs()]
            for text, entities in units:
                for e in entities:
                    assert 0 <= e.start < e.end <= len(text)
                    assert text[e.start:e.end] == e.surface

    def test_no_within_class_overlap(self, core_lexicons):
        rng = random.Random(23)
        for i in range(30):
            doc = gen_random_document(50 + i, rng)
            ann = annotate(doc, core_lexicons)
            for entities in list(ann.abstract) + list(ann.paragraphs.values()):
                by_class = {}
                for e in entities:
                    by_class.setdefault(e.entity_class, []).append(e)
                for group in by_class.values():
                    group.sort(key=lambda e: e.start)
                    for a, b in zip(group, group[1:]):
                        assert a.end <= b.start


class TestEntityFrequencies:
    def test_counts_and_ties(self, shared_article, core_lexicons):
        freqs = entity_frequencies(annotate(shared_article, core_lexicons))
        assert freqs[0] == (EntityClass.GENE, "GENE:TP53", 3)
        assert freqs[1] == (EntityClass.MESH, "MESH:APOPTOSIS", 3)
        counts = [n for _, _, n in freqs]
        assert counts == sorted(counts, reverse=True)
        # ties sorted by key ascending
        tied = [(key, n) for _, key, n in freqs if n == 2]
        assert [k for k, _ in tied] == sorted(k for k, _ in tied)

    def test_empty(self):
        ann = ner.DocumentAnnotations("x", (), {})
        assert entity_frequencies(ann) == []


def test_load_lexicon_dir(core_lexicons):
    classes = {lex.entity_class for lex in core_lexicons}
    assert EntityClass.GENE in classes
    assert EntityClass.SNP not in classes


def test_entity_class_closed():
    assert {c.value for c in EntityClass} == {
        "Gene", "Chemical", "Disease", "Drug", "SNP", "Species", "MeSH",
        "Abbreviation",
    }
