"""Tokenization, sentence segmentation and keyword extraction.

Every module that compares texts goes through this pipeline, so it is
deliberately dependency-free and deterministic: a fixed embedded stopword
list, a rule-based sentence splitter with a closed abbreviation list, and
the Porter stemmer.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import porter

# 139 common English function words. Frozen: keyword sets must be
# reproducible across machines, so no external stopword source is used.
STOPWORDS = frozenset("""
a about above after again against al all also although among an and any are
as at be because been being below between both but by can could did do does
doing down during each either et few for from further had has have having he
her here hers herself him himself his how however i if in into is it its
itself may me might more most must my myself neither no nor not of off on
once only or other our ours ourselves out over own per shall she should
since so some such than that the their theirs them themselves then there
therefore these they this those through thus to too under unless until up
upon us very via was we were what when where whether which while who whom
whose why will with within without would you your yours yourself yourselves
""".split())

# Tokens are runs of letters/digits, optionally joined by internal hyphens,
# so "p53-mediated" and "rs334" survive as single tokens.
_TOKEN_RE = re.compile(r"[^\W_]+(?:-[^\W_]+)*", re.UNICODE)

_SENTENCE_PUNCT = ".!?"

# Closed list of abbreviations that never end a sentence. Lowercased,
# including the trailing period; multi-word entries are matched as suffixes.
PROTECTED_ABBREVIATIONS = (
    "et al.", "al.", "fig.", "figs.", "vs.", "i.e.", "e.g.", "spp.", "sp.",
    "cf.", "ca.", "resp.", "approx.", "no.",
)


@dataclass(frozen=True)
class Token:
    """A lowercased token with its span in the original text."""

    text: str
    start: int
    end: int


def tokenize(text: str) -> tuple[Token, ...]:
    """Split on whitespace/punctuation, keeping intra-token hyphens."""
    return tuple(
        Token(m.group().lower(), m.start(), m.end())
        for m in _TOKEN_RE.finditer(text)
    )


def _is_protected_end(text: str, dot_index: int) -> bool:
    """True when text[dot_index] terminates a protected abbreviation."""
    if text[dot_index] != ".":
        return False
    prefix = text[: dot_index + 1].lower()
    for abbrev in PROTECTED_ABBREVIATIONS:
        if prefix.endswith(abbrev):
            before = dot_index - len(abbrev)
            if before < 0 or not text[before].isalnum():
                return True
    # Single capital letter followed by a period ("E. coli", initials).
    if dot_index >= 1 and text[dot_index - 1].isupper():
        if dot_index == 1 or not text[dot_index - 2].isalpha():
            return True
    return False


def segment_sentences(text: str) -> list[str]:
    """Split text into sentences at ./!/? before whitespace + capital/digit.

    Protected abbreviations and single-capital initials never split. The
    concatenation of the result equals the input modulo whitespace.
    """
    breaks = []
    n = len(text)
    for i, ch in enumerate(text):
        if ch not in _SENTENCE_PUNCT:
            continue
        j = i + 1
        while j < n and text[j].isspace():
            j += 1
        if j == i + 1 or j >= n:
            continue  # no whitespace after, or end of text
        nxt = text[j]
        if not (nxt.isupper() or nxt.isdigit()):
            continue
        if ch == "." and _is_protected_end(text, i):
            continue
        breaks.append(i + 1)
    sentences = []
    prev = 0
    for b in breaks + [n]:
        piece = text[prev:b].strip()
        if piece:
            sentences.append(piece)
        prev = b
    return sentences


def extract_keywords(text: str) -> frozenset[str]:
    """Keyword set: tokenize, drop stopwords, Porter-stem, deduplicate.

    Stems that collapse onto a stopword ("willing" -> "will") are dropped
    too; a keyword is never a stopword.
    """
    stems = set()
    for token in tokenize(text):
        if token.text in STOPWORDS:
            continue
        stemmed = porter.stem(token.text)
        if stemmed and stemmed not in STOPWORDS:
            stems.add(stemmed)
    return frozenset(stems)


def stem_token(surface: str) -> str:
    """Stem one already-lowercased token surface."""
    return porter.stem(surface)
