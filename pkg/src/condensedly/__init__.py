"""Condense scientific articles by ranking full-text paragraphs against
abstract sentences; includes search, bio-entity annotation, evaluation
tooling and an HTTP reader service."""

__version__ = "0.1.0"
