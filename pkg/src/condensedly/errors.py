"""Exception hierarchy shared by all condensedly modules."""


class CondensedlyError(Exception):
    """Base class; user-facing commands map these to exit code 1."""


# --- document parsing ---

class MalformedXml(CondensedlyError):
    pass


class MissingAbstract(CondensedlyError):
    pass


class EmptyBody(CondensedlyError):
    pass


# --- ranking ---

class KeywordNotInAbstract(CondensedlyError):
    pass


class EmptyParagraph(CondensedlyError):
    pass


class EmptySection(CondensedlyError):
    pass


# --- index ---

class DuplicateDocId(CondensedlyError):
    pass


class QuerySyntaxError(CondensedlyError):
    pass


class PureNegationError(QuerySyntaxError):
    """Query whose result would require complementing the whole corpus."""


class IndexIoError(CondensedlyError):
    pass


class FormatVersionMismatch(CondensedlyError):
    pass


class ChecksumMismatch(CondensedlyError):
    pass


# --- evaluation ---

class EmptyReference(CondensedlyError):
    pass


class UnknownParagraph(CondensedlyError):
    pass


class EmptyLabels(CondensedlyError):
    pass
