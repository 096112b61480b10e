"""HTTP API over an immutable corpus snapshot.

The snapshot (documents, index, condensed texts, annotations) is built
once at startup; request handlers only read it, so identical requests
return byte-identical bodies and any level of request concurrency is
safe. All payloads are canonical JSON (sorted keys, 6-decimal reals).
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI
from fastapi.responses import FileResponse, Response
from starlette.requests import Request

from . import index as index_mod
from . import ner, ranking
from .docmodel import Document, document_from_json
from .errors import CondensedlyError, QuerySyntaxError
from .jsonutil import canonical_bytes


@dataclass
class CorpusSnapshot:
    documents: dict[str, Document]
    search_index: index_mod.InvertedIndex
    condensed: dict[str, ranking.CondensedText]
    annotations: dict[str, ner.DocumentAnnotations]
    frequencies: dict[str, list]


def build_snapshot(documents: list[Document],
                   search_index: index_mod.InvertedIndex,
                   lexicons: list[ner.Lexicon]) -> CorpusSnapshot:
    doc_map = {d.doc_id: d for d in documents}
    if search_index.doc_count != len(doc_map):
        raise CondensedlyError(
            f"index has {search_index.doc_count} documents, corpus has "
            f"{len(doc_map)}")
    for doc_id in doc_map:
        if search_index.doc_index(doc_id) is None:
            raise CondensedlyError(f"document {doc_id} missing from index")
    condensed = {d.doc_id: ranking.condense(d) for d in documents}
    annotations = {d.doc_id: ner.annotate(d, lexicons) for d in documents}
    frequencies = {
        doc_id: ner.entity_frequencies(ann)
        for doc_id, ann in annotations.items()
    }
    return CorpusSnapshot(doc_map, search_index, condensed, annotations,
                          frequencies)


def load_snapshot(corpus_dir: str | Path, index_path: str | Path,
                  lexicon_dir: str | Path | None) -> CorpusSnapshot:
    documents = [
        document_from_json(path.read_text(encoding="utf-8"))
        for path in sorted(Path(corpus_dir).glob("*.json"))
    ]
    if not documents:
        raise CondensedlyError(f"no documents in {corpus_dir}")
    search_index = index_mod.load_index(index_path)
    lexicons = ner.load_lexicon_dir(lexicon_dir) if lexicon_dir else []
    return build_snapshot(documents, search_index, lexicons)


def _json_response(payload, status_code: int = 200) -> Response:
    return Response(content=canonical_bytes(payload), status_code=status_code,
                    media_type="application/json")


def _error(status_code: int, code: str, message: str) -> Response:
    return _json_response({"code": code, "message": message}, status_code)


def _article_payload(snapshot: CorpusSnapshot, doc: Document) -> dict:
    ann = snapshot.annotations[doc.doc_id]
    return {
        "doc_id": doc.doc_id,
        "title": doc.title,
        "abstract": [
            {
                "index": s.index,
                "text": s.text,
                "entities": ner.entities_to_dicts(ann.abstract[s.index]),
            }
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
                        "entities": ner.entities_to_dicts(
                            ann.paragraphs[p.paragraph_id]),
                    }
                    for p in sec.paragraphs
                ],
            }
            for sec in doc.sections
        ],
    }


def create_app(snapshot: CorpusSnapshot,
               static_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="condensedly", docs_url=None, redoc_url=None)

    @app.get("/api/health")
    def health() -> Response:
        return _json_response(
            {"status": "ok", "doc_count": snapshot.search_index.doc_count})

    @app.get("/api/search")
    def search(q: str = "", limit: str = "20") -> Response:
        try:
            limit_value = int(limit)
        except ValueError:
            return _error(400, "bad_query", f"limit must be an integer: {limit!r}")
        try:
            hits = index_mod.search(q, snapshot.search_index, limit_value)
        except QuerySyntaxError as exc:
            return _error(400, "bad_query", str(exc))
        return _json_response([
            {"doc_id": h.doc_id, "score": h.score, "title": h.title}
            for h in hits
        ])

    @app.get("/api/articles/{doc_id}")
    def article(doc_id: str) -> Response:
        doc = snapshot.documents.get(doc_id)
        if doc is None:
            return _error(404, "not_found", f"no article {doc_id}")
        return _json_response(_article_payload(snapshot, doc))

    @app.get("/api/articles/{doc_id}/condensed")
    def condensed(doc_id: str, qs: str | None = None) -> Response:
        doc = snapshot.documents.get(doc_id)
        if doc is None:
            return _error(404, "not_found", f"no article {doc_id}")
        ct = snapshot.condensed[doc_id]
        if qs is None:
            return _json_response(ranking.condensed_to_dict(ct))
        try:
            qs = int(qs)
        except ValueError:
            return _error(400, "bad_query", f"qs must be an integer: {qs!r}")
        if qs < 0 or qs >= len(doc.abstract_sentences):
            return _error(404, "not_found",
                          f"abstract sentence {qs} out of range")
        payload = ranking.condensed_to_dict(ct)
        matching = [e for e in payload["entries"] if e["qs_index"] == qs]
        return _json_response({
            "doc_id": doc_id,
            "qs_index": qs,
            "entry": matching[0] if matching else None,
        })

    @app.get("/api/articles/{doc_id}/entities")
    def entities(doc_id: str) -> Response:
        if doc_id not in snapshot.documents:
            return _error(404, "not_found", f"no article {doc_id}")
        return _json_response([
            {"class": cls.value, "key": key, "count": count}
            for cls, key, count in snapshot.frequencies[doc_id]
        ])

    static_path = Path(static_dir) if static_dir else None
    if static_path and static_path.is_dir():

        @app.get("/{path:path}")
        def static_files(path: str, request: Request) -> Response:
            target = (static_path / path) if path else static_path / "index.html"
            target = target.resolve()
            if not str(target).startswith(str(static_path.resolve())):
                return _error(404, "not_found", "outside static root")
            if target.is_dir():
                target = target / "index.html"
            if not target.is_file():
                return _error(404, "not_found", path)
            return FileResponse(target)
    else:

        @app.get("/")
        def root() -> Response:
            return _json_response({
                "service": "condensedly",
                "endpoints": [
                    "/api/health",
                    "/api/search?q=...&limit=N",
                    "/api/articles/{doc_id}",
                    "/api/articles/{doc_id}/condensed?qs=K",
                    "/api/articles/{doc_id}/entities",
                ],
            })

    return app
