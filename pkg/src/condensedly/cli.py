"""Command-line driver: ingest, index, condense, eval, rouge, serve,
gen-fixtures, stopwords.

Exit codes: 0 success, 1 user error (bad input, missing files), 2
internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import socket
import sys
from pathlib import Path

from . import docmodel, evaluation, fixtures, ranking
from . import index as index_mod
from .errors import CondensedlyError
from .jsonutil import canonical_dumps
from .textproc import STOPWORDS

EXIT_OK = 0
EXIT_USER = 1
EXIT_INTERNAL = 2


class CliError(Exception):
    """User-facing failure; message printed to stderr, exit 1."""


def _load_corpus(corpus_dir: Path) -> list[docmodel.Document]:
    if not corpus_dir.is_dir():
        raise CliError(f"corpus directory not found: {corpus_dir}")
    docs = []
    for path in sorted(corpus_dir.glob("*.json")):
        docs.append(docmodel.document_from_json(path.read_text(encoding="utf-8")))
    if not docs:
        raise CliError(f"no documents in {corpus_dir}")
    return docs


def cmd_ingest(args) -> int:
    input_dir = Path(args.input_dir)
    out_dir = Path(args.corpus_dir)
    if not input_dir.is_dir():
        raise CliError(f"input directory not found: {input_dir}")
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = sorted(list(input_dir.glob("*.xml")) + list(input_dir.glob("*.txt")))
    parsed = 0
    for path in paths:
        try:
            if path.suffix == ".xml":
                doc = docmodel.parse_jats(path.read_bytes(), fallback_id=path.stem)
            else:
                doc = docmodel.parse_txt(path.read_text(encoding="utf-8"),
                                         doc_id=path.stem)
        except CondensedlyError as exc:
            print(f"warning: {path.name}: {exc}", file=sys.stderr)
            continue
        (out_dir / f"{doc.doc_id}.json").write_text(
            docmodel.document_to_json(doc), encoding="utf-8")
        parsed += 1
    if parsed == 0:
        raise CliError(f"no documents parsed from {input_dir}")
    print(parsed)
    return EXIT_OK


def cmd_index(args) -> int:
    docs = []
    corpus_dir = Path(args.corpus_dir)
    if not corpus_dir.is_dir():
        raise CliError(f"corpus directory not found: {corpus_dir}")
    for path in sorted(corpus_dir.glob("*.json")):
        docs.append(docmodel.document_from_json(path.read_text(encoding="utf-8")))
    idx = index_mod.build_index(docs)
    index_mod.save_index(idx, args.index_file)
    print(f"doc_count={idx.doc_count} term_count={idx.term_count()}")
    return EXIT_OK


def _resolve_document(ref: str, corpus_dir: str | None) -> docmodel.Document:
    path = Path(ref)
    if path.is_file():
        if path.suffix == ".xml":
            return docmodel.parse_jats(path.read_bytes(), fallback_id=path.stem)
        if path.suffix == ".txt":
            return docmodel.parse_txt(path.read_text(encoding="utf-8"),
                                      doc_id=path.stem)
        return docmodel.document_from_json(path.read_text(encoding="utf-8"))
    if corpus_dir:
        candidate = Path(corpus_dir) / f"{ref}.json"
        if candidate.is_file():
            return docmodel.document_from_json(
                candidate.read_text(encoding="utf-8"))
    raise CliError(f"document not found: {ref}")


def cmd_condense(args) -> int:
    doc = _resolve_document(args.document, args.corpus)
    ct = ranking.condense(doc)
    print(ranking.condensed_to_json(ct))
    return EXIT_OK


def cmd_eval(args) -> int:
    labels_path = Path(args.labels)
    if not labels_path.is_file():
        raise CliError(f"labels file not found: {labels_path}")
    try:
        labels = evaluation.read_labels_tsv(
            labels_path.read_text(encoding="utf-8"))
    except ValueError as exc:
        raise CliError(f"{labels_path}: {exc}") from exc
    corpus = _load_corpus(Path(args.corpus))
    report = evaluation.io_by_level(labels, corpus)
    print(canonical_dumps(evaluation.report_to_dict(report)))
    return EXIT_OK


def cmd_rouge(args) -> int:
    cand_path, ref_path = Path(args.candidate), Path(args.reference)
    for path in (cand_path, ref_path):
        if not path.is_file():
            raise CliError(f"file not found: {path}")
    score = evaluation.rouge_n(
        cand_path.read_text(encoding="utf-8"),
        ref_path.read_text(encoding="utf-8"),
        args.n,
    )
    print(canonical_dumps({
        "recall": score.recall,
        "precision": score.precision,
        "f1": score.f1,
        "n": args.n,
    }))
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app, load_snapshot

    snapshot = load_snapshot(args.corpus, args.index, args.lexicons)
    # Fail fast with a clear message when the port is taken.
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.bind((args.host, args.port))
    except OSError as exc:
        raise CliError(f"cannot bind {args.host}:{args.port}: {exc}") from exc
    finally:
        probe.close()
    app = create_app(snapshot, static_dir=args.static)
    print(f"serving {snapshot.search_index.doc_count} documents "
          f"on http://{args.host}:{args.port}", flush=True)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def cmd_gen_fixtures(args) -> int:
    count = fixtures.write_fixture_tree(args.out, args.seed, args.docs)
    print(count)
    return EXIT_OK


def cmd_stopwords(args) -> int:
    for word in sorted(STOPWORDS):
        print(word)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="condensedly",
        description="Condense articles, search them, and serve a reader API.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="parse XML/txt articles into corpus JSON")
    p.add_argument("input_dir")
    p.add_argument("corpus_dir")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("index", help="build and save the inverted index")
    p.add_argument("corpus_dir")
    p.add_argument("index_file")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("condense", help="print a document's condensed text")
    p.add_argument("document", help="doc id or path to .json/.xml/.txt")
    p.add_argument("--corpus", help="corpus directory for doc-id lookup")
    p.set_defaults(func=cmd_condense)

    p = sub.add_parser("eval", help="correlate IO with importance labels")
    p.add_argument("--labels", required=True)
    p.add_argument("--corpus", required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("rouge", help="ROUGE-N between two text files")
    p.add_argument("candidate")
    p.add_argument("reference")
    p.add_argument("-n", type=int, default=1)
    p.set_defaults(func=cmd_rouge)

    # Flags win over CONDENSEDLY_* environment variables.
    env = os.environ
    p = sub.add_parser("serve", help="serve the HTTP API over a corpus")
    p.add_argument("--corpus", default=env.get("CONDENSEDLY_CORPUS"),
                   required="CONDENSEDLY_CORPUS" not in env)
    p.add_argument("--index", default=env.get("CONDENSEDLY_INDEX"),
                   required="CONDENSEDLY_INDEX" not in env)
    p.add_argument("--lexicons", default=env.get("CONDENSEDLY_LEXICONS"))
    p.add_argument("--port", type=int,
                   default=int(env.get("CONDENSEDLY_PORT", "8000")))
    p.add_argument("--host", default=env.get("CONDENSEDLY_HOST", "127.0.0.1"))
    p.add_argument("--static", default=env.get("CONDENSEDLY_STATIC"),
                   help="directory with the built web UI")
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("gen-fixtures", help="write a seeded synthetic corpus")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--docs", type=int, default=20)
    p.set_defaults(func=cmd_gen_fixtures)

    p = sub.add_parser("stopwords", help="print the embedded stopword list")
    p.set_defaults(func=cmd_stopwords)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, CondensedlyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON input: {exc}", file=sys.stderr)
        return EXIT_USER
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
