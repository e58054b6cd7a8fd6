"""Command-line front end.

Every subcommand reads story files (default: the whole corpus) and either
prints its result or, with ``--out``, writes one file per story there.
Exit codes: 0 ok, 2 configuration error, 3 parse error, 4 I/O error.
"""
from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import replace
from importlib import resources
from pathlib import Path

from . import __version__
from .coref import decoreference_document, dump_chains, resolve
from .eval import StoryResult, compare, metrics, read_gold, report
from .narrative import extract_characters, find_perspective, format_characters
from .pipeline import (
    SUFFIXES, ConfigError, InputParseError, PipelineConfig, analyse, corpus_files, doc_id_of,
    load_config, load_resources, perspective_text, read_story, run_pipeline, triplets_from_text,
    write_atomic,
)
from .openie import to_tsv
from .textpipe import annotate, dump_document

log = logging.getLogger("folkchar")

EXIT_OK, EXIT_CONFIG, EXIT_PARSE, EXIT_IO = 0, 2, 3, 4


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="flat key = value configuration file")
    common.add_argument("--ontology", type=Path, help="ontology file (default: bundled)")
    common.add_argument("--rules-dir", type=Path, help="directory holding jn/jc/jr.rules")
    common.add_argument("--corpus", type=Path, help="directory of .txt stories (default: bundled)")
    common.add_argument("--out", type=Path, help="output directory")
    ver = common.add_mutually_exclusive_group()
    ver.add_argument("--long", dest="version", action="store_const", const="long",
                     help="perspective as sentences")
    ver.add_argument("--short", dest="version", action="store_const", const="short",
                     help="perspective as triplets")
    common.add_argument("--character", help="restrict perspective reports to one character")
    common.add_argument("--jobs", type=int, help="stories processed in parallel")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="folkchar", description="Folktale character analysis")
    p.add_argument("--version", action="version", version=f"folkchar {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("annotate", "tokenize, tag, lemmatize and chunk stories"),
        ("decoref", "rewrite stories with coreference representatives"),
        ("triplets", "extract relation triplets from (decoreferenced) texts"),
        ("characters", "extract and classify characters"),
        ("perspective", "report each character's perspective"),
    ]:
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("files", nargs="*", type=Path, help="input files (default: corpus)")
    ev = sub.add_parser("eval", parents=[common], help="score long perspectives against gold")
    ev.add_argument("--gold", type=Path, help="gold TSV (default: bundled gold)")
    sub.add_parser("run", parents=[common], help="run every stage on the corpus")
    return p


def build_config(args) -> PipelineConfig:
    values = load_config(args.config) if args.config else {}
    if args.ontology:
        values["ontology"] = args.ontology
    if args.rules_dir:
        for name in ("jn", "jc", "jr"):
            values[name] = args.rules_dir / f"{name}.rules"
    for key in ("corpus", "out", "character", "jobs"):
        if getattr(args, key, None) is not None:
            values[key] = getattr(args, key)
    if getattr(args, "gold", None) is not None:
        values["gold"] = args.gold
    if args.version:
        values["long_version"] = args.version == "long"
    return replace(PipelineConfig(), **values).validate()


def _inputs(args, config) -> list:
    files = list(args.files) or corpus_files(config.corpus)
    missing = [f for f in files if not Path(f).is_file()]
    if missing:
        raise FileNotFoundError(f"no such input file: {missing[0]}")
    if not files:
        log.warning("no input stories found")
    return files


def _emit(args, config, doc_id: str, suffix: str, content: str) -> None:
    if config.out is not None:
        write_atomic(Path(config.out) / f"{doc_id}{suffix}", content)
    else:
        sys.stdout.write(content)


def _cmd_stage(args, config) -> None:
    res = load_resources(config) if args.command in ("characters", "perspective", "triplets") else None
    for path in _inputs(args, config):
        text, doc_id = read_story(path), doc_id_of(path)
        if args.command == "annotate":
            _emit(args, config, doc_id, SUFFIXES["ann"], dump_document(annotate(text, doc_id)))
        elif args.command == "decoref":
            doc = annotate(text, doc_id)
            chains = resolve(doc)
            _emit(args, config, doc_id, SUFFIXES["decoref"], decoreference_document(doc, chains).text)
            if config.out is not None:
                _emit(args, config, doc_id, SUFFIXES["chains"], dump_chains(doc, chains))
        elif args.command == "triplets":
            records = triplets_from_text(text, doc_id, res.weights)
            _emit(args, config, doc_id, SUFFIXES["triplets"], to_tsv(records))
        elif args.command == "characters":
            kb = res.kb.copy()
            doc = annotate(text, doc_id, kb)
            chars = extract_characters(kb, doc, res.jn, res.jc, res.jr, resolve(doc))
            _emit(args, config, doc_id, SUFFIXES["characters"], format_characters(chars))
        else:
            a = analyse(text, doc_id, res)
            key = "long" if config.long_version else "short"
            _emit(args, config, doc_id, SUFFIXES[key],
                  perspective_text(a, config.long_version, config.character))


def _cmd_eval(args, config) -> None:
    if config.gold is not None:
        gold_text = read_story(config.gold)
    else:
        gold_text = resources.files("folkchar.data").joinpath("gold.tsv").read_text("utf-8")
    try:
        gold = read_gold(gold_text)
    except ValueError as exc:
        raise InputParseError(f"gold: {exc}") from None
    if not gold:
        raise InputParseError("gold: no annotations")
    stories = {doc_id_of(p): p for p in corpus_files(config.corpus)}
    res = load_resources(config)
    cache: dict = {}
    results = []
    for g in gold:
        if g.doc_id not in stories:
            raise FileNotFoundError(f"gold story {g.doc_id!r} is not in the corpus")
        if g.doc_id not in cache:
            cache[g.doc_id] = analyse(read_story(stories[g.doc_id]), g.doc_id, res)
        a = cache[g.doc_id]
        reports = find_perspective(a.characters, a.decoref, a.records, True, g.character)
        predicted = set(reports[0].indices) if reports else set()
        try:
            counts = compare(predicted, g, range(len(a.doc.sentences)))
        except ValueError as exc:
            raise InputParseError(f"gold {g.doc_id}/{g.character}: {exc}") from None
        label = g.doc_id if sum(x.doc_id == g.doc_id for x in gold) == 1 else f"{g.doc_id}/{g.character}"
        results.append(StoryResult(label, counts, metrics(counts)))
    table, tsv = report(results)
    sys.stdout.write(table)
    if config.out is not None:
        write_atomic(Path(config.out) / "eval.tsv", tsv)


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        config = build_config(args)
        if args.command == "run":
            written = run_pipeline(config)
            print(f"wrote {len(written)} files to {config.out or 'out'}")
        elif args.command == "eval":
            _cmd_eval(args, config)
        else:
            _cmd_stage(args, config)
    except ConfigError as exc:
        print(f"folkchar: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except InputParseError as exc:
        print(f"folkchar: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"folkchar: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
