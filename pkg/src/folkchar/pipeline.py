"""End-to-end story processing: configuration, per-story stages and batch runs."""
from __future__ import annotations

import logging
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .coref import decoreference_document, dump_chains, resolve
from .narrative import extract_characters, find_perspective, format_characters, format_perspectives
from .ontology import OntologyError, load_ontology, parse_ontology
from .openie import ConfidenceWeights, extract_triplets, to_tsv
from .rules import RuleSyntaxError, compile_rules, load_rules
from .textpipe import annotate, dump_document

log = logging.getLogger(__name__)

SUFFIXES = {
    "ann": ".ann.tsv",
    "chains": ".chains.tsv",
    "decoref": ".decoref.txt",
    "triplets": ".triplets.tsv",
    "characters": ".characters.txt",
    "long": ".perspective.long.txt",
    "short": ".perspective.short.txt",
}
SUMMARY_NAME = "summary.txt"
SUMMARY_HEADER = "doc_id\tsentences\tchains\ttriplets\tcharacters"


class ConfigError(ValueError):
    """Bad configuration: unknown key, invalid value or missing path."""


class InputParseError(ValueError):
    """An input file (ontology, rules, gold) could not be parsed."""


class UnreadableInputError(OSError):
    """An input file exists but cannot be decoded as UTF-8 text."""


@dataclass
class PipelineConfig:
    ontology: Path | None = None        # None selects the bundled ontology
    jn: Path | None = None              # None selects the bundled rule file
    jc: Path | None = None
    jr: Path | None = None
    corpus: Path | None = None          # None selects the bundled corpus
    out: Path | None = None            # run falls back to ./out
    long_version: bool = True
    character: str | None = None
    jobs: int = 1
    gold: Path | None = None
    weights: ConfidenceWeights = field(default_factory=ConfidenceWeights)

    def validate(self) -> "PipelineConfig":
        for name in ("ontology", "jn", "jc", "jr", "gold"):
            path = getattr(self, name)
            if path is not None and not Path(path).is_file():
                raise ConfigError(f"{name}: no such file: {path}")
        if self.corpus is not None and not Path(self.corpus).is_dir():
            raise ConfigError(f"corpus: no such directory: {self.corpus}")
        if self.jobs < 1:
            raise ConfigError("jobs must be at least 1")
        return self


def _parse_bool_version(value: str) -> bool:
    v = value.strip().lower()
    if v not in ("long", "short"):
        raise ConfigError(f"version must be 'long' or 'short', got {value!r}")
    return v == "long"


def parse_config(text: str, base: Path = Path(".")) -> dict:
    """Parse flat ``key = value`` text into a mapping of config field overrides.

    Relative paths are taken relative to ``base``.
    """
    out: dict = {}
    weights: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"config line {lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        if key in ("ontology", "jn", "jc", "jr", "corpus", "out", "gold"):
            out[key] = base / value
        elif key == "rules_dir":
            for name in ("jn", "jc", "jr"):
                out[name] = base / value / f"{name}.rules"
        elif key == "version":
            out["long_version"] = _parse_bool_version(value)
        elif key == "character":
            out["character"] = value or None
        elif key == "jobs":
            try:
                out["jobs"] = int(value)
            except ValueError:
                raise ConfigError(f"config line {lineno}: jobs must be an integer") from None
        elif key.startswith("weight."):
            try:
                weights[key[len("weight."):]] = float(value)
            except ValueError:
                raise ConfigError(f"config line {lineno}: weight must be a number") from None
        else:
            raise ConfigError(f"config line {lineno}: unknown key {key!r}")
    if weights:
        try:
            out["weights"] = ConfidenceWeights.from_mapping(weights)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
    return out


def load_config(path) -> dict:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror or exc}") from None
    return parse_config(text, path.parent)


# -- resources ---------------------------------------------------------------

@dataclass
class Resources:
    """Parsed ontology and rule sets shared (read-only) by every story."""
    kb: object
    jn: object
    jc: object
    jr: object
    weights: ConfidenceWeights


def _read(path: Path) -> str:
    return Path(path).read_text(encoding="utf-8")


def _bundled(name: str) -> str:
    return resources.files("folkchar.data").joinpath(name).read_text(encoding="utf-8")


def load_resources(config: PipelineConfig) -> Resources:
    try:
        kb = load_ontology(config.ontology) if config.ontology else parse_ontology(_bundled("folktale.ont"))
    except OntologyError as exc:
        raise InputParseError(f"ontology: {exc}") from None
    except UnicodeDecodeError as exc:
        raise UnreadableInputError(f"ontology: not valid UTF-8 ({exc.reason})") from None
    sets = {}
    for name in ("jn", "jc", "jr"):
        path = getattr(config, name)
        try:
            sets[name] = load_rules(path) if path else compile_rules(_bundled(f"{name}.rules"), name)
        except RuleSyntaxError as exc:
            raise InputParseError(f"{name} rules: {exc}") from None
        except UnicodeDecodeError as exc:
            raise UnreadableInputError(f"{name} rules: not valid UTF-8 ({exc.reason})") from None
    return Resources(kb, sets["jn"], sets["jc"], sets["jr"], config.weights)


def corpus_files(corpus: Path | None) -> list:
    """Story files (``*.txt``) of a corpus directory, sorted by name."""
    if corpus is None:
        root = resources.files("folkchar.data").joinpath("corpus")
        return sorted((Path(str(p)) for p in root.iterdir() if p.name.endswith(".txt")),
                      key=lambda p: p.name)
    return sorted((p for p in Path(corpus).iterdir() if p.suffix == ".txt" and p.is_file()),
                  key=lambda p: p.name)


def doc_id_of(path) -> str:
    """Filename stem, without a trailing stage suffix such as ``.decoref``."""
    name = Path(path).name
    for suffix in SUFFIXES.values():
        if name.endswith(suffix):
            return name[: -len(suffix)]
    return Path(path).stem


def read_story(path) -> str:
    try:
        return _read(path)
    except UnicodeDecodeError as exc:
        raise UnreadableInputError(f"{path}: not valid UTF-8 ({exc.reason})") from None


# -- stages ------------------------------------------------------------------

@dataclass
class StoryAnalysis:
    doc_id: str
    doc: object
    chains: list
    decoref: object
    records: list
    characters: list


def analyse(text: str, doc_id: str, res: Resources) -> StoryAnalysis:
    """Run every stage on one story with a private copy of the knowledge base."""
    kb = res.kb.copy()
    doc = annotate(text, doc_id, kb)
    chains = resolve(doc)
    d = decoreference_document(doc, chains)
    records = extract_triplets(d.to_document(), res.weights)
    chars = extract_characters(kb, doc, res.jn, res.jc, res.jr, chains)
    return StoryAnalysis(doc_id, doc, chains, d, records, chars)


def triplets_from_text(text: str, doc_id: str, weights: ConfidenceWeights) -> list:
    return extract_triplets(annotate(text, doc_id), weights)


def perspective_text(a: StoryAnalysis, long_version: bool, character: str | None = None) -> str:
    reports = find_perspective(a.characters, a.decoref, a.records, long_version, character)
    return format_perspectives(reports)


def story_outputs(a: StoryAnalysis, character: str | None = None) -> dict:
    """Mapping of output file suffix to file content for one analysed story."""
    return {
        SUFFIXES["ann"]: dump_document(a.doc),
        SUFFIXES["chains"]: dump_chains(a.doc, a.chains),
        SUFFIXES["decoref"]: a.decoref.text,
        SUFFIXES["triplets"]: to_tsv(a.records),
        SUFFIXES["characters"]: format_characters(a.characters),
        SUFFIXES["long"]: perspective_text(a, True, character),
        SUFFIXES["short"]: perspective_text(a, False, character),
    }


def summary_row(a: StoryAnalysis) -> str:
    return (f"{a.doc_id}\t{len(a.doc.sentences)}\t{len(a.chains)}\t{len(a.records)}"
            f"\t{len(a.characters)}")


def write_atomic(path, content: str) -> None:
    """Write via a temporary file in the same directory, then rename over ``path``."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(content)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _process(args) -> tuple:
    path, res, character = args
    a = analyse(read_story(path), doc_id_of(path), res)
    return a.doc_id, story_outputs(a, character), summary_row(a)


def map_stories(fn, items, jobs: int) -> list:
    """Apply ``fn`` to every item, in a process pool when ``jobs > 1``; results keep item order."""
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(jobs, len(items))) as pool:
        return list(pool.map(fn, items))


def run_pipeline(config: PipelineConfig) -> list:
    """Process every story of the corpus and write its outputs plus ``summary.txt``.

    Returns the list of written paths.
    """
    config.validate()
    res = load_resources(config)
    files = corpus_files(config.corpus)
    if not files:
        log.warning("corpus %s contains no .txt stories; nothing to do", config.corpus)
        return []
    results = map_stories(_process, [(p, res, config.character) for p in files], config.jobs)
    written = []
    out = Path(config.out) if config.out is not None else Path("out")
    for doc_id, outputs, _ in results:
        for suffix in sorted(outputs):
            target = out / f"{doc_id}{suffix}"
            write_atomic(target, outputs[suffix])
            written.append(target)
    summary = "\n".join([SUMMARY_HEADER] + [row for _, _, row in results]) + "\n"
    write_atomic(out / SUMMARY_NAME, summary)
    written.append(out / SUMMARY_NAME)
    return written
