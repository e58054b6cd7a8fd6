"""Relation phrases follow the V | V P | V W* P shape over chunk tags.

V is a verb chunk, W a noun/adjective/adverb/pronoun/determiner token and P
a preposition.  The relation is paired with the nearest NP chunk on each
side; the right argument also absorbs trailing ``of`` + NP attachments.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, fields

TSV_COLUMNS = ("doc_id", "sentence_index", "arg1", "rel", "arg2", "confidence",
               "original_sentence", "pos_tags", "chunk_tags")

_W_TAGS = {"NN", "NNS", "NNP", "NNPS", "JJ", "JJR", "JJS", "RB", "RBR", "RBS",
           "PRP", "PRP$", "DT", "POS"}
_P_TAGS = {"IN", "TO", "RP"}
_VERB_TAGS = {"VB", "VBD", "VBG", "VBN", "VBP", "VBZ"}
_CLAUSE_MARKERS = {"WDT", "WP", "WP$", "WRB"}


def _norm(text: str) -> str:
    return " ".join(text.split())


@dataclass(frozen=True)
class ExtractionRecord:
    doc_id: str
    sentence_index: int
    arg1: str
    rel: str
    arg2: str
    confidence: float
    original_sentence: str
    pos_tags: str
    chunk_tags: str
    arg1_span: tuple = (0, 0)     # sentence-relative token ranges, inclusive
    rel_span: tuple = (0, 0)
    arg2_span: tuple = (0, 0)

    @property
    def triple(self) -> tuple:
        return (self.arg1, self.rel, self.arg2)

    def as_text(self) -> str:
        return f"{self.arg1} {self.rel} {self.arg2}"


@dataclass(frozen=True)
class ConfidenceWeights:
    bias: float = 1.0
    length: float = -0.02        # per sentence token
    simple_arg1: float = 0.6
    plain_rel: float = 0.5
    clean_arg2: float = 0.4
    distance: float = -0.7       # per token between arguments and relation

    @classmethod
    def from_mapping(cls, values: dict) -> "ConfidenceWeights":
        known = {f.name for f in fields(cls)}
        unknown = set(values) - known
        if unknown:
            raise ValueError(f"unknown confidence weight(s): {', '.join(sorted(unknown))}")
        return cls(**{k: float(v) for k, v in values.items()})


def _np_spans(chunks, lo, hi):
    spans = []
    i = lo
    while i <= hi:
        if chunks[i] == "B-NP":
            j = i
            while j + 1 <= hi and chunks[j + 1] == "I-NP":
                j += 1
            spans.append((i, j))
            i = j + 1
        else:
            i += 1
    return spans


def _relations(tags, chunks, words):
    """Yield (first, last) token ranges of maximal relation phrases."""
    n = len(tags)
    i = 0
    while i < n:
        if chunks[i] != "B-VP":
            i += 1
            continue
        j = i
        while j + 1 < n and chunks[j + 1] == "I-VP":
            j += 1
        if not any(t in _VERB_TAGS for t in tags[i:j + 1]):
            i = j + 1
            continue
        end = j
        k = j + 1
        while k < n and tags[k] in _W_TAGS and chunks[k] != "B-VP":
            k += 1
        if k < n and tags[k] in _P_TAGS and chunks[k] in ("B-PP", "I-PP"):
            end = k
        elif j + 1 < n and tags[j + 1] in _P_TAGS and chunks[j + 1] in ("B-PP", "I-PP"):
            end = j + 1
        yield i, end
        i = end + 1


def features(n_tokens, tags, words, arg1, rel, arg2) -> dict:
    a1 = tags[arg1[0]:arg1[1] + 1]
    simple = any(t in ("NNP", "NNPS") for t in a1) or (
        arg1[1] - arg1[0] <= 1 and "POS" not in a1)
    rel_tags = tags[rel[0]:rel[1] + 1]
    plain = len(rel_tags) == 2 and rel_tags[0] in _VERB_TAGS and rel_tags[1] in _P_TAGS
    after = arg2[1] + 1
    clean = not any(t in _CLAUSE_MARKERS for t in tags[arg2[0]:arg2[1] + 1]) and not (
        after < n_tokens and (tags[after] in _CLAUSE_MARKERS or words[after] == "that"))
    distance = (rel[0] - arg1[1] - 1) + (arg2[0] - rel[1] - 1)
    return {"length": n_tokens, "simple_arg1": float(simple), "plain_rel": float(plain),
            "clean_arg2": float(clean), "distance": distance}


def score_confidence(feats: dict, weights: ConfidenceWeights = ConfidenceWeights()) -> float:
    z = weights.bias + sum(getattr(weights, k) * v for k, v in feats.items())
    # logistic output lies in (0, 1); round for stable serialisation
    return round(max(1e-6, 1.0 / (1.0 + math.exp(-z))), 6)


def extract_sentence(tokens, doc_id="doc", sentence_index=0, sentence_text=None,
                     weights: ConfidenceWeights = ConfidenceWeights()) -> list:
    if not tokens:
        return []
    tags = [t.pos for t in tokens]
    chunks = [t.chunk for t in tokens]
    words = [t.text.lower() for t in tokens]
    n = len(tokens)
    base = tokens[0].start
    if sentence_text is None:
        raise ValueError("sentence_text is required")

    def text(a, b):
        return _norm(sentence_text[tokens[a].start - base:tokens[b].end - base])

    records = []
    nps = _np_spans(chunks, 0, n - 1)
    for r0, r1 in _relations(tags, chunks, words):
        left = [s for s in nps if s[1] < r0]
        right = [s for s in nps if s[0] > r1]
        if not left or not right:
            continue
        arg1, arg2 = left[-1], right[0]
        a2_end = arg2[1]
        while a2_end + 2 < n and words[a2_end + 1] == "of" and chunks[a2_end + 2] == "B-NP":
            a2_end = next(s[1] for s in nps if s[0] == a2_end + 2)
        arg2 = (arg2[0], a2_end)
        feats = features(n, tags, words, arg1, (r0, r1), arg2)
        records.append(ExtractionRecord(
            doc_id, sentence_index, text(*arg1), text(r0, r1), text(*arg2),
            score_confidence(feats, weights), _norm(sentence_text), " ".join(tags),
            " ".join(chunks), arg1, (r0, r1), arg2))
    return records


def extract_triplets(doc, weights: ConfidenceWeights = ConfidenceWeights()) -> list:
    records = []
    for sent in doc.sentences:
        toks = doc.sentence_tokens(sent)
        records += extract_sentence(toks, doc.id, sent.index, doc.sentence_text(sent), weights)
    return records


def _clean_field(value) -> str:
    return str(value).replace("\t", " ").replace("\n", " ")


def to_tsv(records) -> str:
    lines = []
    for r in records:
        row = asdict(r)
        row["confidence"] = f"{r.confidence:.3f}"
        lines.append("\t".join(_clean_field(row[c]) for c in TSV_COLUMNS))
    return "\n".join(lines) + ("\n" if lines else "")


def read_tsv(text: str) -> list:
    """Parse a triplet TSV back into records (spans are not serialised)."""
    out = []
    for line in text.splitlines():
        if not line.strip():
            continue
        cols = line.split("\t")
        if len(cols) != len(TSV_COLUMNS):
            raise ValueError(f"expected {len(TSV_COLUMNS)} columns, got {len(cols)}")
        d = dict(zip(TSV_COLUMNS, cols))
        out.append(ExtractionRecord(d["doc_id"], int(d["sentence_index"]), d["arg1"], d["rel"],
                                    d["arg2"], float(d["confidence"]), d["original_sentence"],
                                    d["pos_tags"], d["chunk_tags"]))
    return out
