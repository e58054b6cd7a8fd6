"""Scoring predicted perspectives against gold sentence sets."""
from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "GoldAnnotation", "ConfusionCounts", "Metrics", "StoryResult", "compare", "metrics",
    "report", "read_gold", "format_gold", "average", "fmt",
]


@dataclass(frozen=True)
class GoldAnnotation:
    doc_id: str
    character: str
    indices: frozenset


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int = 0
    fp: int = 0
    tn: int = 0
    fn: int = 0

    def __add__(self, other: "ConfusionCounts") -> "ConfusionCounts":
        return ConfusionCounts(self.tp + other.tp, self.fp + other.fp,
                               self.tn + other.tn, self.fn + other.fn)

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn


@dataclass(frozen=True)
class Metrics:
    precision: float | None
    recall: float | None
    accuracy: float | None


@dataclass(frozen=True)
class StoryResult:
    story: str
    counts: ConfusionCounts
    metrics: Metrics


def compare(predicted, gold, universe) -> ConfusionCounts:
    """Confusion counts of a predicted sentence set against gold over ``universe``."""
    pred = set(predicted)
    gold_set = set(gold.indices if isinstance(gold, GoldAnnotation) else gold)
    uni = set(universe)
    for name, s in (("predicted", pred), ("gold", gold_set)):
        outside = sorted(s - uni)
        if outside:
            raise ValueError(f"{name} sentence index {outside[0]} is outside the universe")
    return ConfusionCounts(
        tp=len(pred & gold_set), fp=len(pred - gold_set),
        tn=len(uni - (pred | gold_set)), fn=len(gold_set - pred))


def _ratio(num: int, den: int):
    return num / den if den else None


def metrics(c: ConfusionCounts) -> Metrics:
    return Metrics(_ratio(c.tp, c.tp + c.fp), _ratio(c.tp, c.tp + c.fn),
                   _ratio(c.tp + c.tn, c.total))


def fmt(value) -> str:
    return "n/a" if value is None else f"{value:.3f}"


def average(values):
    """Unweighted mean of the defined values (None entries are skipped)."""
    defined = [v for v in values if v is not None]
    return sum(defined) / len(defined) if defined else None


def report(results) -> tuple:
    """(aligned text table, TSV) with one row per story plus an average row."""
    results = list(results)
    if not results:
        raise ValueError("nothing to report: no story was scored")
    rows = [(r.story, r.metrics.precision, r.metrics.recall, r.metrics.accuracy) for r in results]
    avg = ("average", *(average(col) for col in list(zip(*rows))[1:]))
    all_rows = rows + [avg]
    tsv = ["story\tprecision\trecall\taccuracy"]
    tsv += ["\t".join([r[0]] + [fmt(v) for v in r[1:]]) for r in all_rows]
    width = max(len(r[0]) for r in all_rows + [("story",)])
    lines = [f"{'story':<{width}}  {'precision':>9}  {'recall':>9}  {'accuracy':>9}"]
    for r in all_rows:
        lines.append(f"{r[0]:<{width}}  " + "  ".join(f"{fmt(v):>9}" for v in r[1:]))
    if any(v is None for r in rows for v in r[1:]):
        lines.append("(averages skip n/a entries)")
    return "\n".join(lines) + "\n", "\n".join(tsv) + "\n"


def read_gold(text: str) -> list:
    gold = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ValueError(f"gold line {lineno}: expected 3 tab-separated fields")
        doc_id, character, raw = parts
        try:
            indices = frozenset(int(x) for x in raw.split(",") if x.strip())
        except ValueError:
            raise ValueError(f"gold line {lineno}: bad sentence index list {raw!r}") from None
        if any(i < 0 for i in indices):
            raise ValueError(f"gold line {lineno}: negative sentence index")
        gold.append(GoldAnnotation(doc_id, character, indices))
    return gold


def format_gold(gold) -> str:
    return "".join(f"{g.doc_id}\t{g.character}\t{','.join(map(str, sorted(g.indices)))}\n"
                   for g in gold)
