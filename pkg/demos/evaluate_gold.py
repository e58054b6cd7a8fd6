"""Score long perspectives against the bundled gold annotations."""
from importlib import resources

from folkchar.eval import StoryResult, compare, metrics, read_gold, report
from folkchar.narrative import find_perspective
from folkchar.pipeline import PipelineConfig, analyse, load_resources

data = resources.files("folkchar.data")
res = load_resources(PipelineConfig())
results = []
for g in read_gold(data.joinpath("gold.tsv").read_text("utf-8")):
    text = data.joinpath("corpus", f"{g.doc_id}.txt").read_text("utf-8")
    a = analyse(text, g.doc_id, res)
    (rep,) = find_perspective(a.characters, a.decoref, a.records, True, g.character)
    counts = compare(set(rep.indices), g, range(len(a.doc.sentences)))
    results.append(StoryResult(g.doc_id, counts, metrics(counts)))

table, _ = report(results)
print(table, end="")
