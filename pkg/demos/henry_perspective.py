"""Print Faithful Henry's long and short perspective in The Frog King."""
from importlib import resources

from folkchar.narrative import find_perspective, format_perspectives
from folkchar.pipeline import PipelineConfig, analyse, load_resources

text = resources.files("folkchar.data").joinpath("corpus", "frog_king.txt").read_text("utf-8")
a = analyse(text, "frog_king", load_resources(PipelineConfig()))

for long_version in (True, False):
    reports = find_perspective(a.characters, a.decoref, a.records, long_version, "Henry")
    print(format_perspectives(reports))
