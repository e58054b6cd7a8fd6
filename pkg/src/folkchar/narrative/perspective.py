from __future__ import annotations

import re
from dataclasses import dataclass

NO_PERSPECTIVE = "no perspective found"


@dataclass
class PerspectiveReport:
    character: str
    version: str                 # "long" | "short"
    items: list
    indices: list                # sentence index of each item

    @property
    def found(self) -> bool:
        return bool(self.items)

    def lines(self) -> list:
        header = f"{self.character}/{self.version}"
        if not self.items:
            return [header, NO_PERSPECTIVE]
        if self.version == "long":
            return [header] + [f"{i}\t{s}" for i, s in zip(self.indices, self.items)]
        return [header] + list(self.items)


def mention_pattern(names):
    """Case-insensitive, word-boundary anchored regex matching any of ``names``."""
    alts = sorted({" ".join(n.split()) for n in names if n and n.strip()}, key=lambda s: (-len(s), s))
    if not alts:
        return None
    body = "|".join(r"\s+".join(re.escape(p) for p in a.split()) for a in alts)
    return re.compile(rf"(?<!\w)(?:{body})(?!\w)", re.IGNORECASE)


def _names(char) -> list:
    return [char.canonical_name, *getattr(char, "mention_texts", ())]


def find_perspective(chars, d, records, long_version: bool, character: str | None = None) -> list:
    """Perspective reports for every character (or only the one named ``character``)."""
    chosen = [c for c in chars if character is None or c.canonical_name.lower() == character.lower()]
    version = "long" if long_version else "short"
    if character is not None and not chosen:
        return [PerspectiveReport(character, version, [], [])]
    sentences = d.sentences
    reports = []
    for char in sorted(chosen, key=lambda c: c.canonical_name.lower()):
        pat = mention_pattern(_names(char))
        items, indices = [], []
        if long_version:
            for idx in sorted({r.sentence_index for r in records}):
                text = " ".join(sentences[idx].split())
                if pat is not None and pat.search(text):
                    items.append(text)
                    indices.append(idx)
        else:
            for r in records:
                if pat is not None and (pat.search(r.arg1) or pat.search(r.arg2)):
                    items.append(r.as_text())
                    indices.append(r.sentence_index)
        reports.append(PerspectiveReport(char.canonical_name, version, items, indices))
    return reports


def format_perspectives(reports) -> str:
    blocks = ["\n".join(r.lines()) for r in reports]
    return "\n\n".join(blocks) + ("\n" if blocks else "")
