"""Shared document representation: tokens, sentences and annotations."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass
class Token:
    text: str
    start: int
    end: int
    pos: Optional[str] = None
    lemma: Optional[str] = None
    chunk: Optional[str] = None

    @property
    def char_span(self) -> tuple:
        return (self.start, self.end)


@dataclass(frozen=True)
class Sentence:
    first: int
    last: int        # inclusive
    index: int

    @property
    def token_range(self) -> tuple:
        return (self.first, self.last)

    def __contains__(self, token_index: int) -> bool:
        return self.first <= token_index <= self.last

    def __len__(self) -> int:
        return self.last - self.first + 1


@dataclass(frozen=True)
class Annotation:
    kind: str
    first: int
    last: int        # inclusive
    attrs: tuple = ()

    @classmethod
    def make(cls, kind: str, first: int, last: int, /, **attrs) -> "Annotation":
        return cls(kind, first, last, tuple(sorted(attrs.items())))

    def get(self, key: str, default=None):
        for k, v in self.attrs:
            if k == key:
                return v
        return default

    @property
    def token_range(self) -> tuple:
        return (self.first, self.last)

    def covers(self, i: int) -> bool:
        return self.first <= i <= self.last


@dataclass
class Document:
    id: str
    source_text: str
    tokens: list = field(default_factory=list)
    sentences: list = field(default_factory=list)
    annotations: list = field(default_factory=list)
    _ann_set: set = field(default_factory=set, repr=False, compare=False)

    def add_annotation(self, ann: Annotation) -> bool:
        if not ann.kind:
            raise ValueError("annotation kind must be non-empty")
        if ann in self._ann_set:
            return False
        self._ann_set.add(ann)
        self.annotations.append(ann)
        return True

    def annotations_of(self, kind: str) -> list:
        return [a for a in self.annotations if a.kind == kind]

    def sentence_tokens(self, sent: Sentence) -> list:
        return self.tokens[sent.first:sent.last + 1]

    def sentence_text(self, sent: Sentence) -> str:
        if not len(self.tokens):
            return ""
        return self.source_text[self.tokens[sent.first].start:self.tokens[sent.last].end]

    def span_text(self, first: int, last: int) -> str:
        return self.source_text[self.tokens[first].start:self.tokens[last].end]

    def sentence_of(self, token_index: int) -> Sentence:
        lo, hi = 0, len(self.sentences) - 1
        while lo <= hi:
            mid = (lo + hi) // 2
            s = self.sentences[mid]
            if token_index < s.first:
                hi = mid - 1
            elif token_index > s.last:
                lo = mid + 1
            else:
                return s
        raise IndexError(f"token {token_index} is outside every sentence")
