"""Gazetteer entity recognition: numbers, temporal words and ontology concepts."""
from __future__ import annotations

import re

from ..document import Annotation
from .lexicon import TEMPORAL

_CAMEL = re.compile(r"[A-Z]+(?![a-z])|[A-Z]?[a-z]+|\d+")


def concept_phrase(name: str) -> tuple:
    """SingleAnimal -> ("single", "animal")."""
    return tuple(p.lower() for p in _CAMEL.findall(name))


def build_gazetteer(concepts) -> dict:
    gaz: dict = {}
    for name in sorted(concepts):
        gaz.setdefault(concept_phrase(name), name)
    return gaz


def ner_gazetteer(doc, kb=None, gazetteer: dict | None = None):
    if gazetteer is None:
        gazetteer = build_gazetteer(kb.concepts) if kb is not None else {}
    longest = max((len(k) for k in gazetteer), default=0)
    for sent in doc.sentences:
        for i in range(sent.first, sent.last + 1):
            tok = doc.tokens[i]
            if tok.pos == "CD":
                doc.add_annotation(Annotation.make("Number", i, i, value=tok.text))
            elif (tok.lemma or "") in TEMPORAL and (tok.pos or "").startswith("NN"):
                doc.add_annotation(Annotation.make("Temporal", i, i, value=tok.lemma))
        i = sent.first
        while i <= sent.last:
            hit = None
            for size in range(min(longest, sent.last - i + 1), 0, -1):
                toks = doc.tokens[i:i + size]
                by_text = tuple(t.text.lower() for t in toks)
                by_lemma = tuple((t.lemma or t.text).lower() for t in toks)
                name = gazetteer.get(by_text) or gazetteer.get(by_lemma)
                if name is not None and all((t.pos or "NN").startswith("NN") or t.pos == "JJ"
                                            for t in toks):
                    hit = (size, name)
                    break
            if hit:
                size, name = hit
                doc.add_annotation(Annotation.make("Entity", i, i + size - 1, concept=name))
                i += size
            else:
                i += 1
    return doc
