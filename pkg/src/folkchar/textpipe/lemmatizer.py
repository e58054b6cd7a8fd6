"""POS-keyed lemmatization: irregular lexicon first, then suffix stripping."""
from __future__ import annotations

from .lexicon import FORMS, IRREGULAR_NOUNS, NOUN_BASES, VERB_BASES


def _noun_lemma(w: str) -> str:
    if w in IRREGULAR_NOUNS:
        return IRREGULAR_NOUNS[w]
    if w.endswith("ies") and len(w) > 4:
        return w[:-3] + "y"
    if w.endswith("ves") and (w[:-3] + "f" in NOUN_BASES or w[:-3] + "fe" in NOUN_BASES):
        return w[:-3] + ("f" if w[:-3] + "f" in NOUN_BASES else "fe")
    if w.endswith(("ses", "shes", "ches", "xes", "zes")):
        return w[:-2]
    if w.endswith("s") and not w.endswith("ss") and len(w) > 2:
        return w[:-1]
    return w


def _verb_lemma(w: str, tag: str) -> str:
    if tag == "VBZ":
        stems = [w[:-3] + "y" if w.endswith("ies") else None, w[:-2] if w.endswith("es") else None,
                 w[:-1] if w.endswith("s") else None]
    elif tag in ("VBD", "VBN"):
        stems = []
        if w.endswith("ied"):
            stems.append(w[:-3] + "y")
        if w.endswith("ed"):
            stems += [w[:-2], w[:-1], w[:-3] if len(w) > 4 and w[-3] == w[-4] else None]
    elif tag == "VBG":
        stems = []
        if w.endswith("ing"):
            stems += [w[:-3], w[:-3] + "e", w[:-4] if len(w) > 5 and w[-4] == w[-5] else None]
    else:
        stems = []
    stems = [s for s in stems if s]
    for s in stems:
        if s in VERB_BASES:
            return s
    return stems[0] if stems else w


def lemma_of(text: str, tag: str) -> str:
    w = text.lower().replace("’", "'")
    entries = FORMS.get(w, [])
    for t, lemma in entries:
        if t == tag:
            return lemma
    family = tag[:2]
    for t, lemma in entries:
        if t[:2] == family:
            return lemma
    if tag in ("NNS", "NNPS"):
        if "-" in w:
            head, _, tail = w.rpartition("-")
            return head + "-" + _noun_lemma(tail)
        return _noun_lemma(w)
    if tag.startswith("VB"):
        return _verb_lemma(w, tag)
    return w


def lemmatize(doc):
    for tok in doc.tokens:
        tok.lemma = lemma_of(tok.text, tok.pos or "NN")
    return doc
