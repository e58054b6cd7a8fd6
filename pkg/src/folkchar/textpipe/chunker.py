"""BIO phrase chunking over Penn tags.

NP   = (DT|PRP$)? (JJ|JJR|JJS|RBS|CD)* (NN|NNS|NNP|NNPS|POS)+ | PRP | EX
       plus DT JJ+ with no noun ("the same") and a pronominal DT alone
VP   = (MD|TO|RB)* V+ ((RB)* TO? V+)*
PP   = IN+ (TO when no verb follows)
SBAR = subordinating conjunction
ADJP = (RB)* JJ+ outside an NP;  ADVP = RB/WRB outside a VP
"""
from __future__ import annotations

import re

from .lexicon import PRONOUN_LIKE_DT

_NOUN = {"NN", "NNS", "NNP", "NNPS", "POS"}
_PROPER = {"NNP", "NNPS"}
_COMMON = {"NN", "NNS"}
_MOD = {"JJ", "JJR", "JJS", "RBS", "CD"}
_ADJ = {"JJ", "JJR", "JJS"}
_VERB = {"VB", "VBD", "VBG", "VBN", "VBP", "VBZ"}
SUBORDINATORS = {"because", "lest", "although", "though", "unless", "whether", "whereas", "if",
                 "while", "until", "till", "that"}
_INDEFINITE_NOUNS = {"something", "everything", "nothing", "anything"}
CHUNK_RE = re.compile(r"^(?:O|[BI]-(?:NP|VP|PP|ADVP|ADJP|SBAR))$")


def _np_end(tags, words, i):
    """Index one past the NP starting at i, or i if none starts here."""
    n = len(tags)
    j = i
    if tags[j] in ("PRP", "EX"):
        return j + 1
    det = tags[j] in ("DT", "PRP$")
    if det:
        j += 1
    k = j
    while k < n:
        if tags[k] in _MOD and not (tags[k] == "RBS" and (k + 1 >= n or tags[k + 1] not in _ADJ)):
            k += 1
        elif tags[k] == "CC" and k > j and tags[k - 1] in _ADJ and k + 1 < n and tags[k + 1] in _ADJ:
            k += 1
        else:
            break
    m = k
    if m < n and tags[m] in _NOUN and tags[m] != "POS":
        saw_common = False
        while m < n and tags[m] in _NOUN:
            if m > k and words[m] in _INDEFINITE_NOUNS:
                break
            # a common noun directly followed by a name closes the NP ("faithful John")
            if tags[m] in _PROPER and saw_common and tags[m - 1] != "POS":
                break
            if tags[m] in _COMMON:
                saw_common = True
            elif tags[m] == "POS":
                saw_common = False
            m += 1
        return m
    if det and k > j and tags[k - 1] in _ADJ:
        return k
    if det and k == j and words[i] in PRONOUN_LIKE_DT:
        return i + 1
    if not det and k == j + 1 and tags[j] == "CD":
        return j + 1
    return i


def chunk_tags(tags: list, words: list) -> list:
    n = len(tags)
    out = ["O"] * n
    i = 0
    while i < n:
        t = tags[i]
        end = _np_end(tags, words, i)
        if end > i:
            _label(out, i, end, "NP")
            i = end
            continue
        if t in _VERB or t in ("MD", "TO", "RB"):
            j = i
            while j < n and tags[j] in ("MD", "TO", "RB"):
                j += 1
            if j < n and tags[j] in _VERB:
                while j < n and tags[j] in _VERB:
                    j += 1
                while True:
                    k = j
                    while k < n and tags[k] == "RB":
                        k += 1
                    if k < n and tags[k] == "TO":
                        k += 1
                    if k < n and tags[k] in _VERB and k > j:
                        while k < n and tags[k] in _VERB:
                            k += 1
                        j = k
                    else:
                        break
                _label(out, i, j, "VP")
                i = j
                continue
            if t == "TO":
                _label(out, i, i + 1, "PP")
                i += 1
                continue
            if t == "RB":
                j = i
                while j < n and tags[j] == "RB":
                    j += 1
                if j < n and tags[j] in _ADJ:
                    while j < n and tags[j] in _ADJ:
                        j += 1
                    _label(out, i, j, "ADJP")
                elif j < n and tags[j] == "IN" and words[j] == "of":
                    _label(out, i, j + 1, "PP")
                    j += 1
                else:
                    _label(out, i, j, "ADVP")
                i = j
                continue
        if t == "IN":
            if words[i] in SUBORDINATORS and not (i + 1 < n and words[i + 1] == "of"):
                _label(out, i, i + 1, "SBAR")
                i += 1
                continue
            j = i + 1
            while j < n and tags[j] == "IN" and words[j] not in SUBORDINATORS:
                j += 1
            _label(out, i, j, "PP")
            i = j
            continue
        if t in _ADJ:
            j = i
            while j < n and tags[j] in _ADJ:
                j += 1
            _label(out, i, j, "ADJP")
            i = j
            continue
        if t == "WRB":
            _label(out, i, i + 1, "ADVP")
        i += 1
    return out


def _label(out, start, end, phrase):
    for k in range(start, end):
        out[k] = ("B-" if k == start else "I-") + phrase


def is_valid_bio(tags: list) -> bool:
    prev = "O"
    for t in tags:
        if not CHUNK_RE.match(t):
            return False
        if t.startswith("I-") and (prev == "O" or prev[2:] != t[2:]):
            return False
        prev = t
    return True


def chunk(doc):
    for sent in doc.sentences:
        toks = doc.sentence_tokens(sent)
        tags = chunk_tags([t.pos for t in toks], [t.text.lower() for t in toks])
        for tok, tag in zip(toks, tags):
            tok.chunk = tag
    return doc
