"""Rule-based Penn Treebank tagger.

Each word gets an ordered list of candidate tags from the lexicon (or from
suffix heuristics for unknown words); a left-to-right pass then picks one
candidate using the previously chosen tag and the next word's candidates.
"""
from __future__ import annotations

import re

from .lexicon import (
    BE_FORMS, FEMALE_NAMES, FORMS, HAVE_FORMS, MALE_NAMES, PRONOUN_LIKE_DT,
)
from .tokenizer import is_opening_quote

PENN_TAGS = frozenset("""
CC CD DT EX FW IN JJ JJR JJS LS MD NN NNS NNP NNPS PDT POS PRP PRP$ RB RBR RBS RP SYM TO UH
VB VBD VBG VBN VBP VBZ WDT WP WP$ WRB , . : `` '' -LRB- -RRB- # $
""".split())

_PUNCT = {",": ",", ".": ".", "!": ".", "?": ".", ";": ":", ":": ":", "--": ":", "...": ":",
          "(": "-LRB-", ")": "-RRB-", "[": "-LRB-", "]": "-RRB-", "-": ":", "$": "$", "#": "#"}
_NOUNISH = {"NN", "NNS", "NNP", "NNPS"}
_VERBS = {"VB", "VBD", "VBG", "VBN", "VBP", "VBZ"}
_NOMINAL_LEFT = {"DT", "PRP$", "POS", "JJ", "JJS", "JJR", "CD", "IN"}
_SUBJECT_LEFT = {"NN", "NNS", "NNP", "NNPS", "PRP", "WDT", "WP", "EX"}
_PARTICLES = {"up", "down", "out", "off", "away", "round", "back", "in", "on", "over", "about"}
_DO_FORMS = {"do", "does", "did"}
_ADJ_SUFFIXES = ("ous", "ful", "ive", "able", "ible", "less", "ish", "ic", "al", "ent", "ant")


def _suffix_guess(word: str) -> list:
    low = word.lower()
    if low.endswith("ly") and len(low) > 3:
        return ["RB"]
    if low.endswith("ing") and len(low) > 4:
        return ["VBG", "NN"]
    if low.endswith("ed") and len(low) > 3:
        return ["VBD", "VBN", "JJ"]
    if low.endswith("est") and len(low) > 4:
        return ["JJS"]
    if low.endswith(_ADJ_SUFFIXES) and len(low) > 4:
        return ["JJ"]
    if low.endswith("s") and not low.endswith(("ss", "us", "is")) and len(low) > 3:
        return ["NNS"]
    return ["NN"]


def _candidates(tokens: list, i: int, first: int) -> list:
    tok = tokens[i]
    text = tok.text
    if text in ('"', "“", "”", "'", "‘", "’") and not (text in ("'", "’") and i > first
                                                       and tokens[i - 1].end == tok.start
                                                       and tokens[i - 1].text.lower().endswith("s")):
        return ["``"] if is_opening_quote(tokens, i) else ["''"]
    if text in _PUNCT:
        return [_PUNCT[text]]
    if re.fullmatch(r"\d+(?:[.,]\d+)*", text):
        return ["CD"]
    if not any(c.isalnum() for c in text):
        return ["SYM"]
    low = text.lower().replace("’", "'")
    if low in MALE_NAMES or low in FEMALE_NAMES:
        return ["NNP"]
    if low in FORMS:
        return [tag for tag, _ in FORMS[low]]
    if "-" in low:
        tail = low.rsplit("-", 1)[1]
        if tail in FORMS:
            return [tag for tag, _ in FORMS[tail]]
    if text[0].isupper():
        if low.endswith("s") and not low.endswith("ss") and i > first \
                and tokens[i - 1].text.lower() == "the":
            return ["NNPS"]
        return ["NNP"]
    return _suffix_guess(text)


def _prev_skipping_rb(tags: list, i: int):
    j = i - 1
    while j >= 0 and tags[j] == "RB":
        j -= 1
    return j


def _choose(words, cands, tags, i, n):
    """Pick one tag for position i given the tags already chosen to its left."""
    c = cands[i]
    w = words[i]
    prev = tags[i - 1] if i > 0 else None
    nxt = cands[i + 1] if i + 1 < n else []
    nxt_word = words[i + 1] if i + 1 < n else None
    if len(c) == 1:
        return c[0]
    j = _prev_skipping_rb(tags, i)
    prev_word = words[j] if j >= 0 else None
    prev_core = tags[j] if j >= 0 else None

    if w == "her":
        if nxt and nxt[0] in _NOUNISH | {"JJ", "JJS", "JJR", "CD", "RBS"}:
            after = cands[i + 2] if i + 2 < n else []
            if "VB" in nxt and (not after or after[0] not in _NOUNISH):
                return "PRP"
            return "PRP$"
        return "PRP"
    if w == "that":
        return "DT" if nxt and nxt[0] in {"NN", "NNS", "JJ"} else "IN"
    if w == "there":
        if (prev is None or prev in {"CC", ",", "``", "RB"}) and nxt and (
                set(nxt) & _VERBS or nxt_word in {"once"}):
            return "EX"
        return "RB"
    if "VB" in c and prev_word in _DO_FORMS | {"to"} | {"will", "would", "shall", "should", "can",
                                                       "could", "may", "might", "must"}:
        return "VB"
    if set(c) & _VERBS and prev_core is not None and prev_word in BE_FORMS | HAVE_FORMS:
        if "VBN" in c:
            return "VBN"
        if "VBG" in c:
            return "VBG"
    if "NN" in c or "NNS" in c:
        noun = "NN" if "NN" in c else "NNS"
        if prev in _NOMINAL_LEFT or prev in _VERBS:
            if "VBG" in c and prev in {"DT", "PRP$", "JJ"} and nxt and nxt[0] in _NOUNISH:
                return "JJ"
            if prev == "IN" and "VBG" in c:
                return "VBG"
            return noun
        if prev in _SUBJECT_LEFT:
            for t in ("VBD", "VBZ", "VB"):
                if t in c:
                    return t
        if prev is None and "VB" in c and nxt and nxt[0] in {"DT", "PRP", "PRP$", "IN", "RB"}:
            return "VB"
        return c[0]
    if "VBD" in c and "VB" in c:
        if prev in _SUBJECT_LEFT:
            return "VBD"
        if prev == "CC":
            for k in range(i - 1, -1, -1):
                if tags[k] in ("VBD", "VB", "VBZ"):
                    return tags[k] if tags[k] in c else c[0]
        if prev is None or prev in {"``", ","}:
            return "VB"
        return c[0]
    if "VBD" in c and "VBN" in c:
        if (prev in {"PRP$", "JJ"} or words[i - 1] in {"the", "a", "an"}) \
                and nxt and nxt[0] in _NOUNISH:
            return "JJ"
        return "VBD"
    if "VBG" in c and prev in {"DT", "PRP$", "JJ"}:
        return "JJ" if nxt and nxt[0] in _NOUNISH else "NN"
    if "VB" in c and "JJ" in c:
        if nxt and nxt[0] in _NOUNISH | {"JJ"}:
            return "JJ"
        return "VB" if prev in _SUBJECT_LEFT else "JJ"
    if "IN" in c and "VB" in c:
        return "IN"
    return c[0]


def _contextual(words, tags, cands):
    """Second pass: corrections that need the tag to the right."""
    n = len(tags)
    for i, w in enumerate(words):
        nxt = tags[i + 1] if i + 1 < n else None
        prev = tags[i - 1] if i > 0 else None
        if w == "most" and nxt in {"JJ", "RB"}:
            tags[i] = "RBS"
        elif w == "most":
            tags[i] = "JJS"
        elif w in ("more", "less") and nxt not in {"JJ", "RB"}:
            tags[i] = "JJR"
        elif w == "'s":
            tags[i] = "POS" if prev in _NOUNISH else "VBZ"
        elif w == "no" and i == 0 and nxt == ",":
            tags[i] = "UH"
        elif tags[i] == "IN" and w in _PARTICLES and prev in _VERBS | {"RB"} and (
                nxt in {None, ",", ".", ":", "CC", "RB", "IN", "TO", "''"}):
            tags[i] = "RB"
        elif tags[i] == "IN" and nxt in {None, ",", ".", "CC", "''"} and w != "that":
            tags[i] = "RB"
        elif tags[i] == "RB" and prev in {"DT", "PRP$"} and nxt in _NOUNISH:
            tags[i] = "JJ"
        elif tags[i] == "RB" and prev in {"DT", "PRP$", "IN"} and "NN" in cands[i]:
            tags[i] = "NN"
        elif tags[i] == "RB" and w == "home" and prev == "IN":
            tags[i] = "NN"
    # a capitalized open-class word directly before a proper noun is part of the name
    return tags


def tag_sentence(tokens: list, first: int = 0, last: int | None = None) -> list:
    last = len(tokens) - 1 if last is None else last
    idx = range(first, last + 1)
    words = [tokens[i].text.lower().replace("’", "'") for i in idx]
    cands = [_candidates(tokens, i, first) for i in idx]
    n = len(words)
    tags: list = []
    for i in range(n):
        tags.append(_choose(words, cands, tags, i, n))
    tags = _contextual(words, tags, cands)
    for i in range(n - 2, -1, -1):
        tok = tokens[first + i]
        if tok.text[0].isupper() and tags[i] in {"NN", "JJ", "NNS"} and tags[i + 1] == "NNP" \
                and words[i] not in PRONOUN_LIKE_DT:
            tags[i] = "NNP"
    return tags


def pos_tag(doc):
    for sent in doc.sentences:
        for k, tag in enumerate(tag_sentence(doc.tokens, sent.first, sent.last)):
            doc.tokens[sent.first + k].pos = tag
    return doc
