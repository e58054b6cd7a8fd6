"""Tokenization and sentence splitting.

Token spans are character offsets into the source string, so
``text[t.start:t.end] == t.text`` always holds.
"""
from __future__ import annotations

import re

from ..document import Sentence, Token
from .lexicon import ABBREVIATIONS

_TOKEN_RE = re.compile(
    r"\.\.\.|--|"
    r"\d+(?:[.,]\d+)*|"
    r"[^\W_]+(?:[-'’][^\W_]+)*|"
    r"\S",
)
_CLITICS = ("n't", "'s", "'re", "'ve", "'ll", "'d", "'m")
_TERMINAL = {".", "!", "?", "..."}
_QUOTES = {'"', "'", "“", "”", "‘", "’"}
_CLOSERS = {")", "]", "”", "’"}


def _split_clitic(text: str) -> int:
    """Length of a trailing clitic (0 if none)."""
    low = text.lower().replace("’", "'")
    for clitic in _CLITICS:
        if low.endswith(clitic) and len(low) > len(clitic):
            return len(clitic)
    return 0


def tokenize(text: str) -> list:
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        start, end, word = m.start(), m.end(), m.group()
        if word == "." and tokens and tokens[-1].end == start \
                and tokens[-1].text.lower() in ABBREVIATIONS:
            prev = tokens[-1]
            tokens[-1] = Token(prev.text + ".", prev.start, end)
            continue
        cut = _split_clitic(word) if word[0].isalpha() else 0
        if cut:
            tokens.append(Token(word[:-cut], start, end - cut))
            tokens.append(Token(word[-cut:], end - cut, end))
        else:
            tokens.append(Token(word, start, end))
    return tokens


def is_opening_quote(tokens: list, i: int, text: str | None = None) -> bool:
    """A quote opens when it is preceded by space (or nothing) and attached to the next token."""
    tok = tokens[i]
    if tok.text in ("“", "‘"):
        return True
    if tok.text in ("”", "’"):
        return False
    before_gap = i == 0 or tokens[i - 1].end < tok.start
    after_attached = i + 1 < len(tokens) and tokens[i + 1].start == tok.end
    return before_gap and after_attached


def split_sentences(tokens: list) -> list:
    sentences = []
    first = 0
    i = 0
    n = len(tokens)
    while i < n:
        if tokens[i].text in _TERMINAL:
            j = i + 1
            while j < n and (tokens[j].text in _CLOSERS or
                             (tokens[j].text in _QUOTES and not is_opening_quote(tokens, j))):
                j += 1
            nxt = tokens[j] if j < n else None
            if nxt is None or not nxt.text[0].islower():
                sentences.append(Sentence(first, j - 1, len(sentences)))
                first = j
            i = j
            continue
        i += 1
    if first < n:
        sentences.append(Sentence(first, n - 1, len(sentences)))
    return sentences
