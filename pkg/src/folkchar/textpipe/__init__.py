"""Deterministic rule-based text processing."""
from __future__ import annotations

from ..document import Document
from .chunker import chunk, chunk_tags, is_valid_bio
from .lemmatizer import lemma_of, lemmatize
from .ner import build_gazetteer, concept_phrase, ner_gazetteer
from .tagger import PENN_TAGS, pos_tag, tag_sentence
from .tokenizer import split_sentences, tokenize

__all__ = [
    "tokenize", "split_sentences", "pos_tag", "tag_sentence", "lemmatize", "lemma_of", "chunk",
    "chunk_tags", "is_valid_bio", "ner_gazetteer", "build_gazetteer", "concept_phrase",
    "annotate", "dump_document", "load_dump", "PENN_TAGS",
]


def annotate(text: str, doc_id: str = "doc", kb=None, sentences=None) -> Document:
    """Run the full pipeline; ``sentences`` forces given sentence boundaries (token ranges)."""
    tokens = tokenize(text)
    doc = Document(doc_id, text, tokens)
    doc.sentences = sentences if sentences is not None else split_sentences(tokens)
    pos_tag(doc)
    lemmatize(doc)
    chunk(doc)
    if kb is not None:
        ner_gazetteer(doc, kb)
    return doc


def dump_document(doc: Document) -> str:
    blocks = []
    for sent in doc.sentences:
        lines = []
        for i in range(sent.first, sent.last + 1):
            t = doc.tokens[i]
            lines.append("\t".join([str(i), t.text, str(t.start), str(t.end),
                                    t.pos or "", t.lemma or "", t.chunk or ""]))
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + ("\n" if blocks else "")


def load_dump(dump: str, source_text: str, doc_id: str = "doc") -> Document:
    """Rebuild a Document (tokens, sentences, tags) from a dump and its source text."""
    from ..document import Sentence, Token
    doc = Document(doc_id, source_text)
    for block in dump.strip("\n").split("\n\n") if dump.strip() else []:
        first = len(doc.tokens)
        for line in block.splitlines():
            idx, text, start, end, pos, lemma, chk = line.split("\t")
            doc.tokens.append(Token(text, int(start), int(end), pos or None, lemma or None,
                                    chk or None))
        doc.sentences.append(Sentence(first, len(doc.tokens) - 1, len(doc.sentences)))
    return doc
