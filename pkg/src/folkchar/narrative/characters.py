from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field

from ..coref import detect_mentions, resolve
from ..document import Annotation
from ..ontology import (
    Atomic, ConceptAssertion, RoleAssertion, check_consistency, realize,
)
from ..rules import apply_rules
from ..textpipe import ner_gazetteer

log = logging.getLogger(__name__)

CHILD_NOUNS = {"son", "daughter", "child", "children", "sons", "daughters"}
MAX_ROUNDS = 50


@dataclass
class CharacterRecord:
    canonical_name: str
    mention_spans: list
    concepts: frozenset
    individual_id: str
    source_doc: str
    mention_texts: tuple = ()

    @property
    def mention_count(self) -> int:
        return len(self.mention_spans)


@dataclass
class _Draft:
    name: str
    ind: str
    lemma: str
    spans: set = field(default_factory=set)
    texts: set = field(default_factory=set)


def _individual_id(doc_id: str, name: str) -> str:
    return doc_id + ":" + re.sub(r"\s+", "_", name)


def check_cast(kb, ind: str, concept: str) -> bool:
    """Assert ``ind : concept`` unless that would make ``ind`` inconsistent."""
    trial = kb.copy()
    trial.assert_concept(ind, Atomic(concept))
    report = check_consistency(trial)
    if report.involving(ind):
        log.info("not asserting %s for %s: %s", concept, ind, report.involving(ind)[0])
        return False
    kb.assert_concept(ind, Atomic(concept))
    return True


def extract_characters(kb, doc, jn, jc, jr, chains=None) -> list:
    """Populate ``kb`` with the document's characters and return their records."""
    if not doc.tokens:
        return []
    if not doc.annotations_of("Entity"):
        ner_gazetteer(doc, kb)
    chains = resolve(doc) if chains is None else chains
    mentions = detect_mentions(doc)
    chain_of = {}
    for chain in chains:
        for m in chain.mentions:
            chain_of.setdefault(m.head, chain)

    apply_rules(jn, doc, kb)
    drafts: dict = {}
    seen: set = set()
    for _ in range(MAX_ROUNDS):
        apply_rules(jc, doc, kb)
        fresh = sorted({(a.first, a.last) for a in doc.annotations_of("CandidateCharacter")} - seen)
        if not fresh:
            break
        seen.update(fresh)
        apply_rules(jr, doc, kb)
        relations = doc.annotations_of("ConceptRelation")
        possessions = doc.annotations_of("Possession")
        for first, last in fresh:
            head = last
            tok = doc.tokens[head]
            proper = tok.pos in ("NNP", "NNPS")
            lemma = (tok.lemma or tok.text).lower()
            chain = chain_of.get(head)
            name = tok.text if proper else lemma
            rep = chain.representative if chain else None
            if rep is not None and rep.head_lemma == lemma:
                name = doc.tokens[rep.head].text if rep.kind == "proper" else rep.head_lemma
            key = name.lower()
            draft = drafts.get(key)
            if draft is None:
                draft = drafts[key] = _Draft(name, _individual_id(doc.id, name), lemma)
                kb.add_individual(draft.ind, name)
                kb.assert_concept(draft.ind, Atomic("Character"))
            concepts = sorted({a.get("concept") for a in relations if a.covers(head) and a.get("concept")})
            for concept in concepts:
                check_cast(kb, draft.ind, concept)
            for poss in possessions:
                if poss.last == head and lemma in CHILD_NOUNS and poss.get("owner"):
                    owner_tok = doc.tokens[poss.first]
                    owner_name = (owner_tok.lemma or owner_tok.text).lower()
                    owner = drafts.get(owner_name)
                    owner_id = owner.ind if owner else _individual_id(doc.id, owner_name)
                    if owner is None:
                        kb.add_individual(owner_id, owner_name)
                    kb.assert_concept(owner_id, Atomic(poss.get("owner")))
                    kb.assert_role("hasParent", draft.ind, owner_id)
            linked = _is_referred(doc, mentions, draft, chain)
            for m in linked:
                draft.spans.add((m.first, m.last))
                if m.kind != "pronoun":
                    draft.texts.add(" ".join(m.text.split()))
            # inferred concepts become gazetteer hits on the linked mentions
            for concept in concepts:
                for m in linked:
                    if m.kind != "pronoun":
                        doc.add_annotation(Annotation.make("Entity", m.head, m.head, concept=concept))
    else:
        log.warning("character extraction stopped after %d rounds", MAX_ROUNDS)

    records = []
    for key in sorted(drafts):
        d = drafts[key]
        records.append(CharacterRecord(
            d.name, sorted(d.spans), frozenset(realize(kb, d.ind)), d.ind, doc.id,
            tuple(sorted(d.texts))))
    return records


def _is_referred(doc, mentions, draft, chain) -> list:
    """Mentions of the same character: same head lemma, plus its chain when the chain is about it."""
    out = {(m.first, m.last, m.kind): m for m in mentions
           if m.kind != "pronoun" and m.head_lemma == draft.lemma}
    if chain is not None and chain.representative.head_lemma == draft.lemma:
        for m in chain.mentions:
            out[(m.first, m.last, m.kind)] = m
    return [out[k] for k in sorted(out)]


def format_characters(records) -> str:
    lines = [f"{r.canonical_name}\t{','.join(sorted(r.concepts))}\t{r.mention_count}\t{r.source_doc}"
             for r in sorted(records, key=lambda r: (r.source_doc, r.canonical_name.lower()))]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_characters(text: str) -> list:
    """Read a character report back as (name, concepts, mention count, doc_id) tuples."""
    out = []
    for line in text.splitlines():
        if not line.strip():
            continue
        name, concepts, count, doc_id = line.split("\t")
        out.append((name, frozenset(c for c in concepts.split(",") if c), int(count), doc_id))
    return out
