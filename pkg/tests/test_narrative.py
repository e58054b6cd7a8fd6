import re

import pytest

from conftest import analysed, story_text
from fixtures import HENRY_REFERENCE_ITEMS, matched_items
from folkchar.coref import decoreference_document, resolve
from folkchar.narrative import (
    NO_PERSPECTIVE, PerspectiveReport, extract_characters, find_perspective, format_characters,
    format_perspectives, mention_pattern, parse_characters,
)
from folkchar.narrative.characters import check_cast
from folkchar.ontology import parse_ontology, realize
from folkchar.openie import extract_triplets
from folkchar.rules import bundled_rules
from folkchar.textpipe import annotate

STORIES = ["frog_king", "faithful_john", "rapunzel", "twelve_brothers",
           "kings_son_who_feared_nothing", "magic_swan_geese", "three_little_men_in_the_woods"]
RULES = [bundled_rules(n) for n in ("jn", "jc", "jr")]


def characters(kb, text, doc_id="doc"):
    doc = annotate(text, doc_id, kb)
    return {c.canonical_name: c for c in extract_characters(kb, doc, *RULES)}


def report(doc_id, name, long_version):
    a = analysed(doc_id)
    (r,) = find_perspective(a.characters, a.decoref, a.records, long_version, name)
    return r


# -- character extraction -----------------------------------------------------

def test_frog_king_has_henry():
    names = {c.canonical_name for c in analysed("frog_king").characters}
    assert "Henry" in names


def test_empty_document(kb):
    assert characters(kb, "") == {}


def test_daughter_concepts(kb):
    chars = characters(kb, "The king's daughter began to cry.")
    assert {"Daughter", "Girl", "Child", "Maiden", "SinglePerson"} <= chars["daughter"].concepts
    # the possessing king is a parent, which makes her a princess
    assert "Princess" in chars["daughter"].concepts


def test_son_of_king_is_prince(kb):
    chars = characters(kb, "The king's son rode out.")
    assert {"Prince", "Son"} <= chars["son"].concepts


def test_concepts_equal_realization(kb):
    recs = characters(kb, story_text("rapunzel"), "rapunzel")
    assert recs
    for rec in recs.values():
        assert rec.concepts == realize(kb, rec.individual_id)
        assert rec.individual_id in kb.individuals
        assert rec.mention_count >= 1 and rec.source_doc == "rapunzel"


def test_every_character_populates_abox(kb):
    recs = characters(kb, story_text("frog_king"), "frog_king")
    assert {r.individual_id for r in recs.values()} <= set(kb.individuals)


def test_mentions_within_document():
    for doc_id in STORIES:
        a = analysed(doc_id)
        for c in a.characters:
            for first, last in c.mention_spans:
                assert 0 <= first <= last < len(a.doc.tokens)


def test_extraction_deterministic(kb):
    from folkchar.ontology import folktale_ontology
    a = format_characters(characters(kb, story_text("twelve_brothers"), "t").values())
    b = format_characters(characters(folktale_ontology(), story_text("twelve_brothers"), "t").values())
    assert a == b


def test_check_cast_refuses_inconsistency():
    kb = parse_ontology("concept Hero\nconcept Villain\ndisjoint Hero Villain\n")
    kb.add_individual("x")
    assert check_cast(kb, "x", "Hero")
    assert not check_cast(kb, "x", "Villain")
    assert realize(kb, "x") == {"Hero"}


def test_character_report_round_trip():
    recs = analysed("frog_king").characters
    parsed = parse_characters(format_characters(recs))
    assert [(p[0], p[1], p[2], p[3]) for p in parsed] == [
        (r.canonical_name, r.concepts, r.mention_count, r.source_doc)
        for r in sorted(recs, key=lambda r: r.canonical_name.lower())]


# -- perspective --------------------------------------------------------------

def test_mention_pattern_boundaries():
    pat = mention_pattern(["king"])
    assert pat.search("the King came")
    assert not pat.search("the kingdom was wide")
    assert mention_pattern(["faithful Henry"]).search("Faithful\nHenry")
    assert mention_pattern([]) is None


def test_henry_short():
    r = report("frog_king", "Henry", False)
    assert r.version == "short" and r.found
    assert "Henry was full of joy" in r.items
    assert any("iron bands" in item for item in r.items)
    assert len(matched_items(r.items, HENRY_REFERENCE_ITEMS)) >= 4


def test_henry_long_literal_sentences():
    text = story_text("frog_king")
    doc = annotate(text)
    literal = {s.index for s in doc.sentences if re.search(r"\bHenry\b", doc.sentence_text(s))}
    r = report("frog_king", "Henry", True)
    assert literal <= set(r.indices)
    assert r.indices == sorted(set(r.indices))


def test_waiting_maid_has_no_perspective():
    for long_version in (True, False):
        r = report("faithful_john", "waiting-maid", long_version)
        assert not r.found
        assert r.lines()[-1] == NO_PERSPECTIVE


def test_unknown_character_report():
    a = analysed("frog_king")
    (r,) = find_perspective(a.characters, a.decoref, a.records, True, "dragon")
    assert r.items == [] and r.lines() == ["dragon/long", NO_PERSPECTIVE]


@pytest.mark.parametrize("doc_id", STORIES)
def test_items_are_document_parts(doc_id):
    a = analysed(doc_id)
    sentences = {" ".join(s.split()) for s in a.decoref.sentences}
    triplet_texts = {r.as_text() for r in a.records}
    for r in find_perspective(a.characters, a.decoref, a.records, True):
        assert set(r.items) <= sentences
    for r in find_perspective(a.characters, a.decoref, a.records, False):
        assert set(r.items) <= triplet_texts


@pytest.mark.parametrize("doc_id", STORIES)
def test_literal_mention_recall(doc_id):
    a = analysed(doc_id)
    with_records = {r.sentence_index for r in a.records}
    for c in a.characters:
        (r,) = find_perspective(a.characters, a.decoref, a.records, True, c.canonical_name)
        pat = mention_pattern([c.canonical_name])
        expected = {i for i, s in enumerate(a.decoref.sentences) if pat.search(s)} & with_records
        assert expected <= set(r.indices), c.canonical_name


def test_report_format():
    reports = [PerspectiveReport("Henry", "long", ["A sentence."], [3]),
               PerspectiveReport("frog", "short", [], [])]
    assert format_perspectives(reports) == "Henry/long\n3\tA sentence.\n\nfrog/short\n" + \
        NO_PERSPECTIVE + "\n"


def test_pipeline_pieces_compose(kb):
    text = story_text("rapunzel")
    doc = annotate(text, "rapunzel", kb)
    chains = resolve(doc)
    d = decoreference_document(doc, chains)
    records = extract_triplets(d.to_document())
    chars = extract_characters(kb, doc, *RULES, chains=chains)
    (r,) = find_perspective(chars, d, records, True, "Rapunzel")
    assert r.found
