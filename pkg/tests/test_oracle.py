"""Reasoner versus an independent SAT-based bounded-model oracle."""
import pytest

from dl_oracle import oracle_hierarchy
from folkchar.ontology import Atomic, classify, folktale_ontology, is_subsumed, parse_ontology


@pytest.fixture(scope="module")
def oracle():
    return oracle_hierarchy(folktale_ontology(), max_size=3)


def test_classify_agrees_with_oracle(oracle):
    kb = folktale_ontology()
    h = classify(kb)
    mismatches = [(a, b) for a in sorted(kb.concepts) for b in sorted(kb.concepts)
                  if h.entails(a, b) != (b in oracle[a])]
    assert mismatches == []


def test_is_subsumed_agrees_with_oracle(oracle):
    kb = folktale_ontology()
    mismatches = [(a, b) for a in sorted(kb.concepts) for b in sorted(kb.concepts)
                  if is_subsumed(kb, Atomic(a), Atomic(b)) != (b in oracle[a])]
    assert mismatches == []


def test_oracle_sees_existential_consequences():
    kb = parse_ontology("concept A\nconcept B\nconcept C\nrole r range C\n"
                        "sub A (some r B)\nsub (some r C) B\n")
    o = oracle_hierarchy(kb)
    assert "B" in o["A"]
    assert classify(kb).entails("A", "B")


def test_oracle_finds_counter_models():
    kb = parse_ontology("concept A\nconcept B\nsub A (or A B)\n")
    assert oracle_hierarchy(kb)["A"] == {"A"}
