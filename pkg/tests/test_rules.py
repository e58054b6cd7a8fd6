import pytest
from hypothesis import given, settings, strategies as st

from folkchar.document import Annotation, Document
from folkchar.rules import (
    MissingLayerError, RuleSyntaxError, apply_rules, bundled_rules, compile_rules,
)
from folkchar.textpipe import annotate, tokenize


def spans(doc, kind):
    return sorted(doc.span_text(a.first, a.last) for a in doc.annotations_of(kind))


def test_compile_single_rule():
    rs = compile_rules("rule DefNP\nmatch {pos=DT} {chunk=I-NP}+\ncreate DefiniteNP\n")
    assert len(rs) == 1
    (rule,) = rs
    assert rule.name == "DefNP" and rule.kind == "DefiniteNP"
    assert [e.quantifier for e in rule.pattern] == ["", "+"]


def test_compile_empty():
    assert len(compile_rules("")) == 0
    assert len(compile_rules("# only a comment\n")) == 0


def test_rule_order_is_file_order():
    rs = bundled_rules("jn")
    assert [r.name for r in rs][:3] == ["NP", "NPHead", "DefiniteNP"]


@pytest.mark.parametrize("body", [
    "match {pos=DT}% {pos=NN}\ncreate X",
    "match {pos=DT}++\ncreate X",
    "match {pos=DT\ncreate X",
    "match {}\ncreate X",
    "match {pos=DT}\ncreate X span=middle",
    "match {pos=DT}",
])
def test_malformed_rule_names_rule(body):
    with pytest.raises(RuleSyntaxError) as err:
        compile_rules("rule Broken\n" + body + "\n")
    assert err.value.rule == "Broken"
    assert err.value.line is not None


def test_attribute_needs_annotation():
    with pytest.raises(RuleSyntaxError):
        compile_rules("rule R\nmatch {concept=Frog}\ncreate X\n")


def test_definite_waiting_maid():
    doc = annotate("She took him by the hand, for she was the waiting-maid.")
    apply_rules(bundled_rules("jn"), doc)
    assert "the waiting-maid" in spans(doc, "DefiniteNP")


def test_indefinite_merchant():
    doc = annotate("John put on the dress of a merchant.")
    apply_rules(bundled_rules("jn"), doc)
    assert "a merchant" in spans(doc, "IndefiniteNP")
    assert "the dress" in spans(doc, "DefiniteNP")


def test_proper_np():
    doc = annotate("Then Faithful Henry came.")
    apply_rules(bundled_rules("jn"), doc)
    assert spans(doc, "ProperNP") == ["Faithful Henry"]


def test_empty_document_unchanged():
    doc = Document("empty", "")
    apply_rules(bundled_rules("jn"), doc)
    assert doc.annotations == []


def test_missing_layer():
    doc = Document("raw", "the frog", tokenize("the frog"))
    from folkchar.textpipe import split_sentences
    doc.sentences = split_sentences(doc.tokens)
    with pytest.raises(MissingLayerError) as err:
        apply_rules(bundled_rules("jn"), doc)
    assert err.value.layer == "chunk"


def test_subsumption_needs_ontology():
    doc = annotate("The frog came.")
    doc.add_annotation(Annotation.make("Entity", 1, 1, concept="Frog"))
    rs = compile_rules("rule R\nmatch {ann=Entity, concept<=SingleAnimal}\ncreate Beast\n")
    with pytest.raises(MissingLayerError) as err:
        apply_rules(rs, doc)
    assert err.value.layer == "ontology"


def test_subsumption_constraint(kb):
    doc = annotate("The frog met the oven.", kb=kb)
    rs = compile_rules("rule R\nmatch {ann=Entity, concept<=SingleAnimal}\ncreate Beast\n")
    apply_rules(rs, doc, kb)
    assert spans(doc, "Beast") == ["frog"]


def test_longest_match_no_overlap():
    doc = annotate("the old old old king")
    rs = compile_rules("rule R\nmatch {pos=JJ}+\ncreate Adj\n")
    apply_rules(rs, doc)
    assert spans(doc, "Adj") == ["old old old"]


def test_head_span_and_attribute_fill(kb):
    doc = annotate("the little frog", kb=kb)
    rs = compile_rules("rule R\nmatch {pos=DT} {pos=JJ}* {ann=Entity}\n"
                       "create Thing span=head what=$concept first=$0.text\n")
    apply_rules(rs, doc, kb)
    (a,) = doc.annotations_of("Thing")
    assert (a.first, a.last) == (2, 2)
    assert a.get("what") == "Frog" and a.get("first") == "the"


def test_quoted_and_wildcard_values():
    doc = annotate("Good heavens, said the girl.")
    rs = compile_rules('rule R\nmatch {text=","} {pos=*}\ncreate After\n')
    apply_rules(rs, doc)
    assert spans(doc, "After") == [", said"]


def test_rule_pipeline_on_story(kb):
    doc = annotate("The king's daughter began to cry.", kb=kb)
    for name in ("jn", "jc", "jr"):
        apply_rules(bundled_rules(name), doc, kb)
    assert "daughter" in spans(doc, "CandidateCharacter")
    (poss,) = doc.annotations_of("Possession")
    assert poss.get("owner") == "King"


SENTENCES = [
    "The king's daughter began to cry.",
    "Faithful Henry helped them both in.",
    "She took him by the hand, for she was the waiting-maid.",
    "A frog and an old witch lived in the wood with the twelve brothers.",
    "Rapunzel grew into the most beautiful child under the sun.",
]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from(SENTENCES), min_size=1, max_size=4))
def test_apply_idempotent_and_deterministic(parts):
    from folkchar.ontology import folktale_ontology
    kb = folktale_ontology()
    text = " ".join(parts)
    results = []
    for _ in range(2):
        doc = annotate(text, kb=kb)
        for name in ("jn", "jc", "jr"):
            apply_rules(bundled_rules(name), doc, kb)
        once = set(doc.annotations)
        for name in ("jn", "jc", "jr"):
            apply_rules(bundled_rules(name), doc, kb)
        assert set(doc.annotations) == once
        results.append(once)
    assert results[0] == results[1]


def test_created_annotations_rematch():
    doc = annotate("the old king and a young frog")
    rs = compile_rules("rule R\nmatch {pos=DT} {pos=JJ} {pos=NN}\ncreate Trio\n")
    apply_rules(rs, doc)
    for a in doc.annotations_of("Trio"):
        sub = annotate(doc.span_text(a.first, a.last))
        apply_rules(rs, sub)
        assert len(sub.annotations_of("Trio")) == 1
