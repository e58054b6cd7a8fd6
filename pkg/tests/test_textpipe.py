from hypothesis import given, settings, strategies as st

from conftest import story_text
from fixtures import REFERENCE_TRIPLETS
from folkchar.document import Document
from folkchar.textpipe import (
    PENN_TAGS, annotate, chunk_tags, dump_document, is_valid_bio, lemma_of, load_dump,
    ner_gazetteer, split_sentences, tag_sentence, tokenize,
)
from folkchar.textpipe.chunker import CHUNK_RE

STORIES = ["frog_king", "faithful_john", "rapunzel", "twelve_brothers",
           "kings_son_who_feared_nothing", "magic_swan_geese", "three_little_men_in_the_woods"]


def texts(tokens):
    return [t.text for t in tokens]


def tags(doc):
    return " ".join(t.pos for t in doc.tokens)


def chunks(doc):
    return " ".join(t.chunk for t in doc.tokens)


# -- tokenizer ---------------------------------------------------------------

def test_possessive_split():
    assert texts(tokenize("the king's daughter")) == ["the", "king", "'s", "daughter"]


def test_empty_input():
    assert tokenize("") == []


def test_punctuation_tokens():
    toks = tokenize("Henry, the carriage is breaking.")
    assert texts(toks) == ["Henry", ",", "the", "carriage", "is", "breaking", "."]


def test_clitics():
    assert texts(tokenize("I don't know")) == ["I", "do", "n't", "know"]


def test_offsets_are_characters():
    text = "Ça va, Hänsel?"
    for t in tokenize(text):
        assert text[t.start:t.end] == t.text


def reconstruct(text, toks):
    out, pos = [], 0
    for t in toks:
        assert t.start >= pos and t.end > t.start
        assert text[pos:t.start].strip() == ""
        out.append(text[pos:t.start])
        out.append(t.text)
        pos = t.end
    out.append(text[pos:])
    return "".join(out)


@settings(max_examples=200, deadline=None)
@given(st.text(alphabet="abcAB '\".,;!?-\n\t’‘“”é", max_size=60))
def test_tokenization_lossless(text):
    toks = tokenize(text)
    assert reconstruct(text, toks) == text
    assert all(text[t.start:t.end] == t.text for t in toks)


# -- sentences ---------------------------------------------------------------

def test_frog_king_sentences():
    doc = annotate(story_text("frog_king"))
    assert len(doc.sentences) >= 8


def test_single_sentence_without_period():
    assert len(split_sentences(tokenize("the frog sat by the well"))) == 1


def test_abbreviation_does_not_split():
    assert len(split_sentences(tokenize("Mr. Smith left."))) == 1


def test_closing_quote_stays_with_sentence():
    toks = tokenize('"Stop!" he said. Then he left.')
    sents = split_sentences(toks)
    assert texts(toks[sents[0].first:sents[0].last + 1])[-1] == "."
    assert len(sents) == 2


def test_sentences_partition_tokens():
    for doc_id in STORIES:
        doc = annotate(story_text(doc_id))
        expected = 0
        for n, s in enumerate(doc.sentences):
            assert s.first == expected and s.index == n and s.last >= s.first
            expected = s.last + 1
        assert expected == len(doc.tokens)


# -- tagging, lemmas, chunks -------------------------------------------------

def test_reference_row5_tags_and_chunks():
    sentence, *_, pos, chk = REFERENCE_TRIPLETS[4]
    doc = annotate(sentence)
    assert tags(doc) == pos
    assert chunks(doc) == chk


def test_reference_row1_tags():
    doc = annotate(REFERENCE_TRIPLETS[0][0])
    assert tags(doc) == REFERENCE_TRIPLETS[0][5]
    assert "NNS VB IN NN" in tags(doc)


def test_afraid_of_region():
    doc = annotate(REFERENCE_TRIPLETS[1][0])
    words = [t.text for t in doc.tokens]
    i = words.index("afraid")
    assert [t.chunk for t in doc.tokens[i - 1:i + 2]] == ["B-VP", "B-ADJP", "B-PP"]


def test_unknown_capitalized_word_is_proper():
    doc = annotate("Then Zorbul came.")
    assert doc.tokens[1].pos == "NNP"


def test_unknown_lowercase_defaults_to_noun():
    doc = annotate("the blorf")
    assert doc.tokens[1].pos == "NN"


def test_tag_sentence_is_pure():
    toks = tokenize("The frog jumped into the well.")
    assert tag_sentence(toks, 0, len(toks) - 1) == tag_sentence(toks, 0, len(toks) - 1)


def test_all_tags_are_penn():
    for doc_id in STORIES:
        doc = annotate(story_text(doc_id))
        assert {t.pos for t in doc.tokens} <= PENN_TAGS


def test_lemmas():
    assert lemma_of("went", "VBD") == "go"
    assert lemma_of("strawberries", "NNS") == "strawberry"
    assert lemma_of("king", "NN") == "king"
    assert lemma_of("Kings", "NNS") == "king"


def test_chunk_all_punctuation():
    assert chunk_tags([",", ".", ":"], [",", ".", ":"]) == ["O", "O", "O"]


def test_bio_validity_checker():
    assert is_valid_bio(["B-NP", "I-NP", "O", "B-VP"])
    assert not is_valid_bio(["O", "I-NP"])
    assert not is_valid_bio(["B-NP", "I-VP"])


def test_corpus_chunks_valid():
    for doc_id in STORIES:
        doc = annotate(story_text(doc_id))
        for s in doc.sentences:
            seq = [t.chunk for t in doc.sentence_tokens(s)]
            assert is_valid_bio(seq)
            assert all(CHUNK_RE.match(c) for c in seq)


_TAGS = sorted(PENN_TAGS)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.sampled_from(_TAGS), max_size=25))
def test_chunker_always_bio_valid(tag_seq):
    words = ["x"] * len(tag_seq)
    out = chunk_tags(tag_seq, words)
    assert len(out) == len(tag_seq)
    assert is_valid_bio(out)
    assert out == chunk_tags(list(tag_seq), list(words))


# -- gazetteer ---------------------------------------------------------------

def entities(doc, kind="Entity"):
    return {(doc.span_text(a.first, a.last), a.get("concept") or a.get("value"))
            for a in doc.annotations_of(kind)}


def test_frog_is_entity(kb):
    doc = annotate("The frog sat there.", kb=kb)
    assert ("frog", "Frog") in entities(doc)


def test_winter_is_temporal(kb):
    doc = annotate(REFERENCE_TRIPLETS[0][0], kb=kb)
    assert ("winter", "winter") in entities(doc, "Temporal")


def test_numbers(kb):
    doc = annotate("He had 12 sons.", kb=kb)
    assert ("12", "12") in entities(doc, "Number")


def test_xylophone_not_annotated(kb):
    doc = annotate("The xylophone sat there.", kb=kb)
    assert entities(doc) == set()


def test_camel_case_concepts(kb):
    doc = annotate("She was a single animal.", kb=kb)
    assert ("single animal", "SingleAnimal") in entities(doc)


def test_plural_lemma_match(kb):
    doc = annotate("Two kings came.", kb=kb)
    assert ("kings", "King") in entities(doc)


def test_gazetteer_concepts_declared(kb):
    for doc_id in STORIES:
        doc = annotate(story_text(doc_id), kb=kb)
        assert {a.get("concept") for a in doc.annotations_of("Entity")} <= kb.concepts


def test_ner_on_empty_document(kb):
    doc = Document("empty", "")
    ner_gazetteer(doc, kb)
    assert doc.annotations == []


# -- dump format -------------------------------------------------------------

def test_dump_round_trip():
    text = story_text("rapunzel")
    doc = annotate(text)
    dump = dump_document(doc)
    again = load_dump(dump, text)
    assert [(t.text, t.start, t.end, t.pos, t.lemma, t.chunk) for t in again.tokens] == \
        [(t.text, t.start, t.end, t.pos, t.lemma, t.chunk) for t in doc.tokens]
    assert again.sentences == doc.sentences
    assert dump_document(again) == dump


def test_dump_layout():
    dump = dump_document(annotate("The frog sat. It jumped."))
    blocks = dump.rstrip("\n").split("\n\n")
    assert len(blocks) == 2
    assert blocks[0].splitlines()[0] == "0\tThe\t0\t3\tDT\tthe\tB-NP"
