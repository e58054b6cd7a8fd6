from __future__ import annotations

from dataclasses import dataclass, field

from ..document import Sentence
from ..textpipe import annotate
from ..textpipe.lexicon import (
    BE_FORMS, FEMALE_NAMES, FEMALE_NOUNS, MALE_NAMES, MALE_NOUNS, PRONOUNS, SPEECH_VERBS,
)

PERSON_NOUNS = {
    "child", "friend", "companion", "stranger", "person", "parent", "baby", "folk", "people",
    "family", "servant", "guest", "neighbour", "neighbor", "orphan", "creature", "one",
}
RELATIVE = {"who", "whom", "which", "whose"}
NOUN_TAGS = {"NN", "NNS", "NNP", "NNPS"}


@dataclass(frozen=True)
class Mention:
    first: int
    last: int
    kind: str            # pronoun | nominal | proper
    gender: str          # male | female | neuter | unknown
    number: str          # singular | plural | unknown
    head: int
    head_lemma: str
    sentence: int
    text: str
    person: int = 3
    relative: bool = False
    possessive: bool = False
    indefinite: bool = False

    @property
    def token_range(self):
        return (self.first, self.last)

    @property
    def mention_kind(self):
        return self.kind


@dataclass
class CoreferenceChain:
    mentions: list
    representative: Mention


@dataclass(frozen=True)
class Replacement:
    sentence: int
    token: int
    original: str
    new: str
    chain: int
    start: int           # span of the new text in the rewritten document
    end: int


@dataclass
class DecoreferencedDocument:
    doc_id: str
    text: str
    sentence_spans: list
    replacements: list = field(default_factory=list)
    chains: list = field(default_factory=list)

    @property
    def sentences(self) -> list:
        return [self.text[a:b] for a, b in self.sentence_spans]

    def origin(self, start: int, end: int):
        """The replacement whose rewritten span is exactly [start, end), if any."""
        for r in self.replacements:
            if (r.start, r.end) == (start, end):
                return r
        return None

    def to_document(self, kb=None):
        """Annotate the rewritten text keeping the original sentence boundaries."""
        from ..textpipe import tokenize
        tokens = tokenize(self.text)
        sents = []
        k = 0
        for idx, (a, b) in enumerate(self.sentence_spans):
            first = k
            while k < len(tokens) and tokens[k].start < b:
                k += 1
            if k > first:
                sents.append(Sentence(first, k - 1, len(sents)))
        return annotate(self.text, self.doc_id, kb, sentences=sents)


def _gender_of_noun(lemma: str, tag: str) -> str:
    word = lemma.rsplit("-", 1)[-1]
    if word in MALE_NOUNS or word in MALE_NAMES:
        return "male"
    if word in FEMALE_NOUNS or word in FEMALE_NAMES:
        return "female"
    if tag in ("NNP", "NNPS") or word in PERSON_NOUNS or tag in ("NNS", "NNPS"):
        return "unknown"
    return "neuter"


def _np_spans(doc, sent):
    spans = []
    i = sent.first
    while i <= sent.last:
        if doc.tokens[i].chunk == "B-NP":
            j = i
            while j + 1 <= sent.last and doc.tokens[j + 1].chunk == "I-NP":
                j += 1
            spans.append((i, j))
            i = j + 1
        else:
            i += 1
    return spans


def _nominal(doc, first, last, sent_index):
    head = None
    for k in range(last, first - 1, -1):
        if doc.tokens[k].pos in NOUN_TAGS:
            head = k
            break
    if head is None:
        return None
    tok = doc.tokens[head]
    kind = "proper" if tok.pos in ("NNP", "NNPS") else "nominal"
    number = "plural" if tok.pos in ("NNS", "NNPS") else "singular"
    lemma = (tok.lemma or tok.text).lower()
    return Mention(first, last, kind, _gender_of_noun(lemma, tok.pos), number, head, lemma,
                   sent_index, doc.span_text(first, last),
                   indefinite=(doc.tokens[first].text.lower() in ("a", "an")))


def _pronoun(doc, i, sent_index):
    tok = doc.tokens[i]
    w = tok.text.lower()
    if w not in PRONOUNS or tok.pos not in ("PRP", "PRP$", "WP", "WP$", "WDT"):
        return None
    gender, number, person = PRONOUNS[w]
    return Mention(i, i, "pronoun", gender, number, i, w, sent_index, tok.text, person,
                   relative=w in RELATIVE, possessive=tok.pos in ("PRP$", "WP$"))


def detect_mentions(doc) -> list:
    mentions = []
    for sent in doc.sentences:
        for i in range(sent.first, sent.last + 1):
            m = _pronoun(doc, i, sent.index)
            if m is not None:
                mentions.append(m)
        spans = _np_spans(doc, sent)
        merged = []
        for k, (a, b) in enumerate(spans):
            # "faithful John": a bare one-word common NP glued to the following name
            if merged and merged[-1][2] and a == merged[-1][1] + 1 \
                    and doc.tokens[a].pos in ("NNP", "NNPS"):
                prev = merged.pop()
                merged.append((prev[0], b, False))
                continue
            glue = a == b and doc.tokens[a].pos == "NN" and doc.tokens[a].text[:1].islower()
            merged.append((a, b, glue))
        for a, b, _ in merged:
            start = a
            if doc.tokens[a].pos == "PRP$":
                start = a + 1
            if start > b or doc.tokens[start].pos in ("PRP", "EX"):
                continue
            # possessor inside "the king's son"
            for k in range(start, b + 1):
                if doc.tokens[k].pos == "POS" and k > start:
                    inner = _nominal(doc, start, k - 1, sent.index)
                    if inner is not None:
                        mentions.append(inner)
                    m = _nominal(doc, k + 1, b, sent.index) if k < b else None
                    break
            m = _nominal(doc, start, b, sent.index)
            if m is not None:
                mentions.append(m)
    mentions.sort(key=lambda m: (m.first, -m.last))
    return mentions


class _Clusters:
    def __init__(self, mentions):
        self.mentions = mentions
        self.parent = list(range(len(mentions)))
        self.genders = [{m.gender} - {"unknown"} for m in mentions]
        self.numbers = [{m.number} - {"unknown"} for m in mentions]

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def compatible(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        return len(self.genders[ra] | self.genders[rb]) <= 1 and \
            len(self.numbers[ra] | self.numbers[rb]) <= 1

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return True
        if not self.compatible(ra, rb):
            return False
        lo, hi = min(ra, rb), max(ra, rb)
        self.parent[hi] = lo
        self.genders[lo] |= self.genders[hi]
        self.numbers[lo] |= self.numbers[hi]
        return True


def _string_sieves(ms, cl):
    by_text: dict = {}
    by_head: dict = {}
    for i, m in enumerate(ms):
        if m.kind == "pronoun":
            continue
        key = m.text.lower()
        if key in by_text and not m.indefinite:
            cl.union(by_text[key], i)
        by_text.setdefault(key, i)
    for i, m in enumerate(ms):
        if m.kind == "pronoun":
            continue
        if m.head_lemma in by_head and not m.indefinite:
            cl.union(by_head[m.head_lemma], i)
        by_head.setdefault(m.head_lemma, i)


_OBJECT_PRONOUNS = {"him", "her", "them", "me", "us"}
_VERB_TAGS = {"VB", "VBD", "VBG", "VBN", "VBP", "VBZ"}


def _is_subject(doc, m) -> bool:
    nxt = m.last + 1
    return nxt < len(doc.tokens) and doc.tokens[nxt].chunk == "B-VP" \
        and doc.sentence_of(nxt).index == m.sentence


def _pleonastic(doc, m) -> bool:
    if m.head_lemma != "it":
        return False
    sent = doc.sentences[m.sentence]
    rest = [t.text.lower() for t in doc.tokens[m.last + 1:sent.last + 1]]
    lemmas = [(t.lemma or "") for t in doc.tokens[m.last + 1:sent.last + 1]]
    if lemmas[:1] == ["come"] and rest[1:3] == ["to", "pass"]:
        return True
    return len(rest) >= 3 and lemmas[0] in ("be", "seem") and \
        doc.tokens[m.last + 2].pos == "JJ" and rest[2] in ("that", "to")


def _agreement(cl, ms, j, m) -> int:
    """How many of gender/number the candidate matches exactly (not just compatibly)."""
    root = cl.find(j)
    score = 0
    if m.gender != "unknown" and cl.genders[root] == {m.gender}:
        score += 1
    if m.number != "unknown" and cl.numbers[root] == {m.number}:
        score += 1
    return score


def _pronoun_sieve(ms, cl, doc):
    by_sent: dict = {}
    for i, m in enumerate(ms):
        by_sent.setdefault(m.sentence, []).append(i)

    def best(cands, m):
        return max(cands, key=lambda j: (_agreement(cl, ms, j, m), ms[j].last, -ms[j].first))

    for i, m in enumerate(ms):
        if m.kind != "pronoun" or m.person != 3 or _pleonastic(doc, m):
            continue
        here = [j for j in by_sent.get(m.sentence, []) if ms[j].last < m.first]
        if m.relative:
            for j in sorted(here, key=lambda j: (ms[j].last, -ms[j].first), reverse=True):
                if ms[j].kind != "pronoun" or not ms[j].possessive:
                    cl.union(j, i)
                    break
            continue
        blocked = set()
        before = doc.tokens[m.first - 1] if m.first > 0 else None
        governed = before is not None and (
            before.pos in _VERB_TAGS or
            (before.text.lower() == "to" and m.first > 1 and doc.tokens[m.first - 2].pos in _VERB_TAGS))
        if m.head_lemma in _OBJECT_PRONOUNS and not m.possessive and governed:
            # the subject of the governing verb cannot be the object
            subj = [j for j in here if _is_subject(doc, ms[j])]
            if subj:
                blocked = {cl.find(max(subj, key=lambda j: ms[j].last))}
        usable = [j for j in here if ms[j].person == 3 and not ms[j].relative
                  and cl.compatible(j, i) and cl.find(j) not in blocked]
        subject = next((j for j in by_sent.get(m.sentence, [])
                        if not ms[j].possessive and not ms[j].relative), None)
        if subject in usable:
            cl.union(subject, i)
            continue
        if usable:
            cl.union(best(usable, m), i)
            continue
        prev = [j for j in by_sent.get(m.sentence - 1, []) if ms[j].person == 3
                and not ms[j].relative and cl.compatible(j, i) and cl.find(j) not in blocked]
        if prev:
            cl.union(best(prev, m), i)


def _copular_sieve(ms, cl, doc):
    starts = {m.first: i for i, m in enumerate(ms) if m.kind != "pronoun" or not m.possessive}
    for i, m in enumerate(ms):
        if m.person != 3 or m.relative or m.possessive:
            continue
        k = m.last + 1
        sent = doc.sentences[m.sentence]
        saw_be = False
        while k <= sent.last and (doc.tokens[k].text.lower() in BE_FORMS
                                  or (saw_be and doc.tokens[k].pos == "RB")):
            saw_be = saw_be or doc.tokens[k].text.lower() in BE_FORMS
            k += 1
        if not saw_be or k > sent.last:
            continue
        j = starts.get(k)
        if j is not None and ms[j].kind != "pronoun":
            cl.union(i, j)


def _quote_segments(doc):
    segments = []
    start = None
    for i, tok in enumerate(doc.tokens):
        if tok.pos == "``":
            start = i + 1
        elif tok.pos == "''" and start is not None:
            segments.append((start, i - 1))
            start = None
    return segments


def _dialogue_sieve(ms, cl, doc):
    segments = _quote_segments(doc)
    inside = set()
    for a, b in segments:
        inside.update(range(a, b + 1))
    prev_speaker = prev_addressee = None
    for a, b in segments:
        sent = doc.sentence_of(a)
        in_seg = [i for i, m in enumerate(ms) if a <= m.first and m.last <= b]
        addressee = speaker = None
        k = a
        while k <= b and (doc.tokens[k].pos in ("UH", ",") or doc.tokens[k].text.lower() == "no"):
            k += 1
        voc = next((i for i in in_seg if ms[i].first == k), None)
        if voc is not None and ms[voc].kind != "pronoun" and ms[voc].last + 1 <= b \
                and doc.tokens[ms[voc].last + 1].text == ",":
            addressee = voc
        outside = [i for i, m in enumerate(ms) if m.sentence == sent.index
                   and m.first not in inside and not m.possessive and not m.relative]
        for v in range(sent.first, sent.last + 1):
            if v in inside or (doc.tokens[v].lemma or "") not in SPEECH_VERBS \
                    or not (doc.tokens[v].pos or "").startswith("VB"):
                continue
            before = [i for i in outside if ms[i].last < v]
            after = [i for i in outside if ms[i].first > v]
            if v < a:
                # "he cried, ..." or inverted "said the girl, ..."
                between = [i for i in after if ms[i].last < a]
                subjects = [i for i in before if _is_subject(doc, ms[i])]
                pool = subjects or before
                if pool:
                    speaker = max(pool, key=lambda i: (ms[i].last, -ms[i].first))
                elif between:
                    speaker = between[0]
            else:
                # "..., said he" or "..., he said"
                post = [i for i in after if ms[i].first == v + 1]
                pre = [i for i in before if ms[i].first > b]
                speaker = post[0] if post else (pre[-1] if pre else None)
            if v + 1 <= sent.last and doc.tokens[v + 1].text.lower() == "to" and after \
                    and ms[after[0]].first == v + 2 and addressee is None:
                addressee = after[0]
            break
        if speaker is None and prev_addressee is not None:
            speaker = prev_addressee
        if addressee is None and prev_speaker is not None and (
                speaker is None or cl.find(prev_speaker) != cl.find(speaker)):
            addressee = prev_speaker
        for i in in_seg:
            m = ms[i]
            if m.kind != "pronoun":
                continue
            if m.person == 1 and m.number != "plural" and speaker is not None:
                cl.union(speaker, i)
            elif m.person == 2 and addressee is not None:
                cl.union(addressee, i)
        prev_speaker, prev_addressee = speaker, addressee


def find_representative(chain) -> Mention:
    mentions = chain.mentions if isinstance(chain, CoreferenceChain) else list(chain)
    if not mentions:
        raise ValueError("empty chain")
    ordered = sorted(mentions, key=lambda m: (m.first, -m.last))
    for m in ordered:
        if m.kind == "proper":
            return m
    nominals = [m for m in ordered if m.kind == "nominal"]
    if nominals:
        return max(nominals, key=lambda m: (m.last - m.first, -m.first))
    return ordered[0]


def resolve(doc, mentions=None) -> list:
    ms = detect_mentions(doc) if mentions is None else sorted(mentions, key=lambda m: (m.first, -m.last))
    cl = _Clusters(ms)
    _string_sieves(ms, cl)
    _pronoun_sieve(ms, cl, doc)
    _copular_sieve(ms, cl, doc)
    _dialogue_sieve(ms, cl, doc)
    groups: dict = {}
    for i in range(len(ms)):
        groups.setdefault(cl.find(i), []).append(ms[i])
    chains = []
    for root in sorted(groups):
        members = groups[root]
        if len(members) < 2 or all(m.kind == "pronoun" for m in members):
            continue
        chain = CoreferenceChain(members, members[0])
        chain.representative = find_representative(chain)
        chains.append(chain)
    return chains


def _replacement_text(doc, m, rep, sentence_start: bool) -> str | None:
    rep_tok = doc.tokens[rep.head]
    head = rep_tok.text if rep.kind == "proper" else rep_tok.text.lower()
    if m.kind == "pronoun":
        if m.relative:
            return None
        if rep.kind == "proper" and m.possessive:
            head = head.lower()
    elif m.head_lemma == rep.head_lemma:
        return None
    if sentence_start and rep.kind != "proper":
        head = head[:1].upper() + head[1:]
    return head


def decoreference_document(doc, chains=None) -> DecoreferencedDocument:
    chains = resolve(doc) if chains is None else chains
    edits = {}
    for ci, chain in enumerate(chains):
        rep = chain.representative
        for m in chain.mentions:
            if m is rep:
                continue
            tok_index = m.head
            if tok_index in edits:
                continue
            if (m.first, m.last) == (rep.first, rep.last):
                continue
            sent = doc.sentences[m.sentence]
            new = _replacement_text(doc, m, rep, tok_index == sent.first)
            if new is None or new == doc.tokens[tok_index].text:
                continue
            edits[tok_index] = (new, ci)
    text = doc.source_text
    pieces = []
    cursor = 0
    shift_at = []
    new_len = 0
    for k in sorted(edits):
        tok = doc.tokens[k]
        pieces.append(text[cursor:tok.start])
        new_len += tok.start - cursor
        new, ci = edits[k]
        shift_at.append((k, new_len, new_len + len(new), new, ci))
        pieces.append(new)
        new_len += len(new)
        cursor = tok.end
    pieces.append(text[cursor:])
    new_text = "".join(pieces)

    def moved(offset):
        delta = 0
        for k, _, _, new, _ in shift_at:
            tok = doc.tokens[k]
            if tok.end <= offset:
                delta += len(new) - (tok.end - tok.start)
        return offset + delta

    spans = [(moved(doc.tokens[s.first].start), moved(doc.tokens[s.last].end)) for s in doc.sentences]
    reps = [Replacement(doc.sentence_of(k).index, k, doc.tokens[k].text, new, ci, a, b)
            for k, a, b, new, ci in shift_at]
    return DecoreferencedDocument(doc.id, new_text, spans, reps, chains)


def decoreference(doc_or_text, doc_id: str = "doc") -> DecoreferencedDocument:
    doc = annotate(doc_or_text, doc_id) if isinstance(doc_or_text, str) else doc_or_text
    return decoreference_document(doc)


def _span(doc, m) -> str:
    sent = doc.sentences[m.sentence]
    return f"{m.sentence}:{m.first - sent.first}-{m.last - sent.first}"


def dump_chains(doc, chains) -> str:
    lines = []
    for chain in chains:
        spans = ",".join(_span(doc, m) for m in chain.mentions)
        lines.append(f"{doc.id}\t{_span(doc, chain.representative)}\t{spans}")
    return "\n".join(lines) + ("\n" if lines else "")


def chains_from_dump(dump: str) -> list:
    """Parse a chain dump into (doc_id, rep_span, [spans]) tuples of (sentence, first, last)."""
    def parse(s):
        sent, rng = s.split(":")
        a, b = rng.split("-")
        return int(sent), int(a), int(b)
    out = []
    for line in dump.splitlines():
        if not line.strip():
            continue
        doc_id, rep, spans = line.split("\t")
        out.append((doc_id, parse(rep), [parse(s) for s in spans.split(",")]))
    return out
