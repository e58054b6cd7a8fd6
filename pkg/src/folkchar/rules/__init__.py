"""Pattern rules over tokens and annotations.

Rule file syntax, one block per rule::

    rule <Name>
    match <elem> <elem> ...
    create <Kind> [attr=value ...] [span=full|head]

An element is ``{key=value, ...}`` optionally followed by ``?``, ``+`` or
``*``.  Token keys are ``text``, ``lemma``, ``pos`` and ``chunk``; ``ann=Kind``
makes the element consume a whole annotation of that kind, and the keys
after it constrain that annotation's attributes.  Values may be quoted,
use ``|`` for alternatives and ``*`` for anything.  ``concept<=A|B`` holds
when the attribute names a concept subsumed by one of the listed concepts.
In ``create``, ``$attr`` copies an attribute bound by the match (the last
element that has it) and ``$N.attr`` reads it from element N.  Token
elements bind ``text``, ``lemma`` and ``pos`` of their first token.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources

from ..document import Annotation

__all__ = [
    "RuleSyntaxError", "MissingLayerError", "Constraint", "PatternElem", "AnnotationRule",
    "RuleSet", "compile_rules", "apply_rules", "load_rules", "bundled_rules",
]

TOKEN_KEYS = {"text", "lemma", "pos", "chunk"}
QUANTIFIERS = {"": (1, 1), "?": (0, 1), "+": (1, None), "*": (0, None)}
NOUN_TAGS = {"NN", "NNS", "NNP", "NNPS"}


class RuleSyntaxError(ValueError):
    def __init__(self, message, rule=None, line=None):
        self.rule, self.line = rule, line
        where = " ".join(p for p in (f"rule {rule!r}" if rule else "",
                                     f"line {line}" if line else "") if p)
        super().__init__(f"{where}: {message}" if where else message)


class MissingLayerError(ValueError):
    def __init__(self, layer):
        self.layer = layer
        super().__init__(f"document has no {layer!r} layer")


@dataclass(frozen=True)
class Constraint:
    key: str
    values: tuple          # empty tuple = wildcard
    op: str = "="          # "=" or "<="

    def test(self, value, subsumed=None) -> bool:
        if value is None:
            return False
        if not self.values:
            return True
        if self.op == "<=":
            return any(subsumed(value, v) for v in self.values)
        return value in self.values


@dataclass(frozen=True)
class AnnConstraint:
    kind: str
    attrs: tuple = ()      # of Constraint


@dataclass(frozen=True)
class PatternElem:
    tokens: tuple = ()     # of Constraint
    anns: tuple = ()       # of AnnConstraint
    quantifier: str = ""

    @property
    def bounds(self):
        return QUANTIFIERS[self.quantifier]


@dataclass(frozen=True)
class AnnotationRule:
    name: str
    pattern: tuple
    kind: str
    attrs: tuple = ()      # (key, value-template)
    span: str = "full"
    line: int = 0

    def uses_subsumption(self) -> bool:
        return any(c.op == "<=" for e in self.pattern for a in e.anns for c in a.attrs)

    def token_layers(self) -> set:
        return {c.key for e in self.pattern for c in e.tokens}


@dataclass(frozen=True)
class RuleSet:
    rules: tuple = ()
    name: str = ""

    def __len__(self):
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)


_ELEM = re.compile(r"\{([^{}]*)\}([?+*]?)")
_PAIR = re.compile(r'\s*([A-Za-z_]\w*)\s*(<=|=)\s*("(?:[^"\\]|\\.)*"|[^,]*)\s*(?:,|$)')


def _values(raw: str) -> tuple:
    raw = raw.strip()
    if raw.startswith('"'):
        return (raw[1:-1].replace('\\"', '"'),)
    if raw == "*":
        return ()
    return tuple(v.strip() for v in raw.split("|"))


def _parse_elem(body: str, quant: str, rule: str, line: int) -> PatternElem:
    tokens, anns = [], []
    pos = 0
    body = body.strip()
    if not body:
        raise RuleSyntaxError("empty pattern element", rule, line)
    while pos < len(body):
        m = _PAIR.match(body, pos)
        if not m or m.end() == pos:
            raise RuleSyntaxError(f"cannot parse constraint near {body[pos:]!r}", rule, line)
        key, op, raw = m.groups()
        pos = m.end()
        if not raw.strip():
            raise RuleSyntaxError(f"constraint {key!r} has no value", rule, line)
        if key == "ann":
            if op != "=" or raw.strip() == "*" or "|" in raw:
                raise RuleSyntaxError("ann= takes a single annotation kind", rule, line)
            anns.append(AnnConstraint(raw.strip().strip('"')))
        elif key in TOKEN_KEYS and op == "=":
            tokens.append(Constraint(key, _values(raw)))
        elif anns:
            last = anns[-1]
            anns[-1] = AnnConstraint(last.kind, last.attrs + (Constraint(key, _values(raw), op),))
        else:
            raise RuleSyntaxError(f"attribute {key!r} must follow an ann= constraint", rule, line)
    return PatternElem(tuple(tokens), tuple(anns), quant)


def _parse_pattern(text: str, rule: str, line: int) -> tuple:
    elems = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _ELEM.match(text, pos)
        if not m:
            raise RuleSyntaxError(f"malformed element or quantifier near {text[pos:]!r}", rule, line)
        elems.append(_parse_elem(m.group(1), m.group(2), rule, line))
        pos = m.end()
        if pos < len(text) and not text[pos].isspace() and text[pos] != "{":
            raise RuleSyntaxError(f"malformed quantifier {text[pos]!r}", rule, line)
    if not elems:
        raise RuleSyntaxError("pattern is empty", rule, line)
    return tuple(elems)


def compile_rules(source: str, name: str = "") -> RuleSet:
    rules = []
    current = None

    def finish():
        if current is None:
            return
        if "pattern" not in current:
            raise RuleSyntaxError("missing 'match' line", current["name"], current["line"])
        if "kind" not in current:
            raise RuleSyntaxError("missing 'create' line", current["name"], current["line"])
        rules.append(AnnotationRule(current["name"], current["pattern"], current["kind"],
                                    current["attrs"], current["span"], current["line"]))

    for lineno, raw in enumerate(source.splitlines(), 1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        kw, _, rest = text.partition(" ")
        rest = rest.strip()
        if kw == "rule":
            finish()
            if not re.fullmatch(r"[A-Za-z_][\w\-]*", rest):
                raise RuleSyntaxError(f"bad rule name {rest!r}", None, lineno)
            current = {"name": rest, "line": lineno, "attrs": (), "span": "full"}
            continue
        if current is None:
            raise RuleSyntaxError(f"{kw!r} outside a rule block", None, lineno)
        if kw == "match":
            if "pattern" in current:
                raise RuleSyntaxError("duplicate 'match' line", current["name"], lineno)
            current["pattern"] = _parse_pattern(rest, current["name"], lineno)
        elif kw == "create":
            parts = rest.split()
            if not parts:
                raise RuleSyntaxError("'create' needs an annotation kind", current["name"], lineno)
            current["kind"] = parts[0]
            attrs = []
            for part in parts[1:]:
                key, eq, value = part.partition("=")
                if not eq or not key or not value:
                    raise RuleSyntaxError(f"bad attribute {part!r}", current["name"], lineno)
                if key == "span":
                    if value not in ("full", "head"):
                        raise RuleSyntaxError(f"span must be full or head, got {value!r}",
                                              current["name"], lineno)
                    current["span"] = value
                else:
                    attrs.append((key, value.strip('"')))
            current["attrs"] = tuple(attrs)
        else:
            raise RuleSyntaxError(f"unknown keyword {kw!r}", current["name"], lineno)
    finish()
    return RuleSet(tuple(rules), name)


def load_rules(path) -> RuleSet:
    with open(path, encoding="utf-8") as fh:
        return compile_rules(fh.read(), str(path))


def bundled_rules(name: str) -> RuleSet:
    """One of the rule files shipped with the package: "jn", "jc" or "jr"."""
    text = resources.files("folkchar.data").joinpath(f"{name}.rules").read_text(encoding="utf-8")
    return compile_rules(text, name)


_HIERARCHY_CACHE: dict = {}


def _subsumption_test(kb):
    if kb is None:
        return None
    from ..ontology import classify
    key = (id(kb), len(kb.axioms), len(kb.concepts))
    hier = _HIERARCHY_CACHE.get(key)
    if hier is None:
        hier = classify(kb)
        _HIERARCHY_CACHE.clear()
        _HIERARCHY_CACHE[key] = hier
    return lambda sub, sup: sub in hier.subsumers and hier.entails(sub, sup)


class _Matcher:
    def __init__(self, doc, first, last, index, subsumed):
        self.doc, self.first, self.last = doc, first, last
        self.index = index
        self.subsumed = subsumed

    def _tok_ok(self, elem, i) -> bool:
        tok = self.doc.tokens[i]
        for c in elem.tokens:
            value = tok.text if c.key == "text" else getattr(tok, c.key)
            if c.key == "lemma" and value is not None:
                value = value.lower()
            if not c.test(value):
                return False
        return True

    def _elem_spans(self, elem, i):
        """Yield (end, bound attrs) for each way elem can match starting at token i."""
        if i > self.last:
            return
        if not elem.anns:
            if self._tok_ok(elem, i):
                tok = self.doc.tokens[i]
                yield i + 1, {"text": tok.text, "lemma": tok.lemma or "", "pos": tok.pos or ""}
            return
        head, *rest = elem.anns
        for ann in self.index.get((head.kind, i), ()):
            if ann.last > self.last or not self._attrs_ok(head, ann):
                continue
            bound = dict(ann.attrs)
            ok = True
            for extra in rest:
                match = next((a for a in self.index.get((extra.kind, i), ())
                              if a.last == ann.last and self._attrs_ok(extra, a)), None)
                if match is None:
                    ok = False
                    break
                bound.update(match.attrs)
            if ok and all(self._tok_ok(elem, k) for k in range(i, ann.last + 1)):
                yield ann.last + 1, bound

    def _attrs_ok(self, ac, ann) -> bool:
        return all(c.test(ann.get(c.key), self.subsumed) for c in ac.attrs)

    def match(self, pattern, k, i, bound):
        """Yield (end, bindings) for pattern[k:] starting at i; bindings is a list per element."""
        if k == len(pattern):
            yield i, bound
            return
        elem = pattern[k]
        lo, hi = elem.bounds
        yield from self._repeat(pattern, k, elem, i, 0, lo, hi, bound, {})

    def _repeat(self, pattern, k, elem, i, count, lo, hi, bound, acc):
        if hi is None or count < hi:
            for end, attrs in self._elem_spans(elem, i):
                if end == i:
                    continue
                # token elements keep the first token's values, annotations the last
                merged = {**acc, **attrs} if elem.anns else {**attrs, **acc}
                yield from self._repeat(pattern, k, elem, end, count + 1, lo, hi, bound, merged)
        if count >= lo:
            yield from self.match(pattern, k + 1, i, bound + [acc])


def _index_annotations(doc) -> dict:
    index: dict = {}
    for ann in doc.annotations:
        index.setdefault((ann.kind, ann.first), []).append(ann)
    return index


def _head(doc, first, last) -> int:
    for i in range(last, first - 1, -1):
        if doc.tokens[i].pos in NOUN_TAGS:
            return i
    return last


def _fill(template: str, bindings: list) -> str:
    if not template.startswith("$"):
        return template
    ref = template[1:]
    if "." in ref and ref.split(".", 1)[0].isdigit():
        n, attr = ref.split(".", 1)
        n = int(n)
        return bindings[n].get(attr, "") if n < len(bindings) else ""
    for b in reversed(bindings):
        if ref in b:
            return b[ref]
    return ""


def apply_rules(rs: RuleSet, doc, kb=None):
    """Apply every rule in order; returns the same document with annotations added."""
    if not doc.tokens:
        return doc
    for rule in rs:
        for layer in sorted(rule.token_layers() - {"text"}):
            if any(getattr(t, layer) is None for t in doc.tokens):
                raise MissingLayerError(layer)
        subsumed = None
        if rule.uses_subsumption():
            if kb is None:
                raise MissingLayerError("ontology")
            subsumed = _subsumption_test(kb)
        index = _index_annotations(doc)
        created = []
        for sent in doc.sentences:
            m = _Matcher(doc, sent.first, sent.last, index, subsumed)
            i = sent.first
            while i <= sent.last:
                best = None
                for end, bindings in m.match(rule.pattern, 0, i, []):
                    if end > i and (best is None or end > best[0]):
                        best = (end, bindings)
                if best is None:
                    i += 1
                    continue
                end, bindings = best
                first, last = i, end - 1
                if rule.span == "head":
                    first = last = _head(doc, first, last)
                attrs = {k: _fill(v, bindings) for k, v in rule.attrs}
                created.append(Annotation.make(rule.kind, first, last, **attrs))
                i = end
        for ann in created:
            doc.add_annotation(ann)
    return doc
