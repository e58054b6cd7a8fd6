"""Line-oriented ontology file format.

::

    concept <Name>
    role <name> [parent <name>]... [inverse <name>] [transitive] [symmetric]
                [domain <expr>] [range <expr>] [max <n> <expr>]
    sub <expr> <expr>
    equiv <expr> <expr>
    disjoint <expr> <expr>

    expr := Name | Thing | Nothing | (and e1 e2 ...) | (or e1 e2 ...) | (some role e)

``#`` starts a comment. Every line is one statement.
"""
from __future__ import annotations

import re

from .model import (
    And, Atomic, Bottom, Disjointness, Equivalence, KnowledgeBase, MaxCardinality,
    Or, RoleDecl, Some, Subsumption, Top, atoms, roles_in,
)

__all__ = [
    "OntologyError", "OntologySyntaxError", "UndeclaredSymbolError",
    "CyclicRoleHierarchyError", "parse_ontology", "parse_expr", "serialize_ontology",
    "load_ontology",
]

_TOKEN = re.compile(r"\(|\)|[^\s()]+")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_\-]*$")
_TOP_NAMES = {"Thing", "Top"}
_BOTTOM_NAMES = {"Nothing", "Bottom"}


class OntologyError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class OntologySyntaxError(OntologyError):
    pass


class UndeclaredSymbolError(OntologyError):
    pass


class CyclicRoleHierarchyError(OntologyError):
    pass


class _Tokens:
    def __init__(self, text: str, line: int):
        self.toks = _TOKEN.findall(text)
        self.pos = 0
        self.line = line

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self, what: str = "token"):
        tok = self.peek()
        if tok is None:
            raise OntologySyntaxError(f"expected {what}, found end of line", self.line)
        self.pos += 1
        return tok

    def name(self, what: str = "name"):
        tok = self.next(what)
        if tok in "()" or not _NAME.match(tok):
            raise OntologySyntaxError(f"expected {what}, found {tok!r}", self.line)
        return tok

    def done(self) -> bool:
        return self.pos >= len(self.toks)


def _expr(toks: _Tokens):
    tok = toks.next("concept expression")
    if tok == ")":
        raise OntologySyntaxError("unexpected ')'", toks.line)
    if tok != "(":
        if not _NAME.match(tok):
            raise OntologySyntaxError(f"bad concept name {tok!r}", toks.line)
        if tok in _TOP_NAMES:
            return Top
        if tok in _BOTTOM_NAMES:
            return Bottom
        return Atomic(tok)
    op = toks.next("operator")
    if op in ("and", "or"):
        operands = []
        while toks.peek() != ")":
            if toks.peek() is None:
                raise OntologySyntaxError("unbalanced parentheses", toks.line)
            operands.append(_expr(toks))
        toks.next()
        if len(operands) < 2:
            raise OntologySyntaxError(f"'{op}' needs at least two operands", toks.line)
        return (And if op == "and" else Or)(tuple(operands))
    if op == "some":
        role = toks.name("role name")
        filler = _expr(toks)
        if toks.next("')'") != ")":
            raise OntologySyntaxError("'some' takes a role and one filler", toks.line)
        return Some(role, filler)
    raise OntologySyntaxError(f"unknown operator {op!r}", toks.line)


def parse_expr(text: str, line: int | None = None):
    toks = _Tokens(text, line)
    expr = _expr(toks)
    if not toks.done():
        raise OntologySyntaxError(f"trailing input {toks.peek()!r}", line)
    return expr


def _parse_role(toks: _Tokens) -> RoleDecl:
    decl = RoleDecl(toks.name("role name"))
    while not toks.done():
        kw = toks.next()
        if kw == "parent":
            decl.parent_roles.add(toks.name("parent role"))
        elif kw == "inverse":
            if decl.inverse_of is not None:
                raise OntologySyntaxError("role has two inverses", toks.line)
            decl.inverse_of = toks.name("inverse role")
        elif kw == "transitive":
            decl.transitive = True
        elif kw == "symmetric":
            decl.symmetric = True
        elif kw == "domain":
            decl.domain = _expr(toks)
        elif kw == "range":
            decl.range = _expr(toks)
        elif kw == "max":
            n = toks.next("cardinality")
            if not n.isdigit():
                raise OntologySyntaxError(f"cardinality must be a non-negative integer, got {n!r}", toks.line)
            decl.max_cardinality = MaxCardinality(int(n), _expr(toks))
        else:
            raise OntologySyntaxError(f"unknown role option {kw!r}", toks.line)
    return decl


def parse_ontology(source: str) -> KnowledgeBase:
    concepts = {}
    roles = {}
    axioms = []
    for lineno, raw in enumerate(source.splitlines(), 1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        toks = _Tokens(text, lineno)
        kw = toks.next()
        if kw == "concept":
            name = toks.name("concept name")
            if name in _TOP_NAMES | _BOTTOM_NAMES:
                raise OntologySyntaxError(f"{name} is built in", lineno)
            concepts.setdefault(name, lineno)
        elif kw == "role":
            decl = _parse_role(toks)
            if decl.name in roles:
                raise OntologySyntaxError(f"role {decl.name!r} declared twice", lineno)
            roles[decl.name] = (decl, lineno)
        elif kw in ("sub", "equiv", "disjoint"):
            a = _expr(toks)
            b = _expr(toks)
            cls = {"sub": Subsumption, "equiv": Equivalence, "disjoint": Disjointness}[kw]
            axioms.append((cls(a, b), lineno))
        else:
            raise OntologySyntaxError(f"unknown statement {kw!r}", lineno)
        if not toks.done():
            raise OntologySyntaxError(f"trailing input {toks.peek()!r}", lineno)

    kb = KnowledgeBase()
    for name in concepts:
        kb.declare_concept(name)

    def check(expr, lineno):
        for name in atoms(expr):
            if name not in concepts:
                raise UndeclaredSymbolError(f"undeclared concept {name!r}", lineno)
        for role in roles_in(expr):
            if role not in roles:
                raise UndeclaredSymbolError(f"undeclared role {role!r}", lineno)

    for decl, lineno in roles.values():
        for ref in list(decl.parent_roles) + ([decl.inverse_of] if decl.inverse_of else []):
            if ref not in roles:
                raise UndeclaredSymbolError(f"undeclared role {ref!r}", lineno)
        for expr in (decl.domain, decl.range):
            if expr is not None:
                check(expr, lineno)
        if decl.max_cardinality is not None:
            check(decl.max_cardinality.filler, lineno)
    # inverses are mutual; declaring one side is enough
    for decl, lineno in roles.values():
        if decl.inverse_of:
            other = roles[decl.inverse_of][0]
            if other.inverse_of not in (None, decl.name):
                raise OntologySyntaxError(
                    f"{decl.name!r} and {other.name!r} disagree on inverses", lineno)
            other.inverse_of = decl.name
    _check_acyclic({n: d for n, (d, _) in roles.items()}, {n: l for n, (_, l) in roles.items()})
    for decl, _ in roles.values():
        kb.declare_role(decl)

    for axiom, lineno in axioms:
        for expr in ((axiom.sub, axiom.sup) if isinstance(axiom, Subsumption) else (axiom.a, axiom.b)):
            check(expr, lineno)
        kb.add_axiom(axiom)
    return kb


def _check_acyclic(decls: dict, lines: dict) -> None:
    state = {}

    def visit(name, path):
        if state.get(name) == "done":
            return
        if state.get(name) == "active":
            cycle = " -> ".join(path[path.index(name):] + [name])
            raise CyclicRoleHierarchyError(f"cyclic role hierarchy: {cycle}", lines[name])
        state[name] = "active"
        for parent in sorted(decls[name].parent_roles):
            visit(parent, path + [name])
        state[name] = "done"

    for name in sorted(decls):
        visit(name, [])


def load_ontology(path) -> KnowledgeBase:
    with open(path, encoding="utf-8") as fh:
        return parse_ontology(fh.read())


def serialize_ontology(kb: KnowledgeBase) -> str:
    lines = [f"concept {name}" for name in sorted(kb.concepts)]
    for name in sorted(kb.roles):
        decl = kb.roles[name]
        parts = ["role", name]
        for parent in sorted(decl.parent_roles):
            parts += ["parent", parent]
        if decl.inverse_of:
            parts += ["inverse", decl.inverse_of]
        if decl.transitive:
            parts.append("transitive")
        if decl.symmetric:
            parts.append("symmetric")
        if decl.domain is not None:
            parts += ["domain", str(decl.domain)]
        if decl.range is not None:
            parts += ["range", str(decl.range)]
        if decl.max_cardinality is not None:
            parts += ["max", str(decl.max_cardinality.n), str(decl.max_cardinality.filler)]
        lines.append(" ".join(parts))
    for axiom in kb.axioms:
        if isinstance(axiom, Subsumption):
            lines.append(f"sub {axiom.sub} {axiom.sup}")
        elif isinstance(axiom, Equivalence):
            lines.append(f"equiv {axiom.a} {axiom.b}")
        else:
            lines.append(f"disjoint {axiom.a} {axiom.b}")
    return "\n".join(lines) + ("\n" if lines else "")
