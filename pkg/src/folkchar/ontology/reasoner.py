"""Forward-chaining reasoner for the folktale ontology fragment.

Reasoning is done by materialisation: a finite model is grown from the
asserted facts (plus anonymous witnesses for existential restrictions on
the right-hand side of axioms) until no rule adds anything.  Subsumption
``C ⊑ D`` is decided by growing such a model from a single prototype
element of ``C`` and testing whether the prototype satisfies ``D``.

Disjunctions on the right-hand side of an axiom are not split into cases.
They are remembered as told disjunctions, so a node satisfies ``E1 ⊔ ... ⊔ En``
when it satisfies one disjunct or was told a disjunction whose disjuncts
all occur among the Ei.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import count

from .model import (
    And, Atomic, BottomConcept, ConceptAssertion, Disjointness, Equivalence,
    KnowledgeBase, Or, RoleAssertion, Some, Subsumption, TopConcept,
    UnknownSymbolError, Bottom,
)

MAX_ANON_DEPTH = 3


def _rules(kb: KnowledgeBase):
    rules = []
    for ax in kb.axioms:
        if isinstance(ax, Subsumption):
            rules.append((ax.sub, ax.sup))
        elif isinstance(ax, Equivalence):
            rules.append((ax.a, ax.b))
            rules.append((ax.b, ax.a))
        elif isinstance(ax, Disjointness):
            rules.append((And((ax.a, ax.b)), Bottom))
    return rules


class _Model:
    def __init__(self, kb: KnowledgeBase):
        self.kb = kb
        self.rules = _rules(kb)
        self.types: dict = {}
        self.told: dict = {}
        self.bottom: set = set()
        self.edges: set = set()
        self.out: dict = {}
        self.depth: dict = {}
        self.witness: dict = {}
        self._fresh = count()
        self._super = {r: kb.super_roles(r) for r in kb.roles}

    def node(self, name, depth=0):
        if name not in self.types:
            self.types[name] = set()
            self.depth[name] = depth
        return name

    def add_edge(self, role, a, b) -> bool:
        if (role, a, b) in self.edges:
            return False
        self.edges.add((role, a, b))
        self.out.setdefault((role, a), set()).add(b)
        return True

    def holds(self, node, expr) -> bool:
        if isinstance(expr, Atomic):
            return expr.name in self.types[node]
        if isinstance(expr, TopConcept):
            return True
        if isinstance(expr, BottomConcept):
            return False
        if isinstance(expr, And):
            return all(self.holds(node, op) for op in expr.operands)
        if isinstance(expr, Or):
            if any(self.holds(node, op) for op in expr.operands):
                return True
            wanted = set(expr.operands)
            return any(set(d.operands) <= wanted for d in self.told.get(node, ()))
        if isinstance(expr, Some):
            return any(self.holds(b, expr.filler) for b in self.out.get((expr.role, node), ()))
        raise TypeError(f"not a concept expression: {expr!r}")

    def add(self, node, expr) -> bool:
        if isinstance(expr, Atomic):
            if expr.name in self.types[node]:
                return False
            self.types[node].add(expr.name)
            return True
        if isinstance(expr, TopConcept):
            return False
        if isinstance(expr, BottomConcept):
            if node in self.bottom:
                return False
            self.bottom.add(node)
            return True
        if isinstance(expr, And):
            changed = False
            for op in expr.operands:
                changed |= self.add(node, op)
            return changed
        if isinstance(expr, Or):
            told = self.told.setdefault(node, set())
            if expr in told:
                return False
            told.add(expr)
            return True
        if isinstance(expr, Some):
            if self.holds(node, expr) or self.depth[node] >= MAX_ANON_DEPTH:
                return False
            key = (node, expr.role, expr.filler)
            anon = self.witness.get(key)
            if anon is None:
                anon = self.node(f"_:{next(self._fresh)}", self.depth[node] + 1)
                self.witness[key] = anon
            changed = self.add_edge(expr.role, node, anon)
            return self.add(anon, expr.filler) or changed
        raise TypeError(f"not a concept expression: {expr!r}")

    def _close_roles(self) -> bool:
        changed = False
        grew = True
        while grew:
            grew = False
            for role, a, b in list(self.edges):
                decl = self.kb.roles[role]
                for sup in self._super[role]:
                    grew |= self.add_edge(sup, a, b)
                if decl.inverse_of:
                    grew |= self.add_edge(decl.inverse_of, b, a)
                if decl.symmetric:
                    grew |= self.add_edge(role, b, a)
                if decl.transitive:
                    for c in list(self.out.get((role, b), ())):
                        grew |= self.add_edge(role, a, c)
            changed |= grew
        return changed

    def run(self) -> None:
        changed = True
        while changed:
            changed = self._close_roles()
            for role, a, b in list(self.edges):
                decl = self.kb.roles[role]
                if b in self.bottom:
                    changed |= self.add(a, Bottom)
                if decl.domain is not None:
                    changed |= self.add(a, decl.domain)
                if decl.range is not None:
                    changed |= self.add(b, decl.range)
            for node in list(self.types):
                for lhs, rhs in self.rules:
                    if self.holds(node, lhs):
                        changed |= self.add(node, rhs)


def _abox_model(kb: KnowledgeBase) -> _Model:
    m = _Model(kb)
    for ind in sorted(kb.individuals):
        m.node(ind)
    for ca in sorted(kb.concept_assertions, key=repr):
        m.add(ca.individual, ca.concept)
    for ra in sorted(kb.role_assertions, key=lambda r: (r.role, r.subject, r.object)):
        m.add_edge(ra.role, ra.subject, ra.object)
    m.run()
    return m


def saturate(kb: KnowledgeBase) -> KnowledgeBase:
    """Return a copy of ``kb`` whose ABox is closed under every inference rule.

    Role assertions are closed under inheritance, inverses, symmetry and
    transitivity; concept assertions gain every atomic concept entailed for
    a named individual (including domain and range consequences).
    """
    out = kb.copy()
    m = _abox_model(kb)
    named = set(kb.individuals)
    for role, a, b in m.edges:
        if a in named and b in named:
            out.role_assertions.add(RoleAssertion(role, a, b))
    for ind in named:
        for name in m.types[ind]:
            out.concept_assertions.add(ConceptAssertion(ind, Atomic(name)))
    return out


def realize(kb: KnowledgeBase, ind: str) -> set:
    """All atomic concepts that ``ind`` provably belongs to."""
    if ind not in kb.individuals:
        raise UnknownSymbolError(f"unknown individual {ind!r}")
    m = _abox_model(kb)
    if ind in m.bottom:
        return set(kb.concepts)
    return set(m.types[ind])


def is_subsumed(kb: KnowledgeBase, sub, sup) -> bool:
    kb.check_expr(sub)
    kb.check_expr(sup)
    return _subsumed(kb, sub, sup)


def _subsumed(kb, sub, sup) -> bool:
    if isinstance(sup, TopConcept):
        return True
    for branch in _dnf(sub):
        m = _Model(kb)
        proto = m.node("_:proto")
        for conj in branch:
            m.add(proto, conj)
        m.run()
        if proto not in m.bottom and not m.holds(proto, sup):
            return False
    return True


def _dnf(expr) -> list:
    """Split top-level disjunctions: a list of conjunct tuples whose union is ``expr``."""
    if isinstance(expr, Or):
        return [b for op in expr.operands for b in _dnf(op)]
    if isinstance(expr, And):
        branches = [()]
        for op in expr.operands:
            branches = [b + c for b in branches for c in _dnf(op)]
        return branches
    return [(expr,)]


@dataclass
class SubsumptionHierarchy:
    """Entailed atomic subsumptions: ``subsumers[A]`` holds every B with A ⊑ B."""
    subsumers: dict = field(default_factory=dict)
    unsatisfiable: frozenset = frozenset()

    def entails(self, sub: str, sup: str) -> bool:
        return sup in self.subsumers[sub]

    def parents(self, name: str) -> set:
        strict = self.subsumers[name] - {name}
        return {
            b for b in strict
            if not any(b in self.subsumers[c] and c != b for c in strict)
        }

    def pairs(self):
        for a in sorted(self.subsumers):
            for b in sorted(self.subsumers[a]):
                yield a, b


def classify(kb: KnowledgeBase) -> SubsumptionHierarchy:
    subsumers = {}
    unsat = set()
    for name in sorted(kb.concepts):
        m = _Model(kb)
        proto = m.node("_:proto")
        m.add(proto, Atomic(name))
        m.run()
        if proto in m.bottom:
            unsat.add(name)
            subsumers[name] = frozenset(kb.concepts)
        else:
            subsumers[name] = frozenset(m.types[proto])
    return SubsumptionHierarchy(subsumers, frozenset(unsat))


@dataclass(frozen=True)
class Violation:
    kind: str            # "max-cardinality" | "disjointness" | "unsatisfiable"
    individuals: tuple
    axiom: str

    def __str__(self) -> str:
        return f"{self.kind}: {', '.join(self.individuals)} [{self.axiom}]"


@dataclass
class ConsistencyReport:
    violations: list

    @property
    def consistent(self) -> bool:
        return not self.violations

    def involving(self, ind: str) -> list:
        return [v for v in self.violations if ind in v.individuals]


def check_consistency(kb: KnowledgeBase) -> ConsistencyReport:
    """Report cardinality and disjointness violations among named individuals.

    Fillers are counted among named individuals only; the unique-name
    assumption makes distinct ids distinct fillers.
    """
    m = _abox_model(kb)
    named = sorted(kb.individuals)
    violations = []
    for role in sorted(kb.roles):
        card = kb.roles[role].max_cardinality
        if card is None:
            continue
        for ind in named:
            fillers = sorted(
                b for b in m.out.get((role, ind), ())
                if b in kb.individuals and m.holds(b, card.filler)
            )
            if len(fillers) > card.n:
                violations.append(Violation(
                    "max-cardinality", (ind, *fillers),
                    f"Thing ⊑ ≤{card.n} {role}.{card.filler}",
                ))
    flagged = set()
    for ax in kb.axioms:
        if not isinstance(ax, Disjointness):
            continue
        for ind in named:
            if m.holds(ind, ax.a) and m.holds(ind, ax.b):
                violations.append(Violation("disjointness", (ind,), f"disjoint {ax.a} {ax.b}"))
                flagged.add(ind)
    for ind in named:
        if ind in m.bottom and ind not in flagged:
            violations.append(Violation("unsatisfiable", (ind,), "⊥"))
    return ConsistencyReport(violations)
