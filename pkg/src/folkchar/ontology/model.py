"""Data model for the folktale knowledge base: concept expressions, roles, axioms, ABox."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Union


@dataclass(frozen=True)
class Atomic:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class TopConcept:
    def __str__(self) -> str:
        return "Thing"


@dataclass(frozen=True)
class BottomConcept:
    def __str__(self) -> str:
        return "Nothing"


Top = TopConcept()
Bottom = BottomConcept()


@dataclass(frozen=True)
class And:
    operands: tuple

    def __post_init__(self):
        if len(self.operands) < 2:
            raise ValueError("conjunction needs at least two operands")

    def __str__(self) -> str:
        return "(and " + " ".join(str(o) for o in self.operands) + ")"


@dataclass(frozen=True)
class Or:
    operands: tuple

    def __post_init__(self):
        if len(self.operands) < 2:
            raise ValueError("disjunction needs at least two operands")

    def __str__(self) -> str:
        return "(or " + " ".join(str(o) for o in self.operands) + ")"


@dataclass(frozen=True)
class Some:
    role: str
    filler: "ConceptExpr"

    def __str__(self) -> str:
        return f"(some {self.role} {self.filler})"


ConceptExpr = Union[Atomic, TopConcept, BottomConcept, And, Or, Some]


def atoms(expr: ConceptExpr) -> Iterator[str]:
    """Yield every atomic concept name occurring in ``expr``."""
    if isinstance(expr, Atomic):
        yield expr.name
    elif isinstance(expr, (And, Or)):
        for op in expr.operands:
            yield from atoms(op)
    elif isinstance(expr, Some):
        yield from atoms(expr.filler)


def roles_in(expr: ConceptExpr) -> Iterator[str]:
    if isinstance(expr, (And, Or)):
        for op in expr.operands:
            yield from roles_in(op)
    elif isinstance(expr, Some):
        yield expr.role
        yield from roles_in(expr.filler)


@dataclass(frozen=True)
class MaxCardinality:
    n: int
    filler: ConceptExpr


@dataclass
class RoleDecl:
    name: str
    parent_roles: set = field(default_factory=set)
    inverse_of: Optional[str] = None
    transitive: bool = False
    symmetric: bool = False
    domain: Optional[ConceptExpr] = None
    range: Optional[ConceptExpr] = None
    max_cardinality: Optional[MaxCardinality] = None


@dataclass(frozen=True)
class Subsumption:
    sub: ConceptExpr
    sup: ConceptExpr


@dataclass(frozen=True)
class Equivalence:
    a: ConceptExpr
    b: ConceptExpr


@dataclass(frozen=True)
class Disjointness:
    a: ConceptExpr
    b: ConceptExpr


Axiom = Union[Subsumption, Equivalence, Disjointness]


@dataclass(frozen=True)
class Individual:
    id: str
    label: str = ""


@dataclass(frozen=True)
class ConceptAssertion:
    individual: str
    concept: ConceptExpr


@dataclass(frozen=True)
class RoleAssertion:
    role: str
    subject: str
    object: str


class UnknownSymbolError(KeyError):
    """A concept, role or individual was used without being declared."""


@dataclass
class KnowledgeBase:
    concepts: set = field(default_factory=set)
    roles: dict = field(default_factory=dict)
    axioms: list = field(default_factory=list)
    individuals: dict = field(default_factory=dict)
    concept_assertions: set = field(default_factory=set)
    role_assertions: set = field(default_factory=set)

    # -- TBox ---------------------------------------------------------------
    def declare_concept(self, name: str) -> None:
        self.concepts.add(name)

    def declare_role(self, decl: RoleDecl) -> None:
        self.roles[decl.name] = decl

    def add_axiom(self, axiom: Axiom) -> None:
        for expr in _axiom_exprs(axiom):
            self.check_expr(expr)
        if axiom not in self.axioms:
            self.axioms.append(axiom)

    def check_expr(self, expr: ConceptExpr) -> None:
        for name in atoms(expr):
            if name not in self.concepts:
                raise UnknownSymbolError(f"undeclared concept {name!r}")
        for role in roles_in(expr):
            if role not in self.roles:
                raise UnknownSymbolError(f"undeclared role {role!r}")

    def super_roles(self, role: str) -> set:
        """Reflexive-transitive closure of the role hierarchy upwards."""
        seen = {role}
        stack = [role]
        while stack:
            for parent in self.roles[stack.pop()].parent_roles:
                if parent not in seen:
                    seen.add(parent)
                    stack.append(parent)
        return seen

    # -- ABox ---------------------------------------------------------------
    def add_individual(self, ind_id: str, label: str = "") -> Individual:
        ind = self.individuals.get(ind_id)
        if ind is None:
            ind = Individual(ind_id, label)
            self.individuals[ind_id] = ind
        return ind

    def assert_concept(self, ind_id: str, concept: ConceptExpr) -> None:
        if ind_id not in self.individuals:
            raise UnknownSymbolError(f"unknown individual {ind_id!r}")
        self.check_expr(concept)
        self.concept_assertions.add(ConceptAssertion(ind_id, concept))

    def assert_role(self, role: str, subject: str, obj: str) -> None:
        if role not in self.roles:
            raise UnknownSymbolError(f"undeclared role {role!r}")
        for ind_id in (subject, obj):
            if ind_id not in self.individuals:
                raise UnknownSymbolError(f"unknown individual {ind_id!r}")
        self.role_assertions.add(RoleAssertion(role, subject, obj))

    def copy(self) -> "KnowledgeBase":
        return KnowledgeBase(
            concepts=set(self.concepts),
            roles={
                k: RoleDecl(
                    v.name, set(v.parent_roles), v.inverse_of, v.transitive,
                    v.symmetric, v.domain, v.range, v.max_cardinality,
                )
                for k, v in self.roles.items()
            },
            axioms=list(self.axioms),
            individuals=dict(self.individuals),
            concept_assertions=set(self.concept_assertions),
            role_assertions=set(self.role_assertions),
        )


def _axiom_exprs(axiom: Axiom):
    if isinstance(axiom, Subsumption):
        return (axiom.sub, axiom.sup)
    return (axiom.a, axiom.b)
