"""Folktale knowledge base: model, file format and reasoning."""
from importlib import resources

from .model import (
    And, Atomic, Axiom, Bottom, ConceptAssertion, ConceptExpr, Disjointness,
    Equivalence, Individual, KnowledgeBase, MaxCardinality, Or, RoleAssertion,
    RoleDecl, Some, Subsumption, Top, UnknownSymbolError,
)
from .reasoner import (
    ConsistencyReport, SubsumptionHierarchy, Violation, check_consistency,
    classify, is_subsumed, realize, saturate,
)
from .syntax import (
    CyclicRoleHierarchyError, OntologyError, OntologySyntaxError,
    UndeclaredSymbolError, load_ontology, parse_expr, parse_ontology,
    serialize_ontology,
)


def folktale_ontology() -> KnowledgeBase:
    """The bundled folktale ontology."""
    text = resources.files("folkchar.data").joinpath("folktale.ont").read_text("utf-8")
    return parse_ontology(text)
