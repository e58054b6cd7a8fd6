"""Rule-based coreference: mention detection, a sieve of linking passes,
representative selection and text rewriting."""
from .resolver import (
    CoreferenceChain, DecoreferencedDocument, Mention, Replacement, chains_from_dump,
    decoreference, decoreference_document, detect_mentions, dump_chains, find_representative,
    resolve,
)

__all__ = [
    "Mention", "CoreferenceChain", "DecoreferencedDocument", "Replacement", "detect_mentions",
    "resolve", "find_representative", "decoreference", "decoreference_document", "dump_chains",
    "chains_from_dump",
]
