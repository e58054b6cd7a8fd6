"""Open information extraction: (arg1, relation, arg2) triplets from chunked sentences."""
from .extractor import (
    ConfidenceWeights, ExtractionRecord, TSV_COLUMNS, extract_sentence, extract_triplets,
    features, read_tsv, score_confidence, to_tsv,
)

__all__ = [
    "ConfidenceWeights", "ExtractionRecord", "TSV_COLUMNS", "extract_triplets",
    "extract_sentence", "features", "score_confidence", "to_tsv", "read_tsv",
]
