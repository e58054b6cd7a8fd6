"""Character extraction and perspective finding."""
from .characters import CharacterRecord, extract_characters, format_characters, parse_characters
from .perspective import (
    NO_PERSPECTIVE, PerspectiveReport, find_perspective, format_perspectives, mention_pattern,
)

__all__ = [
    "CharacterRecord", "extract_characters", "format_characters", "parse_characters",
    "PerspectiveReport", "find_perspective", "format_perspectives", "mention_pattern",
    "NO_PERSPECTIVE",
]
