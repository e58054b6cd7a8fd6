"""Character extraction and perspective finding for folktales."""

__version__ = "0.1.0"
