"""Exact q-characters of fundamental modules of classical quantum loop algebras."""

from .liealg import RootSystem, RootSystemError, root_system
from .lweight import ONE, LWeight, gen
from .qcharacter import LCharacter, dominant_lweights, full_character

__all__ = [
    "ONE",
    "LCharacter",
    "LWeight",
    "RootSystem",
    "RootSystemError",
    "dominant_lweights",
    "full_character",
    "gen",
    "root_system",
]

__version__ = "0.1.0"
