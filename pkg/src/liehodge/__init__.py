"""Exact Lie theory for Hodge-number constraints on E6/E7 Tannaka groups."""
from .lattice import RootSystem, root_system
from .reps import Character, decompose, freudenthal_character, minuscule_character
from .search import BACKEND, HodgeRow, SearchResult, search_hodge_rows

__all__ = [
    "BACKEND",
    "Character",
    "HodgeRow",
    "RootSystem",
    "SearchResult",
    "decompose",
    "freudenthal_character",
    "minuscule_character",
    "root_system",
    "search_hodge_rows",
]
__version__ = "0.1.0"
