"""Shared construction helpers for the test suite.

Groups and automorphisms are cached so the expensive tables (order
matrices, shift classes) are built once per process.
"""

from functools import lru_cache

from stablepieces.cartan import datum_from_type
from stablepieces.pieces import PieceIndex
from stablepieces.twist import DiagramAutomorphism
from stablepieces.weyl import WeylGroup


@lru_cache(maxsize=None)
def group(type_spec: str) -> WeylGroup:
    return WeylGroup(datum_from_type(type_spec))


@lru_cache(maxsize=None)
def automorphism(type_spec: str, aut_spec: str = "id") -> DiagramAutomorphism:
    return DiagramAutomorphism.parse(group(type_spec), aut_spec)


def elem(type_spec: str, *word: int):
    return group(type_spec).from_word(word)


def piece(type_spec: str, subset, *word: int) -> PieceIndex:
    return PieceIndex(tuple(sorted(subset)), elem(type_spec, *word))


SWAPS = {
    "A1xA1": "1:2,2:1",
    "A2": "1:2,2:1",
    "A3": "1:3,2:2,3:1",
}

ACCEPTANCE_DATA = (
    ("A1", "id"),
    ("A1xA1", "id"),
    ("A1xA1", "1:2,2:1"),
    ("A2", "id"),
    ("A2", "1:2,2:1"),
    ("B2", "id"),
    ("G2", "id"),
    ("A3", "id"),
    ("A3", "1:3,2:2,3:1"),
)
