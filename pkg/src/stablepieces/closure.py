"""Closure computations: piece closures through the twisted order, the
Borel-orbit closure criterion on the compactification, its twisted
translation, fibre-bundle closures over a fixed stratum, and Hasse
diagram extraction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bruhat import bruhat_leq
from .cosets import is_minimal_right, min_coset_reps, parabolic_elements
from .pieces import (PieceIndex, check_piece, enumerate_pieces,
                     piece_sort_key, subsets_ordered)
from .shifts import geq_twisted, leq_pieces
from .twist import DiagramAutomorphism
from .weyl import WeylElement, WeylGroup, sort_key


@dataclass(frozen=True)
class BxBOrbit:
    """A Borel-double-orbit label [J, x, w] on the compactification.

    x must be minimal in its right coset along J; w is arbitrary.
    """

    subset: tuple[int, ...]
    x: WeylElement
    w: WeylElement


def check_orbit(group: WeylGroup, subset, x: WeylElement,
                w: WeylElement) -> BxBOrbit:
    subset = tuple(sorted(subset))
    if not set(subset) <= set(group.datum.labels):
        raise ValueError("invalid orbit label")
    if not is_minimal_right(x, subset):
        raise ValueError("invalid orbit label")
    return BxBOrbit(subset, x, w)


def orbit_closure_leq(a: BxBOrbit, b: BxBOrbit) -> bool:
    """Is the orbit b contained in the closure of the orbit a?

    With a = [J, x, w] and b = [K, x', w'], this holds iff K <= J and
    some u in W_K, v in W_J intersect W^K satisfy

        x v u^{-1} <= x',  w' u <= w v,  l(w v) = l(w) + l(v).
    """
    group = a.x.group
    if not set(b.subset) <= set(a.subset):
        return False
    K = b.subset
    for u in parabolic_elements(group, K):
        ui = u.inverse()
        wpu = b.w * u
        for v in parabolic_elements(group, a.subset):
            if not is_minimal_right(v, K):
                continue
            wv = a.w * v
            if wv.length != a.w.length + v.length:
                continue
            if bruhat_leq(a.x * v * ui, b.x) and bruhat_leq(wpu, wv):
                return True
    return False


def piece_closure(group: WeylGroup, tw: DiagramAutomorphism,
                  p: PieceIndex) -> tuple[PieceIndex, ...]:
    """All piece indices q with q below p in the twisted order."""
    check_piece(group, tw, p.subset, p.w)
    return tuple(q for q in enumerate_pieces(group, tw)
                 if leq_pieces(q, p, tw))


def twisted_orbit_closure(group: WeylGroup, tw: DiagramAutomorphism,
                          p: PieceIndex):
    """Orbit labels (K, x, u) filling the closure of the base orbit of p.

    These are the triples with K <= J, x minimal for delta(K), u in W_J
    and x >= w * delta(u).
    """
    check_piece(group, tw, p.subset, p.w)
    out = []
    for K in subsets_ordered(p.subset):
        for x in min_coset_reps(group, right=tw.apply_subset(K)):
            for u in parabolic_elements(group, p.subset):
                if bruhat_leq(p.w * tw.apply_element(u), x):
                    out.append((K, x, u))
    return tuple(out)


def fiber_closure(group: WeylGroup, tw: DiagramAutomorphism,
                  p: PieceIndex) -> tuple[WeylElement, ...]:
    """Closure of a piece inside the identity-indexed fibre bundle.

    NOTE the direction: this collects the w' minimal for delta(J) that are
    DOMINATED BY w, i.e. w >= w' in the twisted relation, the reverse of
    the closure order used for whole pieces.
    """
    check_piece(group, tw, p.subset, p.w)
    out = []
    for wprime in min_coset_reps(group, right=tw.apply_subset(p.subset)):
        if geq_twisted(p.w, PieceIndex(p.subset, wprime), tw):
            out.append(wprime)
    return tuple(sorted(out, key=sort_key))


def hasse_edges(group: WeylGroup, tw: DiagramAutomorphism,
                pieces=None) -> list[tuple[PieceIndex, PieceIndex]]:
    """Covering pairs (p, q) with p strictly below q, transitively reduced."""
    if pieces is None:
        pieces = enumerate_pieces(group, tw)
    pieces = sorted(pieces, key=piece_sort_key)
    n = len(pieces)
    strict = [[False] * n for _ in range(n)]
    for i, p in enumerate(pieces):
        for j, q in enumerate(pieces):
            if i != j and leq_pieces(p, q, tw):
                strict[i][j] = True
    edges = []
    for i in range(n):
        for j in range(n):
            if strict[i][j] and not any(
                strict[i][k] and strict[k][j] for k in range(n)
            ):
                edges.append((pieces[i], pieces[j]))
    return edges
