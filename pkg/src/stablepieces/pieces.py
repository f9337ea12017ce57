"""The index set of stable pieces: pairs (J, w) with w minimal for the
twisted subset, the stable-subset invariant that controls the Levi factor
of a piece, boundary indices for passing to smaller strata, and the piece
dimension formula.

The dimension formula is derived from the fibre-bundle structure of a
piece: a partial flag base, an affine factor whose dimension is a length,
and a Levi quotient.  Its rank-1 values are pinned against the hand-worked
orbit structure of the compactified rank-1 group in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cosets import is_minimal_right, min_coset_reps
from .twist import DiagramAutomorphism
from .weyl import WeylElement, WeylGroup, sort_key


@dataclass(frozen=True)
class PieceIndex:
    """An index (J, w) with w minimal in w * W_{delta(J)}."""

    subset: tuple[int, ...]
    w: WeylElement


def subsets_ordered(labels) -> list[tuple[int, ...]]:
    """All subsets, larger first, then lexicographic."""
    labels = tuple(labels)
    out: list[tuple[int, ...]] = []
    for size in range(len(labels), -1, -1):
        out.extend(combinations(labels, size))
    return out


def check_piece(group: WeylGroup, tw: DiagramAutomorphism,
                subset, w: WeylElement) -> PieceIndex:
    subset = tuple(sorted(subset))
    if not set(subset) <= set(group.datum.labels):
        raise ValueError("subset contains unknown labels")
    if not is_minimal_right(w, tw.apply_subset(subset)):
        raise ValueError("w not minimal for delta(J)")
    return PieceIndex(subset, w)


def enumerate_pieces(group: WeylGroup,
                     tw: DiagramAutomorphism) -> tuple[PieceIndex, ...]:
    """Every (J, w), J larger first then lex, w by (length, word)."""
    out = []
    for subset in subsets_ordered(group.datum.labels):
        for w in min_coset_reps(group, right=tw.apply_subset(subset)):
            out.append(PieceIndex(subset, w))
    return tuple(out)


def piece_sort_key(p: PieceIndex):
    return (-len(p.subset), p.subset, sort_key(p.w))


def twisted_stable(group: WeylGroup, tw: DiagramAutomorphism,
                   w: WeylElement, subset) -> bool:
    """Ad(w) delta(K) = K: w sends each alpha_{delta(k)} to a simple root
    labelled inside K.  (Injectivity of w makes the induced map a bijection.)"""
    targets = set(subset)
    for k in subset:
        pos = group.datum.labels.index(tw(k))
        lab = group.roots.label_of_simple(
            w.action[group.roots.simple_indices[pos]]
        )
        if lab is None or lab not in targets:
            return False
    return True


def stable_subset_sequence(group: WeylGroup, tw: DiagramAutomorphism,
                           subset, w: WeylElement) -> list[tuple[int, ...]]:
    """The descending subset sequence J = J_0 > J_1 > ... down to its limit.

    One step keeps k when w(alpha_{delta(k)}) is still supported on the
    current subset; the sequence stabilises in at most |J|+1 steps and the
    last entry is the largest K <= J with Ad(w) delta(K) = K.
    """
    check_piece(group, tw, subset, w)
    current = tuple(sorted(subset))
    seq = [current]
    while True:
        phi = group.roots.phi_subset_positive(current)
        nxt = []
        for k in current:
            pos = group.datum.labels.index(tw(k))
            image = w.action[group.roots.simple_indices[pos]]
            if image >= 0 and image in phi:
                nxt.append(k)
        nxt = tuple(nxt)
        if nxt == current:
            return seq
        seq.append(nxt)
        current = nxt


def stable_subset(group: WeylGroup, tw: DiagramAutomorphism,
                  subset, w: WeylElement) -> tuple[int, ...]:
    """The limit of the descending sequence: max{K <= J : Ad(w) delta(K) = K}."""
    return stable_subset_sequence(group, tw, subset, w)[-1]


def ambient_index(group: WeylGroup, tw: DiagramAutomorphism,
                  subset) -> WeylElement:
    """y = w0 * w0^{delta(J)}, the stratum index of the full compactification."""
    return group.longest_element() * group.longest_element(tw.apply_subset(subset))


def relabel_through(group: WeylGroup, y: WeylElement, subset) -> tuple[int, ...]:
    """Ad(y) of a subset when y maps its simple roots to simple roots."""
    out = []
    for j in subset:
        pos = group.datum.labels.index(j)
        lab = group.roots.label_of_simple(
            y.action[group.roots.simple_indices[pos]]
        )
        if lab is None:
            raise ValueError("subset is not carried to simple roots")
        out.append(lab)
    return tuple(sorted(out))


def boundary_index(group: WeylGroup, tw: DiagramAutomorphism,
                   subset, boundary) -> WeylElement:
    """The stratum index y_K = y * w0^{delta(J)} * w0^{delta(K)} for K <= J."""
    if not set(boundary) <= set(subset):
        raise ValueError("not a boundary subset")
    y = ambient_index(group, tw, subset)
    return (y
            * group.longest_element(tw.apply_subset(subset))
            * group.longest_element(tw.apply_subset(boundary)))


def piece_dimension(group: WeylGroup, tw: DiagramAutomorphism,
                    p: PieceIndex) -> int:
    """Dimension of the stable piece indexed by p.

    dim = (|Phi+| - |Phi+_{K}|) + l(w0^{K} * w * y^{-1} * w0^{J'}) + |Phi_{K}| + |J|

    with K the stable subset of (J, w), y the ambient stratum index and
    J' = Ad(y) delta(J).  The three summands are the partial flag base,
    the affine factor and the Levi quotient of the piece.
    """
    subset, w = p.subset, p.w
    y = ambient_index(group, tw, subset)
    jprime = relabel_through(group, y, tw.apply_subset(subset))
    stable = stable_subset(group, tw, subset, w)
    pos_stable = len(group.roots.phi_subset_positive(stable))
    a = (group.longest_element(stable) * w * y.inverse()
         * group.longest_element(jprime))
    return (group.roots.num_positive - pos_stable) + a.length \
        + 2 * pos_stable + len(subset)
