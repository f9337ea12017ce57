"""Cell-decomposition machinery for piece closures.

The closure of a piece splits into groups indexed by dominating elements
u that are coset-minimal for their own root-stable subset.  Each group is
a bundle over a compactified Levi; when every root-stable subset on the
closure is empty the groups are vector bundles over the full flag variety
and the closure has a cellular decomposition, reported here as a dimension
inventory together with an admissible ordering of the groups.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .cosets import parabolic_elements
from .pieces import (PieceIndex, check_piece, piece_dimension, piece_sort_key,
                     subsets_ordered)
from .shifts import geq_twisted
from .twist import DiagramAutomorphism
from .weyl import WeylElement, WeylGroup, sort_key


def coset_minimal_subset(group: WeylGroup, tw: DiagramAutomorphism,
                         subset, w: WeylElement) -> tuple[int, ...]:
    """Largest K <= J with w minimal for delta(K); elementwise exact."""
    out = []
    for k in sorted(subset):
        pos = group.datum.labels.index(tw(k))
        if w.action[group.roots.simple_indices[pos]] >= 0:
            out.append(k)
    return tuple(out)


def root_stable_subset(group: WeylGroup, tw: DiagramAutomorphism,
                       subset, w: WeylElement) -> tuple[int, ...]:
    """Largest K <= J with w * Phi_{delta(K)} = Phi_K, by fixed-point
    elimination.

    A label survives a round when w carries its twisted simple root into
    the span of the current subset and w^{-1} carries its own simple root
    into the twisted span; at the stable set the two inclusions force
    equality of the root sets.
    """
    winv = w.inverse()
    current = tuple(sorted(subset))
    while True:
        phi = group.roots.phi_subset_positive(current)
        phi_tw = group.roots.phi_subset_positive(tw.apply_subset(current))
        nxt = []
        for k in current:
            pos_tw = group.datum.labels.index(tw(k))
            pos = group.datum.labels.index(k)
            fwd = w.action[group.roots.simple_indices[pos_tw]]
            bwd = winv.action[group.roots.simple_indices[pos]]
            if (fwd if fwd >= 0 else ~fwd) in phi and \
               (bwd if bwd >= 0 else ~bwd) in phi_tw:
                nxt.append(k)
        nxt = tuple(nxt)
        if nxt == current:
            return current
        current = nxt


def root_stable_subset_brute(group: WeylGroup, tw: DiagramAutomorphism,
                             subset, w: WeylElement) -> tuple[int, ...]:
    """Same subset by direct maximum over all 2^|J| candidates."""
    best: tuple[int, ...] = ()
    for K in subsets_ordered(subset):
        phi = group.roots.phi_subset_positive(K)
        phi_tw = group.roots.phi_subset_positive(tw.apply_subset(K))
        image = {
            (s if s >= 0 else ~s)
            for s in (w.action[k] for k in phi_tw)
        }
        if image == set(phi):
            if len(K) > len(best):
                best = K
    return tuple(sorted(best))


def group_labels(group: WeylGroup, tw: DiagramAutomorphism,
                 p: PieceIndex) -> tuple[WeylElement, ...]:
    """The cell-group labels: u dominating w whose root-stable subset is
    contained in its coset-minimal subset."""
    check_piece(group, tw, p.subset, p.w)
    out = []
    for u in group.elements():
        if not geq_twisted(u, p, tw):
            continue
        i2 = root_stable_subset(group, tw, p.subset, u)
        i1 = coset_minimal_subset(group, tw, p.subset, u)
        if set(i2) <= set(i1):
            out.append(u)
    return tuple(sorted(out, key=sort_key))


@dataclass(frozen=True)
class CellGroup:
    """One group of the closure partition, labelled by u."""

    u: WeylElement
    members: tuple[PieceIndex, ...]
    i1: tuple[int, ...]
    i2: tuple[int, ...]


def cell_groups(group: WeylGroup, tw: DiagramAutomorphism,
                p: PieceIndex) -> list[CellGroup]:
    """The groups X_u for u over the labels; together they partition the
    closure of p (checked by the verification suite)."""
    out = []
    for u in group_labels(group, tw, p):
        i1 = coset_minimal_subset(group, tw, p.subset, u)
        i2 = root_stable_subset(group, tw, p.subset, u)
        members = set()
        for v in parabolic_elements(group, tw.apply_subset(i2)):
            uv = u * v
            i1_uv = coset_minimal_subset(group, tw, p.subset, uv)
            for K in subsets_ordered(i1_uv):
                members.add(PieceIndex(K, uv))
        out.append(CellGroup(
            u=u,
            members=tuple(sorted(members, key=piece_sort_key)),
            i1=i1,
            i2=i2,
        ))
    return out


def _one_step(group: WeylGroup, tw: DiagramAutomorphism, p: PieceIndex,
              x_from: WeylElement, x_to: WeylElement) -> bool:
    """One chain step of the auxiliary order: some v in the twisted
    parabolic of x_to's root-stable subset has x_to * v dominating x_from
    along x_from's coset-minimal subset."""
    i1_from = coset_minimal_subset(group, tw, p.subset, x_from)
    i2_to = root_stable_subset(group, tw, p.subset, x_to)
    base = PieceIndex(i1_from, x_from)
    for v in parabolic_elements(group, tw.apply_subset(i2_to)):
        if geq_twisted(x_to * v, base, tw):
            return True
    return False


def label_reachability(group: WeylGroup, tw: DiagramAutomorphism,
                       p: PieceIndex) -> dict[WeylElement, set[WeylElement]]:
    """reach[u1] = labels u2 with u2 <=' u1 (chains starting at u1)."""
    labels = group_labels(group, tw, p)
    step = {
        a: {b for b in labels if b != a and _one_step(group, tw, p, a, b)}
        for a in labels
    }
    reach: dict[WeylElement, set[WeylElement]] = {}
    for start in labels:
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for a in frontier:
                for b in step[a]:
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        reach[start] = seen
    return reach


def label_leq(u2: WeylElement, u1: WeylElement,
              p: PieceIndex, tw: DiagramAutomorphism) -> bool:
    """u2 <=' u1: a chain of one-step moves leads from u1 down to u2."""
    group = u1.group
    labels = group_labels(group, tw, p)
    if u1 not in labels or u2 not in labels:
        raise ValueError("label is not in the cell label set")
    return u2 in label_reachability(group, tw, p)[u1]


@dataclass(frozen=True)
class CellGroupReport:
    u: WeylElement
    members: tuple[PieceIndex, ...]
    dimension: int
    bundle_rank: int
    cells_by_dim: dict[int, int] = field(hash=False)


@dataclass(frozen=True)
class CellReport:
    finite: bool
    violator: WeylElement | None
    violator_subset: tuple[int, ...] | None
    alpha_order: tuple[WeylElement, ...]
    groups: tuple[CellGroupReport, ...]
    cells_by_dim: dict[int, int] = field(hash=False)


def cellular_report(group: WeylGroup, tw: DiagramAutomorphism,
                    p: PieceIndex) -> CellReport:
    """Finite-orbit test and, when it passes, the cell inventory.

    The closure carries finitely many orbits exactly when every dominating
    u has empty root-stable subset.  In that case each group is a vector
    bundle over the flag variety: its cells are the flag Schubert cells
    shifted by the bundle rank, and the groups can be emitted in an order
    whose initial unions are closed (any linear extension of the auxiliary
    order, smaller labels first).
    """
    check_piece(group, tw, p.subset, p.w)
    for u in sorted(group.elements(), key=sort_key):
        if geq_twisted(u, p, tw):
            i2 = root_stable_subset(group, tw, p.subset, u)
            if i2:
                return CellReport(
                    finite=False, violator=u, violator_subset=i2,
                    alpha_order=(), groups=(), cells_by_dim={},
                )

    reach = label_reachability(group, tw, p)
    labels = list(reach)

    # emit a label only once everything <=' below it is out
    ordered: list[WeylElement] = []
    remaining = set(labels)
    while remaining:
        ready = [
            u for u in remaining
            if all(v == u or v not in remaining for v in reach[u])
        ]
        ready.sort(key=lambda u: (-u.length, u.reduced_word()))
        pick = ready[0]
        ordered.append(pick)
        remaining.remove(pick)

    flag_dim = group.roots.num_positive
    schubert = Counter(w.length for w in group.elements())
    reports = []
    total: Counter = Counter()
    by_label = {g.u: g for g in cell_groups(group, tw, p)}
    for u in ordered:
        grp = by_label[u]
        dim = max(piece_dimension(group, tw, q) for q in grp.members)
        rank = dim - flag_dim
        assert rank >= 0
        cells = {length + rank: count for length, count in schubert.items()}
        total.update(cells)
        reports.append(CellGroupReport(
            u=u, members=grp.members, dimension=dim,
            bundle_rank=rank, cells_by_dim=cells,
        ))
    return CellReport(
        finite=True, violator=None, violator_subset=None,
        alpha_order=tuple(ordered), groups=tuple(reports),
        cells_by_dim=dict(sorted(total.items())),
    )
