"""Twisted cyclic shifts, the domination relation they generate, and the
partial order on piece indices built from it.

For a subset J and a diagram automorphism delta, a length-preserving move
takes a reduced word of w and conjugates by its first letter (when that
letter lies in J) or, twisted, by its last letter (when that lies in
delta(J)).  The equivalence class these moves generate sits inside the
twisted conjugates u^{-1} w delta(u), u in W_J, and "w' dominates w"
means w' is Bruhat-above some class member.  Both characterisations are
implemented and the verification suite insists they agree everywhere.
"""

from __future__ import annotations

from .bruhat import bruhat_leq, up_masks
from .cosets import coset_decompose, parabolic_elements
from .pieces import PieceIndex, check_piece
from .twist import DiagramAutomorphism
from .weyl import WeylElement, WeylGroup, sort_key


def cyclic_shift_neighbors(w: WeylElement, subset,
                           tw: DiagramAutomorphism) -> frozenset[WeylElement]:
    """w together with every length-preserving one-step shift of it."""
    group = w.group
    subset = set(subset)
    image_subset = {tw(j) for j in subset}
    out = {w}
    n = w.length
    for word in group.all_reduced_words(w):
        if not word:
            continue
        first, last = word[0], word[-1]
        if first in subset:
            cand = group.simple(first) * w * group.simple(tw(first))
            if cand.length == n:
                out.add(cand)
        if last in image_subset:
            cand = group.simple(tw.inverse_label(last)) * w * group.simple(last)
            if cand.length == n:
                out.add(cand)
    return frozenset(out)


def shift_class(w: WeylElement, subset,
                tw: DiagramAutomorphism) -> frozenset[WeylElement]:
    """The full equivalence class of w under repeated shifts (cached)."""
    group = w.group
    key = ("shift_class", tw.key(), tuple(sorted(subset)), w.action)
    cached = group.cache.get(key)
    if cached is None:
        seen = {w}
        frontier = [w]
        while frontier:
            nxt = []
            for v in frontier:
                for c in cyclic_shift_neighbors(v, subset, tw):
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
            frontier = nxt
        cached = frozenset(seen)
        group.cache[key] = cached
    return cached


def dominated_mask(group: WeylGroup, tw: DiagramAutomorphism,
                   p: PieceIndex) -> int:
    """Bitmask over element indices of {w' : w' dominates w along (J, delta)}.

    Computed as the union of Bruhat up-sets of the length-preserving
    twisted conjugates of w; only those can sit below a dominating element
    of minimal length, so the pruning loses nothing.
    """
    key = ("dominated", tw.key(), p.subset, p.w.action)
    cached = group.cache.get(key)
    if cached is None:
        ups = up_masks(group)
        n = p.w.length
        mask = 0
        for u in parabolic_elements(group, p.subset):
            t = u.inverse() * p.w * tw.apply_element(u)
            if t.length == n:
                mask |= ups[group.element_index(t)]
        group.cache[key] = cached = mask
    return cached


def geq_twisted(wprime: WeylElement, p: PieceIndex,
                tw: DiagramAutomorphism, method: str = "conjugate") -> bool:
    """Does wprime dominate the piece index p = (J, w)?

    method="conjugate" searches u in W_J with wprime >= u^{-1} w delta(u),
    restricted to length-preserving conjugates; method="shift" tests
    Bruhat-aboveness of some member of the shift class.  The two agree.
    """
    group = wprime.group
    check_piece(group, tw, p.subset, p.w)
    if method == "conjugate":
        mask = dominated_mask(group, tw, p)
        return bool(mask >> group.element_index(wprime) & 1)
    if method == "shift":
        return any(bruhat_leq(w1, wprime)
                   for w1 in shift_class(p.w, p.subset, tw))
    raise ValueError("method must be 'conjugate' or 'shift'")


def leq_pieces(p1: PieceIndex, p2: PieceIndex,
               tw: DiagramAutomorphism) -> bool:
    """The closure order: (J1, w1) <= (J2, w2) iff J1 <= J2 and w1 dominates w2."""
    if not set(p1.subset) <= set(p2.subset):
        return False
    return geq_twisted(p1.w, p2, tw)


def closure_witness(p: PieceIndex, boundary, wprime: WeylElement,
                    tw: DiagramAutomorphism):
    """A factorisation witness that (boundary, wprime) lies under p.

    When wprime dominates (J, w), returns (x, u, u1) with x minimal for
    delta(K), u in W_J, u1 in W_K, x >= w * delta(u) and
    wprime = u1^{-1} u^{-1} x delta(u1); otherwise None.

    The construction picks a Bruhat-minimal v in
    {v in W_J : v * wprime >= w * delta(v)} (ties broken by length then
    word), splits v * wprime along delta(K), and reassembles.  The result
    is verified before being returned.
    """
    group = wprime.group
    check_piece(group, tw, p.subset, p.w)
    boundary = tuple(sorted(boundary))
    if not set(boundary) <= set(p.subset):
        raise ValueError("not a boundary subset")
    d_boundary = tw.apply_subset(boundary)
    check_piece(group, tw, boundary, wprime)
    if not geq_twisted(wprime, p, tw):
        return None

    candidates = [
        v for v in parabolic_elements(group, p.subset)
        if bruhat_leq(p.w * tw.apply_element(v), v * wprime)
    ]
    minimal = [
        v for v in candidates
        if not any(o != v and bruhat_leq(o, v) for o in candidates)
    ]
    tw_inv = tw.inverse_automorphism()

    def attempt(v: WeylElement):
        x, t = coset_decompose(v * wprime, d_boundary, "right")
        u1 = tw_inv.apply_element(t)
        u = v * u1.inverse()
        if not bruhat_leq(p.w * tw.apply_element(u), x):
            return None
        if (u1.inverse() * u.inverse() * x * tw.apply_element(u1)) != wprime:
            return None
        return x, u, u1

    for v in sorted(minimal, key=sort_key) + sorted(candidates, key=sort_key):
        found = attempt(v)
        if found is not None:
            return found
    raise AssertionError("witness must exist when wprime dominates the piece")
