"""Brute-force reference implementations used as ground truth.

Everything here is deliberately simple and slow: literal subword search
for the order, direct maxima over all subsets, full unpruned searches for
the twisted relations, and an independent reduced-word enumerator for the
shift classes.  The fast implementations never call into this module; the
verification suite compares the two sides exhaustively.

The Bruhat test itself is the one primitive the other oracles are allowed
to consume after it has been cross-checked, since every statement under
test is phrased on top of the order.
"""

from __future__ import annotations

from itertools import combinations

from .bruhat import bruhat_leq
from .cosets import is_minimal_right, parabolic_elements
from .pieces import PieceIndex, twisted_stable
from .twist import DiagramAutomorphism
from .weyl import WeylElement, WeylGroup


def brute_bruhat_leq(u: WeylElement, v: WeylElement) -> bool:
    """Literal subword test over one fixed reduced word of v."""
    word = v.reduced_word()
    group = u.group
    target = u.action
    k = u.length
    for size in range(len(word) + 1):
        if size < k:
            continue
        for positions in combinations(range(len(word)), size):
            w = group.identity
            for pos in positions:
                w = w * group.simple(word[pos])
            if w.action == target:
                return True
    return False


def brute_stable_subset(group: WeylGroup, tw: DiagramAutomorphism,
                        subset, w: WeylElement) -> tuple[int, ...]:
    """Direct maximum of {K <= J : Ad(w) delta(K) = K} over all subsets."""
    family = [
        K for size in range(len(subset) + 1)
        for K in combinations(sorted(subset), size)
        if twisted_stable(group, tw, w, K)
    ]
    union = tuple(sorted({k for K in family for k in K}))
    assert union in family, "the stable family must contain its union"
    return union


def brute_lower_set(u: WeylElement) -> list[WeylElement]:
    return [v for v in u.group.elements() if bruhat_leq(v, u)]


def brute_min_max_products(u: WeylElement, w: WeylElement):
    """Enumerated minimum and maximum of {v w : v <= u}.

    Asserts that the set really has a unique minimum and maximum.
    """
    values = {v * w for v in brute_lower_set(u)}
    minima = [y for y in values if all(bruhat_leq(y, z) for z in values)]
    maxima = [y for y in values if all(bruhat_leq(z, y) for z in values)]
    assert len(minima) == 1, "shifted lower set must have a unique minimum"
    assert len(maxima) == 1, "shifted lower set must have a unique maximum"
    return minima[0], maxima[0]


def brute_geq_twisted(wprime: WeylElement, p: PieceIndex,
                      tw: DiagramAutomorphism, condition: int = 1) -> bool:
    """Unpruned searches for the twisted domination conditions.

    condition=1: some u in W_J with wprime >= u^{-1} w delta(u).
    condition=2: some pair u <= v in W_J with wprime >= u^{-1} w delta(v).
    """
    group = wprime.group
    members = parabolic_elements(group, p.subset)
    if condition == 1:
        return any(
            bruhat_leq(u.inverse() * p.w * tw.apply_element(u), wprime)
            for u in members
        )
    if condition == 2:
        for v in members:
            wv = p.w * tw.apply_element(v)
            for u in members:
                if bruhat_leq(u, v) and bruhat_leq(u.inverse() * wv, wprime):
                    return True
        return False
    raise ValueError("condition must be 1 or 2")


def _reduced_words(w: WeylElement):
    """Fresh backtracking enumeration of every reduced word of w."""
    group = w.group
    if w.length == 0:
        yield ()
        return
    for i in w.left_descents():
        for rest in _reduced_words(group.simple(i) * w):
            yield (i,) + rest


def brute_shift_class(w: WeylElement, subset,
                      tw: DiagramAutomorphism) -> frozenset[WeylElement]:
    """Shift class by closing over freshly enumerated reduced words."""
    group = w.group
    subset = set(subset)
    image_subset = {tw(j) for j in subset}
    seen = {w}
    frontier = [w]
    while frontier:
        nxt = []
        for v in frontier:
            for word in _reduced_words(v):
                if not word:
                    continue
                cands = []
                if word[0] in subset:
                    cands.append(
                        group.simple(word[0]) * v * group.simple(tw(word[0]))
                    )
                if word[-1] in image_subset:
                    cands.append(
                        group.simple(tw.inverse_label(word[-1])) * v
                        * group.simple(word[-1])
                    )
                for c in cands:
                    if c.length == v.length and c not in seen:
                        seen.add(c)
                        nxt.append(c)
        frontier = nxt
    return frozenset(seen)


def brute_closure_witness_exists(p: PieceIndex, boundary,
                                 wprime: WeylElement,
                                 tw: DiagramAutomorphism) -> bool:
    """Does some (x, u, u1) certify (boundary, wprime) under p?

    Full search over u in W_J, u1 in W_K with x recovered from
    wprime = u1^{-1} u^{-1} x delta(u1).
    """
    group = wprime.group
    d_boundary = tw.apply_subset(boundary)
    for u in parabolic_elements(group, p.subset):
        wdu = p.w * tw.apply_element(u)
        for u1 in parabolic_elements(group, boundary):
            x = u * u1 * wprime * tw.apply_element(u1).inverse()
            if is_minimal_right(x, d_boundary) and bruhat_leq(wdu, x):
                return True
    return False
