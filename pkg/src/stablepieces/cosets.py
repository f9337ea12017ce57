"""Parabolic subgroups, minimal coset representatives and two constructive
factorisation procedures used by the closure machinery.

Membership in W^J is tested root-theoretically (w sends every alpha_j,
j in J, to a positive root); no enumeration is involved.  The two
factorisation procedures implement inductive rewriting rather than search,
so running them doubles as an executable check of the underlying argument;
brute-force counterparts live in the oracle module.
"""

from __future__ import annotations

from typing import Iterable

from .bruhat import bruhat_leq
from .weyl import WeylElement, WeylGroup, sort_key


def _simple_pos(group: WeylGroup, label: int) -> int:
    return group.roots.simple_indices[group.datum.labels.index(label)]


def is_minimal_right(w: WeylElement, subset: Iterable[int]) -> bool:
    """w in W^J: every alpha_j with j in J stays positive under w."""
    group = w.group
    return all(w.action[_simple_pos(group, j)] >= 0 for j in subset)


def is_minimal_left(w: WeylElement, subset: Iterable[int]) -> bool:
    """w in ^JW."""
    return is_minimal_right(w.inverse(), subset)


def coset_decompose(w: WeylElement, subset, side: str = "right"):
    """Split w into its minimal representative and parabolic part.

    side="right": w = x * v with x in W^J, v in W_J and lengths adding.
    side="left":  w = v * x with v in W_J, x in ^JW.
    """
    group = w.group
    labels = tuple(sorted(subset))
    if side == "right":
        x, v = w, group.identity
        while True:
            for j in labels:
                if x.action[_simple_pos(group, j)] < 0:
                    s = group.simple(j)
                    x = x * s
                    v = s * v
                    break
            else:
                return x, v
    elif side == "left":
        x, v = w, group.identity
        while True:
            inv = x.inverse()
            for j in labels:
                if inv.action[_simple_pos(group, j)] < 0:
                    s = group.simple(j)
                    x = s * x
                    v = v * s
                    break
            else:
                return v, x
    else:
        raise ValueError("side must be 'right' or 'left'")


def parabolic_elements(group: WeylGroup, subset) -> tuple[WeylElement, ...]:
    """All of W_J, sorted by (length, word).  Cached per subset."""
    key = ("parabolic", tuple(sorted(subset)))
    cached = group.cache.get(key)
    if cached is None:
        labels = tuple(sorted(subset))
        seen = {group.identity.action: group.identity}
        queue = [group.identity]
        while queue:
            w = queue.pop()
            for j in labels:
                ws = w * group.simple(j)
                if ws.action not in seen:
                    seen[ws.action] = ws
                    queue.append(ws)
        cached = tuple(sorted(seen.values(), key=sort_key))
        group.cache[key] = cached
    return cached


def min_coset_reps(group: WeylGroup, left=None, right=None, kind: str = "right"):
    """Minimal coset representatives: W^K, ^JW or the double set ^JW^K."""
    if kind == "right":
        test = lambda w: is_minimal_right(w, right or ())
    elif kind == "left":
        test = lambda w: is_minimal_left(w, left or ())
    elif kind == "double":
        test = lambda w: (is_minimal_left(w, left or ())
                          and is_minimal_right(w, right or ()))
    else:
        raise ValueError("kind must be 'right', 'left' or 'double'")
    return tuple(sorted((w for w in group.elements() if test(w)), key=sort_key))


def support(w: WeylElement) -> tuple[int, ...]:
    """The letters occurring in any reduced word of w."""
    return tuple(sorted(set(w.reduced_word())))


def in_parabolic(w: WeylElement, subset) -> bool:
    return set(support(w)) <= set(subset)


def cross_subset(w: WeylElement, left, right) -> tuple[int, ...]:
    """K = J' intersect Ad(w)J for a double-coset-minimal w.

    k belongs to K exactly when w^{-1}(alpha_k) is a simple root whose
    label lies in the right subset.
    """
    group = w.group
    winv = w.inverse()
    out = []
    for k in sorted(left):
        lab = group.roots.label_of_simple(winv.action[_simple_pos(group, k)])
        if lab is not None and lab in right:
            out.append(k)
    return tuple(out)


def cross_label(w: WeylElement, k: int) -> int:
    """The label l with s_k w = w s_l, i.e. w^{-1}(alpha_k) = alpha_l."""
    group = w.group
    lab = group.roots.label_of_simple(w.inverse().action[_simple_pos(group, k)])
    if lab is None:
        raise ValueError("reflection does not transfer through w")
    return lab


def push_through_minimal(w: WeylElement, u: WeylElement, left, right):
    """Rewrite u*w as v*w*u2 across a minimal double-coset representative.

    Given w in ^{J'}W^J and u in W_{J'}, returns (v, u2) with
    u*w = v*w*u2, v in W_{J'} intersect W^K and u2 in W_{Ad(w^{-1})K},
    where K = J' intersect Ad(w)J.

    The rewriting peels left factors s_i off u; when s_i*v fails to stay
    coset-minimal it must equal v*s_k for a (unique) k in K, and s_k
    transfers through w as s_l on the other side.
    """
    group = w.group
    if not (is_minimal_left(w, left) and is_minimal_right(w, right)):
        raise ValueError("w is not a minimal double coset representative")
    if not in_parabolic(u, left):
        raise ValueError("u is not in the parabolic subgroup of the left subset")
    K = cross_subset(w, left, right)
    transfer = {k: cross_label(w, k) for k in K}

    def rec(u: WeylElement):
        if u.length == 0:
            return group.identity, group.identity
        i = min(u.left_descents())
        s_i = group.simple(i)
        v1, u1 = rec(s_i * u)
        sv = s_i * v1
        if is_minimal_right(sv, K):
            return sv, u1
        # s_i v1 > v1 here, and s_i v1 = v1 s_k for the unique k below
        k = group.roots.label_of_simple(
            v1.inverse().action[_simple_pos(group, i)]
        )
        assert k is not None and k in transfer
        return v1, group.simple(transfer[k]) * u1

    return rec(u)


def shrink_left_factor(subset, w: WeylElement, u: WeylElement,
                       target: WeylElement) -> WeylElement:
    """Find u2 <= u with u2*w = x*target, given u*w = x*v and target <= v.

    Preconditions: w in W^J, l(u*w) = l(u) + l(w), and target <= v where
    u*w = x*v is the right coset split along J.  The construction follows
    the descent induction on u, so each step either keeps or drops the
    leading reflection.
    """
    group = w.group
    if not is_minimal_right(w, subset):
        raise ValueError("w is not minimal in its right coset")
    if (u * w).length != u.length + w.length:
        raise ValueError("lengths do not add: l(u w) != l(u) + l(w)")
    _, v = coset_decompose(u * w, subset, "right")
    if not bruhat_leq(target, v):
        raise ValueError("target is not Bruhat-below the parabolic part")

    def rec(u: WeylElement, tgt: WeylElement) -> WeylElement:
        if u.length == 0:
            assert tgt.length == 0
            return group.identity
        i = min(u.left_descents())
        s_i = group.simple(i)
        u1 = s_i * u
        x1, v1 = coset_decompose(u1 * w, subset, "right")
        if is_minimal_right(s_i * x1, subset):
            return s_i * rec(u1, tgt)
        j = group.roots.label_of_simple(
            x1.inverse().action[_simple_pos(group, i)]
        )
        assert j is not None and j in set(subset)
        if bruhat_leq(tgt, v1):
            return rec(u1, tgt)
        t1 = group.simple(j) * tgt
        assert bruhat_leq(t1, v1)
        return s_i * rec(u1, t1)

    return rec(u, target)
