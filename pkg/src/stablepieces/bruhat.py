"""Bruhat order plus the min/max products of an element with a lower set.

The order test is the standard descent recursion, materialised once per
group as bitmask rows (bit u of ``masks[v]`` says u <= v).  The literal
subword definition lives in :mod:`stablepieces.oracle` and the two are
compared exhaustively by the verification suite.
"""

from __future__ import annotations

from .weyl import WeylElement, WeylGroup, sort_key


def bruhat_masks(group: WeylGroup) -> list[int]:
    """Row bitmasks of the order: bit u of masks[v] is set iff u <= v.

    Rows are computed by increasing length: if v s_i < v then
    u <= v iff min(u, u s_i) <= v s_i.
    """
    masks = group.cache.get("bruhat_masks")
    if masks is not None:
        return masks
    order = group.elements()
    right = group.right_multiplication_table()
    lengths = group.lengths()
    n = len(order)
    by_length = sorted(range(n), key=lambda k: lengths[k])
    masks = [0] * n
    for iv in by_length:
        if lengths[iv] == 0:
            masks[iv] = 1 << iv
            continue
        pos = next(
            p for p in range(len(group.datum.labels))
            if lengths[right[iv][p]] < lengths[iv]
        )
        ivp = right[iv][pos]
        row = 0
        base = masks[ivp]
        for iu in range(n):
            ius = right[iu][pos]
            probe = ius if lengths[ius] < lengths[iu] else iu
            if base >> probe & 1:
                row |= 1 << iu
        masks[iv] = row | (1 << iv)
    group.cache["bruhat_masks"] = masks
    return masks


def up_masks(group: WeylGroup) -> list[int]:
    """Transposed rows: bit v of up_masks[u] is set iff v >= u."""
    ups = group.cache.get("bruhat_up_masks")
    if ups is not None:
        return ups
    masks = bruhat_masks(group)
    n = len(masks)
    ups = [0] * n
    for iv in range(n):
        row = masks[iv]
        while row:
            low = row & -row
            ups[low.bit_length() - 1] |= 1 << iv
            row ^= low
    group.cache["bruhat_up_masks"] = ups
    return ups


def bruhat_leq(u: WeylElement, v: WeylElement) -> bool:
    if u.group is not v.group:
        raise ValueError("incompatible root systems")
    group = u.group
    masks = bruhat_masks(group)
    return bool(masks[group.element_index(v)] >> group.element_index(u) & 1)


def lower_set(u: WeylElement) -> tuple[WeylElement, ...]:
    """All v with v <= u, sorted by (length, canonical word)."""
    group = u.group
    masks = bruhat_masks(group)
    row = masks[group.element_index(u)]
    order = group.elements()
    out = [order[k] for k in range(len(order)) if row >> k & 1]
    out.sort(key=sort_key)
    return tuple(out)


def covers(v: WeylElement) -> tuple[WeylElement, ...]:
    """The elements covered by v: u < v with l(u) = l(v) - 1."""
    target = v.length - 1
    return tuple(u for u in lower_set(v) if u.length == target)


def min_shift_product(u: WeylElement, w: WeylElement) -> WeylElement:
    """The unique Bruhat minimum of {v w : v <= u}.

    Recursive construction: peel the smallest left descent s_i off u,
    take the minimum y1 for the shorter element, and keep s_i y1 exactly
    when it drops the length.
    """
    if u.group is not w.group:
        raise ValueError("incompatible root systems")
    if u.length == 0:
        return w
    s = u.group.simple(min(u.left_descents()))
    y1 = min_shift_product(s * u, w)
    sy = s * y1
    return sy if sy.length < y1.length else y1


def max_shift_product(u: WeylElement, w: WeylElement) -> WeylElement:
    """The unique Bruhat maximum of {v w : v <= u} (dual recursion)."""
    if u.group is not w.group:
        raise ValueError("incompatible root systems")
    if u.length == 0:
        return w
    s = u.group.simple(min(u.left_descents()))
    y1 = max_shift_product(s * u, w)
    sy = s * y1
    return sy if sy.length > y1.length else y1


def dominated_product_witness(
    u: WeylElement, w: WeylElement, wprime: WeylElement, part: int
) -> WeylElement:
    """A witness v <= u with v*wprime <= u*w (part 1) or u*wprime <= v*w (part 2).

    Requires wprime <= w; existence is then guaranteed, and a bounded search
    over the lower set of u in deterministic order returns the first hit.
    """
    if part not in (1, 2):
        raise ValueError("part must be 1 or 2")
    if not bruhat_leq(wprime, w):
        raise ValueError("w' not <= w")
    uw = u * w
    uwp = u * wprime
    for v in lower_set(u):
        if part == 1:
            if bruhat_leq(v * wprime, uw):
                return v
        else:
            if bruhat_leq(uwp, v * w):
                return v
    raise AssertionError("dominated product witness must exist")
