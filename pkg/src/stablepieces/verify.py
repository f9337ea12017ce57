"""Exhaustive property sweeps comparing the fast implementations against
their brute-force twins, plus the structural laws the closure machinery
rests on.  Every check runs over a whole group with a fixed automorphism
and reports one row; the CLI `verify` command turns rows into a table and
a process exit code.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import oracle
from .bruhat import (bruhat_leq, bruhat_masks, dominated_product_witness,
                     lower_set, max_shift_product, min_shift_product, up_masks)
from .cells import (cell_groups, group_labels, label_reachability,
                    root_stable_subset, root_stable_subset_brute)
from .closure import BxBOrbit, orbit_closure_leq, piece_closure
from .cosets import (coset_decompose, min_coset_reps, parabolic_elements,
                     support)
from .pieces import (PieceIndex, enumerate_pieces, piece_dimension,
                     stable_subset_sequence, subsets_ordered, twisted_stable)
from .shifts import (closure_witness, dominated_mask, geq_twisted,
                     leq_pieces, shift_class)
from .twist import DiagramAutomorphism
from .weyl import WeylGroup


@dataclass(frozen=True)
class CheckRow:
    prop: str
    ok: bool
    detail: str
    informational: bool = False


def _parabolic_indices(group: WeylGroup, subset) -> tuple[int, ...]:
    return tuple(group.element_index(w)
                 for w in parabolic_elements(group, subset))


# -- 1. Bruhat order against the literal subword definition ---------------

def check_bruhat_order(group: WeylGroup, tw: DiagramAutomorphism):
    order = group.elements()
    count = 0
    for u in order:
        for v in order:
            if bruhat_leq(u, v) != oracle.brute_bruhat_leq(u, v):
                return False, f"mismatch at u={u!r} v={v!r}"
            count += 1
    return True, f"{count} pairs"


# -- 2. The stable-subset limit -------------------------------------------

def check_stable_subset(group: WeylGroup, tw: DiagramAutomorphism):
    count = 0
    for p in enumerate_pieces(group, tw):
        seq = stable_subset_sequence(group, tw, p.subset, p.w)
        if len(seq) > len(p.subset) + 1:
            return False, f"sequence too long at {p!r}"
        for a, b in zip(seq, seq[1:]):
            if not set(b) < set(a):
                return False, f"sequence not strictly decreasing at {p!r}"
        if seq[-1] != oracle.brute_stable_subset(group, tw, p.subset, p.w):
            return False, f"limit disagrees with brute maximum at {p!r}"
        family = [
            K for size in range(len(p.subset) + 1)
            for K in combinations(p.subset, size)
            if twisted_stable(group, tw, p.w, K)
        ]
        for K1 in family:
            for K2 in family:
                union = tuple(sorted(set(K1) | set(K2)))
                if union not in family:
                    return False, f"family not union-closed at {p!r}"
        count += 1
    return True, f"{count} pieces"


# -- 3. Min/max shift products and the dominated-product witnesses ---------

def check_shift_products(group: WeylGroup, tw: DiagramAutomorphism):
    order = group.elements()
    pairs = 0
    for u in order:
        for w in order:
            lo = min_shift_product(u, w)
            hi = max_shift_product(u, w)
            blo, bhi = oracle.brute_min_max_products(u, w)
            if lo != blo or hi != bhi:
                return False, f"products disagree at u={u!r} w={w!r}"
            if lo.length != w.length - (lo * w.inverse()).length:
                return False, f"min length law fails at u={u!r} w={w!r}"
            if hi.length != w.length + (hi * w.inverse()).length:
                return False, f"max length law fails at u={u!r} w={w!r}"
            # choice independence: any left descent gives the same answer
            for i in u.left_descents():
                s = group.simple(i)
                y1 = min_shift_product(s * u, w)
                sy = s * y1
                if (sy if sy.length < y1.length else y1) != lo:
                    return False, f"min depends on descent choice at u={u!r}"
                y1 = max_shift_product(s * u, w)
                sy = s * y1
                if (sy if sy.length > y1.length else y1) != hi:
                    return False, f"max depends on descent choice at u={u!r}"
            pairs += 1
    witnesses = 0
    for u in order:
        for w in order:
            for wp in lower_set(w):
                uw = u * w
                v1 = dominated_product_witness(u, w, wp, 1)
                if not (bruhat_leq(v1, u) and bruhat_leq(v1 * wp, uw)):
                    return False, f"part-1 witness invalid at u={u!r} w={w!r}"
                v2 = dominated_product_witness(u, w, wp, 2)
                if not (bruhat_leq(v2, u) and bruhat_leq(u * wp, v2 * w)):
                    return False, f"part-2 witness invalid at u={u!r} w={w!r}"
                witnesses += 1
    return True, f"{pairs} pairs, {witnesses} witness triples"


# -- 4. The twisted domination relation ------------------------------------

def check_twisted_domination(group: WeylGroup, tw: DiagramAutomorphism):
    order = group.elements()
    masks = bruhat_masks(group)
    ups = up_masks(group)
    mult = group.multiplication_table()
    inv = group.inverse_table()
    idx = {w: group.element_index(w) for w in order}
    checked = 0
    for p in enumerate_pieces(group, tw):
        w = p.w
        iw = idx[w]
        members = parabolic_elements(group, p.subset)
        # twisted conjugates t_u = u^{-1} w delta(u), by index
        conj = [
            mult[mult[inv[idx[u]]][iw]][idx[tw.apply_element(u)]]
            for u in members
        ]
        cls = shift_class(w, p.subset, tw)
        if any(v.length != w.length for v in cls):
            return False, f"shift class changes length at {p!r}"
        if not {idx[v] for v in cls} <= set(conj):
            return False, f"shift class leaves twisted conjugates at {p!r}"

        unpruned = 0
        for t in conj:
            unpruned |= ups[t]
        pruned = dominated_mask(group, tw, p)
        shifted = 0
        for v in cls:
            shifted |= ups[idx[v]]
        if not (pruned == shifted == unpruned):
            return False, f"domination methods disagree at {p!r}"
        for wp in order:
            if oracle.brute_geq_twisted(wp, p, tw, 1) != bool(
                pruned >> idx[wp] & 1
            ):
                return False, f"brute condition (1) disagrees at {p!r}, {wp!r}"

        # condition (2) brings no new positives, and every certifying pair
        # (u, v) admits x <= u with w' >= x^{-1} w delta(x)
        prefix: dict[int, int] = {}
        for u in members:
            iu = idx[u]
            below = masks[iu]
            acc = 0
            for pos, x in enumerate(members):
                if below >> idx[x] & 1:
                    acc |= ups[conj[pos]]
            prefix[iu] = acc
        for u in members:
            iu = idx[u]
            for v in members:
                if not masks[idx[v]] >> iu & 1:
                    continue
                t = mult[mult[inv[iu]][iw]][idx[tw.apply_element(v)]]
                positives = ups[t]
                if positives & ~unpruned:
                    return False, f"condition (2) adds positives at {p!r}"
                if positives & ~prefix[iu]:
                    return False, f"remark witness missing at {p!r}"

        # plain order implies domination implies the length bound
        if ups[iw] & ~pruned:
            return False, f"Bruhat-above w but not dominating at {p!r}"
        short = 0
        for v in order:
            if v.length < w.length:
                short |= 1 << idx[v]
        if pruned & short:
            return False, f"domination below length of w at {p!r}"
        checked += 1
    return True, f"{checked} pieces"


# -- 5. The piece order is a partial order -----------------------------------

def _piece_down_masks(group: WeylGroup, tw: DiagramAutomorphism):
    pieces_list = enumerate_pieces(group, tw)
    rows = []
    for p in pieces_list:
        row = 0
        for j, q in enumerate(pieces_list):
            if leq_pieces(q, p, tw):
                row |= 1 << j
        rows.append(row)
    return pieces_list, rows


def check_piece_order(group: WeylGroup, tw: DiagramAutomorphism):
    pieces_list, rows = _piece_down_masks(group, tw)
    n = len(pieces_list)
    for i in range(n):
        if not rows[i] >> i & 1:
            return False, f"not reflexive at {pieces_list[i]!r}"
    for i in range(n):
        for j in range(n):
            if i != j and rows[i] >> j & 1 and rows[j] >> i & 1:
                return False, "not antisymmetric"
            if rows[i] >> j & 1 and rows[j] & ~rows[i]:
                return False, "not transitive"
    return True, f"{n} pieces, {n * n} comparisons"


# -- 6. Piece closures against factorisation witnesses ------------------------

def check_closure_witnesses(group: WeylGroup, tw: DiagramAutomorphism):
    pieces_list = enumerate_pieces(group, tw)
    count = 0
    for p in pieces_list:
        for q in pieces_list:
            if not set(q.subset) <= set(p.subset):
                continue
            fast = leq_pieces(q, p, tw)
            brute = oracle.brute_closure_witness_exists(p, q.subset, q.w, tw)
            if fast != brute:
                return False, f"closure vs witness disagree: {q!r} under {p!r}"
            if fast and closure_witness(p, q.subset, q.w, tw) is None:
                return False, f"constructive witness missing: {q!r} under {p!r}"
            count += 1
    return True, f"{count} candidate pairs"


# -- 7. Orbit-closure criterion: specialisation and twisted translation -------

def check_orbit_closure_forms(group: WeylGroup, tw: DiagramAutomorphism):
    order = group.elements()
    masks = bruhat_masks(group)
    mult = group.multiplication_table()
    idx = {w: group.element_index(w) for w in order}
    labels = group.datum.labels
    checked = 0

    if tw.is_identity():
        # second sentence of the closure criterion: for orbits [J, w, 1]
        # membership collapses to x >= w u with u in W_J
        for J in subsets_ordered(labels):
            par_j = set(_parabolic_indices(group, J))
            reps_j = min_coset_reps(group, right=J)
            for K in subsets_ordered(J):
                reps_k = min_coset_reps(group, right=K)
                for w in reps_j:
                    a = BxBOrbit(J, w, group.identity)
                    iw = idx[w]
                    for x in reps_k:
                        ix = idx[x]
                        for u in order:
                            iu = idx[u]
                            expected = (iu in par_j
                                        and bool(masks[ix] >> mult[iw][iu] & 1))
                            got = orbit_closure_leq(a, BxBOrbit(K, x, u))
                            if got != expected:
                                return False, (
                                    f"specialisation fails at J={J} K={K} "
                                    f"w={w!r} x={x!r} u={u!r}"
                                )
                            checked += 1

    # twisted translation: the triples filling a twisted orbit closure are
    # exactly the untwisted criterion applied to relabelled orbits
    for p in enumerate_pieces(group, tw):
        d_j = tw.apply_subset(p.subset)
        a = BxBOrbit(d_j, p.w, group.identity)
        iw = idx[p.w]
        for K in subsets_ordered(p.subset):
            d_k = tw.apply_subset(K)
            for x in min_coset_reps(group, right=d_k):
                ix = idx[x]
                for u in parabolic_elements(group, p.subset):
                    du = tw.apply_element(u)
                    member = bool(masks[ix] >> mult[iw][idx[du]] & 1)
                    got = orbit_closure_leq(a, BxBOrbit(d_k, x, du))
                    if got != member:
                        return False, (
                            f"twisted translation fails at {p!r} K={K} "
                            f"x={x!r} u={u!r}"
                        )
                    checked += 1
    return True, f"{checked} orbit pairs"


# -- 8. The cell suite ---------------------------------------------------------

def check_cell_partition(group: WeylGroup, tw: DiagramAutomorphism):
    count = 0
    for p in enumerate_pieces(group, tw):
        closure_set = set(piece_closure(group, tw, p))
        seen: dict[PieceIndex, object] = {}
        for grp in cell_groups(group, tw, p):
            for q in grp.members:
                if q in seen:
                    return False, f"piece {q!r} in two groups under {p!r}"
                seen[q] = grp.u
        if set(seen) != closure_set:
            return False, f"groups do not partition the closure of {p!r}"
        count += 1
    return True, f"{count} closures partitioned"


def check_cell_factor_uniqueness(group: WeylGroup, tw: DiagramAutomorphism):
    count = 0
    for p in enumerate_pieces(group, tw):
        seen: dict[tuple, tuple] = {}
        for u in group_labels(group, tw, p):
            i2 = root_stable_subset(group, tw, p.subset, u)
            for v in parabolic_elements(group, tw.apply_subset(i2)):
                key = (u * v).action
                if key in seen and seen[key] != (u.action, v.action):
                    return False, f"factorisation not unique under {p!r}"
                seen[key] = (u.action, v.action)
                count += 1
    return True, f"{count} products"


def check_cell_label_order(group: WeylGroup, tw: DiagramAutomorphism):
    count = 0
    for p in enumerate_pieces(group, tw):
        finite = all(
            not root_stable_subset(group, tw, p.subset, u)
            for u in group.elements() if geq_twisted(u, p, tw)
        )
        if not finite:
            continue
        reach = label_reachability(group, tw, p)
        for u1 in reach:
            for u2 in reach:
                if u1 != u2 and u2 in reach[u1] and u1 in reach[u2]:
                    return False, f"label order has a 2-cycle under {p!r}"
        count += 1
    return True, f"{count} finite closures"


def check_twisted_cancellation(group: WeylGroup, tw: DiagramAutomorphism):
    idx = {w: group.element_index(w) for w in group.elements()}
    count = 0
    for p in enumerate_pieces(group, tw):
        mask = dominated_mask(group, tw, p)
        for K in subsets_ordered(p.subset):
            par = parabolic_elements(group, tw.apply_subset(K))
            for wp in group.elements():
                if not twisted_stable(group, tw, wp, K):
                    continue
                dominates = bool(mask >> idx[wp] & 1)
                for v in par:
                    if mask >> idx[wp * v] & 1 and not dominates:
                        return False, f"cancellation fails at {p!r} w'={wp!r}"
                    count += 1
    return True, f"{count} cancellation triples"


def check_minimal_part_monotonicity(group: WeylGroup, tw: DiagramAutomorphism):
    count = 0
    for J in subsets_ordered(group.datum.labels):
        members = parabolic_elements(group, J)
        reps = min_coset_reps(group, right=J)
        for w in reps:
            for v in members:
                wv = w * v
                base = wv.length
                for u in group.elements():
                    uwv = u * wv
                    if uwv.length != base - u.length:
                        continue
                    wp, _ = coset_decompose(uwv, J, "right")
                    if not bruhat_leq(wp, w):
                        return False, (
                            f"minimal part grows at J={J} u={u!r} w={w!r}"
                        )
                    if wp == w:
                        winv = w.inverse()
                        for i in support(u):
                            pos = group.datum.labels.index(i)
                            k = group.roots.simple_indices[pos]
                            s = winv.action[k]
                            lab = group.roots.label_of_simple(
                                s if s >= 0 else ~s
                            )
                            if lab is None or lab not in set(J):
                                return False, (
                                    f"support transfer fails at J={J} u={u!r}"
                                )
                    count += 1
    return True, f"{count} admissible triples"


def check_root_stable_impls(group: WeylGroup, tw: DiagramAutomorphism):
    count = 0
    for J in subsets_ordered(group.datum.labels):
        for w in group.elements():
            fast = root_stable_subset(group, tw, J, w)
            brute = root_stable_subset_brute(group, tw, J, w)
            if fast != brute:
                return False, f"implementations disagree at J={J} w={w!r}"
            count += 1
    return True, f"{count} subset computations"


# -- informational: dimensions strictly drop along strict closure -------------

def check_dimension_monotonicity(group: WeylGroup, tw: DiagramAutomorphism):
    if group.datum.rank > 2:
        return True, "skipped above rank 2"
    count = 0
    for p in enumerate_pieces(group, tw):
        dp = piece_dimension(group, tw, p)
        for q in piece_closure(group, tw, p):
            if q != p and piece_dimension(group, tw, q) >= dp:
                return False, f"dimension does not drop: {q!r} under {p!r}"
            count += 1
    return True, f"{count} boundary pieces"


CHECKS = (
    ("bruhat-order-oracle", check_bruhat_order, False),
    ("stable-subset-limit", check_stable_subset, False),
    ("shift-products", check_shift_products, False),
    ("twisted-domination", check_twisted_domination, False),
    ("piece-order-axioms", check_piece_order, False),
    ("closure-witnesses", check_closure_witnesses, False),
    ("orbit-closure-forms", check_orbit_closure_forms, False),
    ("cell-partition", check_cell_partition, False),
    ("cell-factor-uniqueness", check_cell_factor_uniqueness, False),
    ("cell-label-order", check_cell_label_order, False),
    ("twisted-cancellation", check_twisted_cancellation, False),
    ("minimal-part-monotonicity", check_minimal_part_monotonicity, False),
    ("root-stable-impls", check_root_stable_impls, False),
    ("dimension-monotonicity", check_dimension_monotonicity, True),
)

CHECK_NAMES = tuple(name for name, _, _ in CHECKS)


def run_checks(group: WeylGroup, tw: DiagramAutomorphism,
               names=None) -> list[CheckRow]:
    wanted = set(names) if names else None
    rows = []
    for name, fn, informational in CHECKS:
        if wanted is not None and name not in wanted:
            continue
        ok, detail = fn(group, tw)
        rows.append(CheckRow(name, ok, detail, informational))
    return rows
