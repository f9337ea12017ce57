import pytest

from stablepieces.oracle import brute_stable_subset
from stablepieces.pieces import (boundary_index, check_piece,
                                 enumerate_pieces, piece_dimension,
                                 stable_subset, stable_subset_sequence)

from helpers import automorphism, elem, group, piece


def test_enumerate_a1():
    g = group("A1")
    tw = automorphism("A1")
    got = [(p.subset, p.w.reduced_word()) for p in enumerate_pieces(g, tw)]
    assert got == [((1,), ()), ((), ()), ((), (1,))]


def test_enumerate_a2_counts():
    g = group("A2")
    for aut in ("id", "1:2,2:1"):
        ps = enumerate_pieces(g, automorphism("A2", aut))
        assert len(ps) == 13
        assert len(set(ps)) == 13


@pytest.mark.parametrize("spec,aut", [
    ("B2", "id"), ("G2", "id"), ("A3", "id"), ("A3", "1:3,2:2,3:1"),
])
def test_enumerate_counts_match_coset_counts(spec, aut):
    from itertools import combinations

    from stablepieces.cosets import min_coset_reps
    g = group(spec)
    tw = automorphism(spec, aut)
    expected = 0
    for size in range(len(g.datum.labels) + 1):
        for J in combinations(g.datum.labels, size):
            expected += len(min_coset_reps(g, right=tw.apply_subset(J)))
    assert len(enumerate_pieces(g, tw)) == expected


def test_check_piece_rejects_non_minimal():
    g = group("A2")
    with pytest.raises(ValueError, match="minimal"):
        check_piece(g, automorphism("A2"), (1,), g.simple(1))
    # with the flip, membership is tested against the image subset
    check_piece(g, automorphism("A2", "1:2,2:1"), (2,), g.simple(2))
    with pytest.raises(ValueError, match="minimal"):
        check_piece(g, automorphism("A2", "1:2,2:1"), (2,), g.simple(1))


def test_stable_subset_examples():
    g = group("A2")
    tid = automorphism("A2")
    assert stable_subset(g, tid, (1, 2), g.identity) == (1, 2)
    assert stable_subset(g, tid, (1,), g.simple(2)) == ()
    tsw = automorphism("A2", "1:2,2:1")
    assert stable_subset(g, tsw, (1,), g.identity) == ()


def test_stable_subset_sequence_examples():
    g = group("A2")
    tid = automorphism("A2")
    assert stable_subset_sequence(g, tid, (1,), g.simple(2)) == [(1,), ()]
    assert stable_subset_sequence(g, tid, (1, 2), g.identity) == [(1, 2)]


@pytest.mark.parametrize("spec,aut", [
    ("A2", "id"), ("A2", "1:2,2:1"), ("B2", "id"), ("A3", "id"),
    ("A3", "1:3,2:2,3:1"),
])
def test_stable_subset_matches_brute(spec, aut):
    g = group(spec)
    tw = automorphism(spec, aut)
    for p in enumerate_pieces(g, tw):
        seq = stable_subset_sequence(g, tw, p.subset, p.w)
        assert len(seq) <= len(p.subset) + 1
        assert seq[-1] == brute_stable_subset(g, tw, p.subset, p.w)


def test_boundary_index_examples():
    g = group("A2")
    tid = automorphism("A2")
    w0 = g.longest_element()
    # K = J gives back the ambient index itself
    assert boundary_index(g, tid, (1, 2), (1, 2)) == w0 * w0
    assert boundary_index(g, tid, (1, 2), (1,)) == elem("A2", 1, 2)
    assert boundary_index(g, tid, (1, 2), ()) == w0


def test_boundary_index_rejects_non_subset():
    g = group("A2")
    with pytest.raises(ValueError, match="not a boundary subset"):
        boundary_index(g, automorphism("A2"), (1,), (2,))


def test_dimensions_rank_one():
    g = group("A1")
    tid = automorphism("A1")
    dims = [piece_dimension(g, tid, p) for p in enumerate_pieces(g, tid)]
    # hand-derived orbit structure of the compactified rank-1 group:
    # the group itself, the open piece of the boundary, the closed orbit piece
    assert dims == [3, 2, 1]


def test_dimension_full_group_piece():
    # (J = I, w = e) is the dense piece: dimension of the group itself
    for spec, dim in [("A2", 8), ("B2", 10), ("G2", 14), ("A3", 15)]:
        g = group(spec)
        tid = automorphism(spec)
        assert piece_dimension(g, tid, piece(spec, g.datum.labels)) == dim


def test_dimension_closed_orbit_piece():
    # (J = {}, w = e) lies over the full flag variety squared
    g = group("A2")
    assert piece_dimension(g, automorphism("A2"), piece("A2", ())) == 6
