import pytest

from stablepieces.bruhat import bruhat_leq
from stablepieces.cosets import in_parabolic, is_minimal_right
from stablepieces.pieces import PieceIndex, enumerate_pieces
from stablepieces.shifts import (closure_witness, cyclic_shift_neighbors,
                                 geq_twisted, leq_pieces, shift_class)

from helpers import automorphism, elem, group, piece


def words(elements):
    return sorted(w.reduced_word() for w in elements)


def test_neighbors_examples():
    g = group("A2")
    tid = automorphism("A2")
    tsw = automorphism("A2", "1:2,2:1")
    assert cyclic_shift_neighbors(g.identity, (1,), tid) == {g.identity}
    assert words(cyclic_shift_neighbors(g.simple(1), (1,), tsw)) \
        == [(1,), (2,)]
    assert cyclic_shift_neighbors(g.simple(2), (1,), tid) == {g.simple(2)}


def test_shift_class_examples():
    g = group("A2")
    assert words(shift_class(g.simple(1), (1,), automorphism("A2", "1:2,2:1"))) \
        == [(1,), (2,)]
    assert shift_class(g.simple(2), (1,), automorphism("A2")) == {g.simple(2)}
    for w in g.elements():
        assert shift_class(w, (), automorphism("A2")) == {w}


def test_geq_twisted_examples():
    g = group("A2")
    tid = automorphism("A2")
    p = piece("A2", (1,), 2)
    assert geq_twisted(p.w, p, tid)  # reflexive through u = e
    got = words(w for w in g.elements() if geq_twisted(w, p, tid))
    assert got == [(1, 2), (1, 2, 1), (2,), (2, 1)]

    tsw = automorphism("A2", "1:2,2:1")
    p2 = PieceIndex((1,), g.simple(1))
    got = words(w for w in g.elements() if geq_twisted(w, p2, tsw))
    assert got == [(1,), (1, 2), (1, 2, 1), (2,), (2, 1)]


@pytest.mark.parametrize("spec,aut", [
    ("A2", "id"), ("A2", "1:2,2:1"), ("B2", "id"), ("G2", "id"),
])
def test_methods_agree(spec, aut):
    g = group(spec)
    tw = automorphism(spec, aut)
    for p in enumerate_pieces(g, tw):
        for w in g.elements():
            assert geq_twisted(w, p, tw, "conjugate") \
                == geq_twisted(w, p, tw, "shift")


def test_method_name_checked():
    g = group("A1")
    with pytest.raises(ValueError, match="method"):
        geq_twisted(g.identity, piece("A1", ()), automorphism("A1"), "guess")


def test_leq_pieces_examples():
    tw = automorphism("A1")
    p_closed = piece("A1", (), 1)
    p_open = piece("A1", ())
    p_group = piece("A1", (1,))
    assert leq_pieces(p_closed, p_open, tw)
    assert not leq_pieces(p_open, p_closed, tw)
    assert leq_pieces(p_open, p_group, tw)
    for p in enumerate_pieces(group("A1"), tw):
        assert leq_pieces(p, p, tw)


def test_closure_witness_trivial():
    g = group("A2")
    tid = automorphism("A2")
    p = piece("A2", (1,), 2)
    x, u, u1 = closure_witness(p, p.subset, p.w, tid)
    assert (x, u, u1) == (p.w, g.identity, g.identity)


def test_closure_witness_examples():
    g = group("A2")
    tid = automorphism("A2")
    p = piece("A2", (1,), 2)
    got = closure_witness(p, (), elem("A2", 2, 1), tid)
    assert got is not None
    x, u, u1 = got
    assert is_minimal_right(x, ())
    assert in_parabolic(u, p.subset) and in_parabolic(u1, ())
    assert bruhat_leq(p.w * tid.apply_element(u), x)
    assert u1.inverse() * u.inverse() * x * tid.apply_element(u1) \
        == elem("A2", 2, 1)
    assert closure_witness(p, (), g.simple(1), tid) is None


def test_closure_witness_checks_arguments():
    g = group("A2")
    tid = automorphism("A2")
    p = piece("A2", (1,), 2)
    with pytest.raises(ValueError, match="boundary"):
        closure_witness(p, (2,), g.identity, tid)
    with pytest.raises(ValueError, match="minimal"):
        closure_witness(p, (1,), g.simple(1), tid)


@pytest.mark.parametrize("spec,aut", [("A2", "id"), ("A2", "1:2,2:1"),
                                      ("B2", "id")])
def test_shift_class_contents(spec, aut):
    g = group(spec)
    tw = automorphism(spec, aut)
    from stablepieces.cosets import parabolic_elements
    for p in enumerate_pieces(g, tw):
        conjugates = {
            u.inverse() * p.w * tw.apply_element(u)
            for u in parabolic_elements(g, p.subset)
        }
        for member in shift_class(p.w, p.subset, tw):
            assert member.length == p.w.length
            assert member in conjugates
