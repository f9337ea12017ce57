import pytest

from helpers import elem, group


def test_from_word_basics():
    g = group("A2")
    assert g.from_word([]) == g.identity
    assert g.from_word([1, 1]) == g.identity
    assert g.from_word([1, 2, 1]) == g.from_word([2, 1, 2])


def test_from_word_rejects_unknown_label():
    with pytest.raises(ValueError, match="invalid generator"):
        group("A2").from_word([3])


def test_group_ops():
    g = group("A2")
    w0 = g.from_word([1, 2, 1])
    assert w0.length == 3
    assert elem("A2", 1, 2).inverse() == elem("A2", 2, 1)
    s1 = g.simple(1)
    assert s1.act_root((0, 1)) == (1, 1)
    assert (s1 * s1).is_identity()


def test_incompatible_parents():
    with pytest.raises(ValueError, match="incompatible root systems"):
        group("A2").simple(1) * group("B2").simple(1)


def test_descents():
    g = group("A2")
    assert g.identity.right_descents() == ()
    assert g.identity.left_descents() == ()
    w = elem("A2", 1, 2)
    assert w.right_descents() == (2,)
    assert w.left_descents() == (1,)
    w0 = g.longest_element()
    assert w0.right_descents() == (1, 2)
    assert w0.left_descents() == (1, 2)


def test_reduced_word_deterministic():
    assert group("A2").longest_element().reduced_word() == (1, 2, 1)
    assert group("A2").identity.reduced_word() == ()
    assert len(group("B2").longest_element().reduced_word()) == 4


def test_all_reduced_words():
    g = group("A2")
    assert g.all_reduced_words(g.longest_element()) == {(1, 2, 1), (2, 1, 2)}
    for w in g.elements():
        if w.length <= 1:
            assert len(g.all_reduced_words(w)) == 1
    g3 = group("A3")
    assert len(g3.all_reduced_words(g3.longest_element())) == 16


def test_longest_element():
    g = group("A2")
    assert g.longest_element(()) == g.identity
    assert g.longest_element((1,)) == g.simple(1)
    assert g.longest_element((1, 2)) == g.from_word([1, 2, 1])


@pytest.mark.parametrize("spec,order", [
    ("A1", 2), ("A1xA1", 4), ("A2", 6), ("B2", 8), ("G2", 12), ("A3", 24),
])
def test_group_orders(spec, order):
    assert group(spec).order == order


@pytest.mark.parametrize("spec", ["A2", "B2", "G2", "A3"])
def test_length_laws(spec):
    g = group(spec)
    for u in g.elements():
        for v in g.elements():
            uv = u * v
            assert uv.length <= u.length + v.length
            assert (uv.length - u.length - v.length) % 2 == 0


@pytest.mark.parametrize("spec", ["A2", "B2", "G2", "A3"])
def test_word_round_trip(spec):
    g = group(spec)
    for w in g.elements():
        word = w.reduced_word()
        assert len(word) == w.length
        assert g.from_word(word) == w


@pytest.mark.parametrize("spec", ["A2", "B2", "G2", "A3"])
def test_longest_element_involution_and_normalisation(spec):
    g = group(spec)
    from itertools import combinations
    labels = g.datum.labels
    for size in range(len(labels) + 1):
        for J in combinations(labels, size):
            w0j = g.longest_element(J)
            assert (w0j * w0j).is_identity()
            # positive roots of the sub-system all flip sign
            phi = g.roots.phi_subset_positive(J)
            assert all(w0j.action[k] < 0 for k in phi)
            # conjugation permutes the simple reflections of the subset
            conj = {w0j * g.simple(j) * w0j for j in J}
            assert conj == {g.simple(j) for j in J}
