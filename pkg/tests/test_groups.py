import pytest

from brownalg.groups import AbelianGroup, GroupHom, Z4_3, support_S

Z2 = AbelianGroup(0, (2,))
Z4 = AbelianGroup(0, (4,))
Z2_3 = AbelianGroup(0, (2, 2, 2))


def test_add_reduces_torsion():
    g = Z4_3.elt((0, 1, 0)) + Z4_3.elt((0, 0, 1))
    assert g == Z4_3.elt((0, 1, 1))
    b1, b2 = Z4_3.elt((0, 1, 0)), Z4_3.elt((0, 0, 1))
    b3 = -b1 - b2
    assert (b1 + b2 + b3).is_zero()
    assert b3 == Z4_3.elt((0, 3, 3))


def test_embedded_aj_sum():
    # a1 + a2 = a3 under the sign-group embedding
    assert Z4_3.elt((0, 2, 0)) + Z4_3.elt((0, 0, 2)) == Z4_3.elt((0, 2, 2))


def test_mismatched_groups_rejected():
    with pytest.raises(ValueError):
        Z4.elt((1,)) + Z2.elt((1,))


@pytest.mark.parametrize("coords,order", [((2, 0, 0), 2), ((0, 1, 0), 4),
                                          ((0, 0, 0), 1), ((2, 2, 1), 4)])
def test_order_of(coords, order):
    assert Z4_3.elt(coords).order() == order


def test_infinite_order_rejected():
    g = AbelianGroup(1, (4,))
    with pytest.raises(ValueError):
        g.elt((1, 0)).order()


def test_support_set():
    g0 = Z4_3.elt((2, 0, 0))
    s = support_S(g0)
    assert len(s) == 56
    assert Z4_3.elt((1, 0, 0)) not in s
    assert Z4_3.elt((0, 1, 0)) in s
    # |S| = |G| - #{g : 2g = g0}
    halves = [g for g in Z4_3.elements() if 2 * g == g0]
    assert len(halves) == 8 and len(s) == 64 - 8


def test_support_rejects_bad_g0():
    with pytest.raises(ValueError):
        support_S(Z4_3.elt((1, 0, 0)))


def test_hom_quotient_projection_embedding():
    q = GroupHom.from_matrix(Z4, Z2, [(1,)])
    assert q(Z4.elt((3,))) == Z2.elt((1,))
    proj = GroupHom.from_matrix(Z4_3, Z4, [(1,), (0,), (0,)])
    assert proj(Z4_3.elt((2, 1, 3))) == Z4.elt((2,))
    emb = GroupHom.from_matrix(Z2_3, Z4_3, [(0, 0, 2), (0, 2, 0), (2, 0, 0)])
    assert emb(Z2_3.elt((0, 0, 1))) == Z4_3.elt((2, 0, 0))


def test_ill_defined_hom_rejected():
    with pytest.raises(ValueError):
        GroupHom.from_matrix(Z2, Z4, [(1,)])  # 2*(1 mod 4) != 0


def test_hom_compose():
    emb = GroupHom.from_matrix(Z2, Z4, [(2,)])
    proj = GroupHom.from_matrix(Z4, Z2, [(1,)])
    both = proj.compose(emb)
    assert both(Z2.elt((1,))).is_zero()


def test_exhaustive_group_axioms_small():
    g = AbelianGroup(0, (2, 4))
    els = list(g.elements())
    assert len(els) == g.order() == 8
    zero = g.zero()
    for a in els:
        assert a + zero == a
        assert (a + (-a)).is_zero()
        for b in els:
            assert a + b == b + a
            for c in els:
                assert (a + b) + c == a + (b + c)
