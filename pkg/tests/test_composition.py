import json
import os
import random

import pytest

from brownalg.qi import QI, ONE, ZERO
from brownalg.composition import (A0, A1, A2, A3, G0, OCT_SUPPORT, badd,
                                  build_split_octonions, build_split_quaternions,
                                  cd_compose, gamma, gamma_matrix, psi, sigma,
                                  sigma11_matrix, sigma_j, sign_s,
                                  verify_basis_lemma)
from brownalg.structurable import random_vec
from brownalg.linalg import veq, vadd, vscale

# the four gamma blocks and sigma11, as printed
GAMMA_BLOCKS = {
    "11": [[1, -1, -1, -1], [-1, -1, 1, -1], [-1, -1, -1, 1], [-1, 1, -1, -1]],
    "12": [[-1, -1, -1, -1], [-1, 1, -1, 1], [-1, 1, 1, -1], [-1, -1, 1, 1]],
    "21": [[-1, 1, 1, 1], [-1, -1, -1, 1], [-1, 1, -1, -1], [-1, -1, 1, -1]],
    "22": [[-1, -1, -1, -1], [1, -1, -1, 1], [1, 1, -1, -1], [1, -1, 1, -1]],
}
SIGMA11 = [[1, 1, 1, 1], [1, -1, 1, -1], [1, -1, -1, 1], [1, 1, -1, -1]]


def test_psi_examples():
    assert psi(A1, A1) == 1
    assert all(psi((0, 0, 0), h) == 0 for h in OCT_SUPPORT)
    assert psi(A1, A2) == 0


def test_sign_examples():
    assert gamma((0, 0, 0), (0, 0, 0)) == 1
    assert gamma(A1, A1) == -1
    assert sigma(A1, A2) == 1
    assert sign_s((0, 0, 0)) == 1
    assert all(sign_s(g) == -1 for g in OCT_SUPPORT if g != (0, 0, 0))


def test_gamma_matrix_matches_printed_blocks():
    got = gamma_matrix(build_split_octonions())
    expected = [GAMMA_BLOCKS["11"][i] + GAMMA_BLOCKS["12"][i] for i in range(4)]
    expected += [GAMMA_BLOCKS["21"][i] + GAMMA_BLOCKS["22"][i] for i in range(4)]
    assert got == expected


def test_sigma11_matches_printed_block():
    assert sigma11_matrix() == SIGMA11


def test_sigma_j_table_equals_sigma11():
    supp_p = [badd(G0, a) for a in (A0, A1, A2, A3)]
    table = [[sigma_j(j, h) for h in supp_p] for j in range(4)]
    assert table == SIGMA11


def test_basis_lemma():
    rep = verify_basis_lemma()
    assert rep.passed, rep.as_text()


def test_octonion_products_and_norm():
    t = build_split_octonions()
    assert t.mul(t.basis_vec(A1), t.basis_vec(A2)) == {t.index[A3]: ONE}
    assert t.norm(t.basis_vec(A1)) == ONE
    # n(x_g, x_h) = 0 for g != h
    for g in OCT_SUPPORT:
        for h in OCT_SUPPORT:
            want = ZERO if g != h else QI(2) * t.norm(t.basis_vec(g))
            assert t.norm_polar(t.basis_vec(g), t.basis_vec(h)) == want


def test_para_product_is_gamma():
    t = build_split_octonions()
    for g in OCT_SUPPORT:
        for h in OCT_SUPPORT:
            got = t.para_mul(t.basis_vec(g), t.basis_vec(h))
            assert got == {t.index[badd(g, h)]: QI(gamma(g, h))}


def test_composition_law_random():
    t = build_split_octonions()
    rng = random.Random(7)
    for _ in range(40):
        a = random_vec(rng, 8)
        b = random_vec(rng, 8)
        assert t.norm(t.mul(a, b)) == t.norm(a) * t.norm(b)


def test_cd_compose_basics():
    q = build_split_quaternions()
    c = cd_compose(q, QI(1))
    assert c.dim == 8
    u = {4: ONE}
    assert c.mul(u, u) == {0: ONE}          # u^2 = mu 1
    assert c.alg.unit_index == 0            # unit preserved
    with pytest.raises(ValueError):
        cd_compose(q, QI(0))


def test_cd_compose_isomorphic_to_octonions():
    """CD(Q,1) embeds onto the twisted table with u mapped into F x_{g0}."""
    from brownalg.isos import check_quaternion_double
    rep = check_quaternion_double(build_split_octonions())
    assert rep.passed, rep.as_text()


def test_tables_export_golden():
    t = build_split_octonions()
    path = os.path.join(os.path.dirname(__file__), "golden", "gamma_sigma.json")
    doc = {"gamma": gamma_matrix(t), "sigma11": sigma11_matrix()}
    with open(path) as fh:
        assert json.load(fh) == doc
