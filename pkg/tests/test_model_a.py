import random

from brownalg.qi import QI, ONE, ZERO, pow_i
from brownalg.groups import Z4_3
from brownalg.linalg import QMatrix, dense_mat_mul, veq, vscale
from brownalg.model_a import (PAULI_X, PAULI_Y, XI, gl4_automorphism_check,
                              hat, hat_identities_check, pfaffian,
                              psi_pi_commutation_check, skew_from_upper,
                              uncorrected_pair_check, verify_pi_automorphism)
from brownalg import gradings


def test_hat_single_entry():
    x = skew_from_upper((1, 0, 0, 0, 0, 0))
    assert hat(x)[2][3] == ONE            # alpha lands in the zeta slot
    assert pfaffian(x) == ZERO


def test_hat_is_involutive():
    rng = random.Random(0)
    for _ in range(10):
        x = skew_from_upper([QI(rng.randint(-3, 3), rng.randint(-3, 3))
                             for _ in range(6)])
        assert hat(hat(x)) == x


def test_pfaffian_example():
    x = skew_from_upper((1, 0, 0, 0, 0, 1))      # E12 - E21 + E34 - E43
    assert pfaffian(x) == ONE
    p = dense_mat_mul(x, hat(x))
    assert all(p[i][j] == (-ONE if i == j else ZERO)
               for i in range(4) for j in range(4))


def test_hat_identities():
    rep = hat_identities_check(seed=0, trials=50)
    assert rep.passed, rep.as_text()


def test_pauli_matrices():
    assert PAULI_X[1][1] == pow_i(1)
    assert PAULI_Y[3][0] == ONE
    y4 = PAULI_Y
    for _ in range(3):
        y4 = dense_mat_mul(y4, PAULI_Y)
    assert all(y4[i][j] == (ONE if i == j else ZERO) for i in range(4) for j in range(4))


def test_gl4_actions_are_automorphisms(model_a):
    rep = gl4_automorphism_check(model_a.h4)
    assert rep.passed, rep.as_text()


def test_build_report(model_a):
    assert model_a.report.passed, model_a.report.as_text()


def test_pi_automorphism(model_a):
    rep = verify_pi_automorphism(model_a)
    assert rep.passed, rep.as_text()


def test_commutation_patterns(model_a):
    assert psi_pi_commutation_check(model_a).passed
    assert uncorrected_pair_check(model_a).passed


def test_fine_grading(model_a):
    dims = gradings.component_dims(model_a.grading)
    assert len(dims) == 56 and all(d == 1 for d in dims.values())
    assert model_a.g0 == Z4_3.elt((2, 0, 0))
    assert gradings.is_fine_dim1(model_a.grading)


def test_even_component_vectors(model_a):
    """A_(0,k,l) is spanned by the clock^k shift^l z-block combination."""
    h4 = model_a.h4
    lbl = {l: i for i, l in enumerate(model_a.alg.labels)}
    for (k, l) in ((0, 0), (1, 2), (3, 1)):
        idx = lbl[f"e_0{k}{l}"]
        vec = model_a.bmap.new_basis[idx]
        w = [[ONE if i == j else ZERO for j in range(4)] for i in range(4)]
        for _ in range(k):
            w = dense_mat_mul(w, PAULI_X)
        for _ in range(l):
            w = dense_mat_mul(w, PAULI_Y)
        zero4 = [[ZERO] * 4 for _ in range(4)]
        assert veq(vec, h4.vec(w, zero4, zero4))


def test_carrier_theta_and_v(model_a):
    carrier = model_a.carrier
    v = carrier.v_vec
    assert veq(carrier.mul(v, v), carrier.one)
    # conj(v) = -v: the skew line
    assert veq(carrier.conj(v), vscale(QI(-1), v))


def test_z4_coarsening_dims(model_a):
    from brownalg.groups import AbelianGroup, GroupHom
    z4 = AbelianGroup(0, (4,))
    proj = GroupHom.from_matrix(Z4_3, z4, [(1,), (0,), (0,)])
    co = gradings.coarsen(model_a.grading, proj)
    dims = gradings.component_dims(co)
    assert {g.coords[0]: d for g, d in dims.items()} == {0: 16, 1: 12, 2: 16, 3: 12}
    # and the induced Z2-coarsening gives the 32/24 split
    z2 = AbelianGroup(0, (2,))
    q = GroupHom.from_matrix(z4, z2, [(1,)])
    co2 = gradings.coarsen(co, q)
    dims2 = gradings.component_dims(co2)
    assert {g.coords[0]: d for g, d in dims2.items()} == {0: 32, 1: 24}
