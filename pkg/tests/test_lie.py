import json
import os
import random

import pytest

from brownalg.qi import QI, ONE, ZERO
from brownalg.groups import AbelianGroup
from brownalg.linalg import QMatrix, veq, vscale
from brownalg import lie as lie_mod
from brownalg.lie import (LieAlg, center, induced_operator_grading, jacobi_check,
                          killing_form, killing_rank, verify_lie_grading)


def test_e6_dimension_and_golden(der6):
    assert der6.lie.dim == 78
    dims = {}
    for d in der6.lie.degrees:
        key = ",".join(map(str, d.coords))
        dims[key] = dims.get(key, 0) + 1
    path = os.path.join(os.path.dirname(__file__), "golden", "e6_dims.json")
    with open(path) as fh:
        golden = json.load(fh)
    assert dims == golden["by_degree"]
    assert sorted(dims.values()) == golden["dim_vector_sorted"]
    assert dims.get("0,0,0", 0) == golden["zero_degree_dim"]


def test_e6_derivations_kill_s0(der6, model_b):
    assert all(not op.cols[model_b.s0_index] for op in der6.ops)


def test_e6_leibniz_sampled(der6, model_b):
    from brownalg.structurable import random_vec
    alg = model_b.alg
    rng = random.Random(1)
    for _ in range(10):
        D = der6.ops[rng.randrange(len(der6.ops))]
        a = random_vec(rng, 56, span=1)
        b = random_vec(rng, 56, span=1)
        lhs = D.apply(alg.mul(a, b))
        rhs = alg.mul(D.apply(a), b)
        for k, c in alg.mul(a, D.apply(b)).items():
            rhs[k] = rhs.get(k, ZERO) + c
            if not rhs[k]:
                del rhs[k]
        assert veq(lhs, rhs)


def test_e6_grading_and_certificates(der6):
    assert verify_lie_grading(der6.lie).passed
    assert jacobi_check(der6.lie, mode="full").passed
    assert killing_rank(der6.lie) == 78
    assert len(center(der6.lie)) == 0


def test_e6_homogeneous_pairs(der6, model_b):
    """D(x,y) for homogeneous x,y is homogeneous of degree deg x + deg y."""
    from brownalg.structurable import d_op
    from brownalg.gradings import operator_degree
    degs = model_b.grading.degrees
    rng = random.Random(2)
    for _ in range(30):
        i = rng.randrange(56)
        j = rng.randrange(56)
        op = d_op(model_b.alg, {i: ONE}, {j: ONE})
        if not op.is_zero():
            assert operator_degree(op, degs) == degs[i] + degs[j]


def test_induced_operator_grading(der6, model_b):
    fam = induced_operator_grading(der6.ops, model_b.grading.degrees)
    assert fam.dim == 78


def test_str_invariants(str7):
    assert str7.lie.dim == 134
    assert str7.der_dim == 78
    assert str7.center_dim == 1
    assert str7.derived_dim == 133
    assert str7.inner_equals_str
    parts = {0: 0, 1: 0}
    for p in str7.parity:
        parts[p] += 1
    assert parts == {0: 79, 1: 55}
    assert verify_lie_grading(str7.lie).passed


def test_str_even_part_is_der_plus_tk(str7, model_b):
    # parity-0 basis vectors are exactly the derivations and T_{s0}
    zero_idx = [i for i, p in enumerate(str7.parity) if p == 0]
    assert zero_idx == list(range(78)) + [78 + model_b.s0_index]


def test_kan_shape(kan8):
    assert kan8.lie.dim == 248
    assert kan8.piece_dims == (1, 56, 134, 56, 1)
    zdims = {}
    for z in kan8.z_degrees:
        zdims[z] = zdims.get(z, 0) + 1
    assert zdims == {-2: 1, -1: 56, 0: 134, 1: 56, 2: 1}


def test_kan_grading_and_z_coarsening(kan8):
    assert verify_lie_grading(kan8.lie).passed
    # Z-coarsening of the combined degree map reproduces the 5-grading
    for i, d in enumerate(kan8.combined_degrees):
        assert d.free[0] == kan8.z_degrees[i]


def test_kan_jacobi_sampled_and_certs(kan8):
    rep = jacobi_check(kan8.lie, mode="sampled", samples=4000, seed=0)
    assert rep.passed
    assert kan8.lie.certs["jacobi"]["mode"] == "sampled"


def test_ad_homomorphism_sampled(kan8):
    """ad[x,y] = [ad x, ad y] on sampled index pairs (a Jacobi restatement)."""
    L = kan8.lie
    rng = random.Random(5)
    for _ in range(6):
        i = rng.randrange(L.dim)
        j = rng.randrange(L.dim)
        if i == j:
            continue
        adi, adj = L.ad(i), L.ad(j)
        lhs = QMatrix(L.dim, [dict(L.bracket(L.bracket_idx(i, j), {k: ONE}))
                              for k in range(L.dim)])
        rhs = adi.compose(adj) - adj.compose(adi)
        assert lhs == rhs


def test_killing_invariance_sampled(kan8):
    L = kan8.lie
    gram = killing_form(L)

    def kappa(x, y):
        t = ZERO
        for i, a in x.items():
            row = gram[i]
            for j, b in y.items():
                v = row.get(j)
                if v is not None:
                    t = t + a * b * v
        return t

    rng = random.Random(9)

    def sparse_vec():
        return {rng.randrange(L.dim): QI(rng.randint(1, 3), rng.randint(-2, 2))
                for _ in range(20)}

    for _ in range(10):
        x, y, z = sparse_vec(), sparse_vec(), sparse_vec()
        assert kappa(L.bracket(x, y), z) == kappa(x, L.bracket(y, z))


def test_jacobi_negative_control():
    # a deliberately corrupted sl2-like table fails with a witness
    h, e, f = 0, 1, 2
    brk = {(h, e): {e: QI(2)}, (h, f): {f: QI(-2)}, (e, f): {h: ONE}}
    L = LieAlg(["h", "e", "f"], brk)
    assert jacobi_check(L, mode="full").passed
    bad = LieAlg(["h", "e", "f"], {**brk, (e, f): {h: ONE, e: ONE}})
    rep = jacobi_check(bad, mode="full")
    assert not rep.passed and "triple" in rep.checks[0].detail


def test_killing_form_no_degrees_fallback():
    brk = {(0, 1): {1: QI(2)}, (0, 2): {2: QI(-2)}, (1, 2): {0: ONE}}
    L = LieAlg(["h", "e", "f"], brk)
    assert killing_rank(L) == 3
    assert len(center(L)) == 0
    L2 = LieAlg(["a", "b"], {})
    assert killing_rank(L2) == 0
    assert len(center(L2)) == 2
