import random

from brownalg.qi import QI, ONE
from brownalg.linalg import veq, vsub
from brownalg.isos import (build_cd_albf, check_quaternion_double,
                           compare_models, iota_matrix_iso,
                           quaternion_matrix_units, recognition_invariants)
from brownalg.structurable import random_vec


def test_chain_report(chain):
    assert chain.report.passed, chain.report.as_text()


def test_quaternion_units_and_double(albert):
    units = quaternion_matrix_units(albert.oct)
    assert len(units) == 4
    rep = check_quaternion_double(albert.oct)
    assert rep.passed


def test_v_maps_through_chain(model_a, model_b, chain):
    v = model_a.carrier.v_vec
    assert veq(chain.phi1.apply(v), chain.cd_albf.v_vec)
    assert veq(chain.chain.apply(v), {1: ONE})   # s0 in the carrier basis


def test_iota_idempotents(albert, model_b, chain):
    cd_albf = chain.cd_albf
    phi2 = chain.phi2
    carrier = model_b.carrier
    # iota(1) and 1 - iota(1) are orthogonal idempotents
    e_alb = phi2.apply({k: c for k, c in albert.alg.one.items()})
    e_f = vsub(carrier.one, e_alb)
    assert veq(carrier.mul(e_alb, e_alb), e_alb)
    assert veq(carrier.mul(e_f, e_f), e_f)
    assert not carrier.mul(e_alb, e_f)
    # iota(E1) is idempotent
    iE1 = phi2.apply({0: ONE})
    assert veq(carrier.mul(iE1, iE1), iE1)


def test_iota_multiplicative_on_randoms(albert, chain, model_b):
    """iota(x)^2 = iota(x^2) for random exact Albert elements."""
    rng = random.Random(6)
    phi2 = chain.phi2
    carrier = model_b.carrier
    for _ in range(50):
        x = random_vec(rng, 27)
        ix = phi2.apply(dict(x))
        x2 = albert.alg.mul(x, x)
        assert veq(carrier.mul(ix, ix), phi2.apply(dict(x2)))


def test_hom_chain_is_algebra_iso(model_a, model_b, chain):
    m = chain.hom_chain
    A, B = model_a.alg, model_b.alg
    rng = random.Random(8)
    for _ in range(20):
        x = random_vec(rng, 56, span=1)
        y = random_vec(rng, 56, span=1)
        assert veq(m.apply(A.mul(x, y)), B.mul(m.apply(x), m.apply(y)))
    assert veq(m.apply(A.one), B.one)


def test_transported_trace(model_a, chain):
    alg = model_a.alg
    assert alg.trace is not None
    assert alg.trace_of(alg.one) == QI(2)
    # invariance along the transported form
    from brownalg.intkernel import IntTable
    tab = IntTable.for_algebra(alg)
    rng = random.Random(13)
    for _ in range(20):
        a, b, c = (random_vec(rng, 56) for _ in range(3))
        assert tab.trace_invariance(a, b, c)


def test_trace_orthogonality_model_a(model_a, chain):
    from brownalg.structurable import orthogonality_check, trace_gram
    from brownalg.linalg import rank_rows
    rep = orthogonality_check(model_a.alg, model_a.grading.degrees)
    assert rep.passed
    assert rank_rows(trace_gram(model_a.alg)) == 56


def test_recognition_invariants(model_a, model_b):
    for model in (model_a, model_b):
        rep = recognition_invariants(model, random.Random(0))
        assert rep.passed, rep.as_text()


def test_model_fingerprints_agree(model_a, model_b):
    rep = compare_models(model_a, model_b)
    assert rep.passed, rep.as_text()
