from brownalg.qi import QI, ONE
from brownalg.groups import AbelianGroup, GroupHom, Z4_3, support_S
from brownalg.linalg import veq, vscale
from brownalg.model_b import check_products_table, embed_z23, Z2_3
from brownalg.composition import A1, A2, G0
from brownalg import gradings


def test_build_report(model_b):
    assert model_b.report.passed, model_b.report.as_text()


def test_embedding():
    emb = embed_z23()
    assert emb(Z2_3.elt(A1)) == Z4_3.elt((0, 2, 0))
    assert emb(Z2_3.elt(A2)) == Z4_3.elt((0, 0, 2))
    assert emb(Z2_3.elt(G0)) == Z4_3.elt((2, 0, 0))


def test_degrees_of_distinguished_elements(model_b):
    degs = model_b.grading.degrees
    assert degs[model_b.basis_index(("one",))].is_zero()
    assert degs[model_b.basis_index(("s0",))] == Z4_3.elt((2, 0, 0))
    assert degs[model_b.basis_index(("eps", 1))] == Z4_3.elt((0, 2, 0))
    assert degs[model_b.basis_index(("eps", 2))] == Z4_3.elt((0, 0, 2))
    assert degs[model_b.basis_index(("eps", 3))] == Z4_3.elt((0, 2, 2))
    # deg(al[1, 0]) = b_1
    assert degs[model_b.basis_index(("al", 1, (0, 0, 0), 0))] == Z4_3.elt((0, 1, 0))
    # deg(ap[j,h]) = (1,0,0) + b_j + h
    h = (0, 0, 1)
    assert degs[model_b.basis_index(("ap", 1, h, 0))] == \
        Z4_3.elt((1, 1, 0)) + embed_z23()(Z2_3.elt(h))


def test_grading_fine_and_support(model_b):
    dims = gradings.component_dims(model_b.grading)
    assert len(dims) == 56
    assert all(d == 1 for d in dims.values())
    assert set(dims) == support_S(model_b.g0)


def test_products_table(model_b):
    rep = check_products_table(model_b)
    assert rep.passed, rep.as_text()


def test_selected_product_examples(model_b):
    alg = model_b.alg

    def v(name):
        return {model_b.basis_index(name): ONE}

    s0 = v(("s0",))
    # eps_j eps'_j = s0
    assert veq(alg.mul(v(("eps", 1)), v(("epsp", 1))), s0)
    # al[1,0] al[1,a1] = 8
    g = (0, 0, 0)
    ga = A1
    assert veq(alg.mul(v(("al", 1, g, 0)), v(("al", 1, ga, 0))),
               vscale(QI(8), alg.one))


def test_misassigned_degree_fails_verification(model_b):
    degs = list(model_b.grading.degrees)
    degs[5] = degs[5] + Z4_3.elt((1, 0, 0))
    bad = gradings.Grading(model_b.alg, Z4_3, degs)
    rep = gradings.verify(bad)
    assert not rep.passed


def test_trivial_grading_verifies(model_b):
    triv = AbelianGroup(0, (2,))
    g = gradings.Grading(model_b.alg, triv, [triv.zero()] * 56)
    assert gradings.verify(g).passed


def test_quotient_by_g0_merges_pairs(model_b):
    cod = AbelianGroup(0, (2, 4, 4))
    hom = GroupHom.from_matrix(Z4_3, cod, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    co = gradings.coarsen(model_b.grading, hom)
    dims = gradings.component_dims(co)
    assert len(dims) == 28 and all(d == 2 for d in dims.values())
