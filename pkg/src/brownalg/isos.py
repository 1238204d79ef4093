"""The isomorphism chain between the two Brown models, and recognition checks.

    CD(H4(Q),1)  --Phi1-->  CD(Alb x F, 1)  --Phi2-->  matrix model carrier

Phi1 splits the double along the order-2 automorphism that negates the
fourth-row blocks and the doubling generator: the fixed subalgebra maps by
diag(x,lambda) -> (x,lambda) and v iota'_j(a) -> (iota_j(ua), 0), where u is
the generator completing the quaternion subalgebra of the twisted octonions
(u = i x_{g0}, since x_{g0}^2 = -1).  Phi2 sends (x,lambda) to
1/4 (eta(2x-T(x)1) + eta'(2x-T(x)1) + T(x) 1) + lambda e_F and v' to s0.
Both maps are certified multiplicative on every basis pair; the trace form
of the matrix model transports back along the chain to model A.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .qi import QI, ZERO, ONE, I, qi
from .composition import (A0, A1, A2, A3, G0, OCT_SUPPORT, CompositionTable,
                          build_split_octonions)
from .groups import Z4_3, support_S
from .jordan import Albert, albert_times_f
from .linalg import Echelon, QMatrix, Vec, vadd, vaxpy, veq, vscale, vsub
from .model_a import ModelA
from .model_b import ModelB
from .report import Report
from .structurable import Algebra, cd_double, jordan_check, random_vec
from . import gradings as _gradings

__all__ = ["quaternion_matrix_units", "octonion_doubling_generator",
           "build_cd_albf", "phi_cd_iso", "iota_matrix_iso", "IsoChain",
           "build_chain", "recognition_invariants", "compare_models"]

_HALF = QI(1) / QI(2)
_QUARTER = QI(1) / QI(4)


def quaternion_matrix_units(oct_t: CompositionTable) -> list[Vec]:
    """[E11, E12, E21, E22] inside the twisted quaternion subalgebra.

    E11 = (x0 + i x_{a1})/2, E12 = (x_{a2} + i x_{a3})/2,
    E21 = -(x_{a2} - i x_{a3})/2, E22 = (x0 - i x_{a1})/2; the standard
    involution swaps E11/E22 and negates E12/E21.
    """
    def bv(g):
        return oct_t.basis_vec(g)

    e11 = vscale(_HALF, vadd(bv(A0), vscale(I, bv(A1))))
    e22 = vscale(_HALF, vsub(bv(A0), vscale(I, bv(A1))))
    e12 = vscale(_HALF, vadd(bv(A2), vscale(I, bv(A3))))
    e21 = vscale(-_HALF, vsub(bv(A2), vscale(I, bv(A3))))
    units = [e11, e12, e21, e22]
    # matrix-unit products: E_ab E_cd = delta_bc E_ad
    pos = {(0, 0): 0, (0, 1): 1, (1, 0): 2, (1, 1): 3}
    for (a, b), i in pos.items():
        for (c, d), j in pos.items():
            expect = units[pos[(a, d)]] if b == c else {}
            if not veq(oct_t.mul(units[i], units[j]), expect):
                raise AssertionError("matrix-unit relations fail in the twisted table")
    # standard involution: conj(E11) = E22, conj(E12) = -E12
    if not (veq(oct_t.conj(e11), e22) and veq(oct_t.conj(e12), vscale(QI(-1), e12))
            and veq(oct_t.conj(e21), vscale(QI(-1), e21))):
        raise AssertionError("standard involution mismatch on matrix units")
    return units


def octonion_doubling_generator(oct_t: CompositionTable) -> Vec:
    """u = i x_{g0}: a norm -1 vector orthogonal to the quaternion subalgebra
    with u^2 = 1, so C = Q + uQ realizes the doubling with mu = 1."""
    u = vscale(I, oct_t.basis_vec(G0))
    if not veq(oct_t.mul(u, u), {oct_t.alg.unit_index: ONE}):
        raise AssertionError("doubling generator fails u^2 = 1")
    return u


def _emb4(units: list[Vec], qcoords) -> Vec:
    """Quaternion (E11,E12,E21,E22)-coordinates -> twisted octonion vector."""
    out: Vec = {}
    for c, unit in zip(qcoords, units):
        if c:
            vaxpy(out, c, unit)
    return out


def check_quaternion_double(oct_t: CompositionTable) -> Report:
    """(a,b) -> a + u b identifies CD(Q,1) with the twisted octonions."""
    rep = Report("octonion doubling identification")
    units = quaternion_matrix_units(oct_t)
    u = octonion_doubling_generator(oct_t)
    labels = ["q11", "q12", "q21", "q22"]
    mult = [[None] * 4 for _ in range(4)]
    pos = {(0, 0): 0, (0, 1): 1, (1, 0): 2, (1, 1): 3}
    for (a, b), i in pos.items():
        for (c, d), j in pos.items():
            mult[i][j] = {pos[(a, d)]: ONE} if b == c else {}
    invol = QMatrix(4, [{3: ONE}, {1: QI(-1)}, {2: QI(-1)}, {0: ONE}])
    qmu = Algebra(labels, mult, invol, {0: ONE, 3: ONE},
                  trace=[ONE, ZERO, ZERO, ONE])
    dbl = cd_double(qmu, QI(1), label_v="u")
    images = []
    for i in range(4):
        images.append(_emb4(units, [ONE if k == i else ZERO for k in range(4)]))
    for i in range(4):
        images.append(oct_t.mul(u, images[i]))
    bad = ""
    for i in range(8):
        for j in range(8):
            lhs = {}
            for k, c in dbl.mult[i][j].items():
                vaxpy(lhs, c, images[k])
            if not veq(lhs, oct_t.mul(images[i], images[j])):
                bad = f"({i},{j})"
                break
        if bad:
            break
    rep.add("doubling-map-multiplicative", not bad, bad)
    okc = all(veq(oct_t.conj(images[i]),
                  _apply_images(dbl.invol.cols[i], images)) for i in range(8))
    rep.add("doubling-map-involutive", okc)
    ech = Echelon()
    rep.add("doubling-map-bijective", all(ech.add(v) for v in images))
    return rep


def _apply_images(vec: Vec, images: list[Vec]) -> Vec:
    out: Vec = {}
    for k, c in vec.items():
        vaxpy(out, c, images[k])
    return out


def build_cd_albf(albert: Albert, mu: QI = QI(1)) -> Algebra:
    """CD(Alb x F, mu) on the natural basis [albert 27, eF] ++ v-copy."""
    return cd_double(albert_times_f(albert), mu, label_v="v'")


def phi_cd_iso(model_a: ModelA, albert: Albert, cd_albf: Algebra) -> QMatrix:
    """The 56x56 matrix of CD(H4(Q),1) -> CD(Alb x F,1), certified below."""
    h4 = model_a.h4
    n = h4.alg.dim
    oct_t = albert.oct
    units = quaternion_matrix_units(oct_t)
    u = octonion_doubling_generator(oct_t)

    def alb_coords(x_alb: Vec, lam: QI) -> Vec:
        out = dict(x_alb)
        if lam:
            out[27] = lam
        return out

    def shift(v: Vec) -> Vec:
        return {28 + k: c for k, c in v.items()}

    def phi0(h: Vec) -> Vec:
        """diag(x, lambda) -> (x, lambda) on the fixed 3x3 + corner part."""
        z, _, _ = h4.zxy(h)
        alphas = [z[p][p] for p in range(3)]
        lam = z[3][3]
        out: Vec = {}
        for p, a in enumerate(alphas):
            if a:
                out[p] = a
        for i, (r, c) in enumerate(((2, 1), (0, 2), (1, 0)), start=1):
            q = _emb4(units, h4.entry_q(h, r, c))
            if q:
                vaxpy(out, _HALF, albert.iota(i, q))
        return alb_coords(out, lam)

    def iprime_image(h: Vec) -> Vec:
        """v iota'_j(a) -> (iota_j(u a), 0) for the fourth-row part."""
        for j in range(3):
            q = h4.entry_q(h, j, 3)
            if any(q):
                a = _emb4(units, q)
                return dict(albert.iota(j + 1, vscale(_HALF, oct_t.mul(u, a))))
        return {}

    cols = []
    for v_copy in (False, True):
        for i in range(n):
            h = {i: ONE}
            kind, p, q = h4.kinds[i]
            fourth = (q == 3) or (kind == "z" and p == 3 and q != 3)
            if kind == "z" and p == 3 and q == 3:
                fourth = False
            if not fourth:
                img = phi0(h)
                cols.append(shift(img) if v_copy else img)
            else:
                img = iprime_image(h)
                cols.append(img if v_copy else shift(img))
    return QMatrix(56, cols)


def certify_iso(name: str, src: Algebra, dst: Algebra, m: QMatrix) -> Report:
    """Bijective, multiplicative on all basis pairs, involution-compatible."""
    rep = Report(name)
    ech = Echelon()
    rep.add("bijective", all(ech.add(dict(c)) for c in m.cols))
    bad = ""
    for i in range(src.dim):
        for j in range(src.dim):
            if not veq(m.apply(src.mult[i][j]), dst.mul(m.cols[i], m.cols[j])):
                bad = f"({i},{j})"
                break
        if bad:
            break
    rep.add("multiplicative-all-pairs", not bad, bad)
    okc = all(veq(m.apply(src.invol.cols[i]), dst.conj(m.cols[i]))
              for i in range(src.dim))
    rep.add("involution-compatible", okc)
    rep.add("unit-to-unit", veq(m.apply(src.one), dst.one))
    return rep


def iota_matrix_iso(albert: Albert, cd_albf: Algebra, carrier: Algebra) -> QMatrix:
    """CD(Alb x F,1) -> matrix model carrier, sending v' to s0."""
    t_vec = albert.t_vec

    def iota_map(x: Vec) -> Vec:
        t = ZERO
        for i in (0, 1, 2):
            c = x.get(i)
            if c is not None:
                t = t + c
        w = vsub(vscale(QI(2), x), vscale(t, albert.alg.one))
        out: Vec = {}
        for k, c in w.items():
            out[2 + k] = _QUARTER * c
            out[29 + k] = _QUARTER * c
        if t:
            out[0] = _QUARTER * t
        return out

    e_alb = iota_map(albert.alg.one)
    e_f = vsub(carrier.one, e_alb)

    def wrap(vec28: Vec) -> Vec:
        x = {k: c for k, c in vec28.items() if k < 27}
        out = iota_map(x)
        lam = vec28.get(27)
        if lam:
            vaxpy(out, lam, e_f)
        return out

    s0 = {1: ONE}
    cols = []
    for i in range(28):
        cols.append(wrap({i: ONE}))
    for i in range(28):
        cols.append(carrier.mul(s0, wrap({i: ONE})))
    return QMatrix(56, cols)


@dataclass
class IsoChain:
    cd_albf: Algebra
    phi1: QMatrix            # model A carrier -> CD(Alb x F, 1)
    phi2: QMatrix            # CD(Alb x F, 1) -> model B carrier
    chain: QMatrix           # composition, natural bases
    hom_chain: QMatrix       # model A homogeneous basis -> model B homogeneous basis
    report: Report


def build_chain(model_a: ModelA, model_b: ModelB) -> IsoChain:
    """Build and certify the full isomorphism chain; transport the trace form."""
    rep = Report("isomorphism chain")
    albert = model_b.albert
    rep.merge(check_quaternion_double(albert.oct))
    cd_albf = build_cd_albf(albert)
    phi1 = phi_cd_iso(model_a, albert, cd_albf)
    rep.merge(certify_iso("phi-cd", model_a.carrier, cd_albf, phi1))
    rep.add("v-to-vprime", veq(phi1.apply(model_a.carrier.v_vec), cd_albf.v_vec))
    phi2 = iota_matrix_iso(albert, cd_albf, model_b.carrier)
    rep.merge(certify_iso("iota-extension", cd_albf, model_b.carrier, phi2))
    rep.add("vprime-to-s0", veq(phi2.apply(cd_albf.v_vec), {1: ONE}))
    chain = phi2.compose(phi1)
    hom_chain = QMatrix(56, [model_b.bmap.to_new(chain.apply(model_a.bmap.to_old({i: ONE})))
                             for i in range(56)])
    # transport the matrix-model trace form back to model A (both bases)
    tr_carrier = [model_b.carrier.trace_of(chain.cols[i]) for i in range(56)]
    model_a.carrier.trace = tr_carrier
    model_a.alg.trace = [model_b.carrier.trace_of(
        chain.apply(model_a.bmap.to_old({i: ONE}))) for i in range(56)]
    rep.add("trace-of-unit-is-2", model_a.alg.trace_of(model_a.alg.one) == QI(2))
    return IsoChain(cd_albf, phi1, phi2, chain, hom_chain, rep)


# -- recognition-theorem invariants ---------------------------------------------

def recognition_invariants(model, rng: random.Random | None = None) -> Report:
    """Dimension-1 components, support S_{g0}, the 16-dimensional Jordan
    subalgebra over the order-4-free Z4^2 subgroup, and X^4 in F 1 for
    homogeneous X of order-4 degree."""
    rep = Report("recognition invariants")
    grading = model.grading
    alg = model.alg
    dims = _gradings.component_dims(grading)
    rep.add("components-dim-1", all(d == 1 for d in dims.values()))
    rep.add("support-count-56", len(dims) == 56)
    rep.add("support-is-S-g0", set(dims) == support_S(model.g0))

    sub_gens = [Z4_3.elt((0, 1, 0)), Z4_3.elt((0, 0, 1))]
    sub_alg, sub_grading, idx = _gradings.graded_subalgebra(grading, sub_gens)
    rep.add("z42-subalgebra-dim-16", sub_alg.dim == 16)
    jrep = jordan_check(sub_alg, rng if rng is not None else random.Random(0),
                        random_pairs=10)
    rep.merge(jrep)
    rep.add("z42-subalgebra-components-dim-1", _gradings.is_fine_dim1(sub_grading))

    bad = ""
    for i, d in enumerate(grading.degrees):
        if d.order() != 4:
            continue
        x = {i: ONE}
        x2 = alg.mul(x, x)
        x4 = alg.mul(x2, x2)
        scal = dict(x4)
        cu = [k for k in scal if alg.one.get(k)]
        rest = {k: c for k, c in scal.items() if not alg.one.get(k)}
        if rest or not cu:
            bad = f"basis {i}"
            break
    rep.add("order-4-elements-have-scalar-4th-power", not bad, bad)
    return rep


def compare_models(model_a, model_b) -> Report:
    """Shared fingerprint of the two fine gradings."""
    rep = Report("model comparison")
    fa = _gradings.fingerprint(model_a.grading, model_a.g0)
    fb = _gradings.fingerprint(model_b.grading, model_b.g0)
    rep.add("fingerprints-equal", fa == fb, f"{fa.support_size} components")
    rep.add("both-fine-dim-1", _gradings.is_fine_dim1(model_a.grading)
            and _gradings.is_fine_dim1(model_b.grading))
    return rep
