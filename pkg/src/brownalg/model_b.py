"""The matrix model of the split Brown algebra and its fine Z4^3-grading.

The carrier is the 2x2 structurable matrix algebra over the split Albert
algebra.  The distinguished homogeneous basis is

    {1, s0, eps_j, eps'_j, al[j,g], al[j,g]s0, ap[j,h], ap[j,h]s0}

with eps_j = eta(E_j) + eta'(E_j), al[j,g] = eta(iota_j(x_g)) +
eta'(iota_j(x_{g+a_j})) for g in the quaternion support, and ap[j,h] =
eta(sigma_j(h) i iota_j(x_h)) + eta'(iota_j(x_{h+a_j})) for h in the
complementary support.  Degrees: deg(al[j,g]) = b_j + g, deg(ap[j,h]) =
(1,0,0) + b_j + h, deg(eps_j) = a_j, deg(x s0) = deg(x) + g0, under the
embedding a1 -> (0,2,0), a2 -> (0,0,2), g0 -> (2,0,0) of the sign group
into Z4^3 (so b1 = (0,1,0), b2 = (0,0,1), b3 = -b1-b2).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .qi import QI, ZERO, ONE, I, qi
from .composition import (A0, A1, A2, A3, AJ, G0, QUAT_SUPPORT, OCT_SUPPORT,
                          Bits, badd, gamma, sigma_j, build_split_octonions)
from .groups import AbelianGroup, GroupElt, GroupHom, Z4_3, support_S
from .jordan import Albert, build_albert
from .linalg import QMatrix, Vec, vadd, veq, vscale, vsub
from .report import Report
from .structurable import Algebra, BasisMap, matrix_structurable
from . import gradings as _gradings

__all__ = ["ModelB", "build_model_b", "check_products_table", "embed_z23",
           "Z2_3", "QPERP_SUPPORT"]

Z2_3 = AbelianGroup(0, (2, 2, 2))
QPERP_SUPPORT = tuple(badd(G0, a) for a in QUAT_SUPPORT)


def embed_z23() -> GroupHom:
    """Z2^3 -> Z4^3 with a1 -> (0,2,0), a2 -> (0,0,2), g0 -> (2,0,0)."""
    return GroupHom.from_matrix(Z2_3, Z4_3, [(0, 0, 2), (0, 2, 0), (2, 0, 0)])


@dataclass
class ModelB:
    alg: Algebra                      # table in the homogeneous basis
    grading: "_gradings.Grading"
    carrier: Algebra                  # raw matrix-model table [1, s0, eta, eta']
    bmap: BasisMap                    # carrier coords <-> homogeneous coords
    albert: Albert
    s0_index: int
    g0: GroupElt
    names: dict = field(repr=False, default_factory=dict)
    report: Report = field(repr=False, default=None)

    def basis_index(self, name) -> int:
        return self.names[name]


# basis bookkeeping: names are tuples
#   ("one",), ("s0",), ("eps", j), ("epsp", j),
#   ("al", j, g, s) and ("ap", j, h, s) with s in {0,1} marking a s0-factor


def _bits_str(g: Bits) -> str:
    return "".join(map(str, g))


def _homogeneous_basis(albert: Albert, carrier: Algebra):
    """The 56 distinguished vectors in carrier coordinates, with names/degrees."""
    emb = embed_z23()
    b = [None, Z4_3.elt((0, 1, 0)), Z4_3.elt((0, 0, 1)), Z4_3.elt((0, 3, 3))]
    g0 = emb(Z2_3.elt(G0))
    one_extra = Z4_3.elt((1, 0, 0))

    def eta(vec: Vec) -> Vec:
        return {2 + k: c for k, c in vec.items()}

    def etap(vec: Vec) -> Vec:
        return {29 + k: c for k, c in vec.items()}

    def iota(j, g: Bits) -> Vec:
        return albert.iota(j, albert.oct.basis_vec(g))

    names, vectors, degrees, labels = [], [], [], []

    def put(name, vec, deg, label):
        names.append(name)
        vectors.append(vec)
        degrees.append(deg)
        labels.append(label)

    put(("one",), {0: ONE}, Z4_3.zero(), "one")
    put(("s0",), {1: ONE}, g0, "s0")
    for j in (1, 2, 3):
        ej = {j - 1: ONE}
        put(("eps", j), vadd(eta(ej), etap(ej)), emb(Z2_3.elt(AJ[j])), f"ep{j}")
    for j in (1, 2, 3):
        ej = {j - 1: ONE}
        put(("epsp", j), vadd(eta(vscale(QI(-1), ej)), etap(ej)),
            emb(Z2_3.elt(AJ[j])) + g0, f"epp{j}")
    for j in (1, 2, 3):
        for g in QUAT_SUPPORT:
            up = iota(j, g)
            lo = iota(j, badd(g, AJ[j]))
            deg = b[j] + emb(Z2_3.elt(g))
            put(("al", j, g, 0), vadd(eta(up), etap(lo)), deg,
                f"al{j}_{_bits_str(g)}")
            put(("al", j, g, 1), vadd(eta(vscale(QI(-1), up)), etap(lo)), deg + g0,
                f"al{j}_{_bits_str(g)}s")
    for j in (1, 2, 3):
        for h in QPERP_SUPPORT:
            up = vscale(qi(sigma_j(j, h)) * I, iota(j, h))
            lo = iota(j, badd(h, AJ[j]))
            deg = one_extra + b[j] + emb(Z2_3.elt(h))
            put(("ap", j, h, 0), vadd(eta(up), etap(lo)), deg,
                f"ap{j}_{_bits_str(h)}")
            put(("ap", j, h, 1), vadd(eta(vscale(QI(-1), up)), etap(lo)), deg + g0,
                f"ap{j}_{_bits_str(h)}s")
    return names, vectors, degrees, labels


def build_model_b(albert: Albert | None = None) -> ModelB:
    """Construct the matrix model on its homogeneous basis and verify the grading."""
    rep = Report("model B construction")
    albert = albert if albert is not None else build_albert()
    carrier = matrix_structurable(albert.cubic_data())
    names, vectors, degrees, labels = _homogeneous_basis(albert, carrier)
    alg, bmap = carrier.change_basis(vectors, labels)
    name_index = {nm: i for i, nm in enumerate(names)}
    g0 = degrees[name_index[("s0",)]]

    rep.expect("basis-count-56", alg.dim == 56)
    rep.expect("s0-squares-to-one", veq(alg.mul({1: ONE}, {1: ONE}), alg.one))
    grading = _gradings.Grading(alg, Z4_3, degrees)
    grep = _gradings.verify(grading)
    rep.merge(grep)
    if not grep.passed:
        raise AssertionError("model B degree map fails to verify as a grading: "
                             + grep.failures()[0].detail)
    dims = _gradings.component_dims(grading)
    rep.expect("all-components-dim-1", all(d == 1 for d in dims.values()))
    rep.expect("support-is-S-g0", set(dims) == support_S(g0))
    model = ModelB(alg, grading, carrier, bmap, albert, name_index[("s0",)],
                   g0, name_index, rep)
    return model


def _basis_elt(model: ModelB, name) -> Vec:
    return {model.names[name]: ONE}


def check_products_table(model: ModelB) -> Report:
    """All eighteen product families, plus the commutation-by-degree rule."""
    rep = Report("model B product families")
    alg = model.alg
    names = model.names

    def v(name):
        return {names[name]: ONE}

    def mul(a, b):
        return alg.mul(a, b)

    def eq(name_a, name_b, expected):
        return veq(mul(v(name_a), v(name_b)), expected)

    one = alg.one
    s0 = v(("s0",))
    minus = QI(-1)

    def al(j, g, s=0):
        return v(("al", j, g, s))

    def ap(j, h, s=0):
        return v(("ap", j, h, s))

    def eps(j):
        return v(("eps", j))

    def epsp(j):
        return v(("epsp", j))

    def nxt(j):
        return j % 3 + 1

    ok = True
    # i) s0^2 = eps_j^2 = 1 = -eps'_j^2, eps_j eps_{j+1} = eps_{j+2}
    good = veq(mul(s0, s0), one)
    for j in (1, 2, 3):
        good &= veq(mul(eps(j), eps(j)), one)
        good &= veq(mul(epsp(j), epsp(j)), vscale(minus, one))
        good &= veq(mul(eps(j), eps(nxt(j))), eps(nxt(nxt(j))))
    ok &= rep.add("product-family-i", good)
    # ii) eps_j eps'_j = s0, eps'_j eps'_{j+1} = eps_{j+2},
    #     eps_j eps'_{j+1} = -eps'_{j+2} = eps_{j+1} eps'_j
    good = True
    for j in (1, 2, 3):
        good &= veq(mul(eps(j), epsp(j)), s0)
        good &= veq(mul(epsp(j), epsp(nxt(j))), eps(nxt(nxt(j))))
        good &= veq(mul(eps(j), epsp(nxt(j))), vscale(minus, epsp(nxt(nxt(j)))))
        good &= veq(mul(eps(nxt(j)), epsp(j)), vscale(minus, epsp(nxt(nxt(j)))))
    ok &= rep.add("product-family-ii", good)
    # iii) eps_j al = eps'_j (al s0) = -al[g+a_j];
    #      eps_j (al s0) = eps'_j al = al[g+a_j] s0
    good = True
    for j in (1, 2, 3):
        for g in QUAT_SUPPORT:
            ga = badd(g, AJ[j])
            good &= veq(mul(eps(j), al(j, g)), vscale(minus, al(j, ga)))
            good &= veq(mul(epsp(j), al(j, g, 1)), vscale(minus, al(j, ga)))
            good &= veq(mul(eps(j), al(j, g, 1)), al(j, ga, 1))
            good &= veq(mul(epsp(j), al(j, g)), al(j, ga, 1))
    ok &= rep.add("product-family-iii", good)
    # iv) with the factor -i sigma_j(h)
    good = True
    for j in (1, 2, 3):
        for h in QPERP_SUPPORT:
            ha = badd(h, AJ[j])
            c = I * qi(sigma_j(j, h))
            good &= veq(mul(eps(j), ap(j, h)), vscale(-c, ap(j, ha)))
            good &= veq(mul(epsp(j), ap(j, h, 1)), vscale(-c, ap(j, ha)))
            good &= veq(mul(eps(j), ap(j, h, 1)), vscale(c, ap(j, ha, 1)))
            good &= veq(mul(epsp(j), ap(j, h)), vscale(c, ap(j, ha, 1)))
    ok &= rep.add("product-family-iv", good)
    # v) eps_j kills the other blocks
    good = True
    for j in (1, 2, 3):
        for k in (1, 2, 3):
            if j == k:
                continue
            for g in QUAT_SUPPORT:
                good &= not mul(eps(j), al(k, g)) and not mul(epsp(j), al(k, g))
            for h in QPERP_SUPPORT:
                good &= not mul(eps(j), ap(k, h)) and not mul(epsp(j), ap(k, h))
    ok &= rep.add("product-family-v", good)
    # vi) al^2 = (al s0)^2 = -8 eps_j; al[g] al[g+a_j] = 8 = -(al[g]s0)(al[g+a_j]s0)
    good = True
    eight = QI(8)
    for j in (1, 2, 3):
        for g in QUAT_SUPPORT:
            ga = badd(g, AJ[j])
            good &= veq(mul(al(j, g), al(j, g)), vscale(-eight, eps(j)))
            good &= veq(mul(al(j, g, 1), al(j, g, 1)), vscale(-eight, eps(j)))
            good &= veq(mul(al(j, g), al(j, ga)), vscale(eight, one))
            good &= veq(mul(al(j, g, 1), al(j, ga, 1)), vscale(-eight, one))
    ok &= rep.add("product-family-vi", good)
    # vii) ap^2 = (ap s0)^2 = 8 eps'_j; ap[h] ap[h+a_j] = 8 i sigma_j(h) s0 = -(s0 pair)
    good = True
    for j in (1, 2, 3):
        for h in QPERP_SUPPORT:
            ha = badd(h, AJ[j])
            c = vscale(eight * I * qi(sigma_j(j, h)), s0)
            good &= veq(mul(ap(j, h), ap(j, h)), vscale(eight, epsp(j)))
            good &= veq(mul(ap(j, h, 1), ap(j, h, 1)), vscale(eight, epsp(j)))
            good &= veq(mul(ap(j, h), ap(j, ha)), c)
            good &= veq(mul(ap(j, h, 1), ap(j, ha, 1)), vscale(minus, c))
    ok &= rep.add("product-family-vii", good)
    # viii)/ix) same-block products vanish off the {g, g+a_j} pair
    good = True
    for j in (1, 2, 3):
        for g in QUAT_SUPPORT:
            for gp in QUAT_SUPPORT:
                if gp in (g, badd(g, AJ[j])):
                    continue
                for s1 in (0, 1):
                    for s2 in (0, 1):
                        good &= not mul(al(j, g, s1), al(j, gp, s2))
    ok &= rep.add("product-family-viii", good)
    good = True
    for j in (1, 2, 3):
        for h in QPERP_SUPPORT:
            for hp in QPERP_SUPPORT:
                if hp in (h, badd(h, AJ[j])):
                    continue
                for s1 in (0, 1):
                    for s2 in (0, 1):
                        good &= not mul(ap(j, h, s1), ap(j, hp, s2))
    ok &= rep.add("product-family-ix", good)
    # x) al ap = 0 within the same block index
    good = True
    for j in (1, 2, 3):
        for g in QUAT_SUPPORT:
            for h in QPERP_SUPPORT:
                for s1 in (0, 1):
                    for s2 in (0, 1):
                        good &= not mul(al(j, g, s1), ap(j, h, s2))
                        good &= not mul(ap(j, h, s1), al(j, g, s2))
    ok &= rep.add("product-family-x", good)
    # xi)/xii) al[j,g] al[j+1,g'] = 2 gamma(g,g') al[j+2, g+g'+a_{j+2}] etc.
    good_xi = good_xii = True
    for j in (1, 2, 3):
        jn, jnn = nxt(j), nxt(nxt(j))
        for g in QUAT_SUPPORT:
            for gp in QUAT_SUPPORT:
                tgt = badd(badd(g, gp), AJ[jnn])
                c = QI(2 * gamma(g, gp))
                good_xi &= veq(mul(al(j, g), al(jn, gp)), vscale(c, al(jnn, tgt)))
                good_xi &= veq(mul(al(j, g, 1), al(jn, gp, 1)), vscale(c, al(jnn, tgt)))
                good_xii &= veq(mul(al(j, g, 1), al(jn, gp)),
                                vscale(-c, al(jnn, tgt, 1)))
                good_xii &= veq(mul(al(j, g), al(jn, gp, 1)),
                                vscale(-c, al(jnn, tgt, 1)))
    ok &= rep.add("product-family-xi", good_xi)
    ok &= rep.add("product-family-xii", good_xii)
    # xiii)/xiv) al[j,g] ap[j+1,h] = 2i sigma_{j+1}(h) gamma(g,h) ap[j+2, g+h+a_{j+2}]
    good_13 = good_14 = True
    for j in (1, 2, 3):
        jn, jnn = nxt(j), nxt(nxt(j))
        for g in QUAT_SUPPORT:
            for h in QPERP_SUPPORT:
                tgt = badd(badd(g, h), AJ[jnn])
                c = QI(2) * I * qi(sigma_j(jn, h) * gamma(g, h))
                good_13 &= veq(mul(al(j, g), ap(jn, h)), vscale(c, ap(jnn, tgt)))
                good_13 &= veq(mul(al(j, g, 1), ap(jn, h, 1)), vscale(c, ap(jnn, tgt)))
                good_14 &= veq(mul(al(j, g, 1), ap(jn, h)), vscale(-c, ap(jnn, tgt, 1)))
                good_14 &= veq(mul(al(j, g), ap(jn, h, 1)), vscale(-c, ap(jnn, tgt, 1)))
    ok &= rep.add("product-family-xiii", good_13)
    ok &= rep.add("product-family-xiv", good_14)
    # xv)/xvi) ap[j,h] al[j+1,g] = 2i sigma_j(h) gamma(h,g) ap[j+2, h+g+a_{j+2}]
    good_15 = good_16 = True
    for j in (1, 2, 3):
        jn, jnn = nxt(j), nxt(nxt(j))
        for h in QPERP_SUPPORT:
            for g in QUAT_SUPPORT:
                tgt = badd(badd(h, g), AJ[jnn])
                c = QI(2) * I * qi(sigma_j(j, h) * gamma(h, g))
                good_15 &= veq(mul(ap(j, h), al(jn, g)), vscale(c, ap(jnn, tgt)))
                good_15 &= veq(mul(ap(j, h, 1), al(jn, g, 1)), vscale(c, ap(jnn, tgt)))
                good_16 &= veq(mul(ap(j, h, 1), al(jn, g)), vscale(-c, ap(jnn, tgt, 1)))
                good_16 &= veq(mul(ap(j, h), al(jn, g, 1)), vscale(-c, ap(jnn, tgt, 1)))
    ok &= rep.add("product-family-xv", good_15)
    ok &= rep.add("product-family-xvi", good_16)
    # xvii)/xviii) ap[j,h] ap[j+1,h'] = -2 gamma(h+a_j, h'+a_{j+1}) al[j+2,...] s0
    good_17 = good_18 = True
    for j in (1, 2, 3):
        jn, jnn = nxt(j), nxt(nxt(j))
        for h in QPERP_SUPPORT:
            for hp in QPERP_SUPPORT:
                tgt = badd(badd(h, hp), AJ[jnn])
                c = QI(2 * gamma(badd(h, AJ[j]), badd(hp, AJ[jn])))
                good_17 &= veq(mul(ap(j, h), ap(jn, hp)), vscale(-c, al(jnn, tgt, 1)))
                good_17 &= veq(mul(ap(j, h, 1), ap(jn, hp, 1)), vscale(-c, al(jnn, tgt, 1)))
                good_18 &= veq(mul(ap(j, h, 1), ap(jn, hp)), vscale(c, al(jnn, tgt)))
                good_18 &= veq(mul(ap(j, h), ap(jn, hp, 1)), vscale(c, al(jnn, tgt)))
    ok &= rep.add("product-family-xvii", good_17)
    ok &= rep.add("product-family-xviii", good_18)

    # commutation rule: for x,y outside {1, s0}: xy = yx iff deg x + deg y != g0
    good = True
    witness = ""
    degs = model.grading.degrees
    for i in range(2, 56):
        for j in range(2, 56):
            lhs = alg.mult[i][j]
            rhs = alg.mult[j][i]
            if degs[i] + degs[j] == model.g0:
                match = veq(lhs, vscale(minus, rhs))
            else:
                match = veq(lhs, rhs)
            if not match:
                good = False
                witness = witness or f"pair ({i},{j})"
    ok &= rep.add("commutation-by-degree", good, witness)
    return rep
