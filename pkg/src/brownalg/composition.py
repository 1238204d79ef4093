"""The Z2^3-twisted group algebra model of the split octonions.

The basis {x_g : g in Z2^3} multiplies by x_g x_h = sigma(g,h) x_{g+h},
conjugation is x_g -> s(g) x_g, and the para-product x*y = conj(x) conj(y)
realizes the sign table gamma(g,h) = s(g)s(h)sigma(g,h).  The quaternion
subalgebra sits on the labels {0, a1, a2, a3} and the basis is ordered
B_Q ++ B_Qperp so the 8x8 gamma and 4x4 sigma11 tables are positional.
"""

from __future__ import annotations

from .qi import QI, ZERO, ONE, qi
from .linalg import QMatrix, Vec, vadd, veq, vscale, vsub
from .report import Report
from .structurable import Algebra

__all__ = ["Bits", "badd", "psi", "sigma", "sign_s", "gamma", "sigma_j",
           "A0", "A1", "A2", "A3", "G0", "QUAT_SUPPORT", "OCT_SUPPORT",
           "CompositionTable", "build_split_quaternions", "build_split_octonions",
           "gamma_matrix", "sigma11_matrix", "verify_basis_lemma", "cd_compose"]

Bits = tuple  # (b1, b2, b3) with entries 0/1


def badd(g: Bits, h: Bits) -> Bits:
    return tuple((a + b) % 2 for a, b in zip(g, h))


def psi(g: Bits, h: Bits) -> int:
    """h1 g2 g3 + g1 h2 g3 + g1 g2 h3 + sum_{i<=j} g_i h_j, mod 2."""
    g1, g2, g3 = g
    h1, h2, h3 = h
    tot = h1 * g2 * g3 + g1 * h2 * g3 + g1 * g2 * h3
    tot += g1 * h1 + g1 * h2 + g1 * h3 + g2 * h2 + g2 * h3 + g3 * h3
    return tot % 2


def sigma(g: Bits, h: Bits) -> int:
    return -1 if psi(g, h) else 1


def phi_exp(g: Bits) -> int:
    g1, g2, g3 = g
    return (g1 + g2 + g3 + g1 * g2 + g1 * g3 + g2 * g3 + g1 * g2 * g3) % 2


def sign_s(g: Bits) -> int:
    return -1 if phi_exp(g) else 1


def gamma(g: Bits, h: Bits) -> int:
    return sign_s(g) * sign_s(h) * sigma(g, h)


A0: Bits = (0, 0, 0)
A1: Bits = (0, 1, 0)
A2: Bits = (1, 0, 0)
A3: Bits = badd(A1, A2)
G0: Bits = (0, 0, 1)
AJ = (A0, A1, A2, A3)

QUAT_SUPPORT = (A0, A1, A2, A3)
OCT_SUPPORT = QUAT_SUPPORT + tuple(badd(G0, a) for a in QUAT_SUPPORT)


def sigma_j(j: int, h: Bits) -> int:
    """sigma(a_j, g0 + h) for h in the support of Qperp, j in {1,2,3}."""
    return sigma(AJ[j], badd(G0, h))


class CompositionTable:
    """A composition algebra on a Z2^3-homogeneous basis."""

    def __init__(self, alg: Algebra, degrees: list[Bits]):
        self.alg = alg
        self.degrees = list(degrees)
        self.index = {g: i for i, g in enumerate(self.degrees)}

    @property
    def dim(self):
        return self.alg.dim

    def basis_vec(self, g: Bits) -> Vec:
        return {self.index[g]: ONE}

    def mul(self, a: Vec, b: Vec) -> Vec:
        return self.alg.mul(a, b)

    def conj(self, a: Vec) -> Vec:
        return self.alg.conj(a)

    def para_mul(self, a: Vec, b: Vec) -> Vec:
        return self.alg.mul(self.alg.conj(a), self.alg.conj(b))

    def norm(self, a: Vec) -> QI:
        """n(a) with n(a) 1 = a conj(a); asserts the product is scalar."""
        p = self.alg.mul(a, self.alg.conj(a))
        val = p.pop(self.alg.unit_index, ZERO)
        if p:
            raise AssertionError("x conj(x) not a multiple of 1")
        return val

    def norm_polar(self, a: Vec, b: Vec) -> QI:
        """n(a,b) = n(a+b) - n(a) - n(b)."""
        return self.norm(vadd(a, b)) - self.norm(a) - self.norm(b)


def _twisted_table(support) -> CompositionTable:
    labels = ["x" + "".join(map(str, g)) for g in support]
    idx = {g: i for i, g in enumerate(support)}
    n = len(support)
    mult = [[None] * n for _ in range(n)]
    for i, g in enumerate(support):
        for j, h in enumerate(support):
            k = idx.get(badd(g, h))
            if k is None:
                raise ValueError("support is not closed under addition")
            mult[i][j] = {k: qi(sigma(g, h))}
    invol = QMatrix(n, [{i: qi(sign_s(g))} for i, g in enumerate(support)])
    alg = Algebra(labels, mult, invol, idx[A0])
    return CompositionTable(alg, list(support))


def build_split_quaternions() -> CompositionTable:
    """The quaternion subalgebra on the labels {0, a1, a2, a3}."""
    table = _twisted_table(QUAT_SUPPORT)
    # Hurwitz trace t(x) = x + conj(x), as a linear functional (needed by
    # the doubling construction): t(x_0) = 2, t(x_a) = 0 otherwise.
    table.alg.trace = [QI(2) if g == A0 else ZERO for g in QUAT_SUPPORT]
    return table


def build_split_octonions() -> CompositionTable:
    """The eight-dimensional table in the order B_Q ++ B_Qperp."""
    return _twisted_table(OCT_SUPPORT)


def gamma_matrix(table: CompositionTable) -> list[list[int]]:
    """8x8 integer table of the para-product signs, in basis order."""
    out = []
    for g in table.degrees:
        row = []
        xg = table.basis_vec(g)
        for h in table.degrees:
            p = table.para_mul(xg, table.basis_vec(h))
            k = table.index[badd(g, h)]
            c = p.get(k, ZERO)
            if len(p) != 1 or c not in (ONE, QI(-1)):
                raise AssertionError("para-product is not a signed basis vector")
            row.append(1 if c == ONE else -1)
        out.append(row)
    return out


def sigma11_matrix() -> list[list[int]]:
    """(sigma(a_j, a_k))_{j,k} for j,k = 0..3."""
    return [[sigma(AJ[j], AJ[k]) for k in range(4)] for j in range(4)]


def verify_basis_lemma() -> Report:
    """Sign-table properties P11, P22, P12, P21 for all admissible arguments."""
    rep = Report("basis sign-table properties")
    supp_q = QUAT_SUPPORT
    supp_p = tuple(badd(G0, a) for a in QUAT_SUPPORT)
    for name in ("P11", "P22", "P12", "P21"):
        bad = 0
        witness = ""
        for jj in (1, 2, 3):
            aj, aj1, aj2 = AJ[jj], AJ[jj % 3 + 1], AJ[(jj + 1) % 3 + 1]
            if name == "P11":
                cases = (((g, gp), gamma(g, gp) == gamma(badd(g, aj), badd(gp, aj1)))
                         for g in supp_q for gp in supp_q)
            elif name == "P22":
                cases = (((h, hp), gamma(h, hp) == sigma_j(jj, h) * sigma_j(jj % 3 + 1, hp)
                          * gamma(badd(h, aj), badd(hp, aj1)))
                         for h in supp_p for hp in supp_p)
            elif name == "P12":
                cases = (((g, h), gamma(g, h) == sigma_j(jj % 3 + 1, h)
                          * sigma_j((jj + 1) % 3 + 1, badd(g, h))
                          * gamma(badd(g, aj), badd(h, aj1)))
                         for g in supp_q for h in supp_p)
            else:
                cases = (((h, g), gamma(h, g) == sigma_j(jj, h)
                          * sigma_j((jj + 1) % 3 + 1, badd(g, h))
                          * gamma(badd(h, aj), badd(g, aj1)))
                         for h in supp_p for g in supp_q)
            for args, ok in cases:
                if not ok:
                    bad += 1
                    witness = witness or f"j={jj}, args={args}"
        rep.add(f"basis-prop-{name}", bad == 0, witness)
    return rep


def cd_compose(q_table: CompositionTable, mu: QI) -> CompositionTable:
    """Classical Cayley-Dickson double of a Hurwitz algebra table.

    The doubling generator u = (0,1) satisfies u^2 = mu; degrees extend by a
    fresh bit so the result carries the refined sign grading.
    """
    mu = qi(mu)
    if not mu:
        raise ValueError("mu must be nonzero")
    from .structurable import cd_double
    alg = cd_double(q_table.alg, mu, label_v="u")
    degrees = [g + (0,) for g in q_table.degrees] + [g + (1,) for g in q_table.degrees]
    return CompositionTable(alg, degrees)
