"""The split Albert algebra and the degree-4 Jordan algebras of the doubles.

The Albert algebra lives on F E1 + F E2 + F E3 + iota_1(C) + iota_2(C) +
iota_3(C) over the twisted-basis split octonions C, with the cubic form
apparatus (T, S, N, sharp, cross, U-operator), exact rank and the orbit
classification by (N, sharp).  H4(Q) is realized on the block basis
(z, x, y) with z in M4, x and y skew, matching the 2x2-blocks-over-M4
presentation of 4x4 hermitian matrices over the split quaternions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .qi import QI, ZERO, ONE, qi
from .composition import CompositionTable, build_split_octonions
from .linalg import (Echelon, QMatrix, Vec, dense_mat_mul, dense_transpose,
                     vadd, vaxpy, veq, vscale, vsub)
from .structurable import Algebra, CubicData

__all__ = ["Albert", "build_albert", "OrbitLabel", "norm_similarity_c",
           "random_singular", "H4Q", "build_h4_quaternion", "albert_times_f"]

_HALF = QI(1) / QI(2)


class Albert:
    """The 27-dimensional exceptional Jordan algebra with cubic apparatus."""

    def __init__(self, alg: Algebra, oct_table: CompositionTable):
        self.alg = alg
        self.oct = oct_table
        self.dim = 27
        # generic trace as a functional, and its bilinear Gram T(x,y) = T(xy)
        self.t_vec = [ONE, ONE, ONE] + [ZERO] * 24
        self.t_gram = [[self._trace(alg.mult[i][j]) for j in range(27)] for i in range(27)]
        self._cross_table = None

    # -- coordinates: E_i at 0..2, iota_j(oct basis k) at 3 + 8(j-1) + k ------

    @staticmethod
    def e_idx(i: int) -> int:
        return i - 1

    @staticmethod
    def iota_idx(j: int, k: int) -> int:
        return 3 + 8 * (j - 1) + k

    def iota(self, j: int, a: Vec) -> Vec:
        """iota_j of an octonion coordinate vector."""
        return {self.iota_idx(j, k): c for k, c in a.items()}

    def iota_part(self, x: Vec, j: int) -> Vec:
        """Octonion coordinates of the iota_j block of x."""
        lo = self.iota_idx(j, 0)
        return {k - lo: c for k, c in x.items() if lo <= k < lo + 8}

    def element(self, alphas, octs) -> Vec:
        out: Vec = {}
        for i, a in enumerate(alphas):
            a = qi(a)
            if a:
                out[i] = a
        for j, a in enumerate(octs, start=1):
            for k, c in a.items():
                if c:
                    out[self.iota_idx(j, k)] = c
        return out

    def _trace(self, x: Vec) -> QI:
        t = ZERO
        for i in (0, 1, 2):
            c = x.get(i)
            if c is not None:
                t = t + c
        return t

    # -- cubic form apparatus --------------------------------------------------

    def T(self, x: Vec) -> QI:
        return self._trace(x)

    def t_pair(self, x: Vec, y: Vec) -> QI:
        """Bilinear trace form T(x,y) = T(xy)."""
        t = ZERO
        for i, a in x.items():
            row = self.t_gram[i]
            for j, b in y.items():
                if row[j]:
                    t = t + a * b * row[j]
        return t

    def S(self, x: Vec) -> QI:
        return _HALF * (self.T(x) * self.T(x) - self.T(self.alg.mul(x, x)))

    def S_direct(self, x: Vec) -> QI:
        """sum_i (alpha_{i+1} alpha_{i+2} - 4 n(a_i)); equals S(x)."""
        al = [x.get(i, ZERO) for i in range(3)]
        s = ZERO
        for i in range(3):
            s = s + al[(i + 1) % 3] * al[(i + 2) % 3]
            s = s - QI(4) * self.oct.norm(self.iota_part(x, i + 1))
    # (norm of the zero vector is 0, so absent blocks contribute nothing)
        return s

    def N(self, x: Vec) -> QI:
        """alpha1 alpha2 alpha3 + 8 n(a1, conj(a2) conj(a3)) - 4 sum alpha_i n(a_i)."""
        al = [x.get(i, ZERO) for i in range(3)]
        a = [self.iota_part(x, j) for j in (1, 2, 3)]
        n = al[0] * al[1] * al[2]
        n = n + QI(8) * self.oct.norm_polar(a[0], self.oct.para_mul(a[1], a[2]))
        for i in range(3):
            n = n - QI(4) * al[i] * self.oct.norm(a[i])
        return n

    def sharp(self, x: Vec) -> Vec:
        """x^2 - T(x) x + S(x) 1."""
        out = self.alg.mul(x, x)
        out = vsub(out, vscale(self.T(x), x))
        s = self.S(x)
        if s:
            out = vadd(out, vscale(s, self.alg.one))
        return out

    def cross(self, x: Vec, y: Vec) -> Vec:
        """(x+y)^# - x^# - y^#, via the precomputed bilinear table."""
        out: Vec = {}
        table = self.cross_table
        for i, a in x.items():
            row = table[i]
            for j, b in y.items():
                vaxpy(out, a * b, row[j])
        return out

    @property
    def cross_table(self):
        if self._cross_table is None:
            table = []
            sharps = [self.sharp({i: ONE}) for i in range(27)]
            for i in range(27):
                row = []
                ei = {i: ONE}
                for j in range(27):
                    if j < i:
                        row.append(table[j][i])
                    elif j == i:
                        row.append(vscale(QI(2), sharps[i]))
                    else:
                        s = self.sharp(vadd(ei, {j: ONE}))
                        row.append(vsub(vsub(s, sharps[i]), sharps[j]))
                table.append(row)
            self._cross_table = table
        return self._cross_table

    def u_operator(self, x: Vec, y: Vec) -> Vec:
        """U_x(y) = T(x,y) x - x^# x y."""
        out = vscale(self.t_pair(x, y), x)
        return vsub(out, self.cross(self.sharp(x), y))

    def u_operator_jordan(self, x: Vec, y: Vec) -> Vec:
        """2 x(xy) - x^2 y, the Jordan-product form of U_x(y)."""
        m = self.alg.mul
        return vsub(vscale(QI(2), m(x, m(x, y))), m(m(x, x), y))

    def u_matrix(self, x: Vec) -> QMatrix:
        sx = self.sharp(x)
        cols = []
        for j in range(27):
            ej = {j: ONE}
            cols.append(vsub(vscale(self.t_pair(x, ej), x), self.cross(sx, ej)))
        return QMatrix(27, cols)

    def rank(self, x: Vec) -> int:
        """dim im U_x (0, 1, 10 or 27)."""
        from .linalg import rank_rows_int
        return rank_rows_int(self.u_matrix(x).cols)

    def classify_orbit(self, x: Vec) -> "OrbitLabel":
        """O27(N(x)) if N(x) != 0; else O1 iff x != 0 and x^# = 0; else O10/O0."""
        n = self.N(x)
        if n:
            return OrbitLabel("O27", n)
        if not x:
            return OrbitLabel("O0", None)
        if not self.sharp(x):
            return OrbitLabel("O1", None)
        return OrbitLabel("O10", None)

    def cubic_data(self) -> CubicData:
        return CubicData(27, list(self.alg.labels), self.t_gram, self.cross_table)


@dataclass(frozen=True)
class OrbitLabel:
    label: str           # "O0" | "O1" | "O10" | "O27"
    norm: QI | None      # generic norm value, for O27

    @property
    def rank(self) -> int:
        return {"O0": 0, "O1": 1, "O10": 10, "O27": 27}[self.label]


def build_albert(oct_table: CompositionTable | None = None) -> Albert:
    """Structure constants of H3(C) on [E1,E2,E3] ++ iota_1 ++ iota_2 ++ iota_3."""
    oct_t = oct_table if oct_table is not None else build_split_octonions()
    n = 27
    mult = [[dict() for _ in range(n)] for _ in range(n)]

    def set_prod(i, j, vec):
        mult[i][j] = dict(vec)
        mult[j][i] = dict(vec)

    ii = Albert.iota_idx
    for i in range(3):
        set_prod(i, i, {i: ONE})
        for jj in range(i + 1, 3):
            set_prod(i, jj, {})
    for j in (1, 2, 3):
        for i in (1, 2, 3):
            coeff = ZERO if i == j else _HALF
            for k in range(8):
                set_prod(Albert.e_idx(i), ii(j, k), {ii(j, k): coeff} if coeff else {})
    # iota_j times iota_j: 2 n(a,b) (E_{j+1} + E_{j+2}); on basis vectors the
    # polar form n(x_g, x_h) vanishes for g != h and equals 2 n(x_g) for g = h
    for j in (1, 2, 3):
        e_next = {Albert.e_idx(j % 3 + 1): ONE, Albert.e_idx((j + 1) % 3 + 1): ONE}
        for k in range(8):
            for l in range(8):
                xg = {k: ONE}
                xh = {l: ONE}
                c = QI(2) * oct_t.norm_polar(xg, xh)
                set_prod(ii(j, k), ii(j, l), vscale(c, e_next) if c else {})
    # iota_j(a) iota_{j+1}(b) = iota_{j+2}(conj(a) conj(b))
    for j in (1, 2, 3):
        jn = j % 3 + 1
        jnn = (j + 1) % 3 + 1
        for k in range(8):
            for l in range(8):
                prod = oct_t.para_mul({k: ONE}, {l: ONE})
                set_prod(ii(j, k), ii(jn, l), {ii(jnn, m): c for m, c in prod.items()})

    labels = ["E1", "E2", "E3"] + [f"i{j}.{oct_t.alg.labels[k]}"
                                   for j in (1, 2, 3) for k in range(8)]
    alg = Algebra(labels, mult, QMatrix.identity(n), {0: ONE, 1: ONE, 2: ONE},
                  trace=[ONE, ONE, ONE] + [ZERO] * 24)
    return Albert(alg, oct_t)


def norm_similarity_c(albert: Albert, l1: QI, l2: QI, l3: QI) -> tuple[QMatrix, QMatrix]:
    """The norm similarity iota_i(x) -> iota_i(l_i x), E_i -> mu_i E_i with
    mu_i = l_i^{-1} l_{i+1} l_{i+2}, and its dagger (inverse scalings)."""
    lam = [qi(l1), qi(l2), qi(l3)]
    if not all(lam):
        raise ValueError("all scaling factors must be nonzero")
    c = QMatrix(27)
    cd = QMatrix(27)
    for i in range(3):
        mu = lam[(i + 1) % 3] * lam[(i + 2) % 3] / lam[i]
        c.cols[i] = {i: mu}
        cd.cols[i] = {i: ONE / mu}
        for k in range(8):
            idx = Albert.iota_idx(i + 1, k)
            c.cols[idx] = {idx: lam[i]}
            cd.cols[idx] = {idx: ONE / lam[i]}
    return c, cd


def random_singular(albert: Albert, rng: random.Random, span: int = 2,
                    max_retries: int = 64) -> Vec:
    """Random element with N = 0: solve the alpha1-linear part of N.

    N(x) = alpha1 (alpha2 alpha3 - 4 n(a1)) + (8 n(a1, conj(a2)conj(a3))
    - 4 alpha2 n(a2) - 4 alpha3 n(a3)); retries when the alpha1 coefficient
    vanishes.
    """
    from .structurable import random_vec
    for _ in range(max_retries):
        a = [random_vec(rng, 8, span=span) for _ in range(3)]
        al2 = QI(rng.randint(-span, span), rng.randint(-span, span))
        al3 = QI(rng.randint(-span, span), rng.randint(-span, span))
        coeff = al2 * al3 - QI(4) * albert.oct.norm(a[0])
        if not coeff:
            continue
        rest = QI(8) * albert.oct.norm_polar(a[0], albert.oct.para_mul(a[1], a[2]))
        rest = rest - QI(4) * al2 * albert.oct.norm(a[1])
        rest = rest - QI(4) * al3 * albert.oct.norm(a[2])
        al1 = -rest / coeff
        x = albert.element([al1, al2, al3], a)
        assert not albert.N(x)
        return x
    raise RuntimeError(f"no singular sample found in {max_retries} retries")


# -- H4 over the split quaternions ---------------------------------------------

class H4Q:
    """Hermitian 4x4 matrices over the split quaternions, in (z,x,y) blocks.

    The quaternion entries are written in the matrix-unit basis
    (E11, E12, E21, E22) of M2; the standard involution swaps E11/E22 and
    negates E12/E21.  Basis: 16 z-units Z(p,q), 6 skew x-units X(p<q),
    6 skew y-units Y(p<q).  The generic trace is tr(z).
    """

    def __init__(self, alg: Algebra, kinds):
        self.alg = alg
        self.kinds = kinds              # list of ("z"|"x"|"y", p, q), 0-indexed
        self.index = {k: i for i, k in enumerate(kinds)}

    def zxy(self, v: Vec):
        """Dense 4x4 blocks (z, x, y) of an element."""
        z = [[ZERO] * 4 for _ in range(4)]
        x = [[ZERO] * 4 for _ in range(4)]
        y = [[ZERO] * 4 for _ in range(4)]
        for i, c in v.items():
            kind, p, q = self.kinds[i]
            if kind == "z":
                z[p][q] = z[p][q] + c
            elif kind == "x":
                x[p][q] = x[p][q] + c
                x[q][p] = x[q][p] - c
            else:
                y[p][q] = y[p][q] + c
                y[q][p] = y[q][p] - c
        return z, x, y

    def vec(self, z, x, y) -> Vec:
        out: Vec = {}
        for p in range(4):
            for q in range(4):
                if z[p][q]:
                    out[self.index[("z", p, q)]] = z[p][q]
        for p in range(4):
            for q in range(p + 1, 4):
                if x[p][q]:
                    out[self.index[("x", p, q)]] = x[p][q]
                if y[p][q]:
                    out[self.index[("y", p, q)]] = y[p][q]
        return out

    def entry_q(self, v: Vec, r: int, c: int):
        """M4(Q)-entry (r,c) as quaternion coordinates (E11, E12, E21, E22)."""
        z, x, y = self.zxy(v)
        return (z[r][c], x[r][c], y[r][c], z[c][r])


def _jordan_block_product(a, b):
    za, xa, ya = a
    zb, xb, yb = b
    zat = dense_transpose(za)
    zbt = dense_transpose(zb)
    z = _half_mat(_madd(_madd(dense_mat_mul(za, zb), dense_mat_mul(zb, za)),
                        _madd(dense_mat_mul(xa, yb), dense_mat_mul(xb, ya))))
    x = _half_mat(_madd(_madd(dense_mat_mul(za, xb), dense_mat_mul(xb, zat)),
                        _madd(dense_mat_mul(zb, xa), dense_mat_mul(xa, zbt))))
    y = _half_mat(_madd(_madd(dense_mat_mul(zat, yb), dense_mat_mul(yb, za)),
                        _madd(dense_mat_mul(zbt, ya), dense_mat_mul(ya, zb))))
    return z, x, y


def _madd(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _half_mat(a):
    return [[_HALF * x for x in row] for row in a]


def build_h4_quaternion() -> H4Q:
    """The 28-dimensional degree-4 Jordan algebra H4(Q), Q split quaternions."""
    kinds = [("z", p, q) for p in range(4) for q in range(4)]
    kinds += [("x", p, q) for p in range(4) for q in range(p + 1, 4)]
    kinds += [("y", p, q) for p in range(4) for q in range(p + 1, 4)]
    n = len(kinds)

    shell = H4Q.__new__(H4Q)
    shell.kinds = kinds
    shell.index = {k: i for i, k in enumerate(kinds)}

    blocks = [shell.zxy({i: ONE}) for i in range(n)]
    mult = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            z, x, y = _jordan_block_product(blocks[i], blocks[j])
            vec = shell.vec(z, x, y)
            mult[i][j] = vec
            mult[j][i] = dict(vec)

    labels = [f"{k}{p+1}{q+1}" for (k, p, q) in kinds]
    trace = [ONE if (k[0] == "z" and k[1] == k[2]) else ZERO for k in kinds]
    one = {shell.index[("z", p, p)]: ONE for p in range(4)}
    alg = Algebra(labels, mult, QMatrix.identity(n), one, trace=trace)
    return H4Q(alg, kinds)


# -- Albert x F ------------------------------------------------------------------

def albert_times_f(albert: Albert) -> Algebra:
    """The direct product Jordan algebra H3(C) x F, degree 4, dimension 28.

    Basis: the 27 Albert vectors followed by the F-idempotent; the generic
    trace is T + lambda (so the trace of the unit is 4).
    """
    n = 28
    mult = [[dict() for _ in range(n)] for _ in range(n)]
    for i in range(27):
        for j in range(27):
            mult[i][j] = dict(albert.alg.mult[i][j])
    mult[27][27] = {27: ONE}
    labels = list(albert.alg.labels) + ["eF"]
    one = dict(albert.alg.one)
    one[27] = ONE
    trace = list(albert.t_vec) + [ONE]
    return Algebra(labels, mult, QMatrix.identity(n), one, trace=trace)
