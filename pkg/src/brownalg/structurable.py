"""Generic kernel for finite-dimensional algebras with involution over Q(i).

An `Algebra` is a basis-indexed structure-constant table plus an involution
matrix and a unit (a basis index or a general vector).  On top of it live
the triple-product operators V_{x,y}, T_x = V_{x,1} and the inner
derivations D_{x,y}, the structurable identity / skew-alternativity checks,
the Cayley-Dickson double of an algebra with trace form, the 2x2 matrix
construction over an admissible cubic triple, and the trace bilinear form
<a,b> = tr(a conj(b)).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .qi import QI, ZERO, ONE, qi
from .linalg import Echelon, QMatrix, Vec, vadd, vaxpy, veq, vscale, vsub
from .report import Report

__all__ = ["Algebra", "BasisMap", "v_op", "t_op", "d_op", "d_apply", "hk_split",
           "theta_from_trace", "check_structurable", "cd_double", "CubicData",
           "matrix_structurable", "trace_gram", "orthogonality_check",
           "jordan_check", "random_vec"]

_HALF = QI(1) / QI(2)
_THIRD = QI(1) / QI(3)


class Algebra:
    """Unital algebra with involution, given by sparse structure constants.

    mult[i][j] is the product e_i e_j as a sparse vector; invol maps basis
    vectors to their conjugates.  `one` is the unit as a vector; `unit_index`
    is set when the unit is a basis vector.  `trace` is an optional linear
    functional (dense list) used for <a,b> = trace(a conj(b)).
    """

    def __init__(self, labels, mult, invol: QMatrix, unit,
                 trace=None, validate=True):
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.mult = mult
        self.invol = invol
        if isinstance(unit, int):
            self.one: Vec = {unit: ONE}
        else:
            self.one = dict(unit)
        keys = list(self.one)
        self.unit_index = keys[0] if len(keys) == 1 and self.one[keys[0]] == ONE else None
        self.trace = trace
        self._lcache: dict[int, QMatrix] = {}
        self._rcache: dict[int, QMatrix] = {}
        if validate:
            self.validate()

    # -- element helpers -----------------------------------------------------

    def basis_vec(self, i: int) -> Vec:
        return {i: ONE}

    def mul(self, a: Vec, b: Vec) -> Vec:
        out: Vec = {}
        mult = self.mult
        for i, ca in a.items():
            row = mult[i]
            for j, cb in b.items():
                vaxpy(out, ca * cb, row[j])
        return out

    def conj(self, a: Vec) -> Vec:
        return self.invol.apply(a)

    def comm(self, a: Vec, b: Vec) -> Vec:
        return vsub(self.mul(a, b), self.mul(b, a))

    def associator(self, a: Vec, b: Vec, c: Vec) -> Vec:
        return vsub(self.mul(self.mul(a, b), c), self.mul(a, self.mul(b, c)))

    def lmul(self, i: int) -> QMatrix:
        op = self._lcache.get(i)
        if op is None:
            op = QMatrix(self.dim, [dict(self.mult[i][j]) for j in range(self.dim)])
            self._lcache[i] = op
        return op

    def rmul(self, i: int) -> QMatrix:
        op = self._rcache.get(i)
        if op is None:
            op = QMatrix(self.dim, [dict(self.mult[j][i]) for j in range(self.dim)])
            self._rcache[i] = op
        return op

    def lmul_vec(self, a: Vec) -> QMatrix:
        op = QMatrix(self.dim)
        for i, c in a.items():
            li = self.lmul(i)
            for j in range(self.dim):
                vaxpy(op.cols[j], c, li.cols[j])
        return op

    def rmul_vec(self, a: Vec) -> QMatrix:
        op = QMatrix(self.dim)
        for i, c in a.items():
            ri = self.rmul(i)
            for j in range(self.dim):
                vaxpy(op.cols[j], c, ri.cols[j])
        return op

    def trace_of(self, a: Vec) -> QI:
        if self.trace is None:
            raise ValueError("algebra carries no trace functional")
        t = ZERO
        for i, c in a.items():
            if self.trace[i]:
                t = t + c * self.trace[i]
        return t

    def pairing(self, a: Vec, b: Vec) -> QI:
        """<a,b> = trace(a conj(b))."""
        return self.trace_of(self.mul(a, self.conj(b)))

    # -- consistency ---------------------------------------------------------

    def validate(self):
        n = self.dim
        for j in range(n):
            ej = {j: ONE}
            if not veq(self.mul(self.one, ej), ej) or not veq(self.mul(ej, self.one), ej):
                raise ValueError(f"unit fails at basis index {j}")
        if not self.invol.compose(self.invol) == QMatrix.identity(n):
            raise ValueError("involution is not involutive")
        for i in range(n):
            ci = self.invol.cols[i]
            for j in range(n):
                lhs = self.invol.apply(self.mult[i][j])
                rhs = self.mul(self.invol.cols[j], ci)
                if not veq(lhs, rhs):
                    raise ValueError(f"involution is not an antiautomorphism at ({i},{j})")

    # -- change of basis -----------------------------------------------------

    def change_basis(self, new_basis: list[Vec], labels,
                     validate=True) -> tuple["Algebra", "BasisMap"]:
        """Rewrite the table in a new basis (given in old coordinates)."""
        n = self.dim
        if len(new_basis) != n:
            raise ValueError("new basis has wrong size")
        ech = Echelon(track=True)
        for k, v in enumerate(new_basis):
            if not ech.add(v, tag=k):
                raise ValueError("new basis is not linearly independent")
        bmap = BasisMap(new_basis, ech, n)
        to_new = bmap.to_new
        mult = [[to_new(self.mul(new_basis[i], new_basis[j])) for j in range(n)]
                for i in range(n)]
        invol = QMatrix(n, [to_new(self.conj(new_basis[i])) for i in range(n)])
        trace = None
        if self.trace is not None:
            trace = [self.trace_of(v) for v in new_basis]
        alg = Algebra(labels, mult, invol, to_new(self.one), trace=trace,
                      validate=validate)
        return alg, bmap


class BasisMap:
    """Coordinate transport between an algebra and a rebased copy of it."""

    def __init__(self, new_basis: list[Vec], ech: Echelon, n: int):
        self.new_basis = new_basis
        self._ech = ech
        self.n = n

    def to_new(self, v: Vec) -> Vec:
        coords = self._ech.coords(v)
        if coords is None:
            raise ValueError("vector outside the basis span")
        return coords

    def to_old(self, v: Vec) -> Vec:
        out: Vec = {}
        for k, c in v.items():
            vaxpy(out, c, self.new_basis[k])
        return out

    def op_to_new(self, op: QMatrix) -> QMatrix:
        """Transport an operator written in old coordinates."""
        return QMatrix(self.n, [self.to_new(op.apply(b)) for b in self.new_basis])


# -- canonical operators -----------------------------------------------------

def _rmul_of(alg: Algebra, x: Vec) -> QMatrix:
    """Cached right-multiplication operator for unit basis vectors."""
    if len(x) == 1:
        (i, c), = x.items()
        if c == ONE:
            return alg.rmul(i)
    return alg.rmul_vec(x)


def _lmul_of(alg: Algebra, x: Vec) -> QMatrix:
    if len(x) == 1:
        (i, c), = x.items()
        if c == ONE:
            return alg.lmul(i)
    return alg.lmul_vec(x)


def v_op(alg: Algebra, x: Vec, y: Vec) -> QMatrix:
    """Matrix of z -> {x,y,z} = (x conj(y))z + (z conj(y))x - (z conj(x))y."""
    yb = alg.conj(y)
    xb = alg.conj(x)
    left = _lmul_of(alg, alg.mul(x, yb))
    mid = _rmul_of(alg, x).compose(_rmul_of(alg, yb))
    right = _rmul_of(alg, y).compose(_rmul_of(alg, xb))
    return left + mid - right


def t_op(alg: Algebra, x: Vec) -> QMatrix:
    """T_x = V_{x,1}: z -> xz + zx - z conj(x)."""
    return _lmul_of(alg, x) + _rmul_of(alg, x) - _rmul_of(alg, alg.conj(x))


def d_op(alg: Algebra, x: Vec, y: Vec) -> QMatrix:
    """Inner derivation z -> 1/3 [[x,y]+[conj x,conj y], z] + (z,y,x) - (z,conj x,conj y)."""
    xb, yb = alg.conj(x), alg.conj(y)
    w = vadd(alg.comm(x, y), alg.comm(xb, yb))
    op = (_lmul_of(alg, w) - _rmul_of(alg, w)).scale(_THIRD)
    # (z,y,x) = R_x R_y - R_{yx};  (z,conj x,conj y) = R_{conj y} R_{conj x} - R_{conj(x)conj(y)}
    op = op + _rmul_of(alg, x).compose(_rmul_of(alg, y)) - _rmul_of(alg, alg.mul(y, x))
    op = op - _rmul_of(alg, yb).compose(_rmul_of(alg, xb)) + _rmul_of(alg, alg.mul(xb, yb))
    return op


def d_apply(alg: Algebra, x: Vec, y: Vec, z: Vec) -> Vec:
    """D_{x,y}(z) evaluated directly (cheaper than building the operator)."""
    xb, yb = alg.conj(x), alg.conj(y)
    w = vadd(alg.comm(x, y), alg.comm(xb, yb))
    out = vscale(_THIRD, alg.comm(w, z))
    out = vadd(out, vsub(alg.mul(alg.mul(z, y), x), alg.mul(z, alg.mul(y, x))))
    return vsub(out, vsub(alg.mul(alg.mul(z, xb), yb), alg.mul(z, alg.mul(xb, yb))))


# -- H/K split and theta -------------------------------------------------------

def hk_split(alg: Algebra) -> tuple[list[Vec], list[Vec]]:
    """Exact eigenspace split of the involution: (symmetric H, skew K)."""
    n = alg.dim
    out = []
    for sign in (ONE, QI(-1)):
        rows: dict[int, Vec] = {}
        for j in range(n):
            col = dict(alg.invol.cols[j])
            col[j] = col.get(j, ZERO) - sign
            for k, c in col.items():
                if c:
                    rows.setdefault(k, {})[j] = c
        ech = Echelon()
        for r in rows.values():
            ech.add(r)
        out.append(ech.kernel_basis(n))
    return out[0], out[1]


def theta_from_trace(alg: Algebra) -> QMatrix:
    """b -> -b + (2 phi(b)/phi(1)) 1 for the trace form phi carried by alg."""
    if alg.trace is None:
        raise ValueError("theta needs a trace form")
    phi1 = alg.trace_of(alg.one)
    cols = []
    for i in range(alg.dim):
        col = {i: QI(-1)}
        c = (QI(2) * alg.trace[i]) / phi1
        if c:
            vaxpy(col, c, alg.one)
        cols.append(col)
    return QMatrix(alg.dim, cols)


# -- randomized and exhaustive identity checks --------------------------------

def random_vec(rng: random.Random, dim: int, span: int = 3, complex_parts=True) -> Vec:
    """Dense random vector with small Gaussian-integer coordinates."""
    v: Vec = {}
    for i in range(dim):
        c = QI(rng.randint(-span, span), rng.randint(-span, span) if complex_parts else 0)
        if c:
            v[i] = c
    return v


def _structurable_pair_holds(alg: Algebra, x, y, z, w) -> bool:
    v1 = v_op(alg, x, y)
    v2 = v_op(alg, z, w)
    lhs = v1.compose(v2) - v2.compose(v1)
    rhs = v_op(alg, v1.apply(z), w) - v_op(alg, z, v_op(alg, y, x).apply(w))
    return lhs == rhs


def check_structurable(alg: Algebra, trials: int = 200, seed: int = 0,
                       exhaustive: bool = False, use_fast: bool = True) -> Report:
    """Operator identity [V_{x,y},V_{z,w}] = V_{{x,y,z},w} - V_{z,{y,x,w}} plus
    exhaustive skew-alternativity with the skew slot running over a K-basis."""
    rep = Report(f"structurable axioms ({'exhaustive' if exhaustive else f'{trials} trials, seed {seed}'})")
    rng = random.Random(seed)
    fails = 0
    witness = ""
    if exhaustive:
        n = alg.dim
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for l in range(n):
                        if not _structurable_pair_holds(
                                alg, {i: ONE}, {j: ONE}, {k: ONE}, {l: ONE}):
                            fails += 1
                            witness = witness or f"basis quadruple ({i},{j},{k},{l})"
        rep.add("structurable-identity-exhaustive", fails == 0, witness)
    else:
        fast = None
        if use_fast:
            from .intkernel import IntTable
            try:
                fast = IntTable.for_algebra(alg)
            except ValueError:
                fast = None  # non-integral involution: pure path
        for t in range(trials):
            quad = [random_vec(rng, alg.dim) for _ in range(4)]
            if fast is not None:
                ok = fast.structurable_identity(*quad)
            else:
                ok = _structurable_pair_holds(alg, *quad)
            if not ok:
                fails += 1
                witness = witness or f"trial {t}"
        rep.add("structurable-identity-random", fails == 0, witness)

    # skew-alternativity: (w,x,y) = -(x,w,y) = (x,y,w) for w = z - conj(z), z in K
    _, kbasis = hk_split(alg)
    bad = 0
    kw = ""
    for z in kbasis:
        w = vsub(z, alg.conj(z))
        for i in range(alg.dim):
            ei = {i: ONE}
            wei = alg.mul(w, ei)
            eiw = alg.mul(ei, w)
            for j in range(alg.dim):
                ej = {j: ONE}
                eiej = alg.mul(ei, ej)
                a1 = vsub(alg.mul(wei, ej), alg.mul(w, eiej))
                a2 = vsub(alg.mul(eiw, ej), alg.mul(ei, alg.mul(w, ej)))
                a3 = vsub(alg.mul(eiej, w), alg.mul(ei, alg.mul(ej, w)))
                if not (veq(a1, vscale(QI(-1), a2)) and veq(a1, a3)):
                    bad += 1
                    kw = kw or f"(x,y)=({i},{j})"
    rep.add("skew-alternativity-exhaustive", bad == 0, kw)
    return rep


def jordan_check(alg: Algebra, rng: random.Random | None = None,
                 random_pairs: int = 20) -> Report:
    """Commutativity on basis pairs and (x^2 y)x = x^2(yx) on basis and random pairs."""
    rep = Report("jordan identity")
    n = alg.dim
    bad_c = bad_j = 0
    witness = ""
    for i in range(n):
        ei = {i: ONE}
        sq = alg.mul(ei, ei)
        for j in range(n):
            ej = {j: ONE}
            if not veq(alg.mult[i][j], alg.mult[j][i]):
                bad_c += 1
                witness = witness or f"commutativity ({i},{j})"
            lhs = alg.mul(alg.mul(sq, ej), ei)
            rhs = alg.mul(sq, alg.mul(ej, ei))
            if not veq(lhs, rhs):
                bad_j += 1
                witness = witness or f"jordan ({i},{j})"
    rep.add("commutative-basis-pairs", bad_c == 0, witness)
    rep.add("jordan-basis-pairs", bad_j == 0, witness)
    if rng is not None:
        bad = 0
        for _ in range(random_pairs):
            x = random_vec(rng, n)
            y = random_vec(rng, n)
            sq = alg.mul(x, x)
            if not veq(alg.mul(alg.mul(sq, y), x), alg.mul(sq, alg.mul(y, x))):
                bad += 1
        rep.add("jordan-random-pairs", bad == 0)
    return rep


# -- Cayley-Dickson double ----------------------------------------------------

def cd_double(b_alg: Algebra, mu: QI, label_v: str = "v") -> Algebra:
    """Double B + vB of an algebra with trace form, with v^2 = mu 1.

    theta is b -> -b + (2 phi(b)/phi(1)) 1; the product is
    (b1,b2)(c1,c2) = (b1 c1 + mu (b2 c2^th)^th, b1^th c2 + (b2^th c1^th)^th)
    and the involution is (b1,b2) -> (conj b1, -(conj b2)^th).  Verifies
    v^2 = mu 1, L_v^2 = R_v^2 = mu id, L_v R_v = mu theta, and attaches
    `theta`, `v_vec`, `mu`, `base_dim`.
    """
    mu = qi(mu)
    if not mu:
        raise ValueError("mu must be nonzero")
    n = b_alg.dim
    theta_b = theta_from_trace(b_alg)

    def th(v):
        return theta_b.apply(v)

    def shift(v):
        return {n + k: c for k, c in v.items()}

    labels = list(b_alg.labels) + [f"{label_v}*{l}" for l in b_alg.labels]
    mult = [[None] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        ei = {i: ONE}
        thi = th(ei)
        for j in range(n):
            ej = {j: ONE}
            mult[i][j] = dict(b_alg.mult[i][j])
            mult[i][n + j] = shift(b_alg.mul(thi, ej))
            mult[n + i][j] = shift(th(b_alg.mul(thi, th(ej))))
            mult[n + i][n + j] = vscale(mu, th(b_alg.mul(ei, th(ej))))
    invol_cols = [dict(b_alg.invol.cols[i]) for i in range(n)]
    for i in range(n):
        invol_cols.append(shift(vscale(QI(-1), th(b_alg.conj({i: ONE})))))
    alg = Algebra(labels, mult, QMatrix(2 * n, invol_cols), dict(b_alg.one))

    theta_full = QMatrix(2 * n)
    for i in range(n):
        theta_full.cols[i] = dict(theta_b.cols[i])
        theta_full.cols[n + i] = shift(theta_b.cols[i])
    alg.theta = theta_full
    alg.v_vec = shift(b_alg.one)
    alg.mu = mu
    alg.base_dim = n

    v = alg.v_vec
    lv = alg.lmul_vec(v)
    rv = alg.rmul_vec(v)
    mu_id = QMatrix.identity(2 * n).scale(mu)
    if not veq(alg.mul(v, v), vscale(mu, alg.one)):
        raise AssertionError("doubling: v^2 != mu 1")
    if not (lv.compose(lv) == mu_id and rv.compose(rv) == mu_id):
        raise AssertionError("doubling: L_v^2 or R_v^2 != mu id")
    if not (lv.compose(rv) == theta_full.scale(mu) and rv.compose(lv) == theta_full.scale(mu)):
        raise AssertionError("doubling: L_v R_v != mu theta")
    return alg


# -- structurable matrix algebra ----------------------------------------------

@dataclass
class CubicData:
    """Admissible-triple data (T, N, N) carried by a cubic Jordan space."""
    dim: int
    labels: list[str]
    t_bilinear: list[list[QI]]        # dense Gram of the trace bilinear form
    cross: list[list[Vec]]            # cross[i][j] = e_i x e_j

    def t_pair(self, x: Vec, y: Vec) -> QI:
        t = ZERO
        for i, a in x.items():
            row = self.t_bilinear[i]
            for j, b in y.items():
                if row[j]:
                    t = t + a * b * row[j]
        return t

    def cross_vec(self, x: Vec, y: Vec) -> Vec:
        out: Vec = {}
        for i, a in x.items():
            row = self.cross[i]
            for j, b in y.items():
                vaxpy(out, a * b, row[j])
        return out


def matrix_structurable(cubic: CubicData) -> Algebra:
    """2x2 matrix algebra over the admissible triple (T,N,N), zeta = 1.

    Basis: [1, s0] ++ eta(J-basis) ++ eta'(J-basis); the unit and the skew
    generator s0 = diag(1,-1) are basis vectors.  Attaches the structurable
    trace functional tr = alpha + beta.
    """
    m = cubic.dim
    n = 2 + 2 * m
    labels = ["one", "s0"] + [f"n.{l}" for l in cubic.labels] + [f"np.{l}" for l in cubic.labels]

    def rep(idx):
        """(alpha, x, x', beta) of a basis vector."""
        if idx == 0:
            return ONE, {}, {}, ONE
        if idx == 1:
            return ONE, {}, {}, QI(-1)
        if idx < 2 + m:
            return ZERO, {idx - 2: ONE}, {}, ZERO
        return ZERO, {}, {idx - 2 - m: ONE}, ZERO

    def unrep(alpha, x, xp, beta):
        out: Vec = {}
        a = _HALF * (alpha + beta)
        b = _HALF * (alpha - beta)
        if a:
            out[0] = a
        if b:
            out[1] = b
        for k, c in x.items():
            out[2 + k] = c
        for k, c in xp.items():
            out[2 + m + k] = c
        return out

    mult = [[None] * n for _ in range(n)]
    for i in range(n):
        a1, x1, xp1, b1 = rep(i)
        for j in range(n):
            a2, x2, xp2, b2 = rep(j)
            alpha = a1 * a2 + cubic.t_pair(x1, xp2)
            beta = cubic.t_pair(x2, xp1) + b1 * b2
            x = vadd(vadd(vscale(a1, x2), vscale(b2, x1)), cubic.cross_vec(xp1, xp2))
            xp = vadd(vadd(vscale(a2, xp1), vscale(b1, xp2)), cubic.cross_vec(x1, x2))
            mult[i][j] = unrep(alpha, x, xp, beta)
    invol = QMatrix.identity(n)
    invol.cols[1] = {1: QI(-1)}
    trace = [QI(2), ZERO] + [ZERO] * (2 * m)
    return Algebra(labels, mult, invol, 0, trace=trace)


# -- trace form ----------------------------------------------------------------

def trace_gram(alg: Algebra) -> list[Vec]:
    """Sparse Gram rows of <a,b> = trace(a conj(b)) on the basis."""
    rows = []
    for i in range(alg.dim):
        row: Vec = {}
        for j in range(alg.dim):
            t = alg.pairing({i: ONE}, {j: ONE})
            if t:
                row[j] = t
        rows.append(row)
    return rows


def orthogonality_check(alg: Algebra, degrees) -> Report:
    """<A_g, A_h> = 0 whenever g + h != 0, for a basis-aligned degree map."""
    rep = Report("trace-form orthogonality")
    gram = trace_gram(alg)
    bad = 0
    witness = ""
    for i, row in enumerate(gram):
        for j, t in row.items():
            if not (degrees[i] + degrees[j]).is_zero() and t:
                bad += 1
                witness = witness or f"pair ({i},{j})"
    rep.add("cross-component-pairings-vanish", bad == 0, witness)
    return rep
