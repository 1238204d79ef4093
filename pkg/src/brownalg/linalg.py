"""Sparse exact linear algebra over Q(i).

Vectors are dicts {index: QI} holding only nonzero entries.  Operators are
column-sparse square matrices.  `Echelon` is the single elimination engine:
incremental row reduction with optional coordinate tracking, used for spans,
ranks, membership tests and kernels.
"""

from __future__ import annotations

from .qi import QI, ZERO, ONE, qi

Vec = dict  # {int: QI}

__all__ = ["Vec", "vadd", "vsub", "vscale", "vaxpy", "veq", "QMatrix", "Echelon",
           "rank_rows", "dense_mat_mul", "dense_mat_vec", "dense_transpose",
           "dense_det", "dense_inverse"]


# -- sparse vectors ----------------------------------------------------------

def vadd(a: Vec, b: Vec) -> Vec:
    out = dict(a)
    for k, c in b.items():
        s = out.get(k)
        s = c if s is None else s + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def vsub(a: Vec, b: Vec) -> Vec:
    out = dict(a)
    for k, c in b.items():
        s = out.get(k)
        s = -c if s is None else s - c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def vscale(c: QI, a: Vec) -> Vec:
    if not c:
        return {}
    return {k: c * v for k, v in a.items()}


def vaxpy(dst: Vec, c: QI, src: Vec) -> None:
    """In place dst += c*src."""
    if not c:
        return
    for k, v in src.items():
        s = dst.get(k)
        s = c * v if s is None else s + c * v
        if s:
            dst[k] = s
        else:
            dst.pop(k, None)


def veq(a: Vec, b: Vec) -> bool:
    if len(a) != len(b):
        return False
    for k, v in a.items():
        w = b.get(k)
        if w is None or w != v:
            return False
    return True


# -- sparse operators --------------------------------------------------------

class QMatrix:
    """Square linear map; cols[j] = image of basis vector j as a sparse Vec."""

    __slots__ = ("n", "cols")

    def __init__(self, n: int, cols=None):
        self.n = n
        self.cols = [dict() for _ in range(n)] if cols is None else cols

    @classmethod
    def identity(cls, n: int) -> QMatrix:
        return cls(n, [{j: ONE} for j in range(n)])

    @classmethod
    def zero(cls, n: int) -> QMatrix:
        return cls(n)

    def copy(self) -> QMatrix:
        return QMatrix(self.n, [dict(c) for c in self.cols])

    def apply(self, v: Vec) -> Vec:
        out: Vec = {}
        for j, c in v.items():
            vaxpy(out, c, self.cols[j])
        return out

    def compose(self, first: QMatrix) -> QMatrix:
        """self after first (self o first)."""
        return QMatrix(self.n, [self.apply(col) for col in first.cols])

    def __add__(self, other: QMatrix) -> QMatrix:
        return QMatrix(self.n, [vadd(a, b) for a, b in zip(self.cols, other.cols)])

    def __sub__(self, other: QMatrix) -> QMatrix:
        return QMatrix(self.n, [vsub(a, b) for a, b in zip(self.cols, other.cols)])

    def __neg__(self) -> QMatrix:
        return self.scale(QI(-1))

    def scale(self, c: QI) -> QMatrix:
        return QMatrix(self.n, [vscale(c, col) for col in self.cols])

    def __eq__(self, other) -> bool:
        return self.n == other.n and all(veq(a, b) for a, b in zip(self.cols, other.cols))

    def is_zero(self) -> bool:
        return all(not c for c in self.cols)

    def entry(self, k: int, j: int) -> QI:
        return self.cols[j].get(k, ZERO)

    def flat(self) -> Vec:
        """Flattened sparse vector with key j*n + k (for span computations)."""
        out = {}
        n = self.n
        for j, col in enumerate(self.cols):
            base = j * n
            for k, c in col.items():
                out[base + k] = c
        return out

    @classmethod
    def from_flat(cls, n: int, flat: Vec) -> QMatrix:
        m = cls(n)
        for key, c in flat.items():
            m.cols[key // n][key % n] = c
        return m

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def trace(self) -> QI:
        t = ZERO
        for j, col in enumerate(self.cols):
            c = col.get(j)
            if c is not None:
                t = t + c
        return t


# -- elimination engine ------------------------------------------------------

class Echelon:
    """Incremental sparse row echelon over Q(i).

    Rows are normalized so the leading (minimal-index) entry is 1; inserting
    a fully reduced row keeps the invariant that each stored row's support
    starts at its pivot.  With ``track=True`` every stored row also carries
    its expression in terms of the vectors passed to :meth:`add`.
    """

    def __init__(self, track: bool = False):
        self.rows: dict[int, Vec] = {}
        self.exprs: dict[int, Vec] = {} if track else None
        self.tags: list = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, v: Vec):
        """Eliminate leading pivot hits from v; returns (residual, combo).

        Every linear combination of stored rows has a pivot as its minimal
        index, so the residual is zero iff v lies in the row span.
        """
        v = dict(v)
        combo: Vec = {}
        while v:
            p = min(v)
            row = self.rows.get(p)
            if row is None:
                break
            c = v[p]
            vaxpy(v, -c, row)
            if self.exprs is not None:
                vaxpy(combo, c, self.exprs[p])
        return v, combo

    def add(self, v: Vec, tag=None) -> bool:
        """Insert v; returns True if it enlarged the span."""
        res, combo = self._reduce(v)
        if not res:
            return False
        p = min(res)
        inv = ONE / res[p]
        self.rows[p] = vscale(inv, res)
        if self.exprs is not None:
            idx = len(self.tags)
            self.tags.append(tag if tag is not None else idx)
            expr = vscale(-inv, combo)
            expr[idx] = inv
            self.exprs[p] = expr
        return True

    def contains(self, v: Vec) -> bool:
        res, _ = self._reduce(v)
        return not res

    def coords(self, v: Vec):
        """Coordinates of v in the inserted-vector basis, or None if outside.

        Only valid when the inserted vectors were independent (each add()
        returned True), so they coincide with the tracked basis.
        """
        if self.exprs is None:
            raise ValueError("echelon built without tracking")
        res, combo = self._reduce(v)
        if res:
            return None
        return combo

    def kernel_basis(self, ncols: int) -> list[Vec]:
        """Basis of {x : row . x = 0 for the row space}, via back-substitution."""
        pivots = sorted(self.rows)
        pivset = set(pivots)
        basis = []
        for f in range(ncols):
            if f in pivset:
                continue
            x: Vec = {f: ONE}
            for p in reversed(pivots):
                row = self.rows[p]
                s = ZERO
                for c, val in row.items():
                    if c == p:
                        continue
                    xc = x.get(c)
                    if xc is not None:
                        s = s + val * xc
                if s:
                    x[p] = -s
            basis.append(x)
        return basis


def rank_rows(rows) -> int:
    """Exact rank of a family of sparse rows."""
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def rank_rows_int(rows) -> int:
    """Rank of sparse QI rows via fraction-free elimination over Z[i].

    Each row is scaled by the lcm of its entry denominators (rank-neutral),
    and reduction uses cross-multiplication only, so all arithmetic stays in
    Gaussian integers.
    """
    from math import lcm
    pivots: dict[int, dict] = {}
    rank = 0
    for row in rows:
        if not row:
            continue
        scale = lcm(*(c.re.denominator for c in row.values()),
                    *(c.im.denominator for c in row.values()))
        v = {k: (int(c.re * scale), int(c.im * scale)) for k, c in row.items()}
        while v:
            p = min(v)
            r = pivots.get(p)
            if r is None:
                pivots[p] = v
                rank += 1
                break
            ra, rb = r[p]
            va, vb = v[p]
            out = {}
            for k in v.keys() | r.keys():
                xa, xb = v.get(k, (0, 0))
                ya, yb = r.get(k, (0, 0))
                # r[p]*v[k] - v[p]*r[k]
                na = ra * xa - rb * xb - (va * ya - vb * yb)
                nb = ra * xb + rb * xa - (va * yb + vb * ya)
                if na or nb:
                    out[k] = (na, nb)
            v = out
    return rank


# -- small dense matrices (lists of lists of QI) -----------------------------

def dense_mat_mul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    out = [[ZERO] * p for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in range(m):
            c = ai[k]
            if not c:
                continue
            bk = b[k]
            for j in range(p):
                if bk[j]:
                    oi[j] = oi[j] + c * bk[j]
    return out


def dense_mat_vec(a, v):
    return [sum((ai[j] * v[j] for j in range(len(v)) if v[j]), ZERO) for ai in a]


def dense_transpose(a):
    return [list(col) for col in zip(*a)]


def dense_det(a) -> QI:
    """Determinant of a small dense matrix by Laplace expansion."""
    n = len(a)
    if n == 1:
        return a[0][0]
    out = ZERO
    sign = ONE
    for j in range(n):
        if a[0][j]:
            minor = [[row[c] for c in range(n) if c != j] for row in a[1:]]
            out = out + sign * a[0][j] * dense_det(minor)
        sign = -sign
    return out


def dense_inverse(a):
    """Inverse of a small dense matrix by Gauss-Jordan; raises if singular."""
    n = len(a)
    m = [list(row) + [ONE if i == j else ZERO for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        inv = ONE / m[col][col]
        m[col] = [inv * x for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                c = m[r][col]
                m[r] = [x - c * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]
