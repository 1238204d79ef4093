"""Certified integer fast path for bulk identity sweeps.

The structure constants are scaled by the lcm of their denominators to land
in Z[i]; identities that are homogeneous in the product (the structurable
operator identity, trace invariance) are then equivalent for the scaled
table.  Dense evaluations run on int64 numpy arrays; before every product
an a priori magnitude bound is checked against 2^61 so that int64 overflow
is impossible, making the computation exact.  When a bound would be
exceeded the same computation reruns on object-dtype arrays (Python ints).
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

import numpy as np

from .qi import QI, ZERO
from .linalg import Vec

__all__ = ["IntTable"]

_LIMIT = 1 << 61


class _Overflow(Exception):
    pass


class IntTable:
    """Integer-scaled structure constants with certified int64 evaluation."""

    def __init__(self, n, mre, mim, cre, cim, scale, trace_re=None, trace_im=None):
        self.n = n
        self.mre, self.mim = mre, mim
        self.cre, self.cim = cre, cim
        self.scale = scale
        self.trace_re, self.trace_im = trace_re, trace_im
        mag = np.abs(mre.astype(object)) + np.abs(mim.astype(object))
        self.tab_colmax = int(mag.sum(axis=(0, 1)).max())   # bound for u,v -> uv
        self.tab_lmax = int(mag.sum(axis=0).max())          # bound for L_w entries
        self.tab_rmax = int(mag.sum(axis=1).max())          # bound for R_w entries
        self.conj_max = int((np.abs(cre.astype(object)) + np.abs(cim.astype(object))).sum(axis=0).max())

    @classmethod
    def for_algebra(cls, alg) -> "IntTable":
        n = alg.dim
        dens = [1]
        for i in range(n):
            for j in range(n):
                for c in alg.mult[i][j].values():
                    dens.append(c.re.denominator)
                    dens.append(c.im.denominator)
        scale = lcm(*dens)
        mre = np.zeros((n, n, n), dtype=np.int64)
        mim = np.zeros((n, n, n), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                for k, c in alg.mult[i][j].items():
                    mre[i, j, k] = int(c.re * scale)
                    mim[i, j, k] = int(c.im * scale)
        cre = np.zeros((n, n), dtype=np.int64)
        cim = np.zeros((n, n), dtype=np.int64)
        for j in range(n):
            for k, c in alg.invol.cols[j].items():
                if c.re.denominator != 1 or c.im.denominator != 1:
                    raise ValueError("involution entries must be Gaussian integers")
                cre[j, k] = int(c.re)
                cim[j, k] = int(c.im)
        trace_re = trace_im = None
        if alg.trace is not None:
            tden = lcm(*(1,), *(t.re.denominator for t in alg.trace),
                       *(t.im.denominator for t in alg.trace))
            trace_re = np.array([int(t.re * tden) for t in alg.trace], dtype=np.int64)
            trace_im = np.array([int(t.im * tden) for t in alg.trace], dtype=np.int64)
        return cls(n, mre, mim, cre, cim, scale, trace_re, trace_im)

    # -- vectors -------------------------------------------------------------

    def vec_in(self, v: Vec):
        """A sparse QI vector with Gaussian-integer entries as an array pair."""
        re = np.zeros(self.n, dtype=np.int64)
        im = np.zeros(self.n, dtype=np.int64)
        for i, c in v.items():
            if c.re.denominator != 1 or c.im.denominator != 1:
                raise ValueError("fast path needs Gaussian-integer coordinates")
            re[i] = int(c.re)
            im[i] = int(c.im)
        return re, im

    @staticmethod
    def _mag(a) -> int:
        re, im = a
        m = int(np.abs(re).max(initial=0)) + int(np.abs(im).max(initial=0))
        return m

    def _check(self, bound):
        if bound >= _LIMIT:
            raise _Overflow

    # -- scaled-algebra operations (results carry powers of `scale`) ----------

    def conj(self, a):
        re, im = a
        return re @ self.cre - im @ self.cim, re @ self.cim + im @ self.cre

    def mul(self, a, b):
        """Scaled product a*b = b-row times the L_a matrix (one `scale` factor)."""
        return self.apply(b, self.lmat(a))

    def lmat(self, w):
        """Row-convention matrix of left multiplication by w (scaled)."""
        self._check(self._mag(w) * self.tab_lmax)
        wre, wim = w
        re = np.tensordot(wre, self.mre, (0, 0)) - np.tensordot(wim, self.mim, (0, 0))
        im = np.tensordot(wre, self.mim, (0, 0)) + np.tensordot(wim, self.mre, (0, 0))
        return re, im

    def rmat(self, w):
        """Row-convention matrix of right multiplication by w (scaled)."""
        self._check(self._mag(w) * self.tab_rmax)
        wre, wim = w
        re = np.tensordot(wre, self.mre, (0, 1)) - np.tensordot(wim, self.mim, (0, 1))
        im = np.tensordot(wre, self.mim, (0, 1)) + np.tensordot(wim, self.mre, (0, 1))
        return re, im

    def matmul(self, a, b):
        """a then b in row convention: entry (j,k) = sum_m a[j,m] b[m,k]."""
        self._check(2 * self.n * self._mag(a) * self._mag(b))
        are, aim = a
        bre, bim = b
        return are @ bre - aim @ bim, are @ bim + aim @ bre

    def apply(self, v, m):
        """Row vector times row-convention matrix."""
        self._check(2 * self.n * self._mag(v) * self._mag(m))
        vre, vim = v
        mre, mim = m
        return vre @ mre - vim @ mim, vre @ mim + vim @ mre

    @staticmethod
    def add(a, b):
        return a[0] + b[0], a[1] + b[1]

    @staticmethod
    def sub(a, b):
        return a[0] - b[0], a[1] - b[1]

    @staticmethod
    def eq(a, b) -> bool:
        return bool(np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1]))

    # -- identities ------------------------------------------------------------

    def _v_mat(self, x, y):
        """Operator V_{x,y} for the scaled product (scale^2 times the true one)."""
        yb = self.conj(y)
        xb = self.conj(x)
        left = self.lmat(self.mul(x, yb))
        mid = self.matmul(self.rmat(yb), self.rmat(x))     # z -> (z yb) x
        right = self.matmul(self.rmat(xb), self.rmat(y))   # z -> (z xb) y
        return self.add(left, self.sub(mid, right))

    def _structurable_core(self, xv, yv, zv, wv) -> bool:
        v1 = self._v_mat(xv, yv)
        v2 = self._v_mat(zv, wv)
        lhs = self.sub(self.matmul(v2, v1), self.matmul(v1, v2))
        u1 = self.apply(zv, v1)
        u2 = self.apply(wv, self._v_mat(yv, xv))
        rhs = self.sub(self._v_mat(u1, wv), self._v_mat(zv, u2))
        return self.eq(lhs, rhs)

    def structurable_identity(self, x: Vec, y: Vec, z: Vec, w: Vec) -> bool:
        """[V_{x,y}, V_{z,w}] = V_{{x,y,z},w} - V_{z,{y,x,w}}, exactly."""
        args = [self.vec_in(v) for v in (x, y, z, w)]
        try:
            return self._structurable_core(*args)
        except _Overflow:
            wide = [(a[0].astype(object), a[1].astype(object)) for a in args]
            saved = self._promote_object()
            try:
                return self._structurable_core(*wide)
            finally:
                self._restore(saved)

    def _d3_apply(self, x, y, z):
        """3 D_{x,y}(z) for the scaled product (integral: clears the 1/3)."""
        xb, yb = self.conj(x), self.conj(y)
        w = self.add(self.sub(self.mul(x, y), self.mul(y, x)),
                     self.sub(self.mul(xb, yb), self.mul(yb, xb)))
        out = self.sub(self.mul(w, z), self.mul(z, w))
        t1 = self.sub(self.mul(self.mul(z, y), x), self.mul(z, self.mul(y, x)))
        t2 = self.sub(self.mul(self.mul(z, xb), yb), self.mul(z, self.mul(xb, yb)))
        self._check(3 * max(self._mag(t1), self._mag(t2), self._mag(out)))
        d = self.sub(t1, t2)
        return self.add(out, (3 * d[0], 3 * d[1]))

    def d_annihilates(self, x: Vec, y: Vec, z: Vec) -> bool:
        """D_{x,y}(z) = 0, exactly."""
        args = [self.vec_in(v) for v in (x, y, z)]
        try:
            r = self._d3_apply(*args)
        except _Overflow:
            wide = [(a[0].astype(object), a[1].astype(object)) for a in args]
            saved = self._promote_object()
            try:
                r = self._d3_apply(*wide)
            finally:
                self._restore(saved)
        return not (r[0].any() or r[1].any())

    def d_leibniz(self, x: Vec, y: Vec, a: Vec, b: Vec) -> bool:
        """D_{x,y}(ab) = D_{x,y}(a) b + a D_{x,y}(b), exactly."""
        args = [self.vec_in(v) for v in (x, y, a, b)]
        try:
            return self._d_leibniz_core(*args)
        except _Overflow:
            wide = [(v[0].astype(object), v[1].astype(object)) for v in args]
            saved = self._promote_object()
            try:
                return self._d_leibniz_core(*wide)
            finally:
                self._restore(saved)

    def _d_leibniz_core(self, xv, yv, av, bv) -> bool:
        lhs = self._d3_apply(xv, yv, self.mul(av, bv))
        rhs = self.add(self.mul(self._d3_apply(xv, yv, av), bv),
                       self.mul(av, self._d3_apply(xv, yv, bv)))
        return self.eq(lhs, rhs)

    def trace_invariance(self, a: Vec, b: Vec, c: Vec) -> bool:
        """<conj a, conj b> = <a,b> and <ca, b> = <a, conj(c) b>, exactly."""
        av, bv, cv = (self.vec_in(v) for v in (a, b, c))
        try:
            return self._trace_core(av, bv, cv)
        except _Overflow:
            wide = [(x[0].astype(object), x[1].astype(object)) for x in (av, bv, cv)]
            saved = self._promote_object()
            try:
                return self._trace_core(*wide)
            finally:
                self._restore(saved)

    def _trace_core(self, av, bv, cv) -> bool:
        def pair(u, w):
            p = self.mul(u, self.conj(w))
            self._check(self.n * self._mag(p) * (int(np.abs(self.trace_re.astype(object)).max())
                                                 + int(np.abs(self.trace_im.astype(object)).max())))
            re = int(p[0] @ self.trace_re) - int(p[1] @ self.trace_im)
            im = int(p[0] @ self.trace_im) + int(p[1] @ self.trace_re)
            return re, im

        if pair(self.conj(av), self.conj(bv)) != pair(av, bv):
            return False
        return pair(self.mul(cv, av), bv) == pair(av, self.mul(self.conj(cv), bv))

    # -- object-dtype fallback --------------------------------------------------

    def _promote_object(self):
        saved = (self.mre, self.mim, self.cre, self.cim, self._check)
        self.mre = self.mre.astype(object)
        self.mim = self.mim.astype(object)
        self.cre = self.cre.astype(object)
        self.cim = self.cim.astype(object)
        self._check = lambda bound: None
        return saved

    def _restore(self, saved):
        self.mre, self.mim, self.cre, self.cim, self._check = saved
