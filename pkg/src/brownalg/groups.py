"""Finitely generated abelian grading groups Z^r x Z_d1 x ... x Z_dk.

Elements are immutable and only combine within the same parent group.
Homomorphisms are integer matrices on coordinate vectors, validated once
at construction (a torsion generator of order d must map to an element
killed by d).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd

__all__ = ["AbelianGroup", "GroupElt", "GroupHom", "support_S", "Z4_3"]


@dataclass(frozen=True)
class AbelianGroup:
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        if any(d < 2 for d in self.torsion):
            raise ValueError("torsion orders must be >= 2")
        object.__setattr__(self, "torsion", tuple(self.torsion))

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion)

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> int:
        if not self.is_finite():
            raise ValueError("infinite group")
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def elt(self, coords) -> GroupElt:
        coords = tuple(coords)
        if len(coords) != self.ngens:
            raise ValueError("coordinate length mismatch")
        return GroupElt(self, coords[: self.free_rank],
                        tuple(c % d for c, d in zip(coords[self.free_rank:], self.torsion)))

    def zero(self) -> GroupElt:
        return self.elt((0,) * self.ngens)

    def gen(self, k: int) -> GroupElt:
        return self.elt(tuple(1 if j == k else 0 for j in range(self.ngens)))

    def elements(self):
        """All elements, in lexicographic coordinate order (finite groups only)."""
        if not self.is_finite():
            raise ValueError("cannot enumerate an infinite group")
        for tors in product(*(range(d) for d in self.torsion)):
            yield GroupElt(self, (), tors)

    def __repr__(self):
        parts = ["Z"] * self.free_rank + [f"Z{d}" for d in self.torsion]
        return "x".join(parts) if parts else "0"


@dataclass(frozen=True)
class GroupElt:
    group: AbelianGroup
    free: tuple[int, ...]
    tors: tuple[int, ...]

    @property
    def coords(self) -> tuple[int, ...]:
        return self.free + self.tors

    def _check(self, other: GroupElt):
        if self.group != other.group:
            raise ValueError("elements of different groups cannot combine")

    def __add__(self, other: GroupElt) -> GroupElt:
        self._check(other)
        return GroupElt(self.group,
                        tuple(a + b for a, b in zip(self.free, other.free)),
                        tuple((a + b) % d for a, b, d in
                              zip(self.tors, other.tors, self.group.torsion)))

    def __neg__(self) -> GroupElt:
        return GroupElt(self.group, tuple(-a for a in self.free),
                        tuple((-a) % d for a, d in zip(self.tors, self.group.torsion)))

    def __sub__(self, other: GroupElt) -> GroupElt:
        return self + (-other)

    def __mul__(self, n: int) -> GroupElt:
        return GroupElt(self.group, tuple(n * a for a in self.free),
                        tuple((n * a) % d for a, d in zip(self.tors, self.group.torsion)))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.free) and not any(self.tors)

    def order(self) -> int:
        """Least n >= 1 with n*g = 0; raises on elements of infinite order."""
        if any(self.free):
            raise ValueError("element has infinite order")
        n = 1
        for a, d in zip(self.tors, self.group.torsion):
            n = n * (d // gcd(a, d)) // gcd(n, d // gcd(a, d))
        return n

    def __repr__(self):
        return f"({','.join(map(str, self.coords))})"


def support_S(g0: GroupElt) -> set[GroupElt]:
    """{g : 2g != g0}, the support set singled out by an order-2 element g0."""
    if not (2 * g0).is_zero():
        raise ValueError("g0 must satisfy 2*g0 = 0")
    return {g for g in g0.group.elements() if 2 * g != g0}


class GroupHom:
    """Homomorphism given by the images of the domain's generators."""

    def __init__(self, dom: AbelianGroup, cod: AbelianGroup, images):
        images = tuple(images)
        if len(images) != dom.ngens:
            raise ValueError("need one image per domain generator")
        for img in images:
            if img.group != cod:
                raise ValueError("image lies in the wrong group")
        for k, d in enumerate(dom.torsion):
            img = images[dom.free_rank + k]
            if not (d * img).is_zero():
                raise ValueError(f"ill-defined: order-{d} generator maps to an "
                                 f"element not killed by {d}")
        self.dom, self.cod, self.images = dom, cod, images

    @classmethod
    def from_matrix(cls, dom: AbelianGroup, cod: AbelianGroup, rows) -> GroupHom:
        """Row k of the integer matrix is the coordinate image of generator k."""
        return cls(dom, cod, (cod.elt(row) for row in rows))

    def __call__(self, g: GroupElt) -> GroupElt:
        if g.group != self.dom:
            raise ValueError("element not in the domain")
        out = self.cod.zero()
        for c, img in zip(g.coords, self.images):
            if c:
                out = out + c * img
        return out

    def compose(self, inner: GroupHom) -> GroupHom:
        """self o inner."""
        if inner.cod != self.dom:
            raise ValueError("homomorphisms do not compose")
        return GroupHom(inner.dom, self.cod, (self(img) for img in inner.images))


Z4_3 = AbelianGroup(0, (4, 4, 4))
