"""
Moebius action of SL(2,Z) on the upper half-plane.

Covers reduction to the standard fundamental domain
{-1/2 <= Re z <= 1/2, |z| >= 1}, its translates B_n = A^-n(B_0) = B_0 + n,
the six-tile hexagon B_0..B_5, and the side pairings f_n that glue the arc
side of B_n to the arc side of B_{n+3}.

Points of H use floating arithmetic; every check takes an absolute tolerance
(default 1e-9).  Boundary points of H (the extended real line) are
:class:`ExtReal` values.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import ReductionError
from .sl2 import A, X, Mat2Z, f_matrix
from .words import GenWord

DEFAULT_TOL = 1e-9

RHO = cmath.exp(1j * math.pi / 3)        # 1/2 + i sqrt(3)/2
RHO_BAR = cmath.exp(2j * math.pi / 3)    # -1/2 + i sqrt(3)/2


@dataclass(frozen=True)
class HPoint:
    re: float
    im: float

    def __post_init__(self):
        if not self.im > 0:
            raise ValueError(f"point {self.re} + {self.im}i is not in the upper half-plane")

    @classmethod
    def of(cls, z) -> HPoint:
        if isinstance(z, HPoint):
            return z
        z = complex(z)
        return cls(z.real, z.imag)

    @property
    def z(self) -> complex:
        return complex(self.re, self.im)

    def __abs__(self):
        return abs(self.z)

    def __str__(self):
        return f"{self.re!r} {self.im!r}"


@dataclass(frozen=True)
class ExtReal:
    """A point of R u {inf}, the boundary circle of H."""

    value: float = 0.0
    infinite: bool = False

    def __str__(self):
        return "inf" if self.infinite else repr(self.value)


INFINITY = ExtReal(infinite=True)


def mobius_apply(m: Mat2Z, z) -> HPoint:
    """(a z + b) / (c z + d).  ``m`` and ``-m`` act identically."""
    z = HPoint.of(z)
    w = z.z
    den = m.c * w + m.d
    num = m.a * w + m.b
    img = num / den
    # Im of the image is Im(z)/|cz+d|^2; computing it directly keeps it positive
    return HPoint(img.real, z.im / abs(den) ** 2)


def mobius_boundary(m: Mat2Z, t: ExtReal) -> ExtReal:
    a, b, c, d = m.entries()
    if t.infinite:
        return INFINITY if c == 0 else ExtReal(a / c)
    den = c * t.value + d
    if den == 0:
        return INFINITY
    return ExtReal((a * t.value + b) / den)


def mobius_closure(m: Mat2Z, p):
    """Act on a point of H or of its boundary."""
    if isinstance(p, ExtReal):
        return mobius_boundary(m, p)
    return mobius_apply(m, p)


def closure_distance(p, q) -> float:
    """Euclidean distance in the closed half-plane; inf only matches inf."""
    if isinstance(p, ExtReal) and p.infinite or isinstance(q, ExtReal) and q.infinite:
        both = (isinstance(p, ExtReal) and p.infinite) and (isinstance(q, ExtReal) and q.infinite)
        return 0.0 if both else math.inf
    pz = complex(p.value) if isinstance(p, ExtReal) else p.z
    qz = complex(q.value) if isinstance(q, ExtReal) else q.z
    return abs(pz - qz)


def in_standard_domain(z, tol: float = DEFAULT_TOL) -> bool:
    z = HPoint.of(z)
    return abs(z.re) <= 0.5 + tol and abs(z.z) >= 1 - tol


def reduce_point(z, tol: float = DEFAULT_TOL, max_iter: int = 10_000) -> tuple[HPoint, GenWord]:
    """Move ``z`` into the standard domain.

    Returns ``(z', w)`` with ``eval_word(w)`` taking z to z'.  Points on the
    boundary (within ``tol``) are accepted as they are.  The image is
    recomputed from the accumulated exact matrix at every step, so rounding
    does not build up.
    """
    z0 = HPoint.of(z)
    m = Mat2Z(1, 0, 0, 1)
    word = GenWord.identity()
    inversion = GenWord.parse("A B A")  # X: z -> -1/z
    cur = z0
    for _ in range(max_iter):
        if abs(cur.re) > 0.5 + tol:
            k = math.floor(cur.re + 0.5)
            m = A ** k * m  # A^k: z -> z - k
            word = GenWord.gen("A", k) * word
        elif abs(cur.z) < 1 - tol:
            m = X * m
            word = inversion * word
        else:
            return cur, word
        cur = mobius_apply(m, z0)
    raise ReductionError(
        f"no convergence after {max_iter} steps for {z0}; tolerance {tol} may be too tight")


@dataclass(frozen=True)
class Side:
    """A geodesic segment from ``start`` to ``end`` on the geodesic ``ideal``."""

    start: object
    end: object
    ideal: tuple[ExtReal, ExtReal]


@dataclass(frozen=True)
class DomainSpec:
    """The tile B_n: two vertical sides and an arc of |z - n| = 1."""

    n: int
    left: Side
    arc: Side
    right: Side

    @property
    def vertices(self):
        """Cyclic vertex list: the cusp at infinity, then the two finite corners."""
        return [INFINITY, self.arc.start, self.arc.end]

    def contains(self, z, tol: float = DEFAULT_TOL) -> bool:
        z = HPoint.of(z)
        return in_standard_domain(HPoint(z.re - self.n, z.im), tol)

    @property
    def re_span(self) -> tuple[float, float]:
        return (self.n - 0.5, self.n + 0.5)


def domain_B(n: int) -> DomainSpec:
    """B_n = A^-n(B_0), the standard domain shifted right by n."""
    left_corner = HPoint.of(n + RHO_BAR)
    right_corner = HPoint.of(n + RHO)
    return DomainSpec(
        n=n,
        left=Side(INFINITY, left_corner, (ExtReal(n - 0.5), INFINITY)),
        arc=Side(left_corner, right_corner, (ExtReal(n - 1.0), ExtReal(n + 1.0))),
        right=Side(right_corner, INFINITY, (ExtReal(n + 0.5), INFINITY)),
    )


def hexagon() -> list[DomainSpec]:
    """B_0..B_5, a fundamental strip for z -> z + 6 acting on the union of all B_n."""
    return [domain_B(k) for k in range(6)]


def side_pairing(n: int) -> Mat2Z:
    return f_matrix(n)


def _same_set(images, targets, tol) -> bool:
    (p, q), (s, t) = images, targets
    direct = max(closure_distance(p, s), closure_distance(q, t))
    swapped = max(closure_distance(p, t), closure_distance(q, s))
    return min(direct, swapped) < tol


def verify_pairing(n: int, tol: float = DEFAULT_TOL) -> bool:
    """Check that f_n carries the arc side of B_n onto the arc side of B_{n+3}.

    Both the corner vertices and the ideal endpoints of the supporting
    geodesic are compared as unordered pairs.
    """
    f = side_pairing(n)
    src, dst = domain_B(n).arc, domain_B(n + 3).arc
    corners = [mobius_closure(f, p) for p in (src.start, src.end)]
    ends = [mobius_closure(f, p) for p in src.ideal]
    return (_same_set(corners, (dst.start, dst.end), tol)
            and _same_set(ends, dst.ideal, tol))


def cusp_commutator() -> Mat2Z:
    """[f_{-1}^-1, f_{-2}], the parabolic element around the puncture."""
    u = f_matrix(-1).inverse()
    v = f_matrix(-2)
    return u * v * u.inverse() * v.inverse()


def is_parabolic(m: Mat2Z) -> bool:
    return abs(m.trace) == 2 and not m.is_scalar()
