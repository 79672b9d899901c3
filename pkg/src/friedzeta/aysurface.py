"""Exact model of the Arnoux-Yoccoz slitted polygon and its affine map h.

Coordinates live in Q(alpha), alpha the real root of x^3 + x^2 + x - 1
(alpha ~ 0.5436890127).  Elements are triples of rationals over the basis
1, alpha, alpha^2; signs are decided by interval refinement of alpha, so
every comparison is exact.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .laurent import UniPoly

# Starting isolating interval for alpha: p(1/2) < 0 < p(11/20).
_ALPHA_LO = Fraction(1, 2)
_ALPHA_HI = Fraction(11, 20)


def _minpoly_at(x: Fraction) -> Fraction:
    return x * x * x + x * x + x - 1


class _AlphaInterval:
    """Shared, monotonically narrowing bracket of alpha."""

    def __init__(self, lo: Fraction, hi: Fraction):
        if not (_minpoly_at(lo) < 0 < _minpoly_at(hi)):
            raise ValueError("interval does not bracket alpha")
        self.lo, self.hi = lo, hi

    def refine(self) -> None:
        mid = (self.lo + self.hi) / 2
        # p is increasing on (0, 1), and mid is rational so p(mid) != 0
        if _minpoly_at(mid) < 0:
            self.lo = mid
        else:
            self.hi = mid


_ALPHA = _AlphaInterval(_ALPHA_LO, _ALPHA_HI)
_ALPHA_F = 0.5436890126920764


def _frac(x) -> Fraction:
    if isinstance(x, CubicFieldElt):
        raise TypeError("expected a rational")
    return Fraction(x)


class CubicFieldElt:
    """c0 + c1*alpha + c2*alpha^2 with rational coefficients."""

    __slots__ = ("c",)

    def __init__(self, c0=0, c1=0, c2=0):
        self.c = tuple(x if type(x) is Fraction else Fraction(x) for x in (c0, c1, c2))

    @classmethod
    def alpha(cls) -> CubicFieldElt:
        return cls(0, 1, 0)

    @staticmethod
    def _lift(x) -> CubicFieldElt:
        return x if isinstance(x, CubicFieldElt) else CubicFieldElt(_frac(x))

    def __add__(self, other) -> CubicFieldElt:
        o = self._lift(other)
        return CubicFieldElt(*(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self) -> CubicFieldElt:
        return CubicFieldElt(*(-a for a in self.c))

    def __sub__(self, other) -> CubicFieldElt:
        o = self._lift(other)
        return CubicFieldElt(*(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other) -> CubicFieldElt:
        return self._lift(other) - self

    def __mul__(self, other) -> CubicFieldElt:
        o = self._lift(other)
        a0, a1, a2 = self.c
        b0, b1, b2 = o.c
        c0 = a0 * b0
        c1 = a0 * b1 + a1 * b0
        c2 = a0 * b2 + a1 * b1 + a2 * b0
        c3 = a1 * b2 + a2 * b1
        c4 = a2 * b2
        # alpha^3 = 1 - alpha - alpha^2, alpha^4 = 2 alpha - 1
        return CubicFieldElt(c0 + c3 - c4, c1 - c3 + 2 * c4, c2 - c3)

    __rmul__ = __mul__

    def inv(self) -> CubicFieldElt:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(alpha)")
        # columns are self * 1, self * alpha, self * alpha^2
        cols = [(self * CubicFieldElt(*e)).c for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
        m = [[cols[j][i] for j in range(3)] + [Fraction(int(i == 0))] for i in range(3)]
        for k in range(3):
            piv = next(i for i in range(k, 3) if m[i][k] != 0)
            m[k], m[piv] = m[piv], m[k]
            p = m[k][k]
            m[k] = [x / p for x in m[k]]
            for i in range(3):
                if i != k and m[i][k]:
                    f = m[i][k]
                    m[i] = [x - f * y for x, y in zip(m[i], m[k])]
        return CubicFieldElt(m[0][3], m[1][3], m[2][3])

    def __truediv__(self, other) -> CubicFieldElt:
        return self * self._lift(other).inv()

    def __rtruediv__(self, other) -> CubicFieldElt:
        return self._lift(other) * self.inv()

    def __pow__(self, k: int) -> CubicFieldElt:
        if k < 0:
            return self.inv() ** (-k)
        out, base = CubicFieldElt(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        return not any(self.c)

    def _bounds(self, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
        # alpha and alpha^2 are both increasing on a positive interval
        c0, c1, c2 = self.c
        t1 = sorted((c1 * lo, c1 * hi))
        t2 = sorted((c2 * lo * lo, c2 * hi * hi))
        return c0 + t1[0] + t2[0], c0 + t1[1] + t2[1]

    def sign(self) -> int:
        if self.is_zero():
            return 0
        # Float screen: rounding error is far below this margin, so a value
        # clearing it has a certain sign; anything closer goes to exact refinement.
        c0, c1, c2 = (float(x) for x in self.c)
        approx = c0 + c1 * _ALPHA_F + c2 * _ALPHA_F * _ALPHA_F
        if abs(approx) > 1e-9 * (abs(c0) + abs(c1) + abs(c2)):
            return 1 if approx > 0 else -1
        while True:
            lo, hi = self._bounds(_ALPHA.lo, _ALPHA.hi)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            _ALPHA.refine()

    def __eq__(self, other) -> bool:
        try:
            return (self - other).is_zero()
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self.c)

    def __lt__(self, other) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - other).sign() >= 0

    def __float__(self) -> float:
        while _ALPHA.hi - _ALPHA.lo > Fraction(1, 2**70):
            _ALPHA.refine()
        a = (_ALPHA.lo + _ALPHA.hi) / 2
        c0, c1, c2 = self.c
        return float(c0 + c1 * a + c2 * a * a)

    def __repr__(self) -> str:
        return f"CubicFieldElt({self.c[0]}, {self.c[1]}, {self.c[2]})"

    def to_str(self) -> str:
        return "(" + ",".join(str(x) for x in self.c) + ")"


def minimal_polynomial() -> UniPoly:
    """x^3 + x^2 + x - 1."""
    return UniPoly.from_high(1, 1, 1, -1)


def evaluate_at(p: UniPoly, x: CubicFieldElt) -> CubicFieldElt:
    acc = CubicFieldElt()
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


ALPHA = CubicFieldElt.alpha()
ALPHA2 = ALPHA * ALPHA
ALPHA4 = ALPHA2 * ALPHA2
ALPHA_INV = ALPHA.inv()
ONE = CubicFieldElt(1)
ZERO = CubicFieldElt()
ALPHA_PLUS_ALPHA2 = ALPHA + ALPHA2
MID_X = ALPHA_PLUS_ALPHA2 / 2  # vertical split between the left and right regions


@dataclass(frozen=True)
class PointAY:
    x: CubicFieldElt
    y: CubicFieldElt

    def __sub__(self, other: PointAY) -> tuple[CubicFieldElt, CubicFieldElt]:
        return (self.x - other.x, self.y - other.y)

    def to_str(self) -> str:
        return f"{self.x.to_str()},{self.y.to_str()}"

    def approx(self) -> tuple[float, float]:
        return (float(self.x), float(self.y))


class Region(enum.Enum):
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    R4 = "R4"
    BOUNDARY = "Boundary"


# Polygon vertices, counterclockwise from the origin.
POLYGON = (
    (ZERO, ZERO), (ONE, ZERO), (ONE, ALPHA), (ALPHA + ALPHA2, ALPHA),
    (ALPHA + ALPHA2, ALPHA + ALPHA2), (ALPHA, ALPHA + ALPHA2), (ALPHA, ONE), (ZERO, ONE),
)


_TRANSLATIONS = {
    Region.R1: (-(ALPHA - ALPHA4) / 2, ZERO),
    Region.R2: (ALPHA, -ONE),
    Region.R3: (ALPHA, -ONE),
    # lands the lower-left block to the right of h(R1) and under h(R3)
    Region.R4: ((ALPHA + ALPHA4) / 2, ZERO),
}


def _translation(region: Region) -> tuple[CubicFieldElt, CubicFieldElt]:
    if region not in _TRANSLATIONS:
        raise ValueError(f"h is not defined on {region.value} points")
    return _TRANSLATIONS[region]


def _affine(x: CubicFieldElt, y: CubicFieldElt, region: Region) -> PointAY:
    dx, dy = _translation(region)
    return PointAY(ALPHA * x + dx, ALPHA_INV * y + dy)


def _slits() -> tuple[tuple[CubicFieldElt, CubicFieldElt], ...]:
    # Each slit rises from y = 0; its top is carried by h to the next top.
    top = PointAY(MID_X, 1 / (1 + ALPHA))
    out = [(top.x, top.y)]
    for region in (Region.R3, Region.R1):
        top = _affine(top.x, top.y, region)
        out.append((top.x, top.y))
    return tuple(out)


SLITS = _slits()


def in_polygon(p: PointAY) -> bool:
    x, y = p.x, p.y
    if x < 0 or x > 1 or y < 0:
        return False
    if x <= ALPHA:
        return y <= 1
    if x <= ALPHA_PLUS_ALPHA2:
        return y <= ALPHA_PLUS_ALPHA2
    return y <= ALPHA


def on_slit(p: PointAY) -> bool:
    return any(p.x == sx and ZERO <= p.y <= top for sx, top in SLITS)


def classify_region(p: PointAY) -> Region:
    """Region of a point of the closed polygon; slit points are Boundary.

    Points on the outer edges are classified by the region inequalities.
    """
    if not in_polygon(p):
        raise ValueError(f"point {p.approx()} is outside the polygon")
    if on_slit(p):
        return Region.BOUNDARY
    right = p.x > MID_X
    upper = p.y > ALPHA
    if right:
        return Region.R2 if upper else Region.R1
    return Region.R3 if upper else Region.R4


def apply_h(p: PointAY) -> PointAY:
    region = classify_region(p)
    if region is Region.BOUNDARY:
        raise ValueError(f"point {p.approx()} lies on a slit; h needs edge identifications there")
    return _affine(p.x, p.y, region)


X0 = PointAY((ALPHA - ALPHA2) / (2 * (1 + ALPHA2)), 1 / (ALPHA_INV - ALPHA))


def stretch_factor_certificate() -> UniPoly:
    """x^3 - x^2 - x - 1, checked to vanish exactly at 1/alpha."""
    p = UniPoly.from_high(1, -1, -1, -1)
    if not evaluate_at(p, ALPHA_INV).is_zero():
        raise AssertionError("x^3 - x^2 - x - 1 does not vanish at 1/alpha")
    return p


def parse_elt(text: str) -> CubicFieldElt:
    """Parse ``(c0,c1,c2)``; a bare rational is also accepted."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        parts = [t.strip() for t in s[1:-1].split(",")]
        if len(parts) != 3:
            raise ValueError(f"expected three coordinates in {text!r}")
        return CubicFieldElt(*(Fraction(t) for t in parts))
    return CubicFieldElt(Fraction(s))


def parse_point(text: str) -> PointAY:
    """Parse ``(x0,x1,x2),(y0,y1,y2)``."""
    s = text.strip()
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            return PointAY(parse_elt(s[:i]), parse_elt(s[i + 1:]))
    raise ValueError(f"expected 'x,y' with coordinates (c0,c1,c2), got {text!r}")


@dataclass(frozen=True)
class OrbitReport:
    start: PointAY
    path: tuple[PointAY, ...]
    regions: tuple[Region, ...]
    period: int | None  # smallest n <= len(path) with h^n(start) == start

    @property
    def stopped_at_boundary(self) -> bool:
        return bool(self.regions) and self.regions[-1] is Region.BOUNDARY


def iterate(p: PointAY, steps: int = 2) -> OrbitReport:
    path, regions = [], []
    cur = p
    period = None
    for n in range(1, steps + 1):
        region = classify_region(cur)
        regions.append(region)
        if region is Region.BOUNDARY:
            break
        cur = _affine(cur.x, cur.y, region)
        path.append(cur)
        if cur == p:
            period = n
            break
    return OrbitReport(p, tuple(path), tuple(regions), period)


def random_points(n: int, seed: int = 0, denom: int = 97) -> Iterator[PointAY]:
    """Pseudo-random exact points of the polygon, off the slits."""
    rng = random.Random(seed)

    def coord():
        # irrational part small, rational part chosen so the value lands near [0, 1]
        c1, c2 = (Fraction(rng.randint(-denom, denom), 4 * denom) for _ in range(2))
        shift = round((c1 * _ALPHA_F + c2 * _ALPHA_F * _ALPHA_F) * denom)
        return CubicFieldElt(Fraction(rng.randint(0, denom) - shift, denom), c1, c2)

    made = 0
    while made < n:
        p = PointAY(coord(), coord())
        if in_polygon(p) and not on_slit(p):
            made += 1
            yield p


def short_period_points(n: int, seed: int = 0) -> list[PointAY]:
    """Sample points returning to themselves within two steps of h."""
    hits = []
    for p in random_points(n, seed):
        rep = iterate(p, 2)
        if rep.period is not None:
            hits.append(p)
    return hits


__all__ = [
    "ALPHA", "ALPHA_INV", "CubicFieldElt", "MID_X", "OrbitReport", "POLYGON", "PointAY",
    "Region", "SLITS", "X0", "apply_h", "classify_region", "evaluate_at", "in_polygon",
    "iterate", "minimal_polynomial", "on_slit", "parse_elt", "parse_point", "random_points",
    "short_period_points", "stretch_factor_certificate",
]
