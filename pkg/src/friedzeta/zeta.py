"""From a free-group endomorphism to the multivariable Lefschetz zeta function
and the cross-section classes it determines.

The ring of the zeta function has ``r`` deck variables (the free part of the
cokernel of ``h_* - Id``) followed by the flow variable ``tau``.  A class
``u = (a, b)`` assigns ``a[i]`` to the i-th deck generator and ``b`` to tau.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .laurent import LaurentPoly, UniPoly, det_ring, exact_div, specialize
from .linalg import CokernelStructure, IntMatrix, cokernel, normalize_projection
from .sturm import isolate_largest_root, largest_real_root
from .words import FreeEndomorphism, abelianization, fox_jacobian

DEFAULT_TOL = Fraction(1, 10**9)


class DegenerateQuotientError(ValueError):
    """The free quotient Q is trivial, so there are no deck variables."""


@dataclass(frozen=True)
class CellModel:
    """One-vertex cellular model of the elevation to the Q-cover."""

    psi: IntMatrix
    F0: list[list[LaurentPoly]]
    F1: list[list[LaurentPoly]]
    torsion: tuple[int, ...] = ()

    @property
    def num_deck_vars(self) -> int:
        return self.psi.rows


@dataclass(frozen=True)
class ZetaFunction:
    numerator: LaurentPoly
    denominator: LaurentPoly
    reduced: LaurentPoly | None
    num_deck_vars: int

    @property
    def num_vars(self) -> int:
        return self.num_deck_vars + 1


@dataclass(frozen=True)
class SectionClass:
    a: tuple[int, ...]
    b: int
    poly: UniPoly
    degree: int
    leading_root: tuple[Fraction, Fraction] | None = field(default=None, compare=False)

    @property
    def euler_characteristic(self) -> int:
        return -self.degree

    def root_estimate(self) -> Fraction | None:
        if self.leading_root is None:
            return None
        lo, hi = self.leading_root
        return (lo + hi) / 2


def free_quotient(m: IntMatrix) -> CokernelStructure:
    """Cokernel of ``m`` with a rank-one projection normalized to be +1 on the
    last basis element that it sends to a generator."""
    coker = cokernel(m)
    if coker.free_rank == 1:
        row = coker.projection.row(0)
        units = [i for i, x in enumerate(row) if x in (1, -1)]
        if units:
            coker = normalize_projection(coker, units[-1])
    return coker


def build_model(phi: FreeEndomorphism) -> CellModel:
    """Cokernel, deck projection and cell actions for ``phi``.

    For the Arnoux-Yoccoz data the projection is normalized at ``g``.
    """
    coker = free_quotient(abelianization(phi) - IntMatrix.identity(phi.rank))
    if coker.free_rank == 0:
        raise DegenerateQuotientError(
            f"cokernel of h_* - Id is finite (torsion {list(coker.torsion_invariants)}); "
            "no deck variables"
        )
    psi = coker.projection
    F1 = fox_jacobian(phi, psi)
    F0 = [[LaurentPoly.constant(1, psi.rows)]]
    return CellModel(psi, F0, F1, coker.torsion_invariants)


def _id_minus_tau(F: Sequence[Sequence[LaurentPoly]], r: int) -> list[list[LaurentPoly]]:
    n = len(F)
    tau = LaurentPoly.var(r, r + 1)
    one = LaurentPoly.constant(1, r + 1)
    zero = LaurentPoly.zero(r + 1)
    return [
        [(one if i == j else zero) - tau * F[i][j].embed(r + 1) for j in range(n)]
        for i in range(n)
    ]


def zeta(F0: Sequence[Sequence[LaurentPoly]], F1: Sequence[Sequence[LaurentPoly]]) -> ZetaFunction:
    """det(Id - tau F1) / det(Id - tau F0), reduced when the division is exact."""
    r = F1[0][0].num_vars
    if F0[0][0].num_vars != r:
        raise ValueError("F0 and F1 live over different rings")
    num = det_ring(_id_minus_tau(F1, r))
    den = det_ring(_id_minus_tau(F0, r))
    try:
        reduced = exact_div(num, den)
    except ValueError:
        reduced = None
    return ZetaFunction(num, den, reduced, r)


def zeta_of(phi: FreeEndomorphism) -> tuple[CellModel, ZetaFunction]:
    model = build_model(phi)
    return model, zeta(model.F0, model.F1)


def _weights(z: ZetaFunction, a: Sequence[int] | int, b: int) -> tuple[int, ...]:
    a = (a,) if isinstance(a, int) else tuple(a)
    if len(a) != z.num_deck_vars:
        raise ValueError(f"expected {z.num_deck_vars} deck values, got {len(a)}")
    return a + (b,)


def is_section(z: ZetaFunction, a: Sequence[int] | int, b: int) -> bool:
    """Positivity on every non-identity monomial of numerator and denominator."""
    w = _weights(z, a, b)
    zero = (0,) * z.num_vars
    for p in (z.numerator, z.denominator):
        for e, _ in p.items():
            if e != zero and sum(x * y for x, y in zip(w, e)) <= 0:
                return False
    return True


def section(z: ZetaFunction, a: Sequence[int] | int, b: int,
            tol: Fraction = DEFAULT_TOL) -> SectionClass:
    w = _weights(z, a, b)
    if z.reduced is None:
        raise ValueError("zeta function has no reduced form; specialization is not a polynomial")
    if not is_section(z, w[:-1], b):
        raise ValueError(f"u = ({w[:-1]}, {b}) is not a section class")
    poly = specialize(z.reduced, w)
    root = isolate_largest_root(poly, tol) if poly.degree >= 1 else None
    return SectionClass(w[:-1], b, poly, poly.degree, root)


def _max_deck_exponent(z: ZetaFunction) -> int:
    polys = [z.numerator, z.denominator] + ([z.reduced] if z.reduced is not None else [])
    return max((abs(x) for p in polys for e, _ in p.items() for x in e[:-1]), default=0)


def search_bound(z: ZetaFunction, d: int) -> int:
    return d * (_max_deck_exponent(z) + 1)


def sections_with_degree(z: ZetaFunction, d: int, bound: int | None = None,
                         tol: Fraction = DEFAULT_TOL) -> list[SectionClass]:
    """All section classes (a, b) whose specialization has degree ``d``.

    Searches 1 <= b <= d and |a| <= bound, sorted by (a, b).
    """
    if z.reduced is None:
        raise ValueError("zeta function has no reduced form")
    if z.num_deck_vars != 1:
        raise ValueError("section enumeration is implemented for one deck variable")
    if d < 1:
        raise ValueError("degree must be positive")
    if bound is None:
        bound = search_bound(z, d)
    found = []
    for a in range(-bound, bound + 1):
        for b in range(1, d + 1):
            if not is_section(z, (a,), b):
                continue
            poly = specialize(z.reduced, (a, b))
            if poly.degree == d:
                found.append(section(z, (a,), b, tol))
    return found


def min_section_degree(z: ZetaFunction, max_degree: int = 200) -> tuple[int, list[SectionClass]]:
    """Smallest degree carried by any section class, with its witnesses."""
    for d in range(1, max_degree + 1):
        found = sections_with_degree(z, d)
        if found:
            return d, found
    raise ValueError(f"no section class of degree <= {max_degree}")


def divides(p: UniPoly, m: UniPoly) -> bool:
    """Whether ``m`` divides ``p`` in Z[t]."""
    return exact_quotient(p, m) is not None


def exact_quotient(p: UniPoly, m: UniPoly) -> UniPoly | None:
    res = p.divmod_int(m)
    if res is None or not res[1].is_zero():
        return None
    return res[0]


def ay_family_polynomial(g: int) -> UniPoly:
    """x^g - x^{g-1} - ... - x - 1."""
    return UniPoly([-1] * g + [1])


@dataclass(frozen=True)
class GenusRow:
    genus: int
    minpoly: UniPoly
    sections: tuple[SectionClass, ...]
    verdicts: tuple[bool, ...]


def genus_search(z: ZetaFunction, g_lo: int, g_hi: int, bound: int | None = None) -> list[GenusRow]:
    """For each genus, the degree-2g sections and whether x^g - ... - 1 divides them."""
    if z.num_deck_vars != 1:
        raise ValueError("genus search is implemented for one deck variable")
    rows = []
    for g in range(g_lo, g_hi + 1):
        m = ay_family_polynomial(g)
        secs = tuple(sections_with_degree(z, 2 * g, bound))
        rows.append(GenusRow(g, m, secs, tuple(divides(s.poly, m) for s in secs)))
    return rows


__all__ = [
    "CellModel", "DegenerateQuotientError", "GenusRow", "SectionClass", "ZetaFunction",
    "ay_family_polynomial", "build_model", "divides", "exact_quotient", "free_quotient",
    "genus_search", "is_section", "largest_real_root", "min_section_degree", "search_bound", "section",
    "sections_with_degree", "zeta", "zeta_of",
]
