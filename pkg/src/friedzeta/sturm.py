"""Real root isolation for integer polynomials by Sturm sequences.

All arithmetic is on :class:`fractions.Fraction`, so the isolating intervals
are certified rather than floating-point estimates.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .laurent import UniPoly

QPoly = list  # list[Fraction], constant term first


def _trim(p: QPoly) -> QPoly:
    while p and p[-1] == 0:
        p.pop()
    return p


def _qdivmod(a: QPoly, b: QPoly) -> tuple[QPoly, QPoly]:
    rem = list(a)
    db = len(b) - 1
    quot = [Fraction(0)] * max(len(a) - db, 1)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k] / b[-1]
        if c:
            quot[k - db] = c
            for i, bc in enumerate(b):
                rem[k - db + i] -= c * bc
    return _trim(quot), _trim(rem[:db])


def _gcd(a: QPoly, b: QPoly) -> QPoly:
    while b:
        a, b = b, _qdivmod(a, b)[1]
    return [c / a[-1] for c in a]


def _derivative(p: QPoly) -> QPoly:
    return _trim([i * c for i, c in enumerate(p)][1:])


def _eval(p: QPoly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def squarefree_part(p: UniPoly) -> QPoly:
    q = [Fraction(c) for c in p.coeffs]
    d = _derivative(q)
    if not d:
        return q
    return _qdivmod(q, _gcd(q, d))[0]


def sturm_chain(p: UniPoly) -> list[QPoly]:
    """Sturm chain of the squarefree part of ``p``."""
    p0 = squarefree_part(p)
    chain = [p0, _derivative(p0)]
    while chain[-1]:
        r = _qdivmod(chain[-2], chain[-1])[1]
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if c]


def sign_changes(chain: Sequence[QPoly], x: Fraction) -> int:
    signs = [v for v in (_eval(p, x) for p in chain) if v]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def count_roots(chain: Sequence[QPoly], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    return sign_changes(chain, lo) - sign_changes(chain, hi)


def root_bound(p: UniPoly) -> Fraction:
    """Cauchy bound: every root has absolute value below this."""
    lead = abs(p.leading)
    return 1 + max((Fraction(abs(c), lead) for c in p.coeffs[:-1]), default=Fraction(0))


def isolate_largest_root(p: UniPoly, tol: Fraction = Fraction(1, 10**9)) -> tuple[Fraction, Fraction]:
    """Interval (lo, hi] of width <= tol holding the largest real root."""
    if p.degree < 1:
        raise ValueError("polynomial of degree < 1 has no roots to isolate")
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    chain = sturm_chain(p)
    bound = root_bound(p)
    lo, hi = -bound, bound
    if count_roots(chain, lo, hi) == 0:
        raise ValueError(f"{p} has no real root")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if count_roots(chain, mid, hi):
            lo = mid
        else:
            hi = mid
    return lo, hi


def largest_real_root(p: UniPoly, tol: Fraction = Fraction(1, 10**9)) -> Fraction:
    """Rational within ``tol`` of the largest real root of ``p``.

    A rational root is returned exactly: its denominator divides the leading
    coefficient, so the few candidates near the interval are checked directly.
    """
    lo, hi = isolate_largest_root(p, tol)
    q = [Fraction(c) for c in p.coeffs]
    mid = (lo + hi) / 2
    lead = abs(p.leading)
    for den in (d for d in range(1, lead + 1) if lead % d == 0):
        cand = Fraction(round(mid * den), den)
        if lo < cand <= hi and _eval(q, cand) == 0:
            return cand
    return mid
