"""Sparse multivariate Laurent polynomials over the integers.

A :class:`LaurentPoly` is a map from integer exponent vectors to nonzero
integer coefficients.  It models the group ring Z[G] of a free abelian group
G of rank ``num_vars``.  :class:`UniPoly` is the ordinary one-variable
polynomial ring that specializations land in.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


def default_names(num_vars: int) -> list[str]:
    """Variable names for the zeta ring: deck variables first, ``t`` last."""
    if num_vars == 1:
        return ["t"]
    if num_vars == 2:
        return ["v", "t"]
    return [f"v{i}" for i in range(1, num_vars)] + ["t"]


def deck_names(r: int) -> list[str]:
    """Variable names for a ring with only deck variables."""
    return ["v"] if r == 1 else [f"v{i}" for i in range(1, r + 1)]


class LaurentPoly:
    __slots__ = ("num_vars", "_terms", "_hash")

    def __init__(self, num_vars: int, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        self.num_vars = num_vars
        acc: dict[Exponent, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, c in items:
            exp = tuple(exp)
            if len(exp) != num_vars:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {num_vars}")
            acc[exp] = acc.get(exp, 0) + c
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    # constructors

    @classmethod
    def zero(cls, num_vars: int) -> LaurentPoly:
        return cls(num_vars)

    @classmethod
    def constant(cls, c: int, num_vars: int) -> LaurentPoly:
        return cls(num_vars, {(0,) * num_vars: c})

    @classmethod
    def monomial(cls, exp: Sequence[int], c: int = 1) -> LaurentPoly:
        return cls(len(exp), {tuple(exp): c})

    @classmethod
    def var(cls, i: int, num_vars: int) -> LaurentPoly:
        exp = [0] * num_vars
        exp[i] = 1
        return cls.monomial(exp)

    # basic queries

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def support(self) -> list[Exponent]:
        return sorted(self._terms, key=_term_key)

    def coefficient(self, exp: Sequence[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.num_vars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num_vars, frozenset(self._terms.items())))
        return self._hash

    # ring structure

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.num_vars)
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")
        if other.num_vars != self.num_vars:
            raise ValueError(f"num_vars mismatch: {self.num_vars} vs {other.num_vars}")
        return other

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.num_vars, out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.num_vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> LaurentPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        out: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.num_vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            # units are +-x^e, whose inverse is +-x^{-e}
            if len(self._terms) != 1 or abs(next(iter(self._terms.values()))) != 1:
                raise ValueError("only units can be raised to negative powers")
            return self.invert_vars() ** (-k)
        result = LaurentPoly.constant(1, self.num_vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exp: Sequence[int]) -> LaurentPoly:
        """Multiply by the monomial with exponent ``exp``."""
        return LaurentPoly(self.num_vars,
                           {tuple(a + b for a, b in zip(e, exp)): c for e, c in self._terms.items()})

    def invert_vars(self) -> LaurentPoly:
        """Apply g -> g^{-1} to every group element."""
        return LaurentPoly(self.num_vars, {tuple(-a for a in e): c for e, c in self._terms.items()})

    def embed(self, num_vars: int) -> LaurentPoly:
        """View as a polynomial in more variables, appending zero exponents."""
        pad = (0,) * (num_vars - self.num_vars)
        return LaurentPoly(num_vars, {e + pad: c for e, c in self._terms.items()})

    def evaluate(self, values: Sequence):
        total = 0
        for e, c in self._terms.items():
            term = c
            for x, k in zip(values, e):
                term = term * (x ** k)
            total += term
        return total

    def augmentation(self) -> int:
        """Sum of coefficients, i.e. the image under all variables -> 1."""
        return sum(self._terms.values())

    # printing

    def to_str(self, names: Sequence[str] | None = None) -> str:
        names = list(names) if names is not None else default_names(self.num_vars)
        if not self._terms:
            return "0"
        parts = []
        for exp in self.support():
            c = self._terms[exp]
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, exp) if k
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.num_vars}, {self.to_str()!r})"


def _term_key(exp: Exponent):
    # graded, then lexicographic
    return (sum(exp), exp)


def parse_laurent(text: str, names: Sequence[str] | None = None) -> LaurentPoly:
    """Parse the canonical text form, e.g. ``1 - v*t^2 + 3*v^-1``.

    ``names`` fixes the variable order; by default it is inferred from the
    number of distinct variables (``v``/``t`` or ``v1..vk``/``t``).
    """
    tokens = _split_terms(text)
    if names is None:
        seen = {f.split("^")[0] for _, factors in tokens for f in factors if not f.isdigit()}
        names = sorted(seen - {"t"}, key=_name_key)
        if "t" in seen or not names:
            names.append("t")
    index = {n: i for i, n in enumerate(names)}
    n = len(names)
    terms: dict[Exponent, int] = {}
    for sign, factors in tokens:
        coeff = sign
        exp = [0] * n
        for f in factors:
            if f.isdigit():
                coeff *= int(f)
                continue
            base, _, power = f.partition("^")
            if base not in index:
                raise ValueError(f"unknown variable {base!r} in {text!r}")
            exp[index[base]] += int(power) if power else 1
        key = tuple(exp)
        terms[key] = terms.get(key, 0) + coeff
    return LaurentPoly(n, terms)


def _name_key(name: str):
    digits = name.lstrip("v")
    return (0, int(digits)) if digits.isdigit() else (1, name)


def _split_terms(text: str) -> list[tuple[int, list[str]]]:
    s = text.replace("−", "-").replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    out = []
    i = 0
    sign = 1
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        i = 1
    start = i
    while i <= len(s):
        # a sign ends a term unless it follows '^'
        if i == len(s) or (s[i] in "+-" and s[i - 1] != "^"):
            body = s[start:i]
            if not body:
                raise ValueError(f"malformed polynomial {text!r}")
            out.append((sign, body.split("*")))
            if i < len(s):
                sign = -1 if s[i] == "-" else 1
            start = i + 1
        i += 1
    return out


def exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Return ``r`` with ``q * r == p``; raise ``ValueError`` if none exists.

    Long division on lex-leading terms.  The quotient's exponents are confined
    to the box given by per-variable degree bounds (degrees are additive in a
    domain), so the loop terminates whether or not the division is exact.
    """
    q = p._coerce(q)
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return LaurentPoly.zero(p.num_vars)
    n = p.num_vars
    lo = [min(e[i] for e in p._terms) - min(e[i] for e in q._terms) for i in range(n)]
    hi = [max(e[i] for e in p._terms) - max(e[i] for e in q._terms) for i in range(n)]
    if any(a > b for a, b in zip(lo, hi)):
        raise ValueError("division is not exact")
    lead_q = max(q._terms)
    lead_c = q._terms[lead_q]
    rem = dict(p._terms)
    quot: dict[Exponent, int] = {}
    while rem:
        lead_r = max(rem)
        c, m = divmod(rem[lead_r], lead_c)
        e = tuple(a - b for a, b in zip(lead_r, lead_q))
        if m or any(not (a <= x <= b) for a, x, b in zip(lo, e, hi)):
            raise ValueError("division is not exact")
        quot[e] = c
        for eq, cq in q._terms.items():
            k = tuple(a + b for a, b in zip(e, eq))
            v = rem.get(k, 0) - c * cq
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return LaurentPoly(n, quot)


def det_ring(m: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Determinant over Z[G] by Laplace expansion memoized on column subsets.

    Row ``k`` is expanded against every ``k``-subset of columns already used,
    so the cost is O(2^n * n) ring multiplications.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("det_ring needs a square matrix")
    if n == 0:
        raise ValueError("det_ring needs at least one row to know the ring")
    nv = m[0][0].num_vars
    # minors[mask] = det of rows 0..popcount(mask)-1 restricted to columns in mask
    minors: dict[int, LaurentPoly] = {0: LaurentPoly.constant(1, nv)}
    for k in range(n):
        row = m[k]
        nxt: dict[int, LaurentPoly] = {}
        for mask, minor in minors.items():
            if minor.is_zero():
                continue
            # sign from the position of column j among the chosen columns
            below = 0
            for j in range(n):
                if mask >> j & 1:
                    below += 1
                    continue
                entry = row[j]
                if entry.is_zero():
                    continue
                higher = k - below
                term = entry * minor
                if higher % 2:
                    term = -term
                key = mask | (1 << j)
                nxt[key] = nxt[key] + term if key in nxt else term
        minors = nxt
    return minors.get((1 << n) - 1, LaurentPoly.zero(nv))


# specialization and symmetry

def specialize(p: LaurentPoly, weights: Sequence[int]) -> UniPoly:
    """Send each monomial g to t^{u(g)} with u given by ``weights``."""
    if len(weights) != p.num_vars:
        raise ValueError(f"expected {p.num_vars} weights, got {len(weights)}")
    coeffs: dict[int, int] = {}
    for e, c in p.items():
        k = sum(w * x for w, x in zip(weights, e))
        if k < 0:
            raise ValueError(f"monomial {e} has negative value {k} under {tuple(weights)}")
        coeffs[k] = coeffs.get(k, 0) + c
    if not coeffs:
        return UniPoly([])
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return UniPoly(out)


def symmetry_witness(p: LaurentPoly) -> tuple[int, Exponent] | None:
    """Find ``(s, h)`` with ``s * x^h * invert_vars(p) == p``, if any.

    The only candidate for ``h`` is the per-variable sum of the minimal and
    maximal exponents, since a symmetric support must be centred there.
    """
    if p.is_zero():
        raise ValueError("symmetry_witness of the zero polynomial")
    support = list(p._terms)
    h = tuple(min(e[i] for e in support) + max(e[i] for e in support)
              for i in range(p.num_vars))
    mirrored = p.invert_vars().shift(h)
    if mirrored == p:
        return (1, h)
    if mirrored == -p:
        return (-1, h)
    return None


def support_hull_2d(p: LaurentPoly) -> list[tuple[int, int]]:
    """Vertices of the Newton polygon, counterclockwise from the lex minimum."""
    if p.num_vars != 2:
        raise ValueError(f"support_hull_2d needs 2 variables, got {p.num_vars}")
    if p.is_zero():
        raise ValueError("Newton polygon of the zero polynomial")
    pts = sorted(set(p._terms))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list = []
    for pt in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], pt) <= 0:
            lower.pop()
        lower.append(pt)
    upper: list = []
    for pt in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], pt) <= 0:
            upper.pop()
        upper.append(pt)
    hull = lower[:-1] + upper[:-1]
    return hull


class UniPoly:
    """Integer polynomial in one variable, coefficients constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def from_high(cls, *high_to_low: int) -> UniPoly:
        """Build from coefficients listed highest degree first."""
        return cls(reversed(high_to_low))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: UniPoly) -> UniPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> UniPoly:
        return UniPoly(-x for x in self.coeffs)

    def __sub__(self, other: UniPoly) -> UniPoly:
        return self + (-other)

    def __mul__(self, other: UniPoly) -> UniPoly:
        if isinstance(other, int):
            return UniPoly(x * other for x in self.coeffs)
        if self.is_zero() or other.is_zero():
            return UniPoly([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reversed(self) -> UniPoly:
        """t^deg * p(1/t)."""
        return UniPoly(reversed(self.coeffs))

    def divmod_int(self, m: UniPoly) -> tuple[UniPoly, UniPoly] | None:
        """Long division over Z; ``None`` if a leading coefficient fails to divide."""
        if m.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dm = m.degree
        lead = m.leading
        quot = [0] * max(len(rem) - dm, 0)
        for k in range(len(rem) - 1, dm - 1, -1):
            c = rem[k]
            if not c:
                continue
            q, r = divmod(c, lead)
            if r:
                return None
            quot[k - dm] = q
            for i, mc in enumerate(m.coeffs):
                rem[k - dm + i] -= q * mc
        return UniPoly(quot), UniPoly(rem[:dm])

    def to_str(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"UniPoly({self.to_str()!r})"
