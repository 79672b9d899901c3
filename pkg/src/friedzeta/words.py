"""Free-group words, endomorphisms, abelianization and Fox Jacobians."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .laurent import LaurentPoly
from .linalg import IntMatrix

Letter = tuple[int, int]  # (generator index, +1 or -1)


def _reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for g, s in letters:
        if s not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {s}")
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A freely reduced word; construction always reduces."""

    letters: tuple[Letter, ...] = ()

    def __init__(self, letters: Iterable[Letter] = ()):
        object.__setattr__(self, "letters", _reduce(letters))

    @classmethod
    def gen(cls, i: int, sign: int = 1) -> Word:
        return cls([(i, sign)])

    def __mul__(self, other: Word) -> Word:
        return Word(self.letters + other.letters)

    def inverse(self) -> Word:
        return Word((g, -s) for g, s in reversed(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def max_generator(self) -> int:
        return max((g for g, _ in self.letters), default=-1)

    def abelian(self, rank: int) -> list[int]:
        vec = [0] * rank
        for g, s in self.letters:
            vec[g] += s
        return vec

    def to_str(self, names: Sequence[str]) -> str:
        if not self.letters:
            return "1"
        return " ".join(names[g] if s > 0 else f"{names[g]}^-1" for g, s in self.letters)


def reduce(w: Word | Iterable[Letter]) -> Word:
    return w if isinstance(w, Word) else Word(w)


def concat(*words: Word) -> Word:
    out = Word()
    for w in words:
        out = out * w
    return out


def invert(w: Word) -> Word:
    return w.inverse()


def verify_identity(lhs: Word, rhs: Word) -> bool:
    """True iff the two words are equal in the free group."""
    return Word(lhs.letters).letters == Word(rhs.letters).letters


@dataclass(frozen=True)
class FreeEndomorphism:
    rank: int
    images: tuple[Word, ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        if len(self.images) != self.rank:
            raise ValueError(f"{self.rank} generators but {len(self.images)} images")
        for w in self.images:
            if w.max_generator() >= self.rank:
                raise ValueError(f"image letter index {w.max_generator()} >= rank {self.rank}")
        if not self.names:
            object.__setattr__(self, "names", tuple(_default_gen_names(self.rank)))

    @classmethod
    def identity(cls, rank: int) -> FreeEndomorphism:
        return cls(rank, tuple(Word.gen(i) for i in range(rank)))

    def apply(self, w: Word) -> Word:
        out: list[Letter] = []
        for g, s in w:
            img = self.images[g] if s > 0 else self.images[g].inverse()
            out.extend(img.letters)
        return Word(out)


def _default_gen_names(rank: int) -> list[str]:
    if rank <= 26:
        return [chr(ord("a") + i) for i in range(rank)]
    return [f"x{i}" for i in range(rank)]


def abelianization(phi: FreeEndomorphism) -> IntMatrix:
    """Matrix of the induced map on H_1; column j is the image of generator j."""
    cols = [w.abelian(phi.rank) for w in phi.images]
    return IntMatrix.from_rows(
        [[cols[j][i] for j in range(phi.rank)] for i in range(phi.rank)], cols=phi.rank
    )


class QuotientActionError(ValueError):
    """The endomorphism does not act trivially on the chosen free quotient."""


def fox_jacobian(phi: FreeEndomorphism, psi: IntMatrix) -> list[list[LaurentPoly]]:
    """Fox Jacobian of ``phi`` pushed into Z[Q] through ``psi``.

    Entry (i, j) is the image of d phi(x_j) / d x_i, where the group element
    preceding each occurrence of x_i becomes the monomial nu^{psi(prefix)}.
    ``psi`` is an r x n integer matrix; the result has entries in r variables.
    """
    n = phi.rank
    if psi.cols != n:
        raise ValueError(f"psi has {psi.cols} columns, endomorphism has rank {n}")
    shifted = psi @ (abelianization(phi) - IntMatrix.identity(n))
    if not shifted.is_zero():
        raise QuotientActionError(
            "psi * (abelianization - Id) is nonzero; the action on the quotient is not trivial"
        )
    columns = [fox_derivatives(w, psi) for w in phi.images]
    return [[columns[j][i] for j in range(n)] for i in range(n)]


def fox_derivatives(w: Word, psi: IntMatrix) -> list[LaurentPoly]:
    """Fox derivatives of ``w`` with respect to every generator, pushed into Z[Q].

    Each occurrence of x_i contributes +nu^{psi(prefix)}, each x_i^-1
    contributes -nu^{psi(prefix x_i^-1)}.
    """
    n, r = psi.cols, psi.rows
    psi_cols = [psi.column(i) for i in range(n)]
    cells: list[dict] = [{} for _ in range(n)]
    prefix = [0] * r
    for g, s in w:
        if s < 0:
            prefix = [p - c for p, c in zip(prefix, psi_cols[g])]
        key = tuple(prefix)
        cells[g][key] = cells[g].get(key, 0) + s
        if s > 0:
            prefix = [p + c for p, c in zip(prefix, psi_cols[g])]
    return [LaurentPoly(r, cell) for cell in cells]


def parse_word(tokens: Sequence[str], index: dict[str, int], lineno: int | None = None) -> Word:
    letters = []
    for tok in tokens:
        name, sign = _split_token(tok)
        if name not in index:
            where = f"line {lineno}: " if lineno is not None else ""
            raise ValueError(f"{where}unknown generator {name!r}")
        letters.append((index[name], sign))
    return Word(letters)


def _split_token(tok: str) -> tuple[str, int]:
    if tok.endswith("^-1"):
        return tok[:-3], -1
    if tok.endswith("^1"):
        return tok[:-2], 1
    if "^" in tok:
        raise ValueError(f"only name or name^-1 tokens are allowed, got {tok!r}")
    return tok, 1


def parse_endomorphism(text: str) -> FreeEndomorphism:
    """Parse ``gen names`` on the first line, then ``g -> w1 w2 ...`` lines."""
    names: list[str] | None = None
    index: dict[str, int] = {}
    images: dict[int, Word] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if names is None:
            names = line.split()
            if len(set(names)) != len(names):
                raise ValueError(f"line {lineno}: repeated generator name")
            for nm in names:
                if "^" in nm or nm == "->":
                    raise ValueError(f"line {lineno}: bad generator name {nm!r}")
            index = {nm: i for i, nm in enumerate(names)}
            continue
        head, arrow, body = line.partition("->")
        if not arrow:
            raise ValueError(f"line {lineno}: expected 'g -> word'")
        g = head.strip()
        if g not in index:
            raise ValueError(f"line {lineno}: unknown generator {g!r}")
        if index[g] in images:
            raise ValueError(f"line {lineno}: image of {g!r} given twice")
        images[index[g]] = parse_word(body.split(), index, lineno)
    if names is None:
        raise ValueError("empty endomorphism file")
    missing = [names[i] for i in range(len(names)) if i not in images]
    if missing:
        raise ValueError(f"no image given for {', '.join(missing)}")
    return FreeEndomorphism(len(names), tuple(images[i] for i in range(len(names))), tuple(names))


def format_endomorphism(phi: FreeEndomorphism) -> str:
    lines = [" ".join(phi.names)]
    for nm, w in zip(phi.names, phi.images):
        body = w.to_str(phi.names) if len(w) else ""
        lines.append(f"{nm} -> {body}".rstrip())
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class WordCheck:
    lineno: int
    lhs_text: str
    rhs_text: str
    lhs: Word
    rhs: Word

    @property
    def holds(self) -> bool:
        return verify_identity(self.lhs, self.rhs)


def parse_word_identities(text: str) -> tuple[list[str], list[WordCheck]]:
    """Parse a word-identity file.

    Lines are ``generators: ...``, ``name := word`` (an abbreviation, which
    may use earlier abbreviations) or ``check: word = word``.
    """
    gens: list[str] | None = None
    index: dict[str, int] = {}
    abbrev: dict[str, Word] = {}
    checks: list[WordCheck] = []

    def expand(tokens, lineno):
        out = Word()
        for tok in tokens:
            name, sign = _split_token(tok)
            if name in abbrev:
                w = abbrev[name]
            elif name in index:
                w = Word.gen(index[name])
            else:
                raise ValueError(f"line {lineno}: unknown generator {name!r}")
            out = out * (w if sign > 0 else w.inverse())
        return out

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("generators:"):
            gens = line.split(":", 1)[1].split()
            index = {g: i for i, g in enumerate(gens)}
        elif line.startswith("check:"):
            if gens is None:
                raise ValueError(f"line {lineno}: check before generators")
            lhs, eq, rhs = line.split(":", 1)[1].partition("=")
            if not eq:
                raise ValueError(f"line {lineno}: expected 'lhs = rhs'")
            checks.append(WordCheck(lineno, lhs.strip(), rhs.strip(),
                                    expand(lhs.split(), lineno), expand(rhs.split(), lineno)))
        elif ":=" in line:
            if gens is None:
                raise ValueError(f"line {lineno}: definition before generators")
            name, _, body = line.partition(":=")
            name = name.strip()
            if name in index or name in abbrev:
                raise ValueError(f"line {lineno}: {name!r} already defined")
            abbrev[name] = expand(body.split(), lineno)
        else:
            raise ValueError(f"line {lineno}: cannot parse {line!r}")
    if gens is None:
        raise ValueError("no generators line")
    return gens, checks
