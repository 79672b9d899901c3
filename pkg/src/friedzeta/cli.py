"""Command-line front end.

Exit codes: 0 when the requested computation completes and any claim it
checks (an exclusion, an orbit, a set of word identities) holds; 1 when the
claim fails; 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Sequence

from . import aysurface as ay
from .laurent import deck_names
from .linalg import parse_matrix, smith_normal_form
from .sturm import isolate_largest_root
from .words import parse_endomorphism, parse_word_identities
from .zeta import (
    DEFAULT_TOL, DegenerateQuotientError, SectionClass, free_quotient, genus_search,
    min_section_degree, sections_with_degree, zeta_of,
)

DATA_FILES = {
    "matrix": "ay_minus_id.mat",
    "endo": "arnoux_yoccoz.endo",
    "words": "generating_set.words",
}

EXIT_OK, EXIT_CLAIM_FAILED, EXIT_BAD_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read(path: str | None, kind: str) -> str:
    if path is None:
        return resources.files("friedzeta").joinpath("data", DATA_FILES[kind]).read_text()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _decimal(x: Fraction, digits: int = 9) -> str:
    return f"{float(x):.{digits}f}"


def _names(r: int) -> list[str]:
    return deck_names(r) + ["t"]


def _tol(text: str) -> Fraction:
    try:
        tol = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None
    if tol <= 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return tol


def _genus_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo..hi, got {text!r}") from None
    if lo_i < 2 or hi_i < lo_i:
        raise argparse.ArgumentTypeError("genus range must satisfy 2 <= lo <= hi")
    return lo_i, hi_i


class Report:
    """Collects text lines and a parallel structured record."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.lines: list[str] = []
        self.data: dict = {}

    def line(self, text: str = "") -> None:
        self.lines.append(text)

    def emit(self, out) -> None:
        if self.fmt == "structured":
            out.write(json.dumps(self.data, indent=2, sort_keys=True) + "\n")
        else:
            out.write("\n".join(self.lines) + "\n")


def _section_record(s: SectionClass) -> dict:
    rec = {"a": list(s.a), "b": s.b, "degree": s.degree, "polynomial": s.poly.to_str()}
    est = s.root_estimate()
    rec["leading_root"] = _decimal(est) if est is not None else None
    return rec


def _format_a(a: Sequence[int]) -> str:
    return str(a[0]) if len(a) == 1 else "(" + ",".join(map(str, a)) + ")"


def cmd_snf(args, rep: Report) -> int:
    try:
        m = parse_matrix(_read(args.input, "matrix"))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if m.rows == 0:
        raise InputError("empty matrix")
    diag = list(smith_normal_form(m).diagonal)
    coker = free_quotient(m)
    psi = coker.projection.tolist()
    rep.data = {
        "diagonal": diag,
        "torsion": list(coker.torsion_invariants),
        "free_rank": coker.free_rank,
        "psi": psi,
    }
    rep.line(f"diagonal: {diag}")
    rep.line(f"torsion: {list(coker.torsion_invariants)}, free rank: {coker.free_rank}")
    for row in psi:
        rep.line("psi: " + " ".join(str(x) for x in row))
    return EXIT_OK


def _load_model(args):
    try:
        phi = parse_endomorphism(_read(args.input, "endo"))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return phi, zeta_of(phi)


def cmd_zeta(args, rep: Report) -> int:
    try:
        phi, (model, z) = _load_model(args)
    except DegenerateQuotientError as exc:
        rep.data = {"degenerate": True, "message": str(exc)}
        rep.line(f"degenerate: {exc}")
        return EXIT_CLAIM_FAILED
    names = _names(z.num_deck_vars)
    deck = names[:-1]
    rep.data = {
        "generators": list(phi.names),
        "torsion": list(model.torsion),
        "psi": model.psi.tolist(),
        "F1": [[e.to_str(deck) for e in row] for row in model.F1],
        "numerator": z.numerator.to_str(names),
        "denominator": z.denominator.to_str(names),
        "reduced": z.reduced.to_str(names) if z.reduced is not None else None,
        "variables": names,
    }
    rep.line(f"generators: {' '.join(phi.names)}")
    rep.line(f"torsion: {list(model.torsion)}")
    for row in model.psi.tolist():
        rep.line("psi: " + " ".join(str(x) for x in row))
    rep.line("F1:")
    width = max(len(c) for row in rep.data["F1"] for c in row)
    for row in rep.data["F1"]:
        rep.line("  " + "  ".join(c.rjust(width) for c in row).rstrip())
    rep.line(f"numerator: {rep.data['numerator']}")
    rep.line(f"denominator: {rep.data['denominator']}")
    rep.line(f"reduced: {rep.data['reduced'] or 'not reducible'}")
    return EXIT_OK


def cmd_sections(args, rep: Report) -> int:
    try:
        _, (_, z) = _load_model(args)
    except DegenerateQuotientError as exc:
        raise InputError(str(exc)) from None
    if z.num_deck_vars != 1:
        raise InputError(f"section enumeration needs one deck variable, got {z.num_deck_vars}")
    if z.reduced is None:
        raise InputError("zeta function does not reduce to a polynomial")

    if args.euler is not None:
        d = -args.euler
        if d < 1:
            raise InputError("Euler characteristic of a section must be negative")
        found = sections_with_degree(z, d, args.bound, args.tol)
        rep.data = {"euler": args.euler, "sections": [_section_record(s) for s in found],
                    "excluded": not found}
        if not found:
            rep.line("no sections; exclusion verified")
            return EXIT_OK
        rep.line(f"{len(found)} section class(es) with Euler characteristic {args.euler}:")
        for s in found:
            rep.line(f"  (a,b)=({_format_a(s.a)},{s.b})  {s.poly.to_str()}")
        return EXIT_CLAIM_FAILED

    if args.min_degree:
        d, found = min_section_degree(z)
        rep.data = {"min_degree": d, "sections": [_section_record(s) for s in found]}
        witnesses = ", ".join(f"({_format_a(s.a)},{s.b})" for s in found)
        rep.line(f"{d} at (a,b)={witnesses}")
        return EXIT_OK

    lo, hi = args.genus_search
    rows = genus_search(z, lo, hi, args.bound)
    rep.data = {"genus_search": []}
    rep.line(f"{'g':>3}  {'(a,b)':>9}  {'divides':>7}  polynomial")
    any_divides = False
    for row in rows:
        recs = []
        for s, v in zip(row.sections, row.verdicts):
            rec = _section_record(s)
            rec["divides"] = v
            recs.append(rec)
            any_divides |= v
            ab = f"({_format_a(s.a)},{s.b})"
            rep.line(f"{row.genus:>3}  {ab:>9}  {str(v).lower():>7}  {s.poly.to_str()}")
        rep.data["genus_search"].append(
            {"genus": row.genus, "minpoly": row.minpoly.to_str("x"), "sections": recs})
    rep.data["any_divides"] = any_divides
    rep.line("no divisibility found" if not any_divides else "divisibility found")
    return EXIT_CLAIM_FAILED if any_divides else EXIT_OK


def _point_record(p: ay.PointAY) -> dict:
    x, y = p.approx()
    return {"exact": p.to_str(), "approx": [round(x, 9), round(y, 9)]}


def cmd_ay(args, rep: Report) -> int:
    if not (args.verify_orbit or args.stretch or args.point):
        raise InputError("ay needs --verify-orbit, --stretch or --point")
    ok = True
    if args.verify_orbit:
        h1 = ay.apply_h(ay.X0)
        h2 = ay.apply_h(h1)
        period_two = h2 == ay.X0
        not_fixed = h1 != ay.X0
        ok &= period_two and not_fixed
        rep.data["orbit"] = {
            "x0": _point_record(ay.X0), "x0_region": ay.classify_region(ay.X0).value,
            "h_x0": _point_record(h1), "h_x0_region": ay.classify_region(h1).value,
            "period_two": period_two, "not_fixed": not_fixed,
        }
        rep.line(f"x0 = {ay.X0.to_str()} ~ {_fmt_pair(ay.X0)} in {ay.classify_region(ay.X0).value}")
        rep.line(f"h(x0) = {h1.to_str()} ~ {_fmt_pair(h1)} in {ay.classify_region(h1).value}")
        rep.line(f"h²(x0) = x0 {'confirmed' if period_two else 'FAILED'}; "
                 f"h(x0) ≠ x0 {'confirmed' if not_fixed else 'FAILED'}")
        if args.samples:
            hits = ay.short_period_points(args.samples, seed=args.seed)
            rep.data["orbit"]["samples"] = args.samples
            rep.data["orbit"]["short_period_samples"] = [_point_record(p) for p in hits]
            rep.line(f"{args.samples} sampled points: {len(hits)} with period <= 2")
            ok &= not hits
    if args.point:
        try:
            p = ay.parse_point(args.point)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(str(exc)) from None
        try:
            orbit = ay.iterate(p, 2)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        rep.data["point"] = {
            "start": _point_record(p),
            "regions": [r.value for r in orbit.regions],
            "path": [_point_record(q) for q in orbit.path],
            "period": orbit.period,
        }
        rep.line(f"point {p.to_str()} ~ {_fmt_pair(p)}")
        for r, q in zip(orbit.regions, orbit.path):
            rep.line(f"  {r.value} -> {q.to_str()} ~ {_fmt_pair(q)}")
        if orbit.stopped_at_boundary:
            rep.line("  reached a slit; h is not applied there")
        rep.line("  period " + str(orbit.period) if orbit.period else "  no period <= 2")
    if args.stretch:
        p = ay.stretch_factor_certificate()
        lo, hi = isolate_largest_root(p, args.tol)
        root = (lo + hi) / 2
        inv_alpha = float(ay.ALPHA_INV)
        rep.data["stretch"] = {
            "polynomial": p.to_str("x"), "vanishes_at_inverse_alpha": True,
            "root": _decimal(root), "interval": [str(lo), str(hi)],
            "inverse_alpha": _decimal(Fraction(inv_alpha)),
        }
        rep.line(f"λ root of {p.to_str('x')} ≈ {_decimal(root)}")
        rep.line(f"exact check: {p.to_str('x')} vanishes at 1/alpha; 1/alpha ≈ {inv_alpha:.9f}")
    return EXIT_OK if ok else EXIT_CLAIM_FAILED


def _fmt_pair(p: ay.PointAY) -> str:
    x, y = p.approx()
    return f"({x:.6f}, {y:.6f})"


def cmd_verify_words(args, rep: Report) -> int:
    try:
        gens, checks = parse_word_identities(_read(args.input, "words"))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    results = []
    for c in checks:
        results.append({"line": c.lineno, "lhs": c.lhs_text, "rhs": c.rhs_text, "holds": c.holds,
                        "lhs_reduced": c.lhs.to_str(gens), "rhs_reduced": c.rhs.to_str(gens)})
        rep.line(f"line {c.lineno}: {c.lhs_text} = {c.rhs_text}  "
                 f"{'holds' if c.holds else 'FAILS'}")
        if not c.holds:
            rep.line(f"    lhs reduces to {c.lhs.to_str(gens)}")
            rep.line(f"    rhs reduces to {c.rhs.to_str(gens)}")
    n_ok = sum(r["holds"] for r in results)
    rep.data = {"checks": results, "holding": n_ok, "total": len(results)}
    rep.line(f"{n_ok} of {len(results)} identities hold")
    return EXIT_OK if results and n_ok == len(results) else EXIT_CLAIM_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")

    parser = argparse.ArgumentParser(
        prog="friedzeta",
        description="Lefschetz zeta functions and cross sections for free-group "
                    "endomorphisms, with the Arnoux-Yoccoz example bundled.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("snf", parents=[common], help="Smith normal form and cokernel of a matrix")
    p.add_argument("input", nargs="?", help="matrix file (default: bundled Arnoux-Yoccoz matrix)")
    p.set_defaults(func=cmd_snf)

    p = sub.add_parser("zeta", parents=[common], help="zeta function of an endomorphism")
    p.add_argument("input", nargs="?", help="endomorphism file (default: bundled)")
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("sections", parents=[common], help="enumerate cross-section classes")
    p.add_argument("input", nargs="?", help="endomorphism file (default: bundled)")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--euler", type=int, help="list sections with this Euler characteristic")
    mode.add_argument("--min-degree", action="store_true", help="smallest section degree")
    mode.add_argument("--genus-search", type=_genus_range, metavar="LO..HI",
                      help="divisibility by x^g - x^(g-1) - ... - 1 for each genus")
    p.add_argument("--bound", type=int, help="search |a| <= BOUND instead of the derived box")
    p.add_argument("--tol", type=_tol, default=DEFAULT_TOL, help="root isolation width")
    p.set_defaults(func=cmd_sections)

    p = sub.add_parser("ay", parents=[common], help="checks on the Arnoux-Yoccoz surface")
    p.add_argument("--verify-orbit", action="store_true", help="check the period-two orbit of x0")
    p.add_argument("--point", help="iterate h twice from (x0,x1,x2),(y0,y1,y2)")
    p.add_argument("--samples", type=int, default=0,
                   help="also check N random points for period <= 2")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--stretch", action="store_true", help="stretch factor certificate")
    p.add_argument("--tol", type=_tol, default=DEFAULT_TOL)
    p.set_defaults(func=cmd_ay)

    p = sub.add_parser("verify-words", parents=[common], help="check free-group word identities")
    p.add_argument("input", nargs="?", help="identity file (default: bundled)")
    p.set_defaults(func=cmd_verify_words)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if getattr(args, "bound", None) is not None and args.bound < 0:
        print("error: --bound must be nonnegative", file=sys.stderr)
        return EXIT_BAD_INPUT
    rep = Report(args.format)
    try:
        code = args.func(args, rep)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    rep.emit(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
