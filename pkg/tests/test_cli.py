import io
import json

import pytest

from friedzeta.cli import main
from friedzeta.laurent import parse_laurent


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


class TestSnf:
    def test_bundled(self):
        code, out = run("snf")
        assert code == 0
        assert "torsion: [2], free rank: 1" in out
        assert "diagonal: [1, 1, 1, 1, 1, 2, 0]" in out

    def test_zero_matrix(self, write):
        code, out = run("snf", write("z.mat", "0 0 0\n0 0 0\n0 0 0\n"))
        assert code == 0 and "torsion: [], free rank: 3" in out

    def test_ragged(self, write, capsys):
        code, _ = run("snf", write("r.mat", "1 2\n3\n"))
        assert code == 2
        assert "line 2" in capsys.readouterr().err

    def test_missing_file(self, capsys):
        assert run("snf", "/nonexistent/m.mat")[0] == 2


class TestZeta:
    def test_bundled(self):
        code, out = run("zeta")
        assert code == 0
        assert "reduced: 1 - v*t^2 - 4*v*t^3 - v*t^4 + v^2*t^6" in out
        assert "denominator: 1 - t" in out
        assert "-v^-1" in out

    def test_round_trip(self):
        _, out = run("zeta")
        fields = dict(line.split(": ", 1) for line in out.splitlines() if ": " in line)
        for key in ("numerator", "denominator", "reduced"):
            p = parse_laurent(fields[key], ["v", "t"])
            assert p.to_str(["v", "t"]) == fields[key]

    def test_identity_rank_one(self, write):
        code, out = run("zeta", write("id.endo", "a\na -> a\n"))
        assert code == 0
        assert "numerator: 1 - t" in out and "reduced: 1" in out

    def test_two_deck_variables(self, write):
        code, out = run("zeta", write("c.endo", "a b\na -> b a b^-1\nb -> b\n"))
        assert code == 0
        assert "1 - v1" in out
        assert "reduced: 1 - v2*t" in out

    def test_degenerate(self, write):
        code, out = run("zeta", write("sq.endo", "a\na -> a a\n"))
        assert code == 1 and "degenerate" in out

    def test_unknown_token(self, write, capsys):
        code, _ = run("zeta", write("bad.endo", "a b\na -> a q\nb -> b\n"))
        assert code == 2
        assert "'q'" in capsys.readouterr().err

    def test_structured(self):
        code, out = run("zeta", "--format", "structured")
        data = json.loads(out)
        assert data["reduced"] == "1 - v*t^2 - 4*v*t^3 - v*t^4 + v^2*t^6"
        assert data["psi"] == [[0, -1, 0, 0, 1, 0, 1]]

    def test_deterministic(self):
        assert run("zeta") == run("zeta")


class TestSections:
    def test_euler_minus_two(self):
        code, out = run("sections", "--euler", "-2")
        assert code == 0
        assert "no sections; exclusion verified" in out

    def test_euler_minus_six_found(self):
        code, out = run("sections", "--euler", "-6")
        assert code == 1
        assert "(-3,2)" in out and "(0,1)" in out

    def test_min_degree(self):
        code, out = run("sections", "--min-degree")
        assert code == 0
        assert out.strip() == "4 at (a,b)=(-1,1)"

    def test_genus_search(self):
        code, out = run("sections", "--genus-search", "4..10")
        assert code == 0
        rows = [line for line in out.splitlines()[1:-1]]
        assert len(rows) == sum(g - 1 for g in range(4, 11))
        assert all(" false " in r for r in rows)
        assert out.splitlines()[-1] == "no divisibility found"

    def test_genus_three_divides(self):
        code, out = run("sections", "--genus-search", "3..3")
        assert code == 1

    def test_structured(self):
        code, out = run("sections", "--euler", "-6", "--format", "structured")
        data = json.loads(out)
        assert [(s["a"], s["b"]) for s in data["sections"]] == [([-3], 2), ([0], 1)]
        assert data["sections"][1]["leading_root"] == "1.839286755"

    def test_bad_range(self):
        with pytest.raises(SystemExit) as exc:
            run("sections", "--genus-search", "1..3")
        assert exc.value.code == 2

    def test_bad_tol(self):
        with pytest.raises(SystemExit):
            run("sections", "--min-degree", "--tol", "0")

    def test_positive_euler(self):
        assert run("sections", "--euler", "2")[0] == 2

    def test_two_deck_variables(self, write):
        assert run("sections", write("f2.endo", "a b\na -> a\nb -> b\n"), "--min-degree")[0] == 2


class TestAy:
    def test_verify_orbit(self):
        code, out = run("ay", "--verify-orbit")
        assert code == 0
        assert "h²(x0) = x0 confirmed; h(x0) ≠ x0 confirmed" in out

    def test_stretch(self):
        code, out = run("ay", "--stretch")
        assert code == 0
        assert "λ root of x^3 - x^2 - x - 1 ≈ 1.839286755" in out

    def test_point(self):
        code, out = run("ay", "--verify-orbit", "--point", "(1,0,0),(0,0,0)")
        assert code == 0
        assert "R1 ->" in out and "no period <= 2" in out

    def test_point_on_slit(self):
        code, out = run("ay", "--point", "(0,1/2,1/2),(1/10,0,0)")
        assert code == 0 and "slit" in out

    def test_point_outside(self):
        assert run("ay", "--point", "(2,0,0),(0,0,0)")[0] == 2

    def test_nothing_requested(self):
        assert run("ay")[0] == 2

    def test_samples(self):
        code, out = run("ay", "--verify-orbit", "--samples", "200")
        assert code == 0 and "200 sampled points: 0 with period <= 2" in out


class TestVerifyWords:
    def test_bundled_as_printed(self):
        code, out = run("verify-words")
        assert code == 1
        assert out.splitlines()[-1] == "4 of 6 identities hold"

    def test_corrected(self):
        from importlib import resources
        path = resources.files("friedzeta").joinpath("data", "generating_set_corrected.words")
        code, out = run("verify-words", str(path))
        assert code == 0 and "6 of 6 identities hold" in out
