"""Command-line tests."""
import json

import pytest

from hjj.presentation.cli import EXIT_INPUT, EXIT_OK, EXIT_VERDICT, main
from tests.factories import FIXTURES


def fixture(name: str) -> str:
    return str(FIXTURES / f"{name}.json")


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ==========================================
# verify / annihilator / derivations
# ==========================================

class TestVerifyCommand:
    """hjj verify."""

    def test_valid(self, capsys):
        """ALG2 passes."""
        code, out, _ = run(capsys, "verify", fixture("alg2"))
        assert code == EXIT_OK
        assert "all checks hold" in out

    def test_invalid(self, capsys):
        """ALG3 fails with a labelled witness."""
        code, out, _ = run(capsys, "verify", fixture("alg3"))
        assert code == EXIT_VERDICT
        assert "hom_jacobi: FAILS at (e2, e2, e2) with residual [12, 0, 0]" in out

    def test_bad_representation(self, capsys):
        """The representation product identity fails."""
        code, out, _ = run(capsys, "verify", fixture("alg2"), "--rep", fixture("alg2_bad_rep"))
        assert code == EXIT_VERDICT
        assert "FAILS at (e1, e1)" in out

    def test_json(self, capsys):
        """--json writes the report to stdout."""
        code, out, _ = run(capsys, "verify", fixture("alg2"), "--json")
        assert code == EXIT_OK
        assert json.loads(out)["algebra"]["valid"] is True


class TestSpaceCommands:
    """hjj annihilator and hjj derivations."""

    def test_annihilator(self, capsys):
        """span{e2}."""
        code, out, _ = run(capsys, "annihilator", fixture("alg2"), "--json")
        assert code == EXIT_OK
        assert json.loads(out)["annihilator"]["basis"] == [["0", "1"]]

    def test_antiderivations(self, capsys):
        """One antiderivation, printed row by row."""
        code, out, _ = run(capsys, "derivations", fixture("alg2"), "--k", "1", "--anti")
        assert code == EXIT_OK
        assert out.splitlines() == ["ADer_alpha^1: dim 1", "  0 0; 1 0"]


# ==========================================
# cohomology
# ==========================================

class TestCohomologyCommand:
    """hjj cohomology."""

    def test_adjoint(self, capsys):
        """dim H^1 = 1 for ALG2."""
        code, out, _ = run(capsys, "cohomology", fixture("alg2"), "--n", "1", "--adjoint", "0", "--json")
        assert code == EXIT_OK
        data = json.loads(out)
        assert (data["dimZ"], data["dimB"], data["dimH"]) == (1, 0, 1)

    def test_trivial_text(self, capsys):
        """Text output lists the dimensions and representatives."""
        code, out, _ = run(capsys, "cohomology", fixture("alg2"), "--n", "1", "--trivial")
        assert code == EXIT_OK
        assert out.splitlines()[0].endswith("dim H=1")
        assert "  [1, 0]" in out

    def test_representation_file(self, capsys):
        """--rep reads the coefficients from a file."""
        code, out, _ = run(
            capsys, "cohomology", fixture("alg2"), "--n", "0", "--rep", fixture("alg2_trivial_rep"), "--json"
        )
        assert code == EXIT_OK
        assert json.loads(out)["dimH"] == 1

    def test_selector_required(self, capsys):
        """One of --adjoint, --trivial or --rep is required."""
        with pytest.raises(SystemExit) as exc:
            main(["cohomology", fixture("alg2"), "--n", "1"])
        assert exc.value.code == EXIT_INPUT

    def test_max_degree(self, capsys):
        """--max-degree caps the requested degree."""
        code, _, err = run(capsys, "cohomology", fixture("alg2"), "--n", "3", "--trivial", "--max-degree", "2")
        assert code == EXIT_INPUT
        assert err.startswith("error: Degree 3 is outside the allowed range 0..2")


# ==========================================
# rb / nijenhuis / deform / extend
# ==========================================

class TestOperatorCommands:
    """hjj rb and hjj nijenhuis."""

    def test_rb(self, capsys):
        """The shift is Rota-Baxter and its induced structures are valid."""
        code, out, _ = run(capsys, "rb", fixture("alg2"), "--op", fixture("alg2_shift"), "--n", "0", "--json")
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["report"]["valid"] is True
        assert data["induced_algebra_valid"] is True
        assert data["induced_representation_valid"] is True
        assert data["induced_representation"]["phi"] == [["1", "0"], ["1", "1"]]
        assert data["cohomology"]["dimH"] == 1

    def test_rb_shifted_adjoint(self, capsys):
        """--adjoint S selects the alpha^S-adjoint representation."""
        code, out, _ = run(
            capsys, "rb", fixture("alg2"), "--op", fixture("alg2_shift"), "--adjoint", "-1", "--json"
        )
        assert code == EXIT_OK
        assert json.loads(out)["report"]["valid"] is True

    def test_rb_trivial_shape(self, capsys):
        """--trivial makes V one-dimensional, so a 2x2 operator is rejected."""
        code, _, err = run(capsys, "rb", fixture("alg2"), "--op", fixture("alg2_shift"), "--trivial")
        assert code == EXIT_INPUT
        assert "expected a 2x1 matrix" in err

    def test_rb_selectors_exclusive(self, capsys):
        """At most one representation selector."""
        with pytest.raises(SystemExit) as exc:
            main(["rb", fixture("alg2"), "--op", fixture("alg2_shift"), "--trivial", "--adjoint", "0"])
        assert exc.value.code == EXIT_INPUT

    def test_nijenhuis(self, capsys):
        """The shift is Nijenhuis with zero deformed product."""
        code, out, _ = run(capsys, "nijenhuis", fixture("alg2"), "--op", fixture("alg2_shift"))
        assert code == EXIT_OK
        assert "deformed product: {}" in out


class TestDeformCommand:
    """hjj deform."""

    def test_rigidity(self, capsys):
        """Without a series the rigidity probe runs."""
        code, out, _ = run(capsys, "deform", fixture("abel1"))
        assert code == EXIT_OK
        assert "rigid (sufficient criterion): False" in out

    def test_constant_series(self, capsys):
        """A constant series passes."""
        code, _, _ = run(capsys, "deform", fixture("alg2"), "--series", fixture("alg2_constant_series"))
        assert code == EXIT_OK

    def test_bad_series(self, capsys):
        """A bad first-order term fails at order 1."""
        code, out, _ = run(capsys, "deform", fixture("alg2"), "--series", fixture("alg2_bad_series"), "--json")
        assert code == EXIT_VERDICT
        data = json.loads(out)
        assert data["first_failing_order"] == 1
        assert data["orders"][1]["witness"]["args"] == ["e1", "e1", "e1"]

    def test_rb_series(self, capsys):
        """Matrix coefficients are read as a Rota-Baxter series."""
        code, out, _ = run(capsys, "deform", fixture("alg2"), "--series", fixture("alg2_rb_series"), "--json")
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["t1_derivation"] is True
        assert data["induced_series"] == {"order": 1, "coeffs": [{}, {}]}

    def test_rb_series_selector(self, capsys):
        """Operator series honour the representation selector."""
        code, out, _ = run(
            capsys, "deform", fixture("alg2"), "--series", fixture("alg2_rb_series"), "--adjoint", "0", "--json"
        )
        assert code == EXIT_OK
        assert json.loads(out)["t1_derivation"] is True
        code, _, err = run(capsys, "deform", fixture("alg2"), "--series", fixture("alg2_rb_series"), "--trivial")
        assert code == EXIT_INPUT
        assert "expected a 2x1 matrix" in err

    def test_singular(self, capsys):
        """The rigidity probe needs an invertible twist."""
        code, _, err = run(capsys, "deform", fixture("point1"))
        assert code == EXIT_INPUT
        assert err.startswith("error:")


class TestExtendCommand:
    """hjj extend."""

    def test_central(self, capsys):
        """theta(e1, e1) = 1 extends ALG2."""
        code, out, _ = run(capsys, "extend", fixture("alg2"), "--theta", fixture("alg2_theta"), "--json")
        assert code == EXIT_OK
        assert json.loads(out)["algebra"]["basis"] == ["e1", "e2", "c"]

    def test_central_invalid(self, capsys):
        """A form that is not alpha-invariant is rejected."""
        code, out, _ = run(capsys, "extend", fixture("alg2"), "--theta", fixture("alg2_theta_mixed"))
        assert code == EXIT_VERDICT
        assert "INVALID" in out

    def test_antiderivation(self, capsys):
        """The shift is a square-zero antiderivation."""
        code, out, _ = run(capsys, "extend", fixture("alg2"), "--op", fixture("alg2_shift"))
        assert code == EXIT_OK
        assert out.startswith("extension of dimension 3: valid")


class TestInputErrors:
    """Exit code 2 for unusable input."""

    def test_missing_file(self, capsys, tmp_path):
        """A missing algebra file is reported on stderr."""
        code, out, err = run(capsys, "verify", str(tmp_path / "absent.json"))
        assert code == EXIT_INPUT
        assert out == ""
        assert "cannot read file" in err

    def test_not_utf8(self, capsys, tmp_path):
        """Undecodable input is a parse error with exit code 2."""
        path = tmp_path / "utf16.json"
        path.write_bytes(b'\xff\xfe{"basis":')
        code, out, err = run(capsys, "verify", str(path))
        assert code == EXIT_INPUT
        assert out == ""
        assert "file is not valid UTF-8" in err

    def test_json_error_object(self, capsys):
        """With --json the error object is also written to stdout."""
        code, out, _ = run(capsys, "deform", fixture("point1"), "--json")
        assert code == EXIT_INPUT
        error = json.loads(out)["error"]
        assert error["code"] == "SINGULAR_TWIST"
        assert error["details"]["power"] == -1

    def test_negative_degree(self, capsys):
        """Degrees are parsed as non-negative integers."""
        with pytest.raises(SystemExit) as exc:
            main(["cohomology", fixture("alg2"), "--n", "-1", "--trivial"])
        assert exc.value.code == EXIT_INPUT
