import csv
import io
import json
import math

import jsonschema
import pytest
from conftest import EIGHTEEN_PLY_DEG, GLASS_EPOXY

from polarbounds import derived_angles
from polarbounds.cli import INPUT_SCHEMA, REPORT_SCHEMA, main

T0, T1 = GLASS_EPOXY["T0"], GLASS_EPOXY["T1"]


def isotropic_abd(R0B=0.0, R1B=0.0):
    zero = {"R0": 0.0, "R1": 0.0, "Phi0_deg": 0.0, "Phi1_deg": 0.0}
    return {"abd": {"T0": T0, "T1": T1, "A": zero, "D": zero, "B": {"R0": R0B, "R1": R1B}}}


@pytest.fixture
def run(tmp_path, capsys):
    """Write ``doc`` to a file, run the CLI and return (exit code, stdout, stderr)."""
    counter = iter(range(10**6))

    def invoke(command, doc=None, *flags):
        argv = [command]
        if doc is not None:
            path = tmp_path / f"input{next(counter)}.json"
            path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
            argv.append(str(path))
        code = main([*argv, *flags])
        out, err = capsys.readouterr()
        return code, out, err

    return invoke


def stack(*angles, material=GLASS_EPOXY, **extra):
    return {"material": material, "stacking_deg": list(angles), **extra}


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


class TestCheck:
    def test_unidirectional(self, run):
        code, out, _ = run("check", stack(0), "--json")
        doc = json.loads(out)
        assert code == 0
        assert doc["case_used"] == "general (uncoupled reduction)"
        jsonschema.validate(doc, REPORT_SCHEMA)

    def test_coupled_isotropic_above_threshold(self, run):
        code, out, _ = run("check", isotropic_abd(R1B=1.1 * math.sqrt(T0 * T1 / 6)), "--json")
        doc = json.loads(out)
        assert code == 3
        assert doc["case_used"] == "coupled isotropic"
        margin = {m["name"]: m for m in doc["margins"]}["B_isotropic_quadratic"]
        assert margin["value"] < 0

    def test_marginal_exit(self, run):
        code, _, _ = run("check", isotropic_abd(R1B=math.sqrt(T0 * T1 / 6)))
        assert code == 4

    def test_forced_aligned_on_general(self, run):
        code, out, _ = run("check", stack(0, 30, -45, 10), "--case", "aligned")
        assert code == 5
        assert out.startswith("case not applicable")

    def test_forced_special(self, run):
        assert run("check", isotropic_abd(R1B=20.0), "--case", "isotropic")[0] == 0
        assert run("check", stack(0, 90), "--case", "isotropic")[0] == 5

    def test_eighteen_ply(self, run):
        code, out, _ = run("check", stack(*EIGHTEEN_PLY_DEG), "--json")
        assert code == 0
        assert json.loads(out)["case_used"] == "coupled isotropic"

    def test_general_cross_ply_text(self, run):
        code, out, _ = run("check", stack(0, 90), "--case", "general")
        assert code == 0
        assert "verdict: feasible" in out and "min_M4" in out

    @pytest.mark.parametrize("command", ["abd", "check", "classify"])
    def test_byte_identical(self, run, command):
        doc = stack(0, 30, -45, 90, 10)
        first = run(command, doc, "--json")
        second = run(command, doc, "--json")
        assert first == second

    def test_grid_step_must_divide(self, run):
        assert run("check", stack(0), "--grid-step-deg", "0.7")[0] == 2


class TestAbd:
    def test_unidirectional(self, run):
        code, out, _ = run("abd", stack(0), "--json")
        doc = json.loads(out)
        assert code == 0 and doc["B_vanishes"]
        assert doc["polar"]["B"]["R0"] == 0 and doc["polar"]["B"]["R1"] == 0

    def test_cross_ply(self, run):
        doc = json.loads(run("abd", stack(0, 90), "--json")[1])
        assert doc["polar"]["A"]["R0"] == pytest.approx(44.86)
        assert doc["polar"]["A"]["R1"] == 0.0
        assert doc["polar"]["B"]["R1"] == pytest.approx(21.91)
        assert doc["symmetry"]["A"] == doc["symmetry"]["D"]

    def test_eighteen_ply(self, run):
        doc = json.loads(run("abd", stack(*EIGHTEEN_PLY_DEG), "--json")[1])
        assert doc["symmetry"]["A"] == doc["symmetry"]["D"] == "isotropy"
        assert not doc["B_vanishes"]

    def test_needs_stacking(self, run):
        assert run("abd", isotropic_abd())[0] == 2

    def test_engineering_material(self, run):
        mat = {"E1": 181.0, "E2": 10.3, "G12": 7.17, "nu12": 0.28}
        doc = json.loads(run("abd", stack(0, material=mat), "--json")[1])
        assert doc["polar"]["A"]["T0"] == pytest.approx(26.880431085692365, rel=1e-12)


class TestInputErrors:
    @pytest.mark.parametrize(
        "doc",
        [
            {"material": GLASS_EPOXY},
            {"material": GLASS_EPOXY, "stacking_deg": [0], **isotropic_abd()},
            {"material": {"T0": 1.0}, "stacking_deg": [0]},
            {"material": GLASS_EPOXY, "stacking_deg": []},
            {"material": GLASS_EPOXY, "stacking_deg": [0], "thickness": -1},
            {"material": GLASS_EPOXY, "stacking_deg": [0], "colour": "red"},
        ],
    )
    def test_schema_violations(self, run, doc):
        code, _, err = run("check", doc)
        assert code == 2
        assert err.startswith("input error")

    def test_json_syntax_reports_position(self, run):
        code, _, err = run("check", '{"material": \n  [1, 2,, 3]}')
        assert code == 2 and "line 2" in err

    def test_inadmissible_material(self, run):
        assert run("check", stack(0, material={"T0": 1.0, "T1": 1.0, "R0": 1.5, "R1": 0.0}))[0] == 2

    def test_missing_file(self, run, tmp_path):
        assert main(["check", str(tmp_path / "nope.json")]) == 2

    def test_schema_accepts_both_spellings(self):
        jsonschema.validate(stack(0, 90, thickness=2.0, units="GPa"), INPUT_SCHEMA)
        jsonschema.validate(isotropic_abd(R1B=3.0), INPUT_SCHEMA)


class TestAbdSpelling:
    def test_invariant_angles_match_explicit(self, run, cross_ply):
        da = derived_angles(cross_ply)

        def tensor(t, invariant):
            if invariant:
                return {"R0": t.R0, "R1": t.R1, "Phi_deg": math.degrees(t.Phi0 - t.Phi1)}
            return {"R0": t.R0, "R1": t.R1, "Phi0_deg": math.degrees(t.Phi0), "Phi1_deg": math.degrees(t.Phi1)}

        explicit = {"abd": {"T0": T0, "T1": T1, **{k: tensor(getattr(cross_ply, k), False) for k in "ABD"}}}
        invariant = {
            "abd": {
                "T0": T0,
                "T1": T1,
                **{k: tensor(getattr(cross_ply, k), True) for k in "ABD"},
                "deltaA_deg": math.degrees(da.deltaA),
                "deltaD_deg": math.degrees(da.deltaD),
            }
        }
        a = {m["name"]: m["value"] for m in json.loads(run("check", explicit, "--json", "--case", "general")[1])["margins"]}
        b = {m["name"]: m["value"] for m in json.loads(run("check", invariant, "--json", "--case", "general")[1])["margins"]}
        assert a.keys() == b.keys()
        for name in a:
            assert b[name] == pytest.approx(a[name], rel=1e-9, abs=1e-9 * T0**4), name

    def test_mixed_spelling_rejected(self, run):
        doc = isotropic_abd(R1B=1.0)
        doc["abd"]["B"]["Phi_deg"] = 0.0
        assert run("check", doc)[0] == 2


class TestDiagram:
    def test_glass_epoxy_goldens(self, run):
        code, out, _ = run("diagram", stack(0), "--tensor", "A", "--component", "T1111", "--step-deg", "90")
        assert code == 0
        table = rows(out)
        assert [r["theta_deg"] for r in table] == ["0", "90", "180", "270", "360"]
        assert float(table[0]["value"]) == pytest.approx(486.46, rel=1e-12)
        assert float(table[1]["value"]) == pytest.approx(135.90, rel=1e-12)
        assert table[0]["value"] == table[2]["value"] == table[4]["value"]

    def test_isotropic_constant(self, run):
        iso = {"T0": 2.0, "T1": 3.0, "R0": 0.0, "R1": 0.0}
        table = rows(run("diagram", stack(0, material=iso), "--component", "T1122", "--step-deg", "15")[1])
        assert len(table) == 25
        assert len({r["value"] for r in table}) == 1

    def test_unidirectional_coupling_zero(self, run):
        table = rows(run("diagram", stack(0), "--tensor", "B", "--component", "T1212")[1])
        assert len(table) == 361
        assert all(float(r["value"]) == 0.0 for r in table)

    def test_unknown_component(self, run):
        assert run("diagram", stack(0), "--component", "T1133")[0] == 2


class TestScan:
    @staticmethod
    def boundary(table, axis):
        """The pair of axis values between which the verdict leaves 'feasible'."""
        values = [float(r[axis]) for r in table]
        feasible = [r["verdict"] == "feasible" for r in table]
        k = feasible.index(False)
        assert all(feasible[:k])
        return values[k - 1], values[k]

    def test_isotropic_r1b_boundary(self, run):
        code, out, _ = run("scan", isotropic_abd(), "--grid", "r1b=0:60:61")
        assert code == 0
        table = rows(out)
        assert {r["case_used"] for r in table} <= {"coupled isotropic", "general (uncoupled reduction)"}
        lo, hi = self.boundary(table, "r1b")
        assert lo < math.sqrt(T0 * T1 / 6) < hi

    def test_full_square_r0b_boundary(self, run):
        code, out, _ = run("scan", isotropic_abd(), "--grid", "r0b=0:80:81")
        table = rows(out)
        # isotropic A = D matches both patterns; either closed form applies
        assert {r["case_used"] for r in table[1:]} <= {"fully square symmetric", "coupled isotropic"}
        lo, hi = self.boundary(table, "r0b")
        assert lo < T0 / math.sqrt(3) < hi

    def test_origin_only(self, run):
        code, out, _ = run("scan", isotropic_abd(), "--grid", "r0b=0:0:1,r1b=0:0:1")
        table = rows(out)
        assert code == 0 and len(table) == 1
        assert table[0]["verdict"] == "feasible"

    @pytest.mark.parametrize("grid", ["t0=1:2:3", "r1b=0:1", "r1b=2:1:3", "r1b=0:1:2,r1b=0:1:2"])
    def test_bad_grids(self, run, grid):
        assert run("scan", isotropic_abd(), "--grid", grid)[0] == 2

    def test_probe_columns(self, run):
        code, out, _ = run("scan", isotropic_abd(), "--grid", "r1b=0:30:3", "--probe-conjecture", "--probe-samples", "2")
        table = rows(out)
        assert code == 0 and len(table) == 3
        assert all(int(r["probe_counterexamples"]) >= 0 for r in table)

    def test_deterministic(self, run):
        args = ("scan", isotropic_abd(), "--grid", "r0b=0:40:5,r1b=0:40:5", "--probe-conjecture")
        assert run(*args) == run(*args)


class TestVerify:
    def test_single_input(self, run):
        code, out, _ = run("verify", stack(0), "--json")
        doc = json.loads(out)
        assert code == 0 and doc["samples"] == 1 and doc["agreements"] == 1

    def test_random(self, run):
        code, out, _ = run("verify", None, "--random", "--samples", "60", "--seed", "1", "--json")
        doc = json.loads(out)
        assert code == 0
        assert doc["agreements"] + doc["disagreements_in_band"] == 60
        assert doc["disagreements"] == 0 and not doc["flags"]

    def test_coarse_tolerance_flagged(self, run):
        code, out, _ = run("verify", None, "--random", "--samples", "20", "--tol", "1e3", "--json")
        doc = json.loads(out)
        assert doc["verdicts"]["marginal"] == 20
        assert doc["flags"]

    def test_bad_sample_count(self, run):
        assert run("verify", None, "--random", "--samples", "0")[0] == 2
