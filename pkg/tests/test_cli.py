"""End-to-end tests for the command-line interface.

Each test drives main() in process and checks the exit code plus the emitted
document; one test runs the module as a subprocess to cover the entry point.
"""

import json
import subprocess
import sys

import hesscomb.cli as cli
from hesscomb.goldens import GoldenResult, lookup
from hesscomb.hessenberg import new_hessenberg
from hesscomb.poincare import PoincareReport
from hesscomb.qpoly import QPolynomial

POINCARE_233 = '{"h": [2, 3, 3], "methods_agree": true, "poincare": [[0, 1], [1, 4], [2, 1]]}\n'


def run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, argv):
    code, out = run(capsys, argv)
    return code, json.loads(out)


def test_poincare_byte_exact(capsys):
    code, out = run(capsys, ["poincare", "--h", "2,3,3"])
    assert code == 0
    assert out == POINCARE_233


def test_poincare_latex(capsys):
    code, out = run(capsys, ["poincare", "--h", "2,3,3", "--format", "latex"])
    assert code == 0
    assert "q" in out and "4" in out


def test_csf_report(capsys):
    code, data = run_json(capsys, ["csf", "--h", "2,3,3"])
    assert code == 0
    assert data["h"] == [2, 3, 3]
    assert data["schur_positive"] is True
    assert data["e_positive_at_q1"] is True
    assert data["omega_h_positive"] is True
    assert isinstance(data["monomial"], list)
    assert isinstance(data["schur"], list)
    assert isinstance(data["elementary_at_q1"], list)


def test_csf_latex_is_schur_expansion(capsys):
    code, out = run(capsys, ["csf", "--h", "2,3,3", "--format", "latex"])
    assert code == 0
    assert "s(" in out


def test_tableaux_listing(capsys):
    code, data = run_json(capsys, ["tableaux", "--h", "2,3,3", "--shape", "1,1,1"])
    assert code == 0
    assert data["count"] == 4
    assert data["count"] == len(data["tableaux"])
    for item in data["tableaux"]:
        assert set(item) == {"rows", "inversions"}


def test_tableaux_requires_matching_shape(capsys):
    code, data = run_json(capsys, ["tableaux", "--h", "2,3,3", "--shape", "2,1,1"])
    assert code == 2
    assert data["error"]["type"] == "HesscombError"
    code, data = run_json(capsys, ["tableaux", "--h", "2,3,3"])
    assert code == 2


def test_gkm_graph_json(capsys):
    code, data = run_json(capsys, ["gkm", "--h", "2,3,3"])
    assert code == 0
    assert data["n"] == 3
    edge = data["edges"][0]
    assert set(edge) >= {"u", "v", "label"}


def test_gkm_graph_dot(capsys):
    code, out = run(capsys, ["gkm", "--h", "2,3,3", "--format", "dot"])
    assert code == 0
    assert out.startswith("graph gkm {")


def test_gkm_dump_class(capsys):
    code, data = run_json(capsys, ["gkm", "--h", "2,3,3", "--dump-class", "y2"])
    assert code == 0
    assert data["values"] == lookup("fig2b")["values"]
    assert data["gkm_condition"] is True
    code, data = run_json(capsys, ["gkm", "--h", "2,3,3", "--dump-class", "t1"])
    assert code == 0
    assert set(data["values"].values()) == {"t1"}


def test_gkm_dump_class_variant(capsys):
    code, auto = run_json(capsys, ["gkm", "--h", "2,3,3", "--dump-class", "y2"])
    code2, one_row = run_json(
        capsys, ["gkm", "--h", "2,3,3", "--dump-class", "y2", "--variant", "one-row"]
    )
    assert code == code2 == 0
    assert auto["values"] == one_row["values"]
    code3, transposed = run_json(
        capsys, ["gkm", "--h", "2,3,3", "--dump-class", "y2", "--variant", "transpose"]
    )
    assert code3 == 0
    assert transposed["values"] == lookup("fig3b")["values"]


def test_gkm_relations(capsys):
    code, data = run_json(capsys, ["gkm", "--h", "2,3,3", "--relations"])
    assert code == 0
    assert data["all_hold"] is True
    assert all(data["relations"].values())
    code, data = run_json(capsys, ["gkm", "--h", "2,3,4,4", "--relations"])
    assert code == 2
    assert data["error"]["type"] == "FormMismatch"


def test_basis_listing(capsys):
    code, data = run_json(capsys, ["basis", "--h", "2,3,3"])
    assert code == 0
    assert data["label"] == "B1"
    assert data["count"] == 4
    code, data = run_json(capsys, ["basis", "--h", "2,3,3", "--which", "Nh"])
    assert data["count"] == 4
    code, data = run_json(capsys, ["basis", "--h", "2,3,3", "--which", "transpose"])
    assert [b["label"] for b in data["bases"]] == [
        "TransposeB1",
        "TransposeB2",
        "TransposeB3",
    ]


def test_basis_blocks_csv(capsys):
    code, out = run(capsys, ["basis", "--h", "2,3,3", "--blocks", "--format", "csv"])
    assert code == 0
    assert out == (
        "degree,0\n1\n"
        "\ndegree,2\n1,0,0,1\n0,1,0,-1\n0,0,1,-1\n0,0,-1,-2\n"
        "\ndegree,4\n1\n"
    )


def test_basis_blocks_json(capsys):
    code, data = run_json(capsys, ["basis", "--h", "2,3,3", "--blocks"])
    assert code == 0
    mid = data["blocks"][1]
    assert mid["degree"] == 2
    assert mid["determinant"] == -3
    assert mid["unimodular"] is False
    assert data["blocks"][0]["unimodular"] is True


def test_bijection_forward_nilpotent(capsys):
    code, data = run_json(
        capsys,
        ["bijection", "--h", "2,3,5,5,5", "--map", "nilpotent", "--monomial", "1,0,1,1,0"],
    )
    assert code == 0
    assert data["output"]["rows"] == [[2], [1], [5], [3], [4]]


def test_bijection_trace_matches_golden(capsys):
    code, data = run_json(
        capsys,
        [
            "bijection",
            "--h",
            "2,3,5,5,5",
            "--map",
            "nilpotent",
            "--monomial",
            "1,0,1,1,0",
            "--trace",
        ],
    )
    assert code == 0
    assert data == lookup("ex-nilpotent-insertion")


def test_bijection_forward_b3(capsys):
    code, data = run_json(
        capsys,
        ["bijection", "--h", "3,5,5,5,5", "--map", "b3", "--monomial", "0,0,1,0,2", "--k", "2"],
    )
    assert code == 0
    assert data["output"]["s"]["rows"] == [[1, 2], [3], [4], [5]]
    assert data["output"]["t"]["rows"] == [[1, 4], [2], [5], [3]]
    code, data = run_json(
        capsys, ["bijection", "--h", "3,5,5,5,5", "--map", "b3", "--monomial", "0,0,1,0,2"]
    )
    assert code == 2


def test_bijection_inverse_b1(capsys):
    code, data = run_json(
        capsys, ["bijection", "--h", "2,3,3", "--map", "b1", "--tableau", "[[3],[2],[1]]"]
    )
    assert code == 0
    assert data["output"] == {"x": [2, 0, 0]}


def test_bijection_round_trips(capsys):
    for map_name in ("nilpotent", "b1", "b3"):
        code, data = run_json(
            capsys, ["bijection", "--h", "2,3,3", "--map", map_name, "--round-trip"]
        )
        assert code == 0
        assert data["all_ok"] is True
        assert data["count"] > 0


def test_bijection_needs_an_action(capsys):
    code, data = run_json(capsys, ["bijection", "--h", "2,3,3", "--map", "b1"])
    assert code == 2
    assert data["error"]["type"] == "HesscombError"


def test_guardrail(capsys):
    staircase = "1,2,3,4,5,6,7,8"
    code, data = run_json(capsys, ["basis", "--h", staircase, "--which", "Nh"])
    assert code == 2
    assert data["error"]["type"] == "GuardrailExceeded"
    code, data = run_json(
        capsys, ["basis", "--h", staircase, "--which", "Nh", "--max-n", "8"]
    )
    assert code == 0
    assert data["count"] == 1


def test_validation_errors(capsys):
    code, data = run_json(capsys, ["poincare", "--h", "2,x,3"])
    assert code == 2
    assert data["error"]["type"] == "HesscombError"
    code, data = run_json(capsys, ["poincare", "--h", "2,1,3"])
    assert code == 2
    assert data["error"]["type"] == "NotWeaklyIncreasing"
    code, data = run_json(capsys, ["poincare", "--h", "3,3"])
    assert code == 2
    assert data["error"]["type"] == "OutOfRange"


def test_unsupported_formats(capsys):
    for argv in (
        ["poincare", "--h", "2,3,3", "--format", "dot"],
        ["basis", "--h", "2,3,3", "--format", "latex"],
        ["csf", "--h", "2,3,3", "--format", "csv"],
        ["tableaux", "--h", "2,3,3", "--shape", "1,1,1", "--format", "csv"],
    ):
        code, data = run_json(capsys, argv)
        assert code == 2
        assert data["error"]["type"] == "UnsupportedFormat"


def test_verify_goldens(capsys):
    code, data = run_json(capsys, ["verify-goldens"])
    assert code == 0
    assert data["all_ok"] is True
    assert len(data["results"]) == 9
    assert all(item["ok"] for item in data["results"])


def test_verify_paper_alias(capsys):
    _, direct = run(capsys, ["verify-goldens"])
    code, aliased = run(capsys, ["verify-paper"])
    assert code == 0
    assert aliased == direct


def test_verify_goldens_failure_exit(capsys, monkeypatch):
    def fake_verify():
        return [GoldenResult("fig2a", False, "expected 1, got 2")]

    monkeypatch.setattr(cli.goldens, "verify_all", fake_verify)
    code, data = run_json(capsys, ["verify-goldens"])
    assert code == 3
    assert data["all_ok"] is False
    assert data["results"][0]["detail"] == "expected 1, got 2"


def test_poincare_disagreement_exit(capsys, monkeypatch):
    h = new_hessenberg([2, 3, 3])
    poly = QPolynomial({0: 1, 1: 4, 2: 1})
    report = PoincareReport(h, poly, poly, poly, None, False)
    monkeypatch.setattr(cli, "reconcile", lambda _h: report)
    code, data = run_json(capsys, ["poincare", "--h", "2,3,3"])
    assert code == 3
    assert data["methods_agree"] is False


def test_round_trip_failure_exit(capsys, monkeypatch):
    from hesscomb.cohomology import XYMonomial

    monkeypatch.setattr(cli, "psi_b1", lambda h, t: XYMonomial((9, 9, 9)))
    code, data = run_json(
        capsys, ["bijection", "--h", "2,3,3", "--map", "b1", "--round-trip"]
    )
    assert code == 3
    assert data["all_ok"] is False


def test_output_is_byte_stable(capsys):
    _, first = run(capsys, ["csf", "--h", "2,3,4,4"])
    _, second = run(capsys, ["csf", "--h", "2,3,4,4"])
    assert first == second
    _, g1 = run(capsys, ["gkm", "--h", "2,3,3"])
    _, g2 = run(capsys, ["gkm", "--h", "2,3,3"])
    assert g1 == g2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hesscomb.cli", "poincare", "--h", "2,3,3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == POINCARE_233
