"""End-to-end runs of the command-line front end, in process."""

from __future__ import annotations

import hashlib
import json

import pytest

from birot4.cli import main


def _canonical(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _load(path):
    return json.loads(path.read_text())


def _check_manifest(document, subcommand):
    manifest = document["manifest"]
    assert manifest["format"] == "birot4/run-manifest@1"
    assert manifest["subcommand"] == subcommand
    assert manifest["seeds"] == []
    assert manifest["elapsed_seconds"] >= 0.0
    digest = hashlib.sha256(_canonical(document["payload"]).encode()).hexdigest()
    assert manifest["payload_digest"] == f"sha256:{digest}"


def test_derive_full_case(tmp_path, capsys):
    out = tmp_path / "derive.json"
    assert main(["derive", "--case", "VII", "--output", str(out)]) == 0
    text = capsys.readouterr().out
    assert "matches all" in text and "payload digest sha256:" in text
    document = _load(out)
    _check_manifest(document, "derive")
    payload = document["payload"]
    assert payload["format"] == "birot4/derivation@1"
    assert payload["case"] == "VII"
    assert payload["order"] == 10
    assert payload["all_match"] is True
    assert all(d["match"] for d in payload["fixture_diff"])
    assert set(payload["series"]) == {"x", "y", "r", "c"}
    assert payload["series"]["r"]["0"] == "r0"
    assert payload["system"]["format"] == "birot4/constraint-system@1"
    labels = [e["label"] for e in payload["system"]["equations"]]
    assert labels == ["E0", "E2", "E3", "E4", "E5", "E6"]


def test_derive_other_cases(tmp_path):
    assert main(["derive", "--case", "VI", "--order", "8",
                 "--output", str(tmp_path / "vi.json")]) == 0
    assert main(["derive", "--case", "V", "--order", "9",
                 "--output", str(tmp_path / "v.json")]) == 0
    vi = _load(tmp_path / "vi.json")["payload"]
    assert vi["case"] == "VI" and vi["order"] == 8 and vi["all_match"]
    v = _load(tmp_path / "v.json")["payload"]
    labels = [e["label"] for e in v["system"]["equations"]]
    assert labels == ["E1", "E2", "E3", "E4", "E5", "E6"]


def test_derive_is_deterministic(tmp_path):
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    assert main(["derive", "--case", "VII", "--output", str(first)]) == 0
    assert main(["derive", "--case", "VII", "--output", str(second)]) == 0
    a, b = _load(first), _load(second)
    assert a["manifest"]["payload_digest"] == b["manifest"]["payload_digest"]
    assert a["payload"] == b["payload"]


def test_derive_rejects_shallow_orders(capsys):
    assert main(["derive", "--case", "VII", "--order", "7"]) == 2
    assert "at least 8" in capsys.readouterr().err


def test_derive_rejects_unknown_case():
    with pytest.raises(SystemExit):
        main(["derive", "--case", "IV"])


def test_check_cases_subset(tmp_path, capsys):
    out = tmp_path / "cases.json"
    assert main(["check-cases", "I", "II", "III", "IV", "--output", str(out)]) == 0
    text = capsys.readouterr().out
    assert "4/4 cases verified" in text
    document = _load(out)
    _check_manifest(document, "check-cases")
    payload = document["payload"]
    assert payload["format"] == "birot4/case-run@1"
    assert payload["selection"] == ["I", "II", "III", "IV"]
    assert payload["extraction_match"] is True
    assert payload["all_verified"] is True
    assert [r["case"] for r in payload["reports"]] == ["I", "II", "III", "IV"]
    assert all(r["verdict"] == "contradiction-verified" for r in payload["reports"])


def test_check_cases_detects_perturbation(tmp_path, capsys):
    out = tmp_path / "perturbed.json"
    assert main(["check-cases", "I", "--perturb-e2", "--output", str(out)]) == 1
    assert "FAILED" in capsys.readouterr().err
    payload = _load(out)["payload"]
    assert payload["extraction_match"] is False
    assert payload["mismatched_equations"] == ["E2"]
    assert payload["reports"] == []
    assert payload["all_verified"] is False


def test_check_cases_rejects_unknown_ids(capsys):
    assert main(["check-cases", "IX"]) == 2
    assert "unknown case" in capsys.readouterr().err


def test_simulate_catenoid_preset(tmp_path):
    out = tmp_path / "catenoid.json"
    assert main(["simulate", "--preset", "catenoid", "--output", str(out)]) == 0
    document = _load(out)
    _check_manifest(document, "simulate")
    payload = document["payload"]
    assert payload["format"] == "birot4/simulation@1"
    assert payload["mode"] == "preset"
    assert payload["preset"] == "catenoid"
    assert payload["samples"] == 2001
    assert payload["truncated"] is False
    residuals = payload["residuals"]
    assert residuals["arc_defect"] < 1e-8
    assert residuals["biharmonic"] < 1e-6
    assert residuals["surface_laplacian_gap"] < 2e-3
    assert payload["within_thresholds"] is True
    assert len(payload["trajectory"]) == payload["samples"] + 1


def test_simulate_cylinder_preset(tmp_path):
    out = tmp_path / "cylinder.json"
    assert main(["simulate", "--preset", "cylinder", "--output", str(out)]) == 0
    payload = _load(out)["payload"]
    # the frozen curvature constant misses c'' = c by exactly one
    assert abs(payload["residuals"]["biharmonic"] - 1.0) < 1e-6
    assert payload["within_thresholds"] is False


def test_simulate_sweep(tmp_path, capsys):
    out = tmp_path / "sweep.json"
    assert main(["simulate", "--sweep", "--window", "0.5", "--step", "0.002",
                 "--output", str(out)]) == 0
    assert "stayed within the threshold" in capsys.readouterr().out
    payload = _load(out)["payload"]
    assert payload["mode"] == "sweep"
    assert payload["rows"] == 32
    assert len(payload["table"]) == 33
    assert 1 <= payload["clean_rows"] < 32


def test_simulate_usage_errors(capsys):
    assert main(["simulate"]) == 2
    assert "choose --preset or --sweep" in capsys.readouterr().err
    assert main(["simulate", "--preset", "catenoid", "--step", "0"]) == 2
    assert main(["simulate", "--preset", "catenoid", "--window", "-1"]) == 2


def test_certify_artifact(certify_artifact, certify_artifact_path, capsys):
    _check_manifest(certify_artifact, "certify")
    payload = certify_artifact["payload"]
    assert payload["format"] == "birot4/certification@1"
    assert payload["mode"] == "compute"
    assert payload["target"] == "p*t^4"
    assert payload["identity_holds"] is True
    assert payload["remainder_zero"] is True
    assert payload["basis"]["format"] == "birot4/groebner-basis@1"
    assert payload["basis"]["order"] == "lex"
    assert payload["certificate"]["format"] == "birot4/membership-certificate@1"
    assert payload["certificate"]["is_member"] is True
    # the stored artifact re-verifies through the verify-only path
    assert main(["certify", "--verify-only", str(certify_artifact_path)]) == 0
    assert "re-verified" in capsys.readouterr().out


def test_certify_verify_only_catches_tampering(tmp_path, certify_artifact, capsys):
    tampered = json.loads(json.dumps(certify_artifact))
    tampered["payload"]["certificate"]["cofactors"][0] = "0"
    path = tmp_path / "tampered.json"
    path.write_text(json.dumps(tampered))
    assert main(["certify", "--verify-only", str(path)]) == 1
    assert "FAILED" in capsys.readouterr().err