"""End-to-end tests of the command line interface, run in process."""

import io
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pa_degree_forge import IntMatrix
from pa_degree_forge.cli import SCHEMA, main


def run(capsys, *argv):
    """Invoke main() and capture (exit_code, stdout, stderr)."""
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


# -- build ------------------------------------------------------------------------------


def test_build_prints_the_matrix(capsys):
    code, out, err = run(capsys, "build", "G1Block", "y=12")
    assert code == 0
    assert "dimension: 2" in out
    assert "2 2\n4 2\n2 12\n" in out


def test_build_honors_parameter_defaults(capsys):
    code, out, _ = run(capsys, "build", "MgNg", "g=3")
    assert code == 0
    assert "dimension: 8" in out


def test_build_writes_matrix_files(capsys, tmp_path):
    target = tmp_path / "gram.txt"
    code, out, _ = run(capsys, "build", "KBlock", "k=2", "ys=12,13", "y=5", "--matrix", str(target))
    assert code == 0
    lines = target.read_text().splitlines()
    assert lines[0] == "5 5"
    rows = [tuple(int(x) for x in line.split()) for line in lines[1:]]
    assert IntMatrix(rows).is_symmetric


def test_build_json_report(capsys, tmp_path):
    report_file = tmp_path / "report.json"
    code, _, _ = run(capsys, "build", "G1Block", "y=12", "--json", str(report_file))
    assert code == 0
    blob = json.loads(report_file.read_text())
    assert blob["schema"] == SCHEMA
    assert blob["command"] == "build"
    assert blob["dim"] == 2
    assert blob["rows"] == [[4, 2], [2, 12]]
    assert blob["spec"] == {"variant": "G1Block", "params": {"y": 12}}


def test_build_rejects_invalid_parameters(capsys):
    code, _, err = run(capsys, "build", "KBlock", "k=1", "ys=12", "y=1")
    assert code == 1
    assert "validation failed" in err


def test_build_usage_errors(capsys):
    code, _, _ = run(capsys, "build", "NoSuchFamily", "y=1")
    assert code == 64
    code, _, _ = run(capsys, "build", "G1Block", "y=12", "nonsense")
    assert code == 64
    code, _, _ = run(capsys, "build")
    assert code == 64


def test_build_from_spec_file(capsys, tmp_path):
    spec_file = tmp_path / "spec.json"
    spec_file.write_text(json.dumps({"variant": "G1Block", "params": {"y": 12}}))
    code, out, _ = run(capsys, "build", "--spec-file", str(spec_file))
    assert code == 0
    assert "dimension: 2" in out


def test_spec_file_and_inline_spec_conflict(capsys, tmp_path):
    spec_file = tmp_path / "spec.json"
    spec_file.write_text(json.dumps({"variant": "G1Block", "params": {"y": 12}}))
    code, _, _ = run(capsys, "build", "G1Block", "y=12", "--spec-file", str(spec_file))
    assert code == 64


# -- certify -----------------------------------------------------------------------------


def test_certify_issues_for_the_g1_block(capsys, tmp_path):
    report_file = tmp_path / "cert.json"
    code, out, _ = run(capsys, "certify", "G1Block", "y=12", "--json", str(report_file))
    assert code == 0
    blob = json.loads(report_file.read_text())
    assert blob["schema"] == SCHEMA
    assert blob["trace_field"]["degree"] == 2
    # no --epsilon given: both twist signs are certified
    assert [c["epsilon"] for c in blob["nonsplitting"]] == [1, -1]
    assert all(c["stretch_degree"] == 4 for c in blob["nonsplitting"])


def test_certify_single_epsilon(capsys, tmp_path):
    report_file = tmp_path / "cert.json"
    code, _, _ = run(
        capsys, "certify", "G1Block", "y=12", "--epsilon", "-1", "--json", str(report_file)
    )
    assert code == 0
    blob = json.loads(report_file.read_text())
    assert [c["epsilon"] for c in blob["nonsplitting"]] == [-1]


def test_certify_reducible_spectrum_fails_definitely(capsys):
    # y = 4 gives characteristic polynomial (t - 2)(t - 6)
    code, out, _ = run(capsys, "certify", "G1Block", "y=4")
    assert code == 1


def test_certify_exhausted_budget_reports_unknown(capsys):
    # modulo 3 the polynomial splits, so one informative prime cannot decide
    code, _, _ = run(capsys, "certify", "G1Block", "y=13", "--prime-budget", "1", "--epsilon", "1")
    assert code == 2


def test_certify_small_degree_uses_declared_factors(capsys, tmp_path):
    report_file = tmp_path / "cert.json"
    code, _, _ = run(
        capsys,
        "certify", "SmallDegree", "g=6", "f=2", "zs=4,4,4,8", "y=5",
        "--epsilon", "1", "--json", str(report_file),
    )
    assert code == 0
    blob = json.loads(report_file.read_text())
    assert blob["trace_field"]["degree"] == 3
    assert blob["trace_field"]["removed"] == [[4, 2]]


def test_certify_with_ll_window(capsys, tmp_path):
    report_file = tmp_path / "cert.json"
    code, _, _ = run(
        capsys, "certify", "G1Block", "y=12", "--with-ll", "--epsilon", "1",
        "--json", str(report_file),
    )
    assert code == 0
    blob = json.loads(report_file.read_text())
    assert blob["ll"]["holds"] is True
    assert blob["ll"]["dim"] == 14


def test_certify_with_ll_rejects_gridless_variants(capsys):
    code, _, err = run(capsys, "certify", "TorelliG2Block", "y=2", "--with-ll")
    assert code == 64


def test_certify_with_bipartite_flags_failures(capsys):
    code, _, _ = run(capsys, "certify", "Block2", "m=4", "--with-bipartite")
    assert code == 1
    code, _, _ = run(capsys, "certify", "Block2", "m=2", "--with-bipartite", "--epsilon", "1")
    assert code == 0


def test_certify_rejects_non_positive_budgets(capsys):
    code, _, _ = run(capsys, "certify", "G1Block", "y=12", "--prime-budget", "0")
    assert code == 64
    code, _, _ = run(capsys, "certify", "G1Block", "y=12", "--n-max", "0")
    assert code == 64


# -- reproduce ----------------------------------------------------------------------------


def test_reproduce_genus2_table(capsys):
    code, out, _ = run(capsys, "reproduce", "genus2-table")
    assert code == 0
    assert "3/3 items passed" in out


def test_reproduce_unknown_suite(capsys):
    code, _, _ = run(capsys, "reproduce", "genus99-table")
    assert code == 64


def test_reproduce_prop62_bounded(capsys, tmp_path):
    report_file = tmp_path / "suite.json"
    code, out, _ = run(capsys, "reproduce", "prop62", "--g-max", "3", "--json", str(report_file))
    assert code == 0
    blob = json.loads(report_file.read_text())
    assert blob["schema"] == SCHEMA
    assert blob["suite"] == "prop62"
    assert blob["ok"] is True
    assert len(blob["items"]) == 2  # one item per genus
    assert "2/2 items passed" in out


# -- verify --------------------------------------------------------------------------------


def certify_to_file(capsys, tmp_path, *spec):
    report_file = tmp_path / "fresh.json"
    code, _, _ = run(capsys, "certify", *spec, "--json", str(report_file))
    assert code == 0
    return report_file


def test_verify_accepts_fresh_reports(capsys, tmp_path):
    report_file = certify_to_file(capsys, tmp_path, "G1Block", "y=12")
    code, out, _ = run(capsys, "verify", str(report_file))
    assert code == 0
    assert "ok   degree-certificate" in out
    assert "verified" in out


def test_verify_flags_square_norms(capsys, tmp_path):
    report_file = certify_to_file(capsys, tmp_path, "G1Block", "y=12", "--epsilon", "1")
    blob = json.loads(report_file.read_text())
    blob["nonsplitting"][0]["norm_value"] = 1296
    report_file.write_text(json.dumps(blob))
    code, out, _ = run(capsys, "verify", str(report_file))
    assert code == 1
    assert "norm_value is a square" in out


def test_verify_flags_degree_tampering(capsys, tmp_path):
    report_file = certify_to_file(capsys, tmp_path, "G1Block", "y=12", "--epsilon", "1")
    blob = json.loads(report_file.read_text())
    blob["nonsplitting"][0]["trace_field_degree"] = 3
    report_file.write_text(json.dumps(blob))
    code, out, _ = run(capsys, "verify", str(report_file))
    assert code == 1
    assert "FAIL degree-certificate" in out


def test_verify_reads_stdin(capsys, tmp_path, monkeypatch):
    report_file = certify_to_file(capsys, tmp_path, "G1Block", "y=12", "--epsilon", "1")
    monkeypatch.setattr("sys.stdin", io.StringIO(report_file.read_text()))
    code, out, _ = run(capsys, "verify", "-")
    assert code == 0
    assert "verified" in out


def test_verify_usage_errors(capsys, tmp_path):
    empty = tmp_path / "nothing.json"
    empty.write_text(json.dumps({"hello": 1}))
    code, _, _ = run(capsys, "verify", str(empty))
    assert code == 64

    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    code, _, _ = run(capsys, "verify", str(broken))
    assert code == 64

    code, _, _ = run(capsys, "verify", str(tmp_path / "missing.json"))
    assert code == 64


# -- certify/verify round trip over assorted small specs -------------------------------------


ROUND_TRIP_SPECS = [
    ("G1Block", "y=12"),
    ("G1Block", "y=37"),
    ("TorelliG1Block", "y=2"),
    ("TorelliG2Block", "y=3"),
    ("Block2", "m=2"),
    ("KBlock", "k=1", "ys=12", "y=5"),
    ("Genus3Closed",),
    ("SmallDegree", "g=6", "f=2", "zs=4,4,4,8", "y=5"),
]


@pytest.mark.parametrize("spec", ROUND_TRIP_SPECS, ids=lambda s: " ".join(s))
def test_verify_always_accepts_certify_output(capsys, tmp_path, spec):
    report_file = certify_to_file(capsys, tmp_path, *spec, "--epsilon", "1")
    code, out, _ = run(capsys, "verify", str(report_file))
    assert code == 0, out


@given(y=st.integers(min_value=12, max_value=120))
@settings(max_examples=12, deadline=None)
def test_random_g1_members_round_trip(y, tmp_path_factory):
    import contextlib

    tmp = tmp_path_factory.mktemp("roundtrip")
    report_file = tmp / "cert.json"
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        # y with a square discriminant is a legitimate definite failure, so
        # only insist on the invariant when a certificate was actually issued
        code = main(["certify", "G1Block", f"y={y}", "--epsilon", "1", "--json", str(report_file)])
        if code == 0:
            assert main(["verify", str(report_file)]) == 0
