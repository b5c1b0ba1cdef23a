"""Command-line interface: determinism, round trips and exit codes."""

import json

import pytest

from cycfusion.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_deterministic(capsys):
    _, out1, _ = run(capsys, "gen", "smatrix", "--e", "4", "--exterior", "2")
    _, out2, _ = run(capsys, "gen", "smatrix", "--e", "4", "--exterior", "2")
    assert out1 == out2
    data = json.loads(out1)
    assert data["base"] == 4 and data["scale_exp"] == 2


def test_gen_fusion_round_trip(tmp_path, capsys):
    code, out, _ = run(capsys, "gen", "smatrix", "--e", "3")
    assert code == 0
    path = tmp_path / "m.json"
    path.write_text(out)
    code, out_file, _ = run(capsys, "fusion", "--in", str(path))
    assert code == 0
    code, out_spec, _ = run(capsys, "fusion", "--in", "smatrix:e=3")
    assert code == 0
    assert out_file == out_spec
    ring = json.loads(out_file)
    assert ring["unit"] == 0 and len(ring["labels"]) == 3


def test_fusion_csv_and_pretty(capsys):
    code, out, _ = run(capsys, "fusion", "--in", "smatrix:e=2", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "i,j,k,N"
    assert "0,0,0,1" in lines
    code, out, _ = run(
        capsys, "fusion", "--in", "smatrix:e=2", "--format", "pretty"
    )
    assert code == 0
    assert "b_0 * b_1 = b_1" in out


def test_fusion_normalize_flag(capsys):
    code, out, _ = run(
        capsys, "fusion", "--in", "smatrix:e=4,n=2", "--normalize"
    )
    assert code == 0
    data = json.loads(out)
    assert data["signs"] is not None and data["involution"] is not None


def test_fusion_raw_table_has_negatives(capsys):
    code, out, _ = run(capsys, "fusion", "--in", "smatrix:e=4,n=2")
    assert code == 0
    data = json.loads(out)
    assert any(entry[3] < 0 for entry in data["tensor"])


def test_gen_kp_and_fusion_auto_unit(capsys):
    code, out, _ = run(
        capsys, "gen", "kp", "--type", "cl", "--level", "1", "--rank", "2"
    )
    assert code == 0
    import io
    import sys

    # pipe through stdin
    stdin = sys.stdin
    sys.stdin = io.StringIO(out)
    try:
        code, ring_out, _ = run(capsys, "fusion", "--in", "-")
    finally:
        sys.stdin = stdin
    assert code == 0
    ring = json.loads(ring_out)
    assert len(ring["labels"]) == 3


def test_verify_pass_and_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "modular", "--e", "4")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "verify", "kp-equiv", "--rank", "2", "--level", "1")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "verify", "integrality", "--e", "4")
    assert code == 0 and "all integer" in out


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        run(capsys, "verify", "integrality")
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(capsys, "fusion", "--in", "does-not-exist.json")
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(capsys, "gen", "smatrix")  # missing --e
    assert exc.value.code == 2


def test_scan_neg_small(capsys):
    code, out, _ = run(capsys, "scan", "neg", "--max-basis", "6")
    assert code == 0
    assert "classification matches predicate" in out
    assert "4 2 6 true true true" in out
