import json
import random
import subprocess
import sys

import pytest

from normhilb.cli import compare_with_oracle, dump_json, main, random_ideal
from normhilb.monomial import MonomialIdeal


@pytest.fixture
def xy2_file(tmp_path):
    path = tmp_path / "xy2.json"
    path.write_text(json.dumps({"dim": 2, "gens": [[2, 0], [0, 2]]}))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out), out


def test_closure_command(capsys, xy2_file, tmp_path):
    code, data, _ = run_json(capsys, "closure", "--ideal", xy2_file, "--power", "1", "--cache-dir", str(tmp_path / "c"))
    assert code == 0
    assert data["closure"]["gens"] == [[0, 2], [1, 1], [2, 0]]
    assert list((tmp_path / "c").glob("*.json"))


def test_hilbert_command(capsys, xy2_file):
    code, data, _ = run_json(capsys, "hilbert", "--ideal", xy2_file, "--max-n", "7", "--no-cache")
    assert code == 0
    assert data["values"] == [0, 3, 10, 21, 36, 55, 78, 105]
    assert data["e"] == [4, 1, 0] and data["multiplicity_check"] is True
    code, out, _ = run(capsys, "hilbert", "--ideal", xy2_file, "--max-n", "7", "--no-cache")
    assert "e = [4, 1, 0]" in out and "not a proven bound" in out


def test_hilbert_fit_error_advises_larger_window(capsys, xy2_file):
    code, out, _ = run(capsys, "hilbert", "--ideal", xy2_file, "--max-n", "4", "--no-cache")
    assert code == 1 and "--max-n" in out


def test_reduction_and_hi_commands(capsys, xy2_file):
    code, data, _ = run_json(capsys, "reduction", "--ideal", xy2_file, "--max-n", "5", "--no-cache")
    assert code == 0 and data["r_bar"] == 1 and data["quotient_lengths"][:2] == [1, 0]
    code, data, _ = run_json(capsys, "hi-check", "--ideal", xy2_file, "--r", "1", "--max-n", "5", "--no-cache")
    assert code == 0 and data["passed"]


def test_hi_check_failure_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"dim": 3, "gens": [[0, 1, 2], [3, 0, 1], [3, 2, 0]]}))
    code, data, _ = run_json(capsys, "hi-check", "--ideal", str(path), "--max-n", "3", "--no-cache")
    assert code == 1
    assert data["witness"] == {"n": 1, "monomial": [4, 2, 2]}


def test_verify_command(capsys, xy2_file):
    code, data, _ = run_json(capsys, "verify", "--ideal", xy2_file, "--k", "2", "--max-n", "6", "--no-cache")
    assert code == 0
    assert data["summary"]["hard_failures"] == []
    verdicts = {r["theorem"]: r["verdict"] for r in data["reports"]}
    assert verdicts["alpha-polynomial bound"] == "theorem-confirmed"


def test_sr_command_defaults_to_bundled_complex(capsys):
    code, data, _ = run_json(capsys, "sr")
    assert code == 0
    assert data["f"] == [1, 8, 23, 28, 12]
    assert data["h"] == [1, 4, 5, 2, 0]
    assert data["e"] == [12, 20, 11, 2, 0]
    assert (data["postulation"], data["reduction"]) == (-1, 3)


def test_sr_command_custom_complex(capsys, tmp_path):
    path = tmp_path / "tri.json"
    path.write_text(json.dumps({"vertices": 3, "facets": [[1, 2], [2, 3], [1, 3]]}))
    code, data, _ = run_json(capsys, "sr", "--complex", str(path))
    assert code == 0 and data["h"] == [1, 1, 1]


def test_sr_rejects_impure_complex(capsys, tmp_path):
    path = tmp_path / "impure.json"
    path.write_text(json.dumps({"vertices": 4, "facets": [[1, 2, 3], [3, 4]]}))
    code, _, err = run(capsys, "sr", "--complex", str(path))
    assert code == 2 and "different sizes" in err


def test_hypersurface_command(capsys):
    code, data, _ = run_json(capsys, "hypersurface", "--d", "4", "--n", "3")
    assert code == 0
    assert data["h"] == [1, 1, 1] and data["e"] == [3, 3, 1, 0, 0]
    assert (data["postulation"], data["reduction"]) == (-2, 2)


def test_hypersurface_warns_beyond_range(capsys):
    code, _, err = run(capsys, "hypersurface", "--d", "2", "--n", "3")
    assert code == 0 and "warning" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["hilbert"],
        ["hilbert", "--ideal", "/nonexistent/ideal.json"],
        ["hypersurface", "--d", "3"],
        ["closure", "--ideal", "IDEAL", "--power", "-1"],
        ["hilbert", "--ideal", "IDEAL", "--max-n", "1"],
        ["nonsense"],
    ],
)
def test_input_errors_exit_two(capsys, xy2_file, argv):
    argv = [xy2_file if a == "IDEAL" else a for a in argv]
    code, _, _ = run(capsys, *argv, "--no-cache")
    assert code == 2


def test_non_m_primary_hilbert_is_input_error(capsys, tmp_path):
    path = tmp_path / "line.json"
    path.write_text(json.dumps({"dim": 2, "gens": [[2, 0]]}))
    code, _, err = run(capsys, "hilbert", "--ideal", str(path), "--no-cache")
    assert code == 2 and "infinite length" in err


def test_json_round_trip_is_byte_identical(capsys):
    _, data, raw = run_json(capsys, "sr")
    assert dump_json(json.loads(raw)) + "\n" == raw
    assert dump_json(data) + "\n" == raw


def test_oracle_command_small(capsys):
    code, data, _ = run_json(capsys, "oracle", "--count", "5", "--seed", "7")
    assert code == 0 and data["disagreements"] == [] and data["ideals"] == 5


def test_random_ideal_is_seeded():
    a = [random_ideal(random.Random(3)) for _ in range(3)]
    b = [random_ideal(random.Random(3)) for _ in range(3)]
    assert a == b


def test_compare_with_oracle_counts_points():
    res = compare_with_oracle(MonomialIdeal.pure_powers((2, 2)), [1, 2])
    assert res["disagreements"] == []
    assert res["points"] == 5 * 5 + 3 * 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "normhilb", "hypersurface", "--d", "2", "--n", "2"], capture_output=True, text=True)
    assert proc.returncode == 0 and "reduction number = 1" in proc.stdout
