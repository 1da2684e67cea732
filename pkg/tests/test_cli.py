import json
import subprocess
import sys

import pytest

from hurwitz.cli import EXIT_DIVERGENCE, EXIT_INFEASIBLE, EXIT_OK, EXIT_USAGE, run_check


def test_compute_graphs(cli_main):
    code, out = cli_main("compute", "--genus", "1", "--profile", "2,1", "--backend", "graphs")
    assert code == EXIT_OK
    assert "= 40" in out and "d=3 n=2 w=5 backend=graphs" in out


def test_compute_rational_and_disconnected(cli_main):
    assert "= 1/2" in cli_main("compute", "--genus", "0", "--profile", "2", "--connected")[1]
    assert "= 9" in cli_main("compute", "--genus", "1", "--profile", "3", "--disconnected")[1]


def test_compute_exponent_shorthand(cli_main):
    a = cli_main("compute", "--genus", "0", "--profile", "2,1^2")[1]
    b = cli_main("compute", "--genus", "0", "--profile", "2,1,1")[1]
    assert a == b and "= 120" in a


def test_json_schema_and_roundtrip(cli_main):
    code, out = cli_main("compute", "--genus", "0", "--profile", "2", "--format", "json")
    obj = json.loads(out)
    assert list(obj) == ["genus", "profile", "degree", "branch_points", "connected", "backend", "value"]
    assert obj == {"genus": 0, "profile": [2], "degree": 2, "branch_points": 1, "connected": True,
                   "backend": "character", "value": "1/2"}
    assert json.dumps(json.loads(out)) == out


def test_infeasible_json(cli_main):
    code, out = cli_main("compute", "--genus", "2", "--profile", "4,3", "--backend", "closed", "--format", "json")
    assert code == EXIT_INFEASIBLE
    assert json.loads(out)["error"] == "infeasible"


def test_usage_errors(cli_main, capsys):
    with pytest.raises(SystemExit) as exc:
        cli_main("compute", "--genus", "1", "--profile", "two")
    assert exc.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        cli_main("frobnicate")
    assert exc.value.code == EXIT_USAGE
    assert cli_main("compute", "--genus", "-3", "--profile", "1")[0] == EXIT_USAGE
    assert cli_main("check", "--dmax", "2", "--gmax", "0", "--backends", "nope")[0] == EXIT_USAGE


def test_check_all_agree(cli_main):
    code, out = cli_main("check", "--dmax", "4", "--gmax", "2")
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "33 instances, 0 divergent"


def test_check_trivial(cli_main):
    code, out = cli_main("check", "--dmax", "1", "--gmax", "0")
    assert code == EXIT_OK
    assert out.splitlines()[0].startswith("agree  g=0 mu=(1): 1")


def test_check_corrupt_backend(cli_main):
    code, out = cli_main("check", "--dmax", "3", "--gmax", "1", "--corrupt", "fock")
    assert code == EXIT_DIVERGENCE
    assert "DIVERGE" in out and "fock=" in out


def test_check_order_is_canonical_with_workers():
    serial = run_check(3, 1, jobs=1)
    parallel = run_check(3, 1, jobs=2)
    keys = [(r.profile.size, r.genus, r.profile) for r in serial]
    assert [(r.profile.size, r.genus, r.profile) for r in parallel] == keys
    assert [r.values for r in parallel] == [r.values for r in serial]


def test_table_csv_and_plot(cli_main, tmp_path):
    png = tmp_path / "d3.png"
    code, out = cli_main("table", "--degree", "3", "--gmax", "2", "--plot", str(png))
    assert code == EXIT_OK
    assert out.splitlines() == ["profile,g=0,g=1,g=2", "3,1,9,81", '"2,1",4,40,364', '"1,1,1",4,40,364']
    assert png.read_bytes()[:4] == b"\x89PNG"
    code, out = cli_main("table", "-d", "2", "--gmax", "3", "--format", "json")
    assert json.loads(out) == {"2": ["1/2"] * 4, "1,1": ["1/2", "1/2", "1/2", "1/2"]}


def test_graphs_export(cli_main, tmp_path):
    code, out = cli_main("graphs", "--genus", "1", "--profile", "2,1", "--out", str(tmp_path / "g"),
                         "--combined", str(tmp_path / "all.dot"))
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "total 40"
    assert len(list((tmp_path / "g").glob("*.dot"))) == 8
    combined = (tmp_path / "all.dot").read_text()
    assert combined.count("subgraph cluster_") == 8
    assert "c7_e1" in combined


def test_chartable(cli_main):
    code, out = cli_main("chartable", "-d", "3")
    assert out.splitlines()[2] == '"2,1",-1,0,2'


def test_series_dump(cli_main):
    code, out = cli_main("series", "--dmax", "2", "--wmax", "2", "--connected")
    assert out.splitlines() == ["1,0;0;1", "0,1;1;1/2", "2,0;2;1/4"]
    code, out = cli_main("series", "--dmax", "2", "--wmax", "0")
    assert out.splitlines() == ["0,0;0;1", "1,0;0;1", "2,0;0;1/2"]


def test_debug_prints_maya(cli_main, capsys):
    cli_main("compute", "--genus", "0", "--profile", "1,1", "--backend", "fock", "--debug")
    err = capsys.readouterr().err
    assert "oooo*o|o*****" in err and "basis states" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hurwitz", "compute", "--genus", "1", "--profile", "2,1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "= 40" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "hurwitz", "compute", "--genus", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == EXIT_USAGE
