import csv
import json
import subprocess
import sys

import pytest

from mrspec.cli import load_golden_rows, main
from mrspec.errors import GoldenDataError
from mrspec.radial import PotentialParams, energy_level

GOLDEN_SUBSET = """beta,beta_prime,m,N,n_r,l,n,E
0,0,0,0,0,0,1,-0.487578
0,0,1,0,0,1,2,-0.112760
1,1,0,0,1,1,3,-0.043707
"""


def test_energy_command_matches_table(capsys):
    code = main(
        "energy --A 80 --alpha 1 --b 40 --beta 0 --beta-prime 0 --m 0 --N 0 --nr 0".split()
    )
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["energy"] == pytest.approx(-0.487578, abs=5e-7)
    assert out["l"] == 0.0
    assert out["n"] == 1.0
    assert out["l_source"] == "computed"
    for key in ("u", "zeta", "lambda", "big_lambda", "sqrt_c", "eps_sq"):
        assert key in out


def test_energy_command_explicit_l(capsys):
    code = main("energy --A 80 --alpha 1 --b 40 --l 1 --nr 0".split())
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["energy"] == pytest.approx(-0.112760, abs=5e-7)
    assert out["l_source"] == "explicit"


def test_energy_command_constraint_failure(capsys):
    code = main("energy --A 0.1 --alpha 1 --b 40 --l 2 --nr 0".split())
    assert code == 1
    err = capsys.readouterr().err
    assert "no bound state" in err


def test_energy_reality_failure(capsys):
    code = main(
        "energy --A 80 --alpha 1 --b 40 --beta 3 --beta-prime 1 --m 1 --N 0 --nr 0".split()
    )
    assert code == 1
    assert "beta" in capsys.readouterr().err


def test_hulthen_convention(capsys):
    code = main("energy --alpha 1 --b 40 --hulthen-convention --l 0 --nr 0".split())
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["inputs"]["A"] == 80.0
    assert out["energy"] == pytest.approx(-0.487578, abs=5e-7)


def test_config_file_precedence(tmp_path, monkeypatch, capsys):
    cfg = tmp_path / "conf.json"
    cfg.write_text(json.dumps({"A": 80.0, "alpha": 1.0, "b": 40.0, "l": 1.0}))
    monkeypatch.setenv("MRSPEC_CONFIG", str(cfg))
    assert main(["energy", "--nr", "0"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["energy"] == pytest.approx(-0.112760, abs=5e-7)
    # explicit flag beats the config file
    assert main(["energy", "--nr", "0", "--l", "0"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["energy"] == pytest.approx(-0.487578, abs=5e-7)


def test_bad_config_file_exits_2(tmp_path, monkeypatch, capsys):
    cfg = tmp_path / "conf.json"
    cfg.write_text("{not json")
    monkeypatch.setenv("MRSPEC_CONFIG", str(cfg))
    assert main(["energy", "--nr", "0"]) == 2


def test_golden_rows_loader():
    rows = load_golden_rows(alpha=0.75)
    assert len(rows) == 39
    rows2 = load_golden_rows(alpha=1.0)
    assert len(rows2) == 39
    # the central rows carry computed l, every ring row is overridden
    central = [r for r in rows2 if (r.beta, r.beta_prime) == (0.0, 0.0)]
    assert any(r.source_l == "computed" for r in central)
    ring = [r for r in rows2 if (r.beta, r.beta_prime) != (0.0, 0.0)]
    assert all(r.source_l == "table_override" for r in ring)


def test_golden_loader_rejects_unknown_alpha():
    with pytest.raises(ValueError):
        load_golden_rows(alpha=0.3)


def test_golden_loader_schema_errors(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("alpha,beta\n1,2\n")
    with pytest.raises(GoldenDataError):
        load_golden_rows(path=bad)
    bad.write_text(GOLDEN_SUBSET.replace("-0.487578", "not-a-number"))
    with pytest.raises(GoldenDataError):
        load_golden_rows(path=bad)
    with pytest.raises(GoldenDataError):
        load_golden_rows(path=tmp_path / "missing.csv")


def test_table_golden_deterministic(tmp_path, capsys):
    out1 = tmp_path / "t1.csv"
    out2 = tmp_path / "t2.csv"
    args = "table --alpha 0.75 --golden --A 80 --b 40".split()
    assert main(args + ["--output", str(out1)]) == 0
    assert main(args + ["--output", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    lines = out1.read_text().splitlines()
    assert lines[0] == "beta,beta_prime,m,N,n_r,l,n,E,l_source"
    assert len(lines) == 40  # header + 39 rows
    assert b"\r" not in out1.read_bytes()


def test_table_golden_round_trip(tmp_path):
    out = tmp_path / "table.csv"
    assert main(f"table --alpha 1 --golden --output {out}".split()) == 0
    pp = PotentialParams(a_strength=80.0, alpha=1.0, b=40.0)
    with open(out) as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 39
    overrides = 0
    for row in rows:
        l = float(row["l"])
        n_r = int(row["n_r"])
        recomputed = energy_level(pp, l * (l + 1.0), n_r).energy
        assert abs(recomputed - float(row["E"])) <= 5e-6
        assert abs(float(row["n"]) - (n_r + l + 1.0)) <= 1e-6
        if row["l_source"] == "table_override":
            overrides += 1
    assert overrides == 30  # the ring rows plus one inconsistent central row


def test_table_generated_mode(tmp_path):
    out = tmp_path / "gen.csv"
    assert main(f"table --alpha 0.3 --A 80 --b 40 --output {out}".split()) == 0
    pp = PotentialParams(a_strength=80.0, alpha=0.3, b=40.0)
    with open(out) as fh:
        rows = list(csv.DictReader(fh))
    assert rows
    energies = [float(r["E"]) for r in rows]
    assert energies == sorted(energies)  # most bound first
    for row in rows[:10]:
        l = float(row["l"])
        recomputed = energy_level(pp, l * (l + 1.0), int(row["n_r"])).energy
        assert abs(recomputed - float(row["E"])) <= 5e-6
        assert row["l_source"] == "computed"


def test_table_unwritable_output_exits_2(tmp_path, capsys):
    target = tmp_path / "no-such-dir" / "out.csv"
    assert main(f"table --alpha 1 --golden --output {target}".split()) == 2


def test_figures_approx(tmp_path):
    out = tmp_path / "cent.csv"
    assert main(f"figures --which approx --b 1 --output {out}".split()) == 0
    with open(out) as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 500
    first = rows[0]
    r = float(first["r"])
    assert r == pytest.approx(0.05)
    assert float(first["exact"]) == pytest.approx(1.0 / r**2, rel=1e-9)
    import math
    core = 1.0 / (4.0 * math.sinh(r / 2.0) ** 2)
    assert float(first["improved"]) == pytest.approx(1.0 / 12.0 + core, rel=1e-9)
    assert float(first["conventional"]) == pytest.approx(core, rel=1e-9)
    png = tmp_path / "cent.png"
    assert png.exists() and png.stat().st_size > 0


def test_figures_region(tmp_path):
    out = tmp_path / "region.csv"
    assert main(f"figures --which region --alpha 1 --A 80 --b 40 --output {out}".split()) == 0
    with open(out) as fh:
        pairs = {(int(r["n_r"]), int(r["l"])) for r in csv.DictReader(fh)}
    from mrspec.constraints import feasible_region

    pp = PotentialParams(a_strength=80.0, alpha=1.0, b=40.0)
    assert pairs == set(feasible_region(pp, 10.0, 10))
    assert (0, 0) in pairs
    assert (7, 0) in pairs and (8, 0) not in pairs
    assert (tmp_path / "region.png").exists()


def test_verify_subset(tmp_path, capsys):
    golden = tmp_path / "subset.csv"
    golden.write_text(GOLDEN_SUBSET)
    report_path = tmp_path / "report.json"
    code = main(
        f"verify --alpha 1 --A 80 --b 40 --golden-file {golden} --output {report_path}".split()
    )
    assert code == 0
    report = json.loads(report_path.read_text())
    assert report["summary"]["failures"] == 0
    assert report["summary"]["rows_checked"] == 3
    assert report["summary"]["max_delta"] <= 1e-5
    for row in report["rows"]:
        assert set(row) >= {"inputs", "analytic_E", "oracle_E", "delta", "norm_check", "nodes_ok"}
        assert abs(row["delta"]) <= 1e-5
        assert row["nodes_ok"] is True
        assert abs(row["norm_check"] - 1.0) <= 1e-7
    # the beta = beta' = 1 row is a known l discrepancy and must be listed
    assert any(
        o["beta"] == 1.0 and o["beta_prime"] == 1.0
        for o in report["summary"]["table_override_rows"]
    )


def test_verify_corrupted_golden_exits_2(tmp_path):
    golden = tmp_path / "corrupt.csv"
    golden.write_text("beta,beta_prime\n0,0\n")
    assert main(f"verify --alpha 1 --golden-file {golden}".split()) == 2


def test_verify_tolerance_failure(tmp_path):
    golden = tmp_path / "subset.csv"
    golden.write_text(GOLDEN_SUBSET)
    report_path = tmp_path / "report.json"
    code = main(
        f"verify --alpha 1 --golden-file {golden} --tolerance 1e-18 --output {report_path}".split()
    )
    assert code == 1


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "mrspec", "energy", "--A", "80", "--alpha", "1",
         "--b", "40", "--l", "0", "--nr", "0"],
        capture_output=True, text=True, cwd=tmp_path,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["energy"] == pytest.approx(-0.487578, abs=5e-7)
