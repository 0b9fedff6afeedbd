import csv
import subprocess
import sys

import pytest

from fcat import profiles
from fcat.cli import EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, fmt, main, parse_u_range


def read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.reader(fh))


# -- table ---------------------------------------------------------------------------

def test_table_row_values(tmp_path):
    out = tmp_path / "t.csv"
    assert main(["table", "--C", "2.75", "50", "--out", str(out)]) == EXIT_OK
    rows = read_csv(out)
    assert rows[0] == ["C", "u1", "u2", "I1", "I2"]
    r = [float(x) for x in rows[1]]
    assert r[1] == pytest.approx(0.9248309636, abs=1e-9)
    assert r[2] == pytest.approx(1.077103331, abs=1e-9)
    assert r[3] == pytest.approx(2.363204279, rel=1e-8)
    assert r[4] == pytest.approx(4.598285949, rel=1e-8)
    assert float(rows[2][1]) == pytest.approx(0.1428721249, abs=1e-9)


def test_table_format_and_line_endings(tmp_path):
    out = tmp_path / "t.csv"
    main(["table", "--C", "3.1", "--out", str(out)])
    raw = out.read_bytes()
    assert b"\r" not in raw and raw.endswith(b"\n") and not raw.rstrip(b"\n").endswith(b",")
    assert all(len(x.lstrip("-").replace(".", "").lstrip("0")) <= 10 for x in read_csv(out)[1][1:])


def test_table_default_is_published_list(tmp_path):
    out = tmp_path / "t.csv"
    assert main(["table", "--out", str(out)]) == EXIT_OK
    assert [float(r[0]) for r in read_csv(out)[1:]] == [row[0] for row in profiles.PUBLISHED_TABLE]


def test_table_rejects_small_C(tmp_path, capsys):
    assert main(["table", "--C", "1.0", "--out", str(tmp_path / "t.csv")]) == EXIT_USAGE
    assert "C = 1.0" in capsys.readouterr().err


def test_write_failure_is_exit_3(tmp_path):
    assert main(["table", "--C", "3.1", "--out", str(tmp_path / "missing" / "t.csv")]) == EXIT_INTERNAL


# -- domain --------------------------------------------------------------------------

def test_domain_whole_line(capsys):
    assert main(["domain", "--C", "0.5"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "WholeLine, D=R, u0=0"


def test_domain_three_intervals(capsys):
    assert main(["domain", "--C", "3.1"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "ThreeIntervals" in out
    assert "1.266389104" in out and "0.7556136794" in out


def test_domain_at_e_warns(capsys):
    assert main(["domain", "--C", repr(profiles.E)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "PuncturedAtOne" in out and "warning" in out and "diverges" in out


def test_domain_rejects_nonpositive():
    assert main(["domain", "--C", "0"]) == EXIT_USAGE


# -- profile -------------------------------------------------------------------------

def test_profile_spacelike(tmp_path):
    out = tmp_path / "p.csv"
    assert main(["profile", "--kind", "spacelike", "--C", "0", "--u-range=-3,3", "--n", "601", "--out", str(out)]) == 0
    rows = read_csv(out)
    assert rows[0] == ["u", "g", "gprime"]
    data = [[float(x) for x in r] for r in rows[1:]]
    assert len(data) == 601
    g = [r[1] for r in data]
    assert all(b > a for a, b in zip(g, g[1:]))
    assert all(abs(r[2]) <= 1.0 for r in data)


def test_profile_timelike_inner(tmp_path):
    out = tmp_path / "p.csv"
    assert main(["profile", "--kind", "timelike", "--C", "3.1", "--u-range=-0.74,0.74", "--out", str(out)]) == 0
    assert all(float(r[2]) >= 1.0 for r in read_csv(out)[1:])


def test_profile_range_crossing_root(tmp_path):
    out = tmp_path / "p.csv"
    assert main(["profile", "--kind", "timelike", "--C", "3.1", "--u-range", "0,1", "--out", str(out)]) == EXIT_USAGE
    assert not out.exists()


def test_profile_auto_range(tmp_path):
    out = tmp_path / "p.csv"
    assert main(["profile", "--kind", "timelike", "--C", "3.1", "--component", "outer", "--out", str(out)]) == 0
    assert float(read_csv(out)[1][0]) > 1.2664


def test_parse_u_range():
    assert parse_u_range("auto") is None
    assert parse_u_range("-1,2") == (-1.0, 2.0)
    with pytest.raises(Exception):
        parse_u_range("2,1")


# -- mesh ----------------------------------------------------------------------------

def test_mesh_counts_and_determinism(tmp_path):
    a, b = tmp_path / "a.obj", tmp_path / "b.obj"
    args = ["mesh", "--kind", "spacelike", "--C", "0", "--u-range", "0.05,2", "--nu", "64", "--nv", "64"]
    assert main(args + ["--out", str(a)]) == EXIT_OK
    assert main(args + ["--out", str(b)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().splitlines()
    verts = [l for l in lines if l.startswith("v ")]
    faces = [l for l in lines if l.startswith("f ")]
    assert len(verts) == 4096 and len(faces) == 2 * 63 * 64
    assert len(verts) + len(faces) == len(lines)
    idx = [int(i) for f in faces for i in f.split()[1:]]
    assert min(idx) == 1 and max(idx) == 4096
    assert all(len(f.split()) == 4 for f in faces)


def test_mesh_timelike_small_C(tmp_path):
    out = tmp_path / "m.obj"
    assert main(["mesh", "--kind", "timelike", "--C", "2.5", "--u-range", "0.05,2",
                 "--nu", "8", "--nv", "8", "--out", str(out)]) == EXIT_OK
    assert "nan" not in out.read_text().lower()


def test_mesh_rejects_single_row(tmp_path):
    assert main(["mesh", "--kind", "spacelike", "--C", "0", "--nu", "1", "--out", str(tmp_path / "m.obj")]) == 2


def test_mesh_degenerate_point_named(tmp_path, capsys):
    code = main(["mesh", "--kind", "spacelike", "--C", "0", "--u-range=-1,1", "--nu", "3", "--nv", "4",
                 "--out", str(tmp_path / "m.obj")])
    assert code == EXIT_USAGE
    assert "(u, v) = (0.0, 0.0)" in capsys.readouterr().err


# -- verify --------------------------------------------------------------------------

def test_verify_corollary(capsys):
    assert main(["verify", "--suite", "corollary"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "ConsistentWithTheorem" in out and "overall: PASS" in out


def test_verify_failure_exit_1(capsys):
    # an impossible spread requirement turns every generic trial into a failed check
    code = main(["verify", "--suite", "classification", "--trials", "2", "--tol", "spread=1e6"])
    assert code == EXIT_VERIFY
    assert "overall: FAIL" in capsys.readouterr().out


def test_verify_bad_tolerance_key():
    assert main(["verify", "--suite", "lemma1", "--tol", "bogus=1"]) == EXIT_USAGE


# -- grammar and config ------------------------------------------------------------------

def test_unknown_flag_and_missing_command():
    assert main(["domain", "--C", "1", "--bogus"]) == EXIT_USAGE
    assert main([]) == EXIT_USAGE
    assert main(["table"]) == EXIT_USAGE  # --out is required


def test_config_defaults_overridden_by_flags(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# mesh defaults\nkind = spacelike\nC = 0\nu_range = 0.1,1\nnu = 4\nnv = 5\nout = %s\n"
                   % (tmp_path / "cfg.obj"))
    assert main(["--config", str(cfg), "mesh"]) == EXIT_OK
    assert sum(l.startswith("v ") for l in (tmp_path / "cfg.obj").read_text().splitlines()) == 20
    assert main(["--config", str(cfg), "mesh", "--nu", "6"]) == EXIT_OK
    assert sum(l.startswith("v ") for l in (tmp_path / "cfg.obj").read_text().splitlines()) == 30


def test_config_unknown_key(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("colour = red\n")
    assert main(["--config", str(cfg), "domain", "--C", "1"]) == EXIT_USAGE


def test_fmt_ten_digits():
    assert fmt(2.75) == "2.75"
    assert fmt(0.92483096364213) == "0.9248309636"


def test_module_entry_point(tmp_path):
    r = subprocess.run([sys.executable, "-m", "fcat", "domain", "--C", "0.5"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "WholeLine, D=R, u0=0"
