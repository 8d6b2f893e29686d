import io

import numpy as np
import pytest

from ieal.cli import run
from ieal.cipher import encrypt
from ieal.image_io import load_pgm, load_photo, read_pgm, save_pgm


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    p = tmp_path / "p.pgm"
    save_pgm(p, load_photo("camera144"))
    return tmp_path, p


def test_encrypt_decrypt_round_trip(files):
    d, p = files
    assert call("encrypt", "--in", str(p), "--out", str(d / "c.pgm"), "--key", "13,390")[0] == 0
    assert call("decrypt", "--in", str(d / "c.pgm"), "--out", str(d / "r.pgm"), "--key", "13,390")[0] == 0
    assert np.array_equal(load_pgm(d / "r.pgm"), load_pgm(p))
    assert np.array_equal(load_pgm(d / "c.pgm"), encrypt(load_pgm(p), (13, 390)))


def test_brute(files):
    d, p = files
    call("encrypt", "--in", str(p), "--out", str(d / "c.pgm"), "--key", "13,390")
    code, out, _ = call("attack", "brute", "--in", str(d / "c.pgm"), "--out", str(d / "r.pgm"), "--workers", "1")
    assert code == 0
    assert "T=1 S=6 (period m=12)" in out
    assert np.array_equal(load_pgm(d / "r.pgm"), load_pgm(p))


def test_brute_match_scorer(files):
    d, p = files
    call("encrypt", "--in", str(p), "--out", str(d / "c.pgm"), "--key", "5,5")
    code, out, _ = call("attack", "brute", "--in", str(d / "c.pgm"), "--scorer", f"match:{p}", "--workers", "1", "--kv")
    assert code == 0
    assert "key_T=5\nkey_S=5\n" in out


def test_kpa(tmp_path):
    p, c = tmp_path / "p276.pgm", tmp_path / "c276.pgm"
    plain = load_photo("camera276")
    save_pgm(p, plain)
    save_pgm(c, encrypt(plain, (6, 127)))
    code, out, _ = call("attack", "kpa", "--plain", str(p), "--cipher", str(c))
    assert code == 0
    for line in ("s0=109", "S=127", "T=6", "n=18"):
        assert line in out.splitlines()


def test_kpa_failure_exit_status(tmp_path):
    p, c = tmp_path / "p.pgm", tmp_path / "c.pgm"
    save_pgm(p, load_photo("camera144"))
    save_pgm(c, encrypt(load_photo("moon144"), (1, 1)))
    code, _, err = call("attack", "kpa", "--plain", str(p), "--cipher", str(c))
    assert code == 1 and "attack failed" in err


def test_cycle(files):
    d, p = files
    call("encrypt", "--in", str(p), "--out", str(d / "c.pgm"), "--key", "11,68")
    code, out, _ = call("attack", "cycle", "--in", str(d / "c.pgm"), "--key-oracle", "11,68", "--kv",
                        "--out", str(d / "r.pgm"))
    assert code == 0
    assert "cycle_n=24" in out and "candidates=1,5,7,11" in out
    assert np.array_equal(load_pgm(d / "r.pgm"), load_pgm(p))


def test_cycle_budget_failure(files):
    d, p = files
    call("encrypt", "--in", str(p), "--out", str(d / "c.pgm"), "--key", "11,68")
    code, _, err = call("attack", "cycle", "--in", str(d / "c.pgm"), "--key-oracle", "11,68", "--max-steps", "5")
    assert code == 1 and "max_steps" in err


def test_cpa():
    code, out, _ = call("attack", "cpa", "--key-oracle", "7,200", "--size", "256")
    assert code == 0
    assert "queries: 3" in out and "T=7 S=200 (period m=192)" in out


def test_timing():
    code, out, _ = call("attack", "timing", "--key-oracle", "7,3", "--sizes", "64,128,256")
    assert code == 0 and "estimated_T=7" in out


def test_report_keyspace():
    code, out, _ = call("report", "--keyspace", "512")
    assert code == 0 and "m=384 Ks=147456 (~2^17.17)" in out
    code, out, _ = call("report", "--keyspace", "144,256", "--csv")
    rows = out.strip().splitlines()
    assert rows[0].startswith("N,m,Ks") and rows[1].startswith("144,12,4608")


def test_report_dictionary():
    code, out, _ = call("report", "--dictionary", "--csv")
    assert code == 0
    assert "3,192,1/2,0.5000" in out and "16,64,1/6,0.1667" in out


def test_fixture_command(tmp_path):
    assert call("fixture", "camera64", "--out", str(tmp_path / "a.pgm"))[0] == 0
    assert np.array_equal(load_pgm(tmp_path / "a.pgm"), load_photo("camera64"))
    assert call("fixture", "noise:3", "--size", "8", "--out", str(tmp_path / "b.pgm"))[0] == 0
    first = (tmp_path / "b.pgm").read_bytes()
    call("fixture", "noise:3", "--size", "8", "--out", str(tmp_path / "b.pgm"))
    assert (tmp_path / "b.pgm").read_bytes() == first
    assert call("fixture", "noise", "--out", str(tmp_path / "c.pgm"))[0] == 2


@pytest.mark.parametrize("argv", [
    ["encrypt", "--in", "missing.pgm", "--out", "x.pgm", "--key", "1,2"],
    ["encrypt", "--in", "x", "--out", "y", "--key", "1"],
    ["report", "--keyspace", "4", "--dictionary"],
    ["report"],
    ["attack", "brute", "--in", "x", "--bogus"],
    ["attack", "cpa", "--key-oracle", "1,2", "--size", "0"],
    [],
])
def test_usage_errors(argv):
    code, _, err = call(*argv)
    assert code == 2


def test_malformed_pgm_is_usage_error(tmp_path):
    bad = tmp_path / "bad.pgm"
    bad.write_bytes(b"P2\n2 2\n255\n0 0 0 0")
    code, _, err = call("encrypt", "--in", str(bad), "--out", str(tmp_path / "o.pgm"), "--key", "1,1")
    assert code == 2 and "P5" in err


def test_unknown_scorer(files):
    d, p = files
    assert call("attack", "brute", "--in", str(p), "--scorer", "entropy")[0] == 2


def test_reproducible_outputs(files):
    d, p = files
    call("encrypt", "--in", str(p), "--out", str(d / "a.pgm"), "--key", "3,4")
    call("encrypt", "--in", str(p), "--out", str(d / "b.pgm"), "--key", "3,4")
    assert (d / "a.pgm").read_bytes() == (d / "b.pgm").read_bytes()
    r1 = call("report", "--keyspace", "124,377")[1]
    assert r1 == call("report", "--keyspace", "124,377")[1]
