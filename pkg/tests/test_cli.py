from mstable.cli import main
from mstable.tau_text import load_cache


def test_compute_tau(capsys):
    assert main(["compute", "--m", "2", "--tau", "t0^2 t1 t3"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ["value = 1/6", "scaled24 = 4"]


def test_compute_exponent_list(capsys):
    assert main(["compute", "--m", "3", "--d", "5,0,0,0,0"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ["value = -1/2", "scaled24 = -12"]


def test_compute_validation_exit_code(capsys):
    assert main(["compute", "--m", "3", "--d", "4,0,0"]) == 2
    assert "error:" in capsys.readouterr().err
    assert main(["compute", "--m", "1", "--tau", "t0 t2", "--d", "2,0"]) == 2
    assert main(["compute", "--m", "1", "--tau", "t-1"]) == 2


def test_compute_cache_round_trip(tmp_path, capsys):
    cache = tmp_path / "cache.txt"
    assert main(["compute", "--m", "2", "--d", "4,0,0,0", "--cache", str(cache)]) == 0
    capsys.readouterr()
    records = {(r.m, r.exponents): r.value for r in load_cache(str(cache))}
    assert records[(2, (4, 0, 0, 0))] == 0
    # second run must reuse the file without complaint
    assert main(["compute", "--m", "2", "--d", "4,0,0,0", "--cache", str(cache)]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "value = 0"


def test_compute_corrupt_cache(tmp_path, capsys):
    cache = tmp_path / "cache.txt"
    cache.write_text("junk\n", encoding="utf-8")
    assert main(["compute", "--m", "2", "--d", "4,0,0,0", "--cache", str(cache)]) == 2
    assert "line 1" in capsys.readouterr().err


def test_table_tsv(capsys):
    assert main(["table", "--max-n", "3", "--scale24"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "m\tn\tword\tvalue"
    assert "2\t3\tt0^2 t3\t2" in lines


def test_crosscheck(capsys):
    assert main(["crosscheck", "--n", "4", "--m", "2"]) == 0
    out = capsys.readouterr().out
    assert "t0^3 t4 = 0" in out
    assert "MISMATCH" not in out


def test_oracle_subcommand(capsys):
    assert (
        main(
            [
                "oracle",
                "--variant", "c",
                "--blocks", "2",
                "--block-d", "0,0",
                "--m", "2",
                "--d", "3",
                "--c0", "1/12",
            ]
        )
        == 0
    )
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "symbolic = -1/12"
    assert out[1] == "closed   = -1/12"
    assert out[2] == "agree    = yes"


def test_oracle_dimension_mismatch_exit(capsys):
    assert (
        main(
            [
                "oracle",
                "--variant", "a",
                "--blocks", "3",
                "--block-d", "0,0,0",
                "--m", "1",
                "--d", "3",
                "--c0", "1/24",
            ]
        )
        == 2
    )
    assert "dimension mismatch" in capsys.readouterr().err


def test_verify_paths_only(capsys):
    assert main(["verify", "--paths", "--max-n", "4"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("paths: PASS")
