"""
End-to-end test suite for the qdom command line
Drives main.main() the way a user would and checks exit codes, reports and written files
"""

import json
import sys

import pytest

import main
from config import DEFAULT_NODE_LIMIT, load_settings


@pytest.fixture(autouse=True)
def isolated_output(tmp_path, monkeypatch):
    for name in ("QDOM_THREADS", "QDOM_NODE_LIMIT", "QDOM_SECONDS", "QDOM_PRUNE_BOUNDS", "QDOM_PRUNE_LINES"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("QDOM_OUTPUT_DIR", str(tmp_path))
    return tmp_path


def banner(title):
    print("\n" + "=" * 80)
    print(title)
    print("=" * 80)


def test_solve_small_board(capsys):
    """solve prints the witness and matches the reference table"""
    banner("TEST 1: SOLVE 5 x 12")
    code = main.main(["solve", "5", "12", "--expect", "--check-oracle"])
    out = capsys.readouterr().out
    print(out)
    assert code == main.EXIT_OK
    assert "gamma = 4" in out
    assert "Matches reference gamma 4" in out
    assert "Oracle skipped" in out


def test_solve_transposed_board_with_oracle(capsys):
    banner("TEST 2: SOLVE 6 x 4 WITH THE EXHAUSTIVE ORACLE")
    code = main.main(["solve", "6", "4", "--check-oracle"])
    out = capsys.readouterr().out
    assert code == main.EXIT_OK
    assert "normalized to 4x6" in out
    assert "Exhaustive oracle: 3 (agrees)" in out


def test_solve_with_exhausted_budget(capsys):
    banner("TEST 3: SOLVE WITH A TINY NODE BUDGET")
    code = main.main(["solve", "10", "10", "--nodes", "3"])
    out = capsys.readouterr().out
    assert code == main.EXIT_INCOMPLETE
    assert "gamma <= 10" in out


def test_solve_below_the_queen_cap(capsys):
    code = main.main(["solve", "8", "8", "--max-queens", "4"])
    out = capsys.readouterr().out
    assert code == main.EXIT_INCOMPLETE
    assert "No dominating set with at most 4 queens" in out
    assert "Proved lower bound: 5" in out


@pytest.mark.slow
def test_solve_eight_by_eleven(capsys):
    code = main.main(["solve", "8", "11", "--expect"])
    assert code == main.EXIT_OK
    assert "gamma = 6" in capsys.readouterr().out


def test_enumerate_writes_a_verifiable_file(isolated_output, capsys):
    banner("TEST 4: ENUMERATE 4 x 5, VERIFY, EXPORT HTML")
    assert main.main(["enumerate", "4", "5", "--html"]) == main.EXIT_OK
    out = capsys.readouterr().out
    assert "Equivalence classes:" in out
    written = isolated_output / "04x05_2Q.json"
    assert written.exists()
    assert (isolated_output / "04x05_2Q.html").exists()

    assert main.main(["verify", str(written)]) == main.EXIT_OK
    assert "All checks passed" in capsys.readouterr().out

    html_dir = isolated_output / "html"
    assert main.main(["export-html", str(written), "--out", str(html_dir)]) == main.EXIT_OK
    assert (html_dir / "04x05_2Q.html").exists()


def test_verify_reports_a_tampered_file(isolated_output, capsys):
    assert main.main(["enumerate", "4", "4"]) == main.EXIT_OK
    written = isolated_output / "04x04_2Q.json"
    doc = json.loads(written.read_text())
    doc["gamma"] = 1
    written.write_text(json.dumps(doc))
    capsys.readouterr()
    assert main.main(["verify", str(written)]) == main.EXIT_FAILED
    assert "FAILURES" in capsys.readouterr().out


def test_verify_reports_an_off_board_queen(isolated_output, capsys):
    assert main.main(["enumerate", "4", "4"]) == main.EXIT_OK
    written = isolated_output / "04x04_2Q.json"
    doc = json.loads(written.read_text())
    doc["solutions"][0]["queens"][0] = [9, 9]
    written.write_text(json.dumps(doc))
    capsys.readouterr()
    assert main.main(["verify", str(written)]) == main.EXIT_FAILED
    out = capsys.readouterr().out
    assert "FAILURES" in out
    assert "outside" in out


def test_enumerate_honors_pruning_flags(monkeypatch, capsys):
    seen = {}
    real = main.enumerate_min

    def recording(*args, **kwargs):
        seen.update(kwargs)
        return real(*args, **kwargs)

    monkeypatch.setattr(main, "enumerate_min", recording)
    assert main.main(["enumerate", "4", "4", "--no-bound-pruning", "--no-line-pruning"]) == main.EXIT_OK
    assert seen["prune_with_bounds"] is False
    assert seen["prune_with_lines"] is False
    out = capsys.readouterr().out
    assert "#1: " in out
    assert "images found" in out


def test_verify_rejects_garbage(isolated_output):
    garbage = isolated_output / "garbage.json"
    garbage.write_text("[1, 2")
    assert main.main(["verify", str(garbage)]) == main.EXIT_PARSE


def test_near_dominate(capsys):
    banner("TEST 5: ONE QUEEN ON 4 x 4")
    assert main.main(["near-dominate", "4", "4", "1"]) == main.EXIT_OK
    out = capsys.readouterr().out
    assert "Maximum coverage: 12/16" in out
    assert "4 concrete, 1 up to isometry" in out


def test_bounds_census_and_questions(capsys):
    banner("TEST 6: BOUND CENSUS")
    assert main.main(["bounds", "--census", "--questions"]) == main.EXIT_OK
    out = capsys.readouterr().out
    assert "Bound achieved: 41 pairs (28 with m <= 6)" in out
    assert "Census matches the expected figures" in out
    assert "[(11, 11)]" in out


def test_bounds_for_one_pair(capsys):
    assert main.main(["bounds", "--pair", "17", "10"]) == main.EXIT_OK
    out = capsys.readouterr().out
    assert "thm2: 7" in out
    assert "reference gamma: 8" in out


def test_construct_strong(isolated_output, capsys):
    banner("TEST 7: CENTRALLY STRONG SETS FOR (7, 4, 1)")
    code = main.main(["construct", "strong", "--m1", "7", "--n1", "4", "--k", "1", "--strict"])
    out = capsys.readouterr().out
    assert code == main.EXIT_OK
    assert "board 13 x 16; 8 queens" in out
    written = isolated_output / "13x16_8Q.json"
    assert written.exists()
    assert main.main(["verify", str(written), "--no-table"]) == main.EXIT_OK


def test_construct_zero_cover(isolated_output, capsys):
    banner("TEST 8: 0-COVER OF 13 x 19")
    assert main.main(["construct", "zero-cover", "--preset", "example1"]) == main.EXIT_OK
    out = capsys.readouterr().out
    assert "gamma(13x19) <= 10" in out
    assert (isolated_output / "13x19_10Q.json").exists()


def test_construct_family(isolated_output, capsys):
    assert main.main(["construct", "family", "--n1", "7", "--m1", "9"]) == main.EXIT_OK
    assert "11 queens" in capsys.readouterr().out
    assert (isolated_output / "19x21_11Q.json").exists()
    assert main.main(["construct", "family", "--n1", "1", "--m1", "5"]) == main.EXIT_OK
    assert (isolated_output / "07x11_5Q.json").exists()


def test_construct_with_augmentation(isolated_output, capsys):
    assert main.main(["construct", "family", "--n1", "1", "--m1", "5", "--augment", "2"]) == main.EXIT_OK
    out = capsys.readouterr().out
    assert "AUGMENTATION" in out
    assert "gamma(8x12) <= 6" in out
    assert "gamma(9x13) <= 7" in out


def test_construct_strong_prefer_wider_keeps_infeasible_params(isolated_output, capsys):
    code = main.main(["construct", "strong", "--m1", "5", "--n1", "1", "--k", "0", "--prefer-wider"])
    out = capsys.readouterr().out
    assert code == main.EXIT_OK
    assert "Widened" not in out
    assert "(m1, n1, k) = (5, 1, 0)" in out


def test_invalid_construction_parameters():
    assert main.main(["construct", "strong", "--m1", "4", "--n1", "4", "--k", "0"]) == main.EXIT_INVALID
    assert main.main(["construct", "family", "--n1", "5", "--m1", "6"]) == main.EXIT_INVALID
    assert main.main(["construct", "zero-cover", "--d1", "11"]) == main.EXIT_INVALID


def test_usage_errors_exit_with_invalid_code():
    with pytest.raises(SystemExit) as info:
        main.main(["solve", "eight", "11"])
    assert info.value.code == main.EXIT_INVALID


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("QDOM_THREADS", "3")
    monkeypatch.setenv("QDOM_SECONDS", "2.5")
    monkeypatch.setenv("QDOM_PRUNE_LINES", "off")
    settings = load_settings()
    assert settings.threads == 3
    assert settings.time_limit == 2.5
    assert not settings.prune_with_lines
    assert settings.node_limit == DEFAULT_NODE_LIMIT


def test_bad_settings_are_reported(monkeypatch, capsys):
    monkeypatch.setenv("QDOM_THREADS", "many")
    assert main.main(["bounds", "--pair", "4", "4"]) == main.EXIT_INVALID
    assert "QDOM_THREADS" in capsys.readouterr().err


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
