"""End-to-end CLI behaviour: exit codes, file formats, report schema."""

import json

import pytest

from gq416.cli import main
from gq416.verify import SUITES, VerificationContext, run_suites

FAST_SUITES = [
    "axioms",
    "srg",
    "lambda",
    "lemma-3.8",
    "system-star",
    "system-double-star",
    "system-triple-star",
    "replay-L3.4",
    "replay-L3.12",
    "replay-L3.13",
    "replay-L3.14",
    "replay-L3.15",
    "replay-R3.5",
]


@pytest.fixture(scope="module")
def geometry_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("cli") / "q54.txt"
    assert main(["construct", "-o", str(path)]) == 0
    return path


def test_construct_is_deterministic(geometry_file, tmp_path):
    again = tmp_path / "again.txt"
    assert main(["construct", "-o", str(again)]) == 0
    assert again.read_bytes() == geometry_file.read_bytes()


def test_construct_unwritable_path(tmp_path):
    assert main(["construct", "-o", str(tmp_path / "no" / "such" / "dir.txt")]) == 1


def _verify(geometry_file, *extra):
    args = ["verify", str(geometry_file)]
    for sid in FAST_SUITES:
        args += ["--suite", sid]
    return main(args + list(extra))


def test_verify_passes(geometry_file, capsys):
    assert _verify(geometry_file) == 0
    out = capsys.readouterr().out
    assert "overall: PASS" in out


def test_verify_sampled_fast_mode(geometry_file):
    args = ["verify", str(geometry_file), "--suite", "triads", "--suite", "coclique",
            "--sample", "2000", "--seed", "7"]
    assert main(args) == 0


def test_verify_json_report(geometry_file, tmp_path):
    out = tmp_path / "report.json"
    assert _verify(geometry_file, "--format", "json", "-o", str(out)) == 0
    report = json.loads(out.read_text())
    assert report["schema"] == 1
    assert report["status"] == "pass"
    assert set(report["entries"]) == set(FAST_SUITES)
    for entry in report["entries"].values():
        assert entry["status"] == "pass"
        assert entry["checked"] > 0
        assert entry["witnesses"] == []
        assert entry["seconds"] >= 0


def test_verify_missing_file(tmp_path):
    assert main(["verify", str(tmp_path / "absent.txt")]) == 1


def test_verify_corrupted_file_is_usage_error(geometry_file, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("not a geometry file\n")
    assert main(["verify", str(bad)]) == 1


def test_verify_broken_geometry_fails_checks(geometry_file, tmp_path):
    # drop the last line record and patch the header so the file still parses
    rows = geometry_file.read_text().splitlines()
    rows[0] = rows[0].replace("1105", "1104")
    last_l = max(i for i, row in enumerate(rows) if row.startswith("L "))
    del rows[last_l]
    broken = tmp_path / "broken.txt"
    broken.write_text("\n".join(rows) + "\n")
    rc = main(["verify", str(broken), "--suite", "axioms", "--format", "json",
               "-o", str(tmp_path / "r.json")])
    assert rc == 2
    report = json.loads((tmp_path / "r.json").read_text())
    assert report["status"] == "fail"
    assert report["entries"]["axioms"]["witnesses"]


def test_verify_unknown_suite(geometry_file):
    assert main(["verify", str(geometry_file), "--suite", "nope"]) == 1


def test_replay_all(capsys):
    assert main(["replay", "--all"]) == 0
    out = capsys.readouterr().out
    for lid in ("L3.4", "L3.12", "L3.13", "L3.14", "L3.15", "R3.5"):
        assert f"{lid}: PASS" in out


def test_replay_json(capsys):
    assert main(["replay", "L3.4", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["schema"] == 1
    assert payload["traces"][0]["lemma"] == "L3.4"
    assert payload["traces"][0]["passed"] is True


def test_replay_unknown_lemma():
    assert main(["replay", "L9.9"]) == 1


def test_usage_error():
    assert main([]) == 1
    assert main(["verify"]) == 1


def test_run_suites_matches_cli_report(q54):
    ctx = VerificationContext(q54)
    report = run_suites(ctx, ["system-star", "replay-L3.12"])
    assert report["status"] == "pass"
    assert set(report["entries"]) == {"system-star", "replay-L3.12"}
    with pytest.raises(ValueError):
        run_suites(ctx, ["nope"])
    assert set(FAST_SUITES) <= set(SUITES)
