"""Command line surface: formats, exit codes, determinism, cache."""

import json
import os
import pathlib
import subprocess
import sys

import pytest

from lrlab import LRElement, Partition, Subdivision, VerificationReport
from lrlab.cli import main, parse_partition
from lrlab.cli import UsageError
from lrlab.powercache import MAGIC, PowerCache
from lrlab.reports import ConeCertificate, ExponentSearch, TransferWitness

SRC = str(pathlib.Path(__file__).resolve().parent.parent / "src")


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_proc(*argv, env_extra=None):
    env = dict(os.environ)
    env["PYTHONPATH"] = SRC + os.pathsep + env.get("PYTHONPATH", "")
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run(
        [sys.executable, "-m", "lrlab", *argv],
        capture_output=True,
        env=env,
    )
    return proc.returncode, proc.stdout, proc.stderr


class TestParsing:
    def test_literals(self):
        assert parse_partition("[4,2,1]") == Partition([4, 2, 1])
        assert parse_partition("[]") == Partition()

    def test_rejects_garbage(self):
        for bad in ("4,2", "[4,2", "[a]", "[4 2]", "[1,2]"):
            with pytest.raises(UsageError):
                parse_partition(bad)


class TestMulAndPower:
    def test_mul_table(self, capsys):
        code, out = run_cli(capsys, "mul", "[2,1]", "[2,1]")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 7
        assert "[3,2,1] 2" in lines

    def test_mul_json_roundtrip(self, capsys):
        code, out = run_cli(capsys, "mul", "[2,1]", "[2,1]", "--l", "2", "--json")
        assert code == 0
        elem = LRElement.from_json(json.loads(out))
        assert elem.cap == 2 and elem[Partition([4, 2])] == 1

    def test_power_empty_result(self, capsys):
        code, out = run_cli(capsys, "power", "[1,1,1]", "2", "--l", "2")
        assert code == 0 and out == "empty\n"

    def test_budget_exit_code(self):
        code, out, err = run_proc(
            "power", "[3,2,1]", "6", env_extra={"LRLAB_BUDGET": "10"}
        )
        assert code == 3
        assert b"budget" in err.lower()


class TestSmallCommands:
    def test_dominance(self, capsys):
        assert run_cli(capsys, "dominance", "[3,1]", "[2,2]") == (0, "Greater\n")
        code, out = run_cli(capsys, "dominance", "[3,1]", "[2,2]", "--json")
        assert json.loads(out) == {"relation": "Greater"}

    def test_interpolate(self, capsys):
        code, out = run_cli(capsys, "interpolate", "[4]", "[2,2]")
        assert code == 0 and out.splitlines() == ["[4]", "[3,1]", "[2,2]"]
        code, out = run_cli(capsys, "interpolate", "[4]", "[2,2]", "--json")
        seq = json.loads(out)["sequence"]
        assert [Partition(p) for p in seq][1] == Partition([3, 1])

    def test_interpolate_incomparable_is_usage_error(self, capsys):
        assert main(["interpolate", "[3,3]", "[4,1,1]"]) == 2

    def test_gj_all(self, capsys):
        code, out = run_cli(capsys, "gj", "[2,1]", "--l", "3")
        assert code == 0
        assert out.splitlines() == [
            "J={(1,2,3)} G=[6,6,6]",
            "J={(1),(2,3)} G=[12,3,3]",
            "J={(1,2),(3)} G=[9,9]",
            "J={(1),(2),(3)} G=[12,6]",
        ]

    def test_gj_json(self, capsys):
        code, out = run_cli(capsys, "gj", "[2,1]", "--l", "2", "--mask", "1", "--json")
        data = json.loads(out)
        row = data["generators"][0]
        assert Subdivision(len(iv) for iv in row["subdivision"]) == Subdivision([1, 1])
        assert Partition(row["generator"]) == Partition([4, 2])

    def test_hj_by_columns(self, capsys):
        code, out = run_cli(
            capsys, "hj", "[2,1]", "--l", "3", "--mask", "3", "--beta", "2", "--delta", "1"
        )
        assert code == 0 and out == "m=1 n=3 H=[11,6,1]\n"

    def test_hj_out_of_range(self, capsys):
        assert main(["hj", "[2,1]", "--l", "2", "--mask", "1", "--beta", "2", "--delta", "1"]) == 2

    def test_hj_raw_mode(self, capsys):
        code, out = run_cli(
            capsys, "hj", "[2,1]", "--l", "2", "--mask", "1", "--m", "1", "--n", "2", "--json"
        )
        data = json.loads(out)
        assert data == {"m": 1, "n": 2, "partition": [3, 3]}

    def test_hj_mixed_modes_rejected(self, capsys):
        assert main(
            ["hj", "[2,1]", "--l", "2", "--mask", "1", "--m", "1", "--beta", "2"]
        ) == 2
        assert main(["hj", "[2,1]", "--l", "2", "--mask", "1"]) == 2


class TestVerifyCommand:
    def test_single_lemma_json(self, capsys):
        code, out = run_cli(
            capsys, "verify", "--lemma", "CHI", "--max-weight", "4", "--max-l", "2", "--json"
        )
        assert code == 0
        rep = VerificationReport.from_json(json.loads(out))
        assert rep.status == "PASS" and rep.lemma_id == "CHI"

    def test_text_line(self, capsys):
        code, out = run_cli(
            capsys, "verify", "--lemma", "PSEQ", "--max-weight", "5"
        )
        assert code == 0
        assert out.startswith("PSEQ: PASS (cases=")

    def test_needs_a_target(self, capsys):
        assert main(["verify"]) == 2

    def test_fail_report_exits_one(self, capsys, monkeypatch):
        import lrlab.cli as cli_mod

        broken = VerificationReport(
            lemma_id="CHI", bounds={}, cases_checked=1,
            failures=[{"reason": "injected"}],
        )
        monkeypatch.setattr(cli_mod, "verify_lemma", lambda *a, **k: broken)
        code, out = run_cli(capsys, "verify", "--lemma", "CHI")
        assert code == 1
        assert out.startswith("CHI: FAIL")

    def test_all_reduced(self, capsys):
        code, out = run_cli(
            capsys,
            "verify",
            "--all",
            "--max-weight",
            "3",
            "--max-l",
            "2",
            "--max-k",
            "1",
            "--max-weight-p",
            "3",
            "--max-shift",
            "2",
            "--json",
        )
        assert code == 0
        reports = [VerificationReport.from_json(r) for r in json.loads(out)["reports"]]
        assert len(reports) == 14 and all(r.passed for r in reports)


class TestSearchCommands:
    def test_nsearch_text(self, capsys):
        code, out = run_cli(capsys, "nsearch", "[2]", "--l", "2", "--nmax", "5")
        assert code == 0
        assert out == "threshold 2; fails at n=1 with B=[1,1]\n"

    def test_nsearch_json_roundtrip(self, capsys):
        code, out = run_cli(capsys, "nsearch", "[1,1]", "--l", "2", "--nmax", "4", "--json")
        res = ExponentSearch.from_json(json.loads(out))
        assert res.threshold == 1

    def test_cone_member(self, capsys):
        code, out = run_cli(capsys, "cone", "[2,2,2]", "[2,1]", "--l", "3")
        assert code == 0
        assert out == "member n=2\ndecomposition: {(1,2,3)}*1/3\n"

    def test_cone_not_member(self, capsys):
        code, out = run_cli(capsys, "cone", "[3,1]", "[2,1]", "--l", "3")
        assert code == 0 and out.startswith("not a member:")

    def test_cone_json_roundtrip(self, capsys):
        code, out = run_cli(capsys, "cone", "[4,2]", "[2,1]", "--l", "2", "--json")
        cert = ConeCertificate.from_json(json.loads(out))
        assert cert.member and cert.n == 2

    def test_transfer_text_and_json(self, capsys):
        code, out = run_cli(capsys, "transfer", "[2]", "[1,1]", "--d", "2")
        assert code == 0 and out == "t=2 M=1 N=1 supports 1 <= 3\n"
        code, out = run_cli(capsys, "transfer", "[1]", "[1,1]", "--d", "2", "--json")
        wit = TransferWitness.from_json(json.loads(out))
        assert wit.t == 1

    def test_transfer_hypothesis_exit(self, capsys):
        assert main(["transfer", "[1,1]", "[2]", "--d", "2"]) == 2

    def test_transfer_not_found_exit(self, capsys):
        assert main(["transfer", "[2]", "[1,1]", "--d", "2", "--tmax", "1"]) == 1


class TestCache:
    def test_power_cache_cycle(self, tmp_path, capsys):
        path = str(tmp_path / "powers.lrpow")
        code, first = run_cli(capsys, "power", "[2,1]", "4", "--l", "3", "--cache", path)
        assert code == 0
        text = pathlib.Path(path).read_text()
        assert text.startswith(MAGIC + "\n")
        code, second = run_cli(capsys, "power", "[2,1]", "4", "--l", "3", "--cache", path)
        assert second == first
        cache = PowerCache(path)
        assert cache.valid_header and len(cache) >= 4

    def test_cache_info(self, tmp_path, capsys):
        path = str(tmp_path / "powers.lrpow")
        run_cli(capsys, "power", "[2]", "3", "--cache", path)
        code, out = run_cli(capsys, "cache", path, "--json")
        data = json.loads(out)
        assert data["valid"] and data["version"] == MAGIC and data["entries"] >= 3

    def test_bad_magic_invalidates(self, tmp_path, capsys):
        path = tmp_path / "powers.lrpow"
        path.write_text("LRPOW0\njunk\n")
        code, out = run_cli(capsys, "cache", str(path))
        assert code == 0 and "invalid" in out
        # stale file is ignored and rewritten wholesale on the next save
        run_cli(capsys, "power", "[2]", "2", "--cache", str(path))
        assert path.read_text().startswith(MAGIC + "\n")
        assert PowerCache(str(path)).valid_header


class TestDeterminism:
    def test_verify_bytes_stable_across_threads(self):
        argv = ["verify", "--lemma", "CHI", "--max-weight", "4", "--max-l", "2", "--json"]
        runs = [
            run_proc(*argv, "--threads", "1"),
            run_proc(*argv, "--threads", "8"),
            run_proc(*argv, "--threads", "1"),
        ]
        assert all(code == 0 for code, _, _ in runs)
        outs = {out for _, out, _ in runs}
        assert len(outs) == 1

    def test_power_bytes_stable_across_threads(self):
        a = run_proc("power", "[2,1]", "4", "--l", "3", "--threads", "1")
        b = run_proc("power", "[2,1]", "4", "--l", "3", "--threads", "8")
        assert a == b and a[0] == 0
