"""Command-line interface: jobs, batch mode, formats, exit codes, figures."""

from __future__ import annotations

import importlib
import io
import json
import pathlib

import pytest

from swhsing import cli

GOLDEN = pathlib.Path(__file__).parent / "golden"

JOB_BS_ROOTS = (
    '{"exponents":[6,5],"perturbation":[{"m":[2,4],"c":"1"}],'
    '"command":"bs-roots"}'
)
JOB_SPECTRUM = '{"exponents":[4,4,4],"command":"spectrum"}'
JOB_LENGTH = (
    '{"exponents":[4,4,4],"perturbation":[{"m":[2,2,1],"c":"1"}],'
    '"command":"length","alpha":"1"}'
)


def run_cli(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


@pytest.mark.parametrize(
    "job, golden",
    [
        (JOB_BS_ROOTS, "bs_roots_plane.json"),
        (JOB_SPECTRUM, "spectrum_fermat.json"),
        (JOB_LENGTH, "length_quartic.json"),
    ],
)
def test_run_matches_golden_output(job, golden, capsys, monkeypatch):
    code, out = run_cli(["run"], capsys, stdin=job, monkeypatch=monkeypatch)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_golden_values_spot_check():
    spec = json.loads((GOLDEN / "spectrum_fermat.json").read_text())
    assert spec["mu"] == 27 and spec["pg"] == 4
    length = json.loads((GOLDEN / "length_quartic.json").read_text())
    assert length["length"] == 6
    roots = json.loads((GOLDEN / "bs_roots_plane.json").read_text())
    assert "19/30" in roots["root_exponents"]
    assert "49/30" not in roots["root_exponents"]


def test_direct_flags_equal_run_payload(capsys, monkeypatch):
    code, direct = run_cli(["spectrum", "-e", "4,4,4"], capsys)
    assert code == 0
    assert direct == (GOLDEN / "spectrum_fermat.json").read_text()

    code, perturbed = run_cli(
        ["length", "-e", "4,4,4", "-p", "2,2,1:1", "--alpha", "1"], capsys
    )
    assert code == 0
    assert perturbed == (GOLDEN / "length_quartic.json").read_text()


def test_run_from_file(tmp_path, capsys):
    path = tmp_path / "job.json"
    path.write_text(JOB_LENGTH)
    code = cli.main(["run", "--file", str(path)])
    out = capsys.readouterr().out
    assert code == 0
    assert json.loads(out)["length"] == 6


class TestBatch:
    LINES = "\n".join(
        [
            JOB_SPECTRUM,
            JOB_BS_ROOTS,
            '{"exponents":[1,5],"command":"spectrum"}',
            JOB_LENGTH,
            "not json at all",
        ]
    )

    def test_order_and_first_error_code(self, capsys, monkeypatch):
        code, out = run_cli(
            ["batch"], capsys, stdin=self.LINES, monkeypatch=monkeypatch
        )
        assert code == 2
        lines = out.splitlines()
        assert len(lines) == 5
        assert json.loads(lines[0])["mu"] == 27
        assert "root_exponents" in json.loads(lines[1])
        assert json.loads(lines[2])["error"]["type"] == "validation"
        assert json.loads(lines[3])["length"] == 6
        assert "bad JSON" in json.loads(lines[4])["error"]["message"]

    def test_parallel_output_is_byte_identical(self, capsys, monkeypatch):
        _, serial = run_cli(
            ["batch", "--jobs", "1"],
            capsys,
            stdin=self.LINES,
            monkeypatch=monkeypatch,
        )
        _, parallel = run_cli(
            ["batch", "--jobs", "4"],
            capsys,
            stdin=self.LINES,
            monkeypatch=monkeypatch,
        )
        assert serial == parallel

    def test_jobs_must_be_positive(self, capsys, monkeypatch):
        code, out = run_cli(
            ["batch", "--jobs", "0"],
            capsys,
            stdin="",
            monkeypatch=monkeypatch,
        )
        assert code == 2
        assert "--jobs" in out


class TestExitCodes:
    def test_validation_error_is_2(self, capsys):
        code = cli.main(["spectrum", "-e", "1,5"])
        payload = json.loads(capsys.readouterr().out)
        assert code == 2
        assert payload["error"]["type"] == "validation"

    def test_path_unavailable_is_3(self, capsys):
        code = cli.main(
            [
                "check-thm2",
                "-e",
                "4,4,4",
                "-p",
                "2,2,1:1",
                "-p",
                "2,1,2:1",
                "--alpha",
                "1",
                "--r",
                "1",
            ]
        )
        payload = json.loads(capsys.readouterr().out)
        assert code == 3
        assert payload["error"]["type"] == "path-unavailable"

    def test_cutoff_exhausted_is_4(self, capsys):
        code = cli.main(["expand", "-e", "100,100", "-m", "0,0"])
        payload = json.loads(capsys.readouterr().out)
        assert code == 4
        assert payload["error"]["type"] == "cutoff-exhausted"

    def test_missing_command_in_job_is_2(self, capsys, monkeypatch):
        code, out = run_cli(
            ["run"],
            capsys,
            stdin='{"exponents":[6,5]}',
            monkeypatch=monkeypatch,
        )
        assert code == 2
        assert json.loads(out)["error"]["type"] == "validation"


class TestTsv:
    def test_spectrum_rows(self, capsys):
        code = cli.main(["spectrum", "-e", "6,5", "--format", "tsv"])
        out = capsys.readouterr().out
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "alpha\tmult"
        assert lines[1] == "11/30\t1"
        assert len(lines) == 21

    def test_length_row(self, capsys):
        code = cli.main(
            ["length", "-e", "4,4,4", "--alpha", "1", "--format", "tsv"]
        )
        out = capsys.readouterr().out
        assert code == 0
        assert out.splitlines()[1] == "1\t3\t1\t1\t5\tweighted-homogeneous"

    def test_run_respects_tsv(self, capsys, monkeypatch):
        code, out = run_cli(
            ["run", "--format", "tsv"],
            capsys,
            stdin=JOB_LENGTH,
            monkeypatch=monkeypatch,
        )
        assert code == 0
        assert out.splitlines()[0].startswith("alpha\tnu_tilde")


class TestFigures:
    def test_spectrum_figure(self, tmp_path, capsys):
        code = cli.main(
            ["spectrum", "-e", "4,4,4", "--figures", str(tmp_path)]
        )
        capsys.readouterr()
        assert code == 0
        assert (tmp_path / "spectrum.png").stat().st_size > 0

    def test_roots_figure(self, tmp_path, capsys):
        code = cli.main(
            [
                "bs-roots",
                "-e",
                "6,5",
                "-p",
                "2,4:1",
                "--figures",
                str(tmp_path),
            ]
        )
        capsys.readouterr()
        assert code == 0
        assert (tmp_path / "roots.png").stat().st_size > 0

    def test_verify_figure(self, tmp_path, capsys):
        code = cli.main(
            ["verify-paper", "--no-engine", "--figures", str(tmp_path)]
        )
        capsys.readouterr()
        assert code == 0
        assert (tmp_path / "verify.png").stat().st_size > 0


class TestVerifyPaper:
    def test_no_engine_skips_engine_anchors(self, capsys):
        code = cli.main(["verify-paper", "--no-engine"])
        payload = json.loads(capsys.readouterr().out)
        assert code == 0
        assert payload["all_pass"] is True
        statuses = {a["name"]: a["status"] for a in payload["anchors"]}
        assert statuses["plane-curve-spectrum"] == "pass"
        assert statuses["engine-cancel-a"] == "skip"
        assert payload["counts"] == {"pass": 7, "skip": 5}

    def test_battery_detects_a_corrupted_kernel(self, capsys, monkeypatch):
        shifts_mod = importlib.import_module("swhsing.shifts")
        real = shifts_mod.shift

        def corrupt(s, nu, j_bound=None):
            r = real(s, nu, j_bound)
            return 0 if nu == (5, 4) else r

        monkeypatch.setattr(shifts_mod, "shift", corrupt)
        code = cli.main(["verify-paper", "--no-engine"])
        payload = json.loads(capsys.readouterr().out)
        assert code == 1
        assert payload["all_pass"] is False
        statuses = {a["name"]: a["status"] for a in payload["anchors"]}
        assert statuses["plane-curve-shift"] == "fail"
        # Anchors that do not touch the corrupted kernel still pass.
        assert statuses["plane-curve-spectrum"] == "pass"
