import pytest

from absq.cli import SpecError, build_state, main, parse_spec, table3_rows, table4_rows


class TestSpecGrammar:
    def test_parse_name_only(self):
        assert parse_spec("ghzw") == ("ghzw", {})

    def test_parse_params(self):
        name, params = parse_spec("acin:lambda=0.9,theta=0.7853981633974483")
        assert name == "acin"
        assert params["lambda"] == pytest.approx(0.9)

    def test_error_reports_position(self):
        with pytest.raises(SpecError, match="position"):
            parse_spec("acin:lambda")
        with pytest.raises(SpecError, match="position"):
            parse_spec("acin:lambda=abc")

    def test_unknown_state(self):
        with pytest.raises(SpecError, match="unknown state"):
            build_state("nope:p=1")

    def test_missing_parameter(self):
        with pytest.raises(SpecError, match="needs parameters"):
            build_state("iso:d=3")

    def test_builds_every_family(self):
        for spec in (
            "pure-schmidt:theta=0.8",
            "depolarized-schmidt:theta=0.8,p=0.4",
            "acin:lambda=0.9,theta=0.785",
            "iso:d=3,beta=0.5",
            "acin3:x0=0.6,x1=0.8,x2=0,x3=0,x4=0,theta=1.0",
            "ghzw:p=0.3",
            "bell:index=2",
        ):
            build_state(spec)


class TestClassifyCommand:
    def test_depolarized_schmidt_verdicts(self, capsys):
        code = main(
            [
                "classify",
                "--state", "pure-schmidt:theta=0.7854",
                "--channel", "global-depolarizing:p=0.5",
            ]
        )
        out = capsys.readouterr().out
        assert code == 0
        # channel weight 0.5 leaves surviving weight 0.5: lambda_max 0.625
        assert "AFEF     False" in out
        assert "0.625" in out
        assert "ACVENN   True" in out

    def test_maximally_mixed_all_member(self, capsys):
        code = main(["classify", "--state", "iso:d=3,beta=0"])
        out = capsys.readouterr().out
        assert code == 0
        assert "False" not in out

    def test_ghzw_marginal(self, capsys):
        code = main(["classify", "--state", "ghzw:p=0.5", "--marginal", "23"])
        out = capsys.readouterr().out
        assert code == 0
        assert "ACRE2NN True" in out

    def test_tripartite_pure_marginal(self, capsys):
        # GHZ amplitudes: any two-qubit marginal has purity exactly 1/2,
        # an inclusive-boundary membership for both verdict routes
        code = main(
            [
                "classify",
                "--state",
                "acin3:x0=0.7071067811865476,x1=0,x2=0,x3=0,x4=0.7071067811865476,theta=0.3",
                "--marginal", "13",
            ]
        )
        out = capsys.readouterr().out
        assert code == 0
        assert "ACRE2NN True" in out
        assert "direct verdict True" in out

    def test_csv_output(self, tmp_path, capsys):
        path = tmp_path / "report.csv"
        code = main(["classify", "--state", "bell:index=0", "--csv", str(path)])
        capsys.readouterr()
        assert code == 0
        lines = path.read_text().splitlines()
        assert lines[0] == "criterion,member,witness"
        assert any(line.startswith("afef,false,1") for line in lines)

    def test_bad_spec_exits_nonzero(self, capsys):
        code = main(["classify", "--state", "iso:d=3,beta=9"])
        err = capsys.readouterr().err
        assert code == 1
        assert "error" in err

    def test_usage_error_exit_code(self):
        with pytest.raises(SystemExit) as exc:
            main(["classify"])  # missing --state
        assert exc.value.code == 2


class TestTableCommands:
    def test_table2(self, tmp_path, capsys):
        path = tmp_path / "t2.csv"
        code = main(["table2", "--out", str(path), "--points", "401"])
        capsys.readouterr()
        assert code == 0
        lines = path.read_text().splitlines()
        # 4 channels x 2 criteria, depolarizing doubled for both side readings
        assert len(lines) == 1 + 10
        rows = {}
        for line in lines[1:]:
            f = line.split(",")
            rows[(f[0], f[1], f[2])] = f
        bf = rows[("bit_flip", "ac", "2")]
        assert float(bf[4]) == pytest.approx(0.0890506, abs=1e-4)
        assert float(bf[5]) == pytest.approx(0.910949, abs=1e-4)
        assert float(bf[8]) < 1e-4 and float(bf[9]) < 1e-4
        pf = rows[("phase_flip", "af", "2")]
        assert float(pf[4]) == pytest.approx(1 / 3, abs=1e-4)
        dep = rows[("depolarizing", "ac", "2")]
        assert dep[3] == "false"  # computed interval is nonempty, flagged as such

    def test_table3(self, tmp_path, capsys):
        path = tmp_path / "t3.csv"
        code = main(["table3", "--out", str(path)])
        capsys.readouterr()
        assert code == 0
        lines = path.read_text().splitlines()
        assert lines[0] == "d,beta,lambda_lo,ref,delta"
        assert len(lines) == 5
        for line in lines[1:]:
            assert float(line.split(",")[4]) < 1e-4

    def test_table4(self, tmp_path, capsys):
        path = tmp_path / "t4.csv"
        code = main(["table4", "--out", str(path)])
        capsys.readouterr()
        assert code == 0
        for line in path.read_text().splitlines()[1:]:
            assert float(line.split(",")[5]) < 1e-3


class TestSwapScanCommand:
    def test_global_depolarizing_success_region(self, tmp_path, capsys):
        path = tmp_path / "scan.csv"
        code = main(
            ["swap-scan", "--family", "global-depolarizing", "--resolution", "7", "--out", str(path)]
        )
        out = capsys.readouterr().out
        assert code == 0
        lines = path.read_text().splitlines()
        assert lines[0].startswith("p1,theta1,theta2,S_ab,S_bc")
        assert len(lines) == 1 + 7**3
        assert "success points" in out
        # the default operating point admits retrievals even on this grid
        assert sum(line.endswith(",true") for line in lines[1:]) > 0

    def test_amplitude_damping_success_region(self, tmp_path, capsys):
        path = tmp_path / "scan.csv"
        code = main(
            ["swap-scan", "--family", "amplitude-damping", "--resolution", "5", "--out", str(path)]
        )
        capsys.readouterr()
        assert code == 0
        lines = path.read_text().splitlines()
        assert lines[0].startswith("p1,p2,p3,S_ab,S_bc")
        assert sum(line.endswith(",true") for line in lines[1:]) > 0

    def test_phase_damping_refused(self, capsys):
        code = main(["swap-scan", "--family", "phase-damping", "--out", "unused.csv"])
        err = capsys.readouterr().err
        assert code == 2
        assert "retrieve" in err

    def test_reproducible_byte_identical(self, tmp_path, capsys):
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        for path in (a, b):
            main(["swap-scan", "--family", "amplitude-damping", "--resolution", "4", "--out", str(path)])
            capsys.readouterr()
        assert a.read_bytes() == b.read_bytes()


class TestTableRowHelpers:
    def test_table3_matches_known_boundaries(self):
        rows = table3_rows()
        assert [r["d"] for r in rows] == [2, 3, 4, 5]
        for r in rows:
            assert r["delta"] < 1e-4

    def test_table4_beta_columns(self):
        rows = table4_rows()
        assert rows[0]["beta_lo"] == pytest.approx(-0.125)
        assert all(r["beta_hi"] == 1.0 for r in rows)
