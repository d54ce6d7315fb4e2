import json

import pytest

from fuzzycover import cli, sysio
from fuzzycover.exact import parse_scaled
from fuzzycover.model import ValidationError


class TestLoad:
    def test_price_fixture(self, price_file):
        assert price_file.universe.objects == tuple(f"x{i}" for i in range(1, 9))
        assert [c.name for c in price_file.system.coverings] == ["price"]
        covering = price_file.system.coverings[0]
        assert covering.gamma == parse_scaled("0.9")
        assert covering.member_names == ("high", "middle", "low")
        assert set(price_file.targets) == {"X", "A", "B"}

    def test_two_cov_fixture(self, two_cov_file):
        assert [c.name for c in two_cov_file.system.coverings] == ["price", "quality"]
        gammas = [c.gamma for c in two_cov_file.system.coverings]
        assert gammas == [parse_scaled("0.9"), parse_scaled("0.6")]

    def test_expert_union_equals_plain_covering(self, fixtures_dir, price_file):
        merged = sysio.load(str(fixtures_dir / "price_experts.json"))
        assert merged.system.coverings[0].members == price_file.system.coverings[0].members

    def test_rejects_bare_numbers(self, price_file):
        doc = json.loads(sysio.dumps(price_file))
        doc["targets"]["X"][0] = 0.6
        with pytest.raises(sysio.ParseError, match="quote"):
            sysio.loads(json.dumps(doc))

    def test_rejects_seven_digit_degrees(self, price_file):
        doc = json.loads(sysio.dumps(price_file))
        doc["targets"]["X"][0] = "0.1234567"
        with pytest.raises(sysio.ParseError, match="6 fractional digits"):
            sysio.loads(json.dumps(doc))

    def test_rejects_wrong_vector_length(self, price_file):
        doc = json.loads(sysio.dumps(price_file))
        doc["targets"]["X"] = doc["targets"]["X"][:-1]
        with pytest.raises(sysio.ParseError, match="length"):
            sysio.loads(json.dumps(doc))

    def test_rejects_invalid_json(self):
        with pytest.raises(sysio.ParseError, match="line 1"):
            sysio.loads("{not json", origin="buffer")

    def test_validation_failure_names_offender(self, price_file):
        doc = json.loads(sysio.dumps(price_file))
        doc["coverings"][0]["gamma"] = "0.95"
        with pytest.raises(ValidationError, match="x2"):
            sysio.loads(json.dumps(doc))


class TestRoundTrip:
    def test_save_load_identity(self, price_file, two_cov_file):
        for sf in (price_file, two_cov_file):
            text = sysio.dumps(sf)
            again = sysio.loads(text)
            assert again.system == sf.system
            assert again.targets == sf.targets

    def test_byte_stability(self, price_file):
        once = sysio.dumps(price_file)
        twice = sysio.dumps(sysio.loads(once))
        assert once == twice

    def test_degree_strings_survive(self, price_file):
        text = sysio.dumps(price_file)
        doc = json.loads(text)
        assert doc["coverings"][0]["members"][0]["degrees"] == [
            "1", "0.7", "0", "0.9", "0.9", "0", "0.9", "0.8",
        ]


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCliValidate:
    def test_valid_file(self, capsys, fixtures_dir):
        code, out, _ = run_cli(capsys, "validate", str(fixtures_dir / "price.json"))
        assert code == 0
        assert "valid" in out

    def test_invalid_gamma_exits_3(self, capsys, tmp_path, price_file):
        doc = json.loads(sysio.dumps(price_file))
        doc["coverings"][0]["gamma"] = "0.95"
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(doc))
        code, _, err = run_cli(capsys, "validate", str(bad))
        assert code == 3
        assert "x2" in err

    def test_malformed_json_exits_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{")
        code, _, err = run_cli(capsys, "validate", str(bad))
        assert code == 2
        assert "parse error" in err


class TestCliApprox:
    def test_prob_golden(self, capsys, fixtures_dir):
        code, out, _ = run_cli(
            capsys,
            "approx", str(fixtures_dir / "price.json"),
            "--op", "prob", "--alpha", "0.75", "--beta", "0.25", "--target", "X",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["lower"] == ["x3", "x6"]
        assert doc["upper"] == [f"x{i}" for i in range(1, 9)]
        assert doc["params"] == {"alpha": "0.75", "beta": "0.25"}
        p_by_object = {d["object"]: d["p"] for d in doc["diagnostics"]}
        assert p_by_object["x1"] == "1/2"
        assert p_by_object["x3"] == "25/33"

    def test_grade_golden(self, capsys, fixtures_dir):
        code, out, _ = run_cli(
            capsys,
            "approx", str(fixtures_dir / "price.json"),
            "--op", "grade", "--k", "2", "--target", "X",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["lower"] == ["x2", "x3", "x6", "x8"]
        assert doc["residual_mode"] == "residual"

    def test_alias_ops(self, capsys, fixtures_dir):
        code, out, _ = run_cli(
            capsys,
            "approx", str(fixtures_dir / "price.json"),
            "--op", "dq-any", "--alpha", "0.75", "--beta", "0.25", "--k", "2",
            "--target", "X",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["operator"] == "dq2"
        assert doc["lower"] == ["x2", "x3", "x6", "x8"]

    def test_unknown_op_exits_4(self, capsys, fixtures_dir):
        code, _, err = run_cli(
            capsys, "approx", str(fixtures_dir / "price.json"),
            "--op", "nope", "--target", "X",
        )
        assert code == 4
        assert "unknown operator" in err

    def test_gamma_override_rejected(self, capsys, fixtures_dir):
        code, _, err = run_cli(
            capsys, "approx", str(fixtures_dir / "price.json"),
            "--op", "prob", "--alpha", "0.75", "--beta", "0.25",
            "--target", "X", "--gamma", "0.8",
        )
        assert code == 4
        assert "gamma" in err

    def test_missing_target_exits_4(self, capsys, fixtures_dir):
        code, _, err = run_cli(
            capsys, "approx", str(fixtures_dir / "price.json"),
            "--op", "prob", "--alpha", "0.75", "--beta", "0.25",
        )
        assert code == 4

    def test_bad_threshold_order_exits_4(self, capsys, fixtures_dir):
        code, _, err = run_cli(
            capsys, "approx", str(fixtures_dir / "price.json"),
            "--op", "prob", "--alpha", "0.25", "--beta", "0.75", "--target", "X",
        )
        assert code == 4

    def test_csv_format(self, capsys, fixtures_dir):
        code, out, _ = run_cli(
            capsys,
            "approx", str(fixtures_dir / "price.json"),
            "--op", "prob", "--alpha", "0.75", "--beta", "0.25", "--target", "X",
            "--format", "csv",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("object,in_lower,in_upper")
        assert len(lines) == 9


class TestCliRegions:
    def test_prob_regions(self, capsys, fixtures_dir):
        code, out, _ = run_cli(
            capsys,
            "regions", str(fixtures_dir / "price.json"),
            "--op", "prob", "--alpha", "0.75", "--beta", "0.25", "--target", "X",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["regions"]["POS"] == ["x3", "x6"]
        assert doc["regions"]["BOU"] == ["x1", "x2", "x4", "x5", "x7", "x8"]
        assert doc["regions"]["NEG"] == []

    def test_grade_regions(self, capsys, fixtures_dir):
        code, out, _ = run_cli(
            capsys,
            "regions", str(fixtures_dir / "price.json"),
            "--op", "grade", "--k", "2", "--target", "X",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["regions"]["POS"] == ["x2", "x3", "x6", "x8"]
        assert doc["regions"]["UBO"] == ["x1", "x4", "x5", "x7"]
        assert doc["regions"]["LBO"] == []


class TestCliMg:
    def test_uniform_expansion(self, capsys, fixtures_dir):
        code, out, _ = run_cli(
            capsys,
            "mg", str(fixtures_dir / "two_cov.json"),
            "--op", "mg-prob1", "--alpha", "0.75", "--beta", "0.25", "--target", "X",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["lower"] == ["x3"]
        assert doc["params"]["alphas"] == "0.75,0.75"

    def test_explicit_vectors(self, capsys, fixtures_dir):
        code, out, _ = run_cli(
            capsys,
            "mg", str(fixtures_dir / "two_cov.json"),
            "--op", "mg-grade2", "--ks", "2,2", "--target", "X",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["lower"] == [f"x{i}" for i in range(1, 9)]

    def test_vector_length_mismatch_exits_4(self, capsys, fixtures_dir):
        code, _, err = run_cli(
            capsys,
            "mg", str(fixtures_dir / "two_cov.json"),
            "--op", "mg-grade1", "--ks", "2,2,2", "--target", "X",
        )
        assert code == 4
        assert "2 coverings" in err

    def test_alias(self, capsys, fixtures_dir):
        code, out, _ = run_cli(
            capsys,
            "mg", str(fixtures_dir / "two_cov.json"),
            "--op", "mg-dq-all", "--alpha", "0.75", "--beta", "0.25",
            "--k", "1", "--target", "X",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["operator"] == "mg-dq-all"
        assert doc["lower"] == ["x3"]


class TestCliNeigh:
    def test_json_dump(self, capsys, fixtures_dir):
        code, out, _ = run_cli(capsys, "neigh", str(fixtures_dir / "price.json"))
        assert code == 0
        doc = json.loads(out)
        assert doc["price"]["sigma"]["x1"] == "5.2"
        assert doc["price"]["rows"]["x3"] == ["0", "0.5", "0.9", "0", "0.5", "0.9", "0", "0.5"]

    def test_covering_selector(self, capsys, fixtures_dir):
        code, out, _ = run_cli(
            capsys, "neigh", str(fixtures_dir / "two_cov.json"), "--covering", "quality"
        )
        assert code == 0
        doc = json.loads(out)
        assert list(doc) == ["quality"]


class TestCliGen:
    def test_deterministic(self, capsys, fixtures_dir):
        args = ["gen", "--n", "8", "--m", "1", "--members", "3", "--gamma", "0.9", "--seed", "42"]
        code1, out1, _ = run_cli(capsys, *args)
        code2, out2, _ = run_cli(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2

    def test_output_validates(self, capsys, tmp_path):
        out_path = tmp_path / "gen.json"
        code, _, _ = run_cli(
            capsys, "gen", "--n", "10", "--m", "2", "--members", "4",
            "--gamma", "0.75", "--seed", "7", "--out", str(out_path),
        )
        assert code == 0
        code, out, _ = run_cli(capsys, "validate", str(out_path))
        assert code == 0
        assert "ok" in out

    def test_bad_sizes_exit_4(self, capsys):
        code, _, _ = run_cli(capsys, "gen", "--n", "0", "--gamma", "0.9")
        assert code == 4


class TestCliSweep:
    def test_grade_sweep_monotone_lower(self, capsys, fixtures_dir):
        code, out, _ = run_cli(
            capsys,
            "sweep", str(fixtures_dir / "price.json"),
            "--op", "grade", "--k", "0:6:0.5", "--target", "X",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "k,lower,upper,n_lower,n_upper"
        assert len(lines) == 14  # 0, 0.5, ..., 6
        previous = set()
        for line in lines[1:]:
            cells = line.split(",")
            lower = set(cells[1].split(";")) - {""}
            assert previous <= lower
            previous = lower

    def test_prob_sweep_skips_invalid_pairs(self, capsys, fixtures_dir):
        code, out, _ = run_cli(
            capsys,
            "sweep", str(fixtures_dir / "price.json"),
            "--op", "prob", "--alpha", "0:1:0.25", "--beta", "0:1:0.25",
            "--target", "X",
        )
        assert code == 0
        for line in out.strip().splitlines()[1:]:
            a, b = line.split(",")[:2]
            assert parse_scaled(a) >= parse_scaled(b)

    def test_malformed_grid_exits_4(self, capsys, fixtures_dir):
        code, _, err = run_cli(
            capsys,
            "sweep", str(fixtures_dir / "price.json"),
            "--op", "grade", "--k", "0:6", "--target", "X",
        )
        assert code == 4
        assert "grid" in err


class TestCliCheck:
    def test_fixture_file(self, capsys, fixtures_dir):
        code, out, _ = run_cli(capsys, "check", str(fixtures_dir / "two_cov.json"))
        assert code == 0
        assert "differential check ok" in out

    def test_random(self, capsys):
        code, out, _ = run_cli(capsys, "check", "--random", "--seed", "3", "--count", "200")
        assert code == 0
        assert "mismatches: 0" in out


class TestDeterminism:
    def test_repeated_results_identical(self, capsys, fixtures_dir):
        args = [
            "approx", str(fixtures_dir / "price.json"),
            "--op", "dq1", "--alpha", "0.75", "--beta", "0.25", "--k", "2",
            "--target", "X",
        ]
        _, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)
        assert out1 == out2
