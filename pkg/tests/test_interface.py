import json
import re
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from sextor.errors import ParseError
from sextor.interface.cli import main
from sextor.interface.fixtures import (CurveRecord, Expectation, load_fixtures, parse_ainvs, parse_curves,
                                       parse_expectations, serialize_curves, serialize_expectations)
from sextor.interface.report import render


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def unflatten(text):
    """Rebuild a nested payload from the text format's `path: value` lines."""
    root = {}
    for line in text.splitlines():
        path, _, value = line.partition(": ")
        keys = re.findall(r"[^.\[\]]+|\[\d+\]", path)
        node = root
        for i, k in enumerate(keys):
            key = int(k[1:-1]) if k.startswith("[") else k
            if i == len(keys) - 1:
                node[key] = json.loads(value)
            else:
                # lists are rebuilt as int-keyed dicts, converted afterwards
                node = node.setdefault(key, {})
    return _lists(root)


def _lists(node):
    if isinstance(node, dict):
        if node and all(isinstance(k, int) for k in node):
            return [_lists(node[i]) for i in range(len(node))]
        return {k: _lists(v) for k, v in node.items()}
    return node


class TestTorsionCommand:
    def test_curve(self, capsys):
        out = run_json(capsys, "torsion", "--curve", "0,-1,1,-10,-20")
        assert out["torsion"]["structure"] == "5"

    def test_label(self, capsys):
        out = run_json(capsys, "torsion", "--label", "17a1")
        assert out["torsion"]["structure"] == "4"
        assert out["curve"]["label"] == "17a1"

    def test_singular(self, capsys):
        code, out, err = run(capsys, "torsion", "--curve", "0,0,0,0,0")
        assert code == 3 and out == ""

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "torsion", "--curve", "0,1,x")
        assert code == 2

    def test_unknown_label(self, capsys):
        code, _, _ = run(capsys, "torsion", "--label", "99zz9")
        assert code == 2


class TestTorsionExt:
    def test_50a4(self, capsys):
        out = run_json(capsys, "torsion-ext", "--label", "50a4", "--field=-5,0,0,0,0,0,1")
        assert out["torsion"]["structure"] == "15"
        assert out["field"]["degree"] == 6

    def test_1728e3(self, capsys):
        out = run_json(capsys, "torsion-ext", "--label", "1728e3", "--field=6,0,-3,0,0,0,1")
        assert out["torsion"]["structure"] == "2,18"

    def test_reducible_field(self, capsys):
        code, _, _ = run(capsys, "torsion-ext", "--label", "11a1", "--field=-1,0,1")
        assert code == 4

    def test_degree_not_dividing_six(self, capsys):
        code, _, _ = run(capsys, "torsion-ext", "--label", "11a1", "--field=-2,0,0,0,1")
        assert code == 4


class TestConfigs:
    def test_11a2(self, capsys):
        out = run_json(capsys, "configs", "--label", "11a2", "--degree", "6")
        assert [e["structure"] for e in out["configuration"]["entries"]] == ["2", "2,2"]
        assert out["configuration"]["rules"]["failed"] == []

    def test_50b1(self, capsys):
        out = run_json(capsys, "configs", "--label", "50b1")
        assert sorted(e["structure"] for e in out["configuration"]["entries"]) == ["10", "15", "15", "2,10", "30"]

    def test_26b1(self, capsys):
        out = run_json(capsys, "configs", "--label", "26b1")
        assert [e["structure"] for e in out["configuration"]["entries"]] == ["14", "2,14"]

    def test_bad_degree(self, capsys):
        code, _, _ = run(capsys, "configs", "--label", "11a2", "--degree", "4")
        assert code == 2


class TestAnalyze:
    def test_2450ba1(self, capsys):
        out = run_json(capsys, "analyze", "--label", "2450ba1")
        assert 7 not in out["isogeny_levels"]
        assert "7Ns.2.1" in out["images"]["7"]["candidates"]

    def test_cm_curve(self, capsys):
        out = run_json(capsys, "analyze", "--curve", "0,0,0,-1,0")
        assert out["cm"] is True
        assert out["images"]["2"]["candidates"] == ["2Cs"]

    def test_50a3(self, capsys):
        out = run_json(capsys, "analyze", "--label", "50a3")
        assert {3, 5, 15} <= set(out["isogeny_levels"])


class TestVerifyCorpus:
    def test_table4_subset(self, capsys):
        out = run_json(capsys, "verify-corpus", "--scope", "table4", "--labels", "50a4,27a2,1728e3")
        assert out["summary"]["failed"] == 0 and out["summary"]["total"] >= 3

    @pytest.mark.slow
    def test_table6_subset(self, capsys):
        out = run_json(capsys, "verify-corpus", "--scope", "table6",
                       "--labels", "11a1,11a2,50a3,50a4,50b1,26b1,49a1,17a1")
        s = out["summary"]
        assert (s["failed"], s["h_statistic"], s["h_attained_by"]) == (0, 9, ["50a4"])

    def test_corrupted_fixture(self, capsys, tmp_path):
        good = load_fixtures()
        lines = serialize_curves(good.curves.values()).splitlines()
        lines.insert(3, "11a9 : 0,1,oops,0,0")
        (tmp_path / "curves.txt").write_text("\n".join(lines) + "\n")
        (tmp_path / "expectations.tsv").write_text(serialize_expectations(good.expectations))
        code, out, err = run(capsys, "verify-corpus", "--fixtures", str(tmp_path), "--scope", "base",
                             "--labels", "11a1")
        assert code == 2
        assert "line 4" in err

    def test_mismatch_exit_code(self, capsys, tmp_path):
        good = load_fixtures()
        (tmp_path / "curves.txt").write_text(serialize_curves(good.curves.values()))
        rows = [r for r in good.expectations if r.label != "11a1" or r.source != "base"]
        rows.append(Expectation("11a1", 1, (), ("7",), "base"))
        (tmp_path / "expectations.tsv").write_text(serialize_expectations(rows))
        code, out, _ = run(capsys, "verify-corpus", "--fixtures", str(tmp_path), "--scope", "base",
                           "--labels", "11a1")
        assert code == 5
        assert json.loads(out)["summary"]["failed"] == 1

    def test_environment_variable(self, capsys, tmp_path, monkeypatch):
        (tmp_path / "curves.txt").write_text("11a1 : 0,-1,1,-10,-20\n")
        (tmp_path / "expectations.tsv").write_text("11a1\t1\t-\t5\tbase\n")
        monkeypatch.setenv("SEXTOR_FIXTURES", str(tmp_path))
        out = run_json(capsys, "verify-corpus", "--scope", "base")
        assert out["summary"]["total"] == 1


class TestTables:
    def test_all(self, capsys):
        out = run_json(capsys, "tables")
        assert len(out["tables"]["phi1"]) == 15
        assert out["tables"]["two_primary"]["4 -> 16"] is None

    def test_one(self, capsys):
        out = run_json(capsys, "tables", "images")
        assert list(out["tables"]) == ["images"]

    def test_unknown(self, capsys):
        code, _, _ = run(capsys, "tables", "nope")
        assert code == 2


class TestOutput:
    @pytest.mark.parametrize("argv", [
        ("torsion", "--label", "11a1"),
        ("torsion-ext", "--label", "50a4", "--field=-5,0,0,0,0,0,1"),
        ("analyze", "--label", "26b1"),
        ("configs", "--label", "11a2"),
    ])
    def test_text_and_json_carry_the_same_data(self, capsys, argv):
        as_json = run_json(capsys, *argv)
        code, text, _ = run(capsys, *argv, "--format", "text")
        assert code == 0
        assert unflatten(text) == as_json

    def test_byte_stable_across_processes(self):
        cmd = [sys.executable, "-m", "sextor", "configs", "--label", "50a3"]
        a = subprocess.run(cmd, capture_output=True, check=True).stdout
        b = subprocess.run(cmd, capture_output=True, check=True).stdout
        assert a == b and a

    def test_timing_only_on_request(self, capsys):
        assert "timing_secs" not in run_json(capsys, "torsion", "--label", "11a1")
        assert "timing_secs" in run_json(capsys, "torsion", "--label", "11a1", "--timing")

    def test_render_sorts_keys(self):
        out = render({"b": 1, "a": [1, {"d": 2, "c": 3}]}, "json")
        assert out.index('"a"') < out.index('"b"') and out.index('"c"') < out.index('"d"')
        assert render({"b": 1, "a": 2}, "text") == "a: 2\nb: 1\n"


class TestFixtures:
    def test_ainvs(self):
        assert parse_ainvs("0,-1,1,-10,-20") == (0, -1, 1, -10, -20)
        assert parse_ainvs("1/2, −3, 0, 0, 1")[1] == -3
        with pytest.raises(ParseError):
            parse_ainvs("1,2,3")

    def test_bundled_round_trip(self):
        fx = load_fixtures()
        curves = parse_curves(serialize_curves(fx.curves.values()))
        assert curves == fx.curves
        assert parse_expectations(serialize_expectations(fx.expectations)) == fx.expectations

    def test_error_has_line_number(self):
        with pytest.raises(ParseError) as info:
            parse_curves("# header\n11a1 : 0,-1,1,-10,-20\nbroken line\n")
        assert info.value.line == 3

    @settings(max_examples=50, deadline=None)
    @given(st.lists(st.tuples(st.from_regex(r"[1-9][0-9]{0,3}[a-z]{1,2}[1-9]", fullmatch=True),
                              st.tuples(*[st.fractions(min_value=-10 ** 6, max_value=10 ** 6,
                                                       max_denominator=50)] * 5)),
                    max_size=8, unique_by=lambda t: t[0]))
    def test_round_trip_property(self, items):
        from gmpy2 import mpq
        records = [CurveRecord(lab, tuple(mpq(f.numerator, f.denominator) for f in a)) for lab, a in items]
        text = serialize_curves(records)
        parsed = parse_curves(text)
        assert parse_curves(serialize_curves(parsed.values())) == parsed
        assert [parsed[r.label] for r in records] == records
