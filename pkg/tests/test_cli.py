import io
import json
import subprocess
import sys
from contextlib import redirect_stdout

from rncgeom.cli import (
    EXIT_FAIL,
    EXIT_INCONCLUSIVE,
    EXIT_PASS,
    EXIT_USAGE,
    main,
)


def run(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


SCROLL = '{"family":"Scroll","params":{"a":[1,1]}}'


class TestPiTable:
    def test_rows_and_identity_column(self):
        code, out = run(["pi-table", "--r", "2", "--n", "2", "--q", "3", "--format", "json"])
        assert code == EXIT_PASS
        doc = json.loads(out)
        row = doc["rows"][0]
        assert row == {"r": 2, "n": 2, "q": 3, "pi": 19, "castelnuovo": 19}

    def test_identity_column_always_matches(self):
        code, out = run(["pi-table", "--r", "1:3", "--n", "2:5", "--q", "1:9", "--format", "json"])
        doc = json.loads(out)
        assert all(r["pi"] == r["castelnuovo"] for r in doc["rows"])

    def test_minimal_row(self):
        code, out = run(["pi-table", "--r", "3", "--n", "4", "--q", "3", "--format", "json"])
        doc = json.loads(out)
        assert doc["rows"][0]["pi"] == 3 + 4 - 1

    def test_table_text_format_golden(self):
        code, out = run(["pi-table", "--r", "2", "--n", "3", "--q", "2:3"])
        assert code == EXIT_PASS
        assert out.splitlines() == [
            "  r   n    q       pi  castelnuovo",
            "  2   3    2        4            4",
            "  2   3    3        7            7",
        ]


class TestEnumerate:
    def test_scroll_index_set(self):
        code, out = run(
            ["enumerate", "--index-set", '{"type":"scroll","a":[1,1],"rho":1,"chi":0}',
             "--format", "json"]
        )
        assert code == EXIT_PASS
        doc = json.loads(out)
        assert doc["cardinality"] == 3 and doc["pi_matches"]

    def test_cone_index_set(self):
        code, out = run(
            ["enumerate", "--index-set", '{"type":"cone","r":2,"q":4}', "--format", "json"]
        )
        doc = json.loads(out)
        assert doc["cardinality"] == 6 and doc["pi_matches"]

    def test_cone_identity_flag(self):
        code, out = run(
            ["enumerate", "--index-set",
             '{"type":"scroll","a":[3,0,0],"rho":2,"chi":-1}', "--format", "json"]
        )
        doc = json.loads(out)
        assert doc["flags"]["cone_identity"] is True


class TestVerifyCommand:
    def test_pass_exit_code(self):
        code, _ = run(["verify", "--spec", SCROLL, "--trials", "2", "--seed", "3"])
        assert code == EXIT_PASS

    def test_byte_identical_json(self):
        argv = ["verify", "--spec", SCROLL, "--trials", "3", "--seed", "11",
                "--format", "json"]
        code1, out1 = run(argv)
        code2, out2 = run(argv)
        assert code1 == code2 == EXIT_PASS
        assert out1 == out2

    def test_byte_identical_across_processes(self):
        # different hash seeds must not leak into the output bytes
        import os

        argv = [sys.executable, "-m", "rncgeom.cli", "verify", "--spec", SCROLL,
                "--trials", "2", "--seed", "5", "--format", "json"]
        outs = []
        for hash_seed in ("1", "42"):
            env = dict(os.environ, PYTHONHASHSEED=hash_seed)
            proc = subprocess.run(argv, capture_output=True, env=env)
            assert proc.returncode == 0, proc.stderr
            outs.append(proc.stdout)
        assert outs[0] == outs[1]

    def test_forced_fail(self):
        bad = '{"family":"Scroll","params":{"a":[1,1]},"declare":{"r":1,"n":3,"q":5}}'
        code, out = run(["verify", "--spec", bad, "--trials", "1", "--format", "json"])
        assert code == EXIT_FAIL
        assert json.loads(out)["verdict"] == "fail"

    def test_inconclusive_exit_code(self):
        spec = '{"family":"CubicSpecial","params":{"r":3,"mu_prime":3}}'
        code, out = run(["verify", "--spec", spec, "--trials", "1", "--format", "json"])
        assert code == EXIT_INCONCLUSIVE
        assert json.loads(out)["verdict"] == "inconclusive"

    def test_malformed_spec(self):
        code, _ = run(["verify", "--spec", '{"family":"Mystery"}'])
        assert code == EXIT_USAGE

    def test_unparsable_json(self):
        code, _ = run(["verify", "--spec", "{not json"])
        assert code == EXIT_USAGE

    def test_spec_file(self, tmp_path):
        path = tmp_path / "spec.json"
        path.write_text(SCROLL)
        code, _ = run(["verify", "--spec", str(path), "--trials", "1"])
        assert code == EXIT_PASS


class TestOtherCommands:
    def test_build(self):
        code, out = run(["build", "--spec", SCROLL, "--format", "json"])
        assert code == EXIT_PASS
        doc = json.loads(out)
        assert doc["ambient_dim"] == 3 and doc["span_dim"] == 3
        assert doc["components"][0] == "1"

    def test_build_every_family(self):
        docs = [
            '{"family":"Veronese","params":{"dim":2,"order":2}}',
            '{"family":"Scroll","params":{"a":[2,1]}}',
            '{"family":"StandardScroll","params":{"a":[1,1],"rho":2,"chi":1}}',
            '{"family":"ConeStandard","params":{"r":2,"q":4}}',
            '{"family":"QuadricVeronese","params":{"r":3,"rho":2,"rank":5}}',
            '{"family":"SegreSpecial","params":{"r":2,"mu":4}}',
            '{"family":"CubicSpecial","params":{"r":2,"mu_prime":2}}',
            '{"family":"Veronese33","params":{}}',
        ]
        for doc in docs:
            code, out = run(["build", "--spec", doc, "--format", "json"])
            assert code == EXIT_PASS
            payload = json.loads(out)
            assert payload["span_dim"] == payload["ambient_dim"]

    def test_osculate(self):
        code, out = run(
            ["osculate", "--spec", '{"family":"Veronese","params":{"dim":2,"order":2}}',
             "--point", "0,0", "--order", "2", "--format", "json"]
        )
        assert code == EXIT_PASS
        doc = json.loads(out)
        assert doc["report"] == {
            "order": 2, "dim": 5, "regular": True, "expected_dim_plus_1": 6
        }

    def test_fit(self):
        code, out = run(["fit", "--spec", SCROLL, "--seed", "5", "--format", "json"])
        assert code == EXIT_PASS
        doc = json.loads(out)
        assert doc["certificate"]["is_rnc"] and doc["incidence"]

    def test_witness(self):
        code, out = run(
            ["witness", "--spec", '{"family":"Veronese33","params":{}}',
             "--format", "json"]
        )
        assert code == EXIT_PASS
        assert json.loads(out)["verdict"] == "special"

    def test_usage_error_on_unknown_command(self):
        code, _ = run(["frobnicate"])
        assert code == EXIT_USAGE
