"""End-to-end CLI tests through subprocesses: byte-identical golden
outputs for every subcommand, the three input modes, exit-code
contract, and the serve subcommand booting a live server."""
import json
import pathlib
import re
import subprocess
import sys
import urllib.request

import pytest

GOLDEN = pathlib.Path(__file__).parent / "golden" / "cli"

A2 = '{"n": 2, "arrows": [[1, 2, 1]]}'
A2_SEED = (
    '{"quiver": {"n": 2, "arrows": [[1, 2, 1]]},'
    ' "vars": [[{"coeff": "1", "exps": [1, 0]}], [{"coeff": "1", "exps": [0, 1]}]]}'
)
HEXAGON = '{"N": 6, "diagonals": [[2, 6], [2, 4], [4, 6]]}'
BOLT = '{"cells": [[1, 3], [1, 4]]}'
FRIEZE1 = '{"n": 1, "domain": [[1, 3, 1], [2, 4, 2]]}'


def run_cli(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "clusterfrieze.cli", *args],
        capture_output=True,
        text=True,
        input=stdin,
        timeout=120,
    )


GOLDEN_CASES = [
    ("quiver_mutate.json", ["quiver", "mutate", "--quiver", A2, "-k", "1"]),
    ("quiver_canon.json", ["quiver", "canon", "--quiver", '{"n": 2, "arrows": [[2, 1, 1]]}']),
    (
        "quiver_finite_type.json",
        ["quiver", "finite-type", "--quiver", '{"n": 3, "arrows": [[1, 2, 1], [2, 3, 1], [3, 1, 1]]}'],
    ),
    ("seed_mutate.json", ["seed", "mutate", "--seed", A2_SEED, "-k", "1"]),
    ("exchange_enumerate.json", ["exchange", "enumerate", "--quiver", A2]),
    ("exchange_enumerate.dot", ["exchange", "enumerate", "--quiver", A2, "--format", "dot"]),
    ("polygon_enumerate.json", ["polygon", "enumerate", "5"]),
    ("polygon_flip.json", ["polygon", "flip", "--triangulation", HEXAGON, "--diagonal", "4,6"]),
    ("polygon_quiddity.json", ["polygon", "quiddity", "--triangulation", HEXAGON]),
    (
        "frieze_from_quiddity.txt",
        ["frieze", "from-quiddity", "1,2,3,2,2,2,1,5,3", "--format", "text"],
    ),
    ("frieze_from_quiddity.json", ["frieze", "from-quiddity", "1,3,1,3,1,3"]),
    (
        "frieze_from_triangulation.json",
        ["frieze", "from-triangulation", "--triangulation", HEXAGON],
    ),
    ("frieze_from_bolt.json", ["frieze", "from-bolt", "--bolt", BOLT, "--values", "1,1"]),
    ("frieze_symbolic.json", ["frieze", "symbolic", "--bolt", BOLT]),
    ("frieze_enumerate.json", ["frieze", "enumerate", "2"]),
    ("frieze_check.json", ["frieze", "check", "--frieze", FRIEZE1]),
    ("frieze_render.txt", ["frieze", "render", "--frieze", FRIEZE1]),
    ("category_hom.json", ["category", "hom", "--n", "3", "--source", "1,0", "--target", "3,0"]),
    (
        "category_compat.json",
        ["category", "compat", "--size", "6", "--d1", "2,6", "--d2", "3,5"],
    ),
    ("category_ct_enumerate.json", ["category", "ct-enumerate", "2"]),
    (
        "category_ct_flip.json",
        ["category", "ct-flip", "--triangulation", HEXAGON, "--diagonal", "2,4"],
    ),
    (
        "category_frieze_from_ct.json",
        ["category", "frieze-from-ct", "--triangulation", HEXAGON],
    ),
    ("category_phi.json", ["category", "phi", "--bolt", BOLT, "--diagonal", "2,5"]),
]


class TestGolden:
    @pytest.mark.parametrize("golden,args", GOLDEN_CASES, ids=[g for g, _ in GOLDEN_CASES])
    def test_golden(self, golden, args):
        proc = run_cli(*args)
        assert proc.returncode == 0, proc.stderr
        assert proc.stdout == (GOLDEN / golden).read_text()
        assert proc.stderr == ""

    def test_byte_identical_across_runs(self):
        args = ["exchange", "enumerate", "--quiver", A2]
        assert run_cli(*args).stdout == run_cli(*args).stdout

    def test_definition_strip_contains_the_large_entries(self):
        strip = (GOLDEN / "frieze_from_quiddity.txt").read_text()
        assert strip.count("14") == 2
        rows = strip.splitlines()
        assert rows[0].split() == ["1"] * 9
        assert rows[-1].split() == ["1"] * 9


class TestInputModes:
    def test_stdin_file_and_inline_agree(self, tmp_path):
        inline = run_cli("quiver", "mutate", "--quiver", A2, "-k", "1")
        from_stdin = run_cli("quiver", "mutate", "--quiver", "-", "-k", "1", stdin=A2)
        path = tmp_path / "q.json"
        path.write_text(A2)
        from_file = run_cli("quiver", "mutate", "--quiver", str(path), "-k", "1")
        assert inline.stdout == from_stdin.stdout == from_file.stdout
        assert inline.returncode == from_stdin.returncode == from_file.returncode == 0

    def test_missing_file_is_a_domain_error(self):
        proc = run_cli("quiver", "mutate", "--quiver", "does-not-exist.json", "-k", "1")
        assert proc.returncode == 1
        assert json.loads(proc.stderr)["error"] == "invalid_input"


class TestExitCodes:
    def test_domain_errors_exit_1_with_structured_stderr(self):
        cases = [
            (["frieze", "from-quiddity", "1,1,1,1"], "non_positive"),
            (["frieze", "from-quiddity", "2,2,2,2"], "does_not_close"),
            (
                ["exchange", "enumerate", "--quiver", '{"n": 2, "arrows": [[1, 2, 2]]}', "--budget", "5"],
                "budget_exceeded",
            ),
            (
                ["polygon", "flip", "--triangulation", HEXAGON, "--diagonal", "2,5"],
                "invalid_input",
            ),
            (
                ["frieze", "from-bolt", "--bolt", '{"cells": [[1, 3]]}', "--values", "3"],
                "non_integer",
            ),
            (
                ["frieze", "check", "--frieze", '{"n": 1, "domain": [[1, 3, 1], [2, 4, 3]]}'],
                "malformed_frieze",
            ),
            (
                ["category", "hom", "--n", "2", "--source", "1,9", "--target", "1,0", "--window", "0,3"],
                "window_too_small",
            ),
        ]
        for args, code in cases:
            proc = run_cli(*args)
            assert proc.returncode == 1, (args, proc.stdout, proc.stderr)
            payload = json.loads(proc.stderr)
            assert payload["error"] == code
            assert "detail" in payload
            assert proc.stdout == ""

    def test_usage_errors_exit_2(self):
        cases = [
            ["quiver", "mutate", "--quiver", A2],  # missing -k
            ["quiver", "bogus"],
            ["frieze"],
            ["polygon", "enumerate", "five"],
            ["seed", "mutate", "--seed", A2_SEED, "-k", "1", "--format", "yaml"],
            ["quiver", "mutate", "--quiver", A2, "-k", "1", "--format", "dot"],
        ]
        for args in cases:
            proc = run_cli(*args)
            assert proc.returncode == 2, (args, proc.stderr)

    def test_success_exits_0(self):
        proc = run_cli("quiver", "finite-type", "--quiver", '{"n": 2, "arrows": [[1, 2, 2]]}')
        # infinite type is an answer, not an error
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["finite"] is False


class TestTextFormats:
    def test_quiver_text(self):
        proc = run_cli("quiver", "mutate", "--quiver", A2, "-k", "1", "--format", "text")
        assert proc.stdout == "n=2\n2 -> 1\n"

    def test_finite_type_text(self):
        proc = run_cli(
            "quiver", "finite-type", "--quiver", A2, "--format", "text"
        )
        assert proc.stdout == "A2\n"

    def test_compat_text(self):
        proc = run_cli(
            "category", "compat", "--size", "6", "--d1", "1,3", "--d2", "2,4", "--format", "text"
        )
        assert proc.stdout == "crossing\n"

    def test_symbolic_text(self):
        proc = run_cli("frieze", "symbolic", "--bolt", '{"cells": [[1, 3]]}', "--format", "text")
        assert proc.stdout == "(1,3): x1\n(2,4): 2/x1\n"


class TestServe:
    def test_serve_boots_and_answers_health(self):
        proc = subprocess.Popen(
            [sys.executable, "-m", "clusterfrieze.cli", "serve", "--port", "0"],
            stdout=subprocess.PIPE,
            stderr=subprocess.PIPE,
            text=True,
        )
        try:
            line = proc.stdout.readline()
            match = re.search(r":(\d+)$", line.strip())
            assert match, f"unexpected banner: {line!r}"
            port = int(match.group(1))
            with urllib.request.urlopen(f"http://127.0.0.1:{port}/api/health", timeout=10) as resp:
                assert json.loads(resp.read()) == {"ok": True}
        finally:
            proc.terminate()
            proc.wait(timeout=10)
