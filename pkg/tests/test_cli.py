import io
import json
import subprocess
import sys

import pytest

from confvand.cli import EXIT_INPUT, EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, run
from confvand.hermite import NodeSystem
from confvand.matrix import Matrix
from confvand.scalar import EXACT
from confvand.serialize import matrix_from_json, node_system_to_json
from confvand.vandermonde import build_confluent


def payload(**kw):
    return json.dumps(kw).encode()


def nodes(*pairs):
    return [{"alpha": str(a), "multiplicity": m} for a, m in pairs]


EXAMPLE1 = payload(nodes=nodes((0, 3), (1, 1)))


def test_invert_golden():
    code, out, err = run(["invert"], EXAMPLE1)
    assert code == EXIT_OK and err == b""
    assert out == (
        b'{"rows":4,"cols":4,"entries":[["1","0","0","-1"],["0","1","0","-1"],'
        b'["0","0","1","-1"],["0","0","0","1"]]}\n'
    )


def test_partfrac_golden():
    code, out, _ = run(["partfrac"], payload(nodes=nodes((0, 1), (1, 1))))
    assert code == EXIT_OK
    assert json.loads(out) == [
        {"node": 1, "exponent": 1, "coefficient": "-1"},
        {"node": 2, "exponent": 1, "coefficient": "1"},
    ]


def test_duplicate_alpha_exit_2():
    code, out, err = run(["invert"], payload(nodes=nodes((1, 1), (1, 2))))
    assert code == EXIT_INPUT and out == b""
    assert b"alpha=1" in err


def test_output_roundtrips_to_identity():
    system = NodeSystem.from_pairs([(1, 2), (2, 2), (-1, 1)])
    code, out, _ = run(["invert"], json.dumps(node_system_to_json(system)).encode())
    assert code == 0
    inv = matrix_from_json(json.loads(out), EXACT)
    assert build_confluent(system) @ inv == Matrix.identity(5)


@pytest.mark.parametrize(
    "argv, data",
    [
        (["invert"], b"{not json"),
        (["invert"], payload(nodes=[])),
        (["invert"], payload(nodes=nodes((0, 1)), extra=1)),
        (["invert"], payload(nodes=[{"alpha": "1/0", "multiplicity": 1}])),
        (["invert"], payload(nodes=[{"alpha": "0.5", "multiplicity": 1}])),
        (["invert"], payload(nodes=[{"alpha": "1", "multiplicity": 0}])),
        (["invert-rs"], payload(nodes=nodes((0, 1), (1, 1)), exponents=[[1], [1]])),
        (["invert-rs"], payload(nodes=nodes((2, 2), (1, 1)), exponents=[[1], [1]])),
        (["solve"], payload(nodes=nodes((0, 2)), rhs=["1"])),
        (["solve-usual"], payload(alphas=["1", "1"], rhs=["1", "2"])),
        (["invert-usual"], payload(alphas=[])),
    ],
)
def test_invalid_inputs_exit_2(argv, data):
    code, out, err = run(argv, data)
    assert code == EXIT_INPUT
    assert out == b""
    assert err


@pytest.mark.parametrize(
    "argv",
    [[], ["frobnicate"], ["invert", "--format", "xml"], ["invert", "--tolerance", "1e-3"], ["invert", "--float", "--tolerance", "-1"]],
)
def test_usage_errors_exit_64(argv):
    code, out, err = run(argv, EXAMPLE1)
    assert code == EXIT_USAGE and out == b"" and b"usage" in err


def test_usage_error_does_not_read_stdin():
    class Exploding(io.BytesIO):
        def read(self, *a):
            raise AssertionError("stdin read")

    assert run(["nope"], Exploding())[0] == EXIT_USAGE


def test_input_file(tmp_path):
    f = tmp_path / "in.json"
    f.write_bytes(EXAMPLE1)
    assert run(["invert", "--input", str(f)], b"") == run(["invert"], EXAMPLE1)
    code, out, _ = run(["invert", "--input", str(tmp_path / "missing.json")], b"")
    assert code == EXIT_INPUT and out == b""


def test_csv_matrix():
    code, out, _ = run(["invert", "--format", "csv"], EXAMPLE1)
    assert code == 0
    assert out == b"1,0,0,-1\n0,1,0,-1\n0,0,1,-1\n0,0,0,1\n"


def test_invert_rs():
    data = payload(nodes=nodes((2, 1), (3, 1)), exponents=[[1], [2]])
    code, out, _ = run(["invert-rs"], data)
    assert code == 0
    assert json.loads(out)["entries"] == [["3/2", "-1/2"], ["-2/9", "1/9"]]


def test_solve_commands():
    code, out, _ = run(["solve"], payload(nodes=nodes((0, 1), (1, 1)), rhs=["1", "2"]))
    assert (code, json.loads(out)) == (0, {"solution": ["-1", "2"]})
    code, out, _ = run(["solve-usual"], payload(alphas=["0", "1"], rhs=["1", "2"]))
    assert (code, json.loads(out)) == (0, {"solution": ["-1", "2"]})
    code, out, _ = run(["solve-usual", "--format", "csv"], payload(alphas=["0", "1"], rhs=["1", "2"]))
    assert out == b"-1\n2\n"


def test_basis_command():
    code, out, _ = run(["basis"], EXAMPLE1)
    assert code == 0
    assert json.loads(out) == [["1", "0", "0", "-1"], ["0", "1", "0", "-1"], ["0", "0", "1", "-1"], ["0", "0", "0", "1"]]


def test_companion_command():
    code, out, _ = run(["companion"], payload(nodes=nodes((1, 2), (-1, 1))))
    assert code == 0
    obj = json.loads(out)
    assert obj["similarity_ok"] is True
    assert obj["companion"]["entries"][-1] == ["-1", "1", "1"]
    assert obj["jordan"]["entries"] == [["1", "1", "0"], ["0", "1", "0"], ["0", "0", "-1"]]
    assert set(obj) == {"companion", "jordan", "vandermonde", "similarity_ok"}


def test_float_mode_reports_residual():
    data = payload(alphas=["-1", "-0.5", "0", "0.5", "1"])
    code, out, _ = run(["invert-usual", "--float"], data)
    assert code == 0
    obj = json.loads(out)
    assert 0 <= obj["residual"] <= 1e-9
    code, out, _ = run(["partfrac", "--float"], payload(nodes=nodes(("0.5", 2), ("-1", 1))))
    obj = json.loads(out)
    assert code == 0 and len(obj["result"]) == 3 and obj["residual"] <= 1e-9


def test_float_residual_over_tolerance_exit_3():
    alphas = [str(1 + i / 1000) for i in range(10)]
    code, out, err = run(["invert-usual", "--float", "--tolerance", "1e-12"], payload(alphas=alphas))
    assert code == EXIT_NUMERIC and out == b""
    assert b"residual" in err


@pytest.mark.parametrize("argv, data", [(["invert"], EXAMPLE1), (["partfrac"], payload(nodes=nodes((0, 1), (1, 1)))), (["invert"], payload(nodes=nodes((1, 1), (1, 2))))])
def test_byte_stable(argv, data):
    first = run(argv, data)
    for _ in range(3):
        assert run(argv, data) == first


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "confvand", "invert"], input=EXAMPLE1, capture_output=True, timeout=60
    )
    assert proc.returncode == 0
    assert proc.stdout == run(["invert"], EXAMPLE1)[1]
    proc = subprocess.run([sys.executable, "-m", "confvand"], input=b"", capture_output=True, timeout=60)
    assert proc.returncode == EXIT_USAGE and proc.stdout == b""
