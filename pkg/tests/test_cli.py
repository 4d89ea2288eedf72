import io
import json
import subprocess
import sys

import pytest

from krcrystals.cli import main, parse_seed, parse_shifts
from krcrystals.engine import graph_from_json, parse_dot, format_dot
from krcrystals.lattice import Monomial


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture()
def graphs(tmp_path):
    paths = {}
    for name, args in {
        "M13": ["--model", "m1s", "--s", "3", "--n", "3"],
        "B13": ["--model", "kr", "--s", "3", "--n", "3"],
        "M12": ["--model", "m1s", "--s", "2", "--n", "3"],
        "B11": ["--model", "kr", "--s", "1", "--n", "3"],
    }.items():
        code, text = run("gen", *args, "--format", "json")
        assert code == 0
        path = tmp_path / f"{name}.json"
        path.write_text(text)
        paths[name] = str(path)
    return paths


def test_gen_m13_dot():
    code, dot = run("gen", "--n", "3", "--model", "m1s", "--s", "3", "--format", "dot")
    assert code == 0
    labels, edges = parse_dot(dot)
    assert len(labels) == 10 and len(edges) == 18
    assert format_dot(labels, edges) == dot


def test_gen_is_deterministic():
    assert run("gen", "--n", "4", "--model", "column", "--r", "2") == \
        run("gen", "--n", "4", "--model", "column", "--r", "2")


def test_gen_json_size():
    code, text = run("gen", "--n", "5", "--model", "m1s", "--s", "2", "--format", "json")
    assert code == 0 and len(json.loads(text)["vertices"]) == 15


def test_gen_highest_weight_ball():
    code, text = run("gen", "--n", "3", "--model", "hw", "--seed", '{"factors":[[0,0,1]]}',
                     "--depth", "4", "--format", "json")
    g = graph_from_json(text)
    assert code == 0 and g.boundary and g.elements[0] == Monomial.Y(0, 0)


def test_gen_pair_mapping_seed():
    code, text = run("gen", "--n", "5", "--model", "m1s", "--seed",
                     '{"(0,1)": -2, "(1,0)": 2, "(0,2)": -1, "(1,1)": 1}', "--format", "json")
    assert code == 0 and len(json.loads(text)["vertices"]) == 75


def test_gen_infinite_models_need_depth():
    assert run("gen", "--n", "3", "--model", "binf")[0] == 2
    assert run("gen", "--n", "3", "--model", "minf")[0] == 2
    assert run("gen", "--n", "3", "--model", "binf", "--depth", "2")[0] == 0
    assert run("gen", "--n", "3", "--model", "binf", "--depth", "2", "--monomial")[0] == 0
    assert run("gen", "--n", "3", "--model", "minf", "--depth", "3")[0] == 0


def test_gen_cap_overflow_exits_one():
    assert run("gen", "--n", "3", "--model", "minf", "--depth", "20", "--cap", "50")[0] == 1


def test_gen_usage_errors():
    assert run("gen", "--n", "3", "--model", "kr")[0] == 2
    assert run("gen", "--n", "3", "--model", "column", "--r", "3")[0] == 2
    assert run("gen", "--n", "1", "--model", "kr", "--s", "1")[0] == 2
    with pytest.raises(SystemExit) as exc:
        run("gen", "--n", "3", "--model", "nope")
    assert exc.value.code == 2


def test_iso_exit_codes(graphs, tmp_path):
    code, text = run("iso", graphs["M13"], graphs["B13"])
    assert code == 0 and text.count("->") == 10
    code, text = run("iso", graphs["M13"], graphs["M12"])
    assert code == 1 and text == "NOT ISOMORPHIC\n"
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    assert run("iso", str(broken), graphs["B13"])[0] == 2
    assert run("iso", str(tmp_path / "missing.json"), graphs["B13"])[0] == 2


def test_axioms_and_regular(graphs):
    code, text = run("axioms", graphs["M13"])
    assert code == 0 and json.loads(text)["status"] == "pass"
    assert run("axioms", graphs["B13"], "--regular")[0] == 0


def test_axioms_fail_exit_one(graphs, tmp_path):
    doc = json.loads(open(graphs["B13"]).read())
    doc["vertices"][0]["eps"][0] += 1
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, text = run("axioms", str(bad))
    assert code == 1 and json.loads(text)["status"] == "fail"


def test_perfect(graphs):
    assert run("perfect", graphs["B13"], "--s", "3")[0] == 0
    assert run("perfect", graphs["B11"], "--s", "2")[0] == 1


def test_tensor_and_character(graphs, tmp_path):
    code, text = run("tensor", graphs["B11"], graphs["B11"])
    assert code == 0 and len(json.loads(text)["vertices"]) == 9
    code, text = run("character", graphs["M12"], "--latex")
    assert code == 0 and len(text.strip().split(" + ")) == 6
    assert run("character", graphs["B11"])[0] == 2


def test_json_round_trip_through_cli(graphs):
    text = open(graphs["M13"]).read()
    assert graph_from_json(text).to_json() == text


@pytest.mark.parametrize("argv", [
    ["--theorem", "3.1", "--n", "3", "--s", "3"],
    ["--theorem", "4.1", "--n", "3", "--shifts", "1:0,2:1"],
    ["--theorem", "4.2", "--n", "3", "--lam", "1,0,0", "--depth", "4"],
    ["--theorem", "5.1", "--n", "2", "--depth", "4"],
    ["--theorem", "5.2", "--n", "3", "--depth", "3"],
    ["--theorem", "6.2", "--n", "4", "--r", "2"],
    ["--theorem", "perfect", "--n", "3", "--s", "2"],
])
def test_verify_passes(argv):
    code, text = run("verify", *argv)
    assert code == 0 and json.loads(text)["status"] == "pass"


def test_verify_failure_and_usage():
    assert run("verify", "--theorem", "perfect", "--n", "3", "--s", "1", "--level", "2")[0] == 1
    assert run("verify", "--theorem", "4.1", "--n", "3")[0] == 2
    assert run("verify", "--theorem", "4.1", "--n", "3", "--shifts", "1:0,1:0")[0] == 2
    assert run("verify", "--theorem", "4.2", "--n", "3", "--lam", "1,0")[0] == 2


def test_parse_seed_forms():
    m = Monomial([(0, 1, -2), (1, 0, 2)])
    assert parse_seed('{"factors": [[0, 1, -2], [1, 0, 2]]}') == m
    assert parse_seed('{"(0,1)": -2, "(1,0)": 2}') == m
    assert parse_seed('{"0,1": -2, "1,0": 2}') == m
    assert parse_seed(m.display()) == m
    assert parse_shifts("1:0, 2:1") == [(1, 0), (2, 1)]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "krcrystals", "verify", "--theorem", "3.1",
                          "--n", "2", "--s", "2"], capture_output=True, text=True)
    assert res.returncode == 0 and '"status": "pass"' in res.stdout


def test_gen_operator_families():
    bar = ["gen", "--n", "4", "--model", "hw", "--op", "bar", "--format", "json",
           "--seed", "Y(1,0)*Y(0,1)^-1*Y(2,0)*Y(1,1)^-1"]
    code, text = run(*bar)
    assert code == 0 and len(json.loads(text)["vertices"]) == 6
    code, text = run("gen", "--n", "3", "--model", "hw", "--op", "dagger", "--depth", "2",
                     "--format", "json")
    assert code == 0 and len(json.loads(text)["vertices"]) == 13
    code, minf = run("gen", "--n", "3", "--model", "minf", "--depth", "2", "--format", "json")
    assert minf == text
    code, text = run("gen", "--n", "3", "--model", "hw", "--op", "coh", "--depth", "2",
                     "--format", "json")
    assert code == 0 and text == run("gen", "--n", "3", "--model", "binf", "--monomial",
                                     "--depth", "2", "--format", "json")[1]


def test_gen_operator_family_errors():
    assert run("gen", "--n", "3", "--model", "kr", "--s", "1", "--op", "std")[0] == 2
    assert run("gen", "--n", "3", "--model", "hw", "--op", "dagger", "--depth", "2",
               "--seed", "Y(0,0)")[0] == 2
    assert run("gen", "--n", "3", "--model", "hw", "--op", "coh", "--depth", "1",
               "--seed", "Y(0,0)")[0] == 2
    assert run("gen", "--n", "3", "--model", "hw", "--op", "bar")[0] == 2
