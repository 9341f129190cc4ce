"""Smoke tests for the python module and schema validation of CLI output."""

import json
import os
import subprocess

import jsonschema
import pytest

import totreal


def cli(*args):
    exe = os.environ["TOTREAL_CLI"]
    return subprocess.run([exe, *args], capture_output=True, text=True, check=False)


def schema(name):
    path = os.path.join(os.environ["TOTREAL_SCHEMAS"], name)
    with open(path) as fh:
        return json.load(fh)


def test_surfaces_and_index_sets():
    kb = totreal.Surface(orientable=False, genus=2)
    assert totreal.euler_char(kb) == 0
    assert totreal.surface_params(kb) == (0, 1)
    assert totreal.iq_enumerate(kb, 4) == [(1, 0), (1, 2), (3, 0), (3, 2)]
    rp2 = totreal.Surface(orientable=False, genus=1)
    assert totreal.iq_is_empty(rp2, 4)
    assert totreal.iq_cardinality(rp2, 6) == 1
    assert not totreal.modq_reduction_surjective(kb, 4)


def test_targets():
    quadric = totreal.Target.CP1xCP1()
    assert totreal.q_of(quadric) == 4
    assert totreal.intersection(quadric, "Z", [1, -1], [1, -1]) == -2
    assert totreal.c1_eval(quadric, [1, 0]) == 2
    b3 = totreal.Target.CP2Blowup(3)
    assert totreal.pontryagin_square(b3, [1, 1, 1, 1]) == 2
    assert totreal.ker_c1_mod2(quadric, [1, 1])
    assert not totreal.ker_c1_mod2(quadric, [1, 0])


def test_classification():
    kb = totreal.Surface(orientable=False, genus=2)
    quadric = totreal.Target.CP1xCP1()
    value, _reason = totreal.embedding_exists(kb, quadric)
    assert value == "YES"
    pairs = totreal.z_set_pairs(kb, quadric)
    assert len(pairs) == 8
    assert not totreal.embedding_admissible(kb, quadric, [1, 0], "Z2", [1, 1])
    value, _ = totreal.realized_by_embedding(kb, quadric, [1, 2], "Z2", [1, 0])
    assert value == "YES"
    report = totreal.classify_report(kb, quadric)
    jsonschema.validate(report, schema("classify.schema.json"))


def test_diophantine():
    assert totreal.ppsss_formula(1) == (1, (1, 1, 1, 0, 0, 0, 0, 0, 0))
    sols = totreal.solve_all(9, 2, -3, 3)
    assert len(sols) == 7
    for d, q in sols:
        assert totreal.is_solution(9, 2, d, list(q))
    assert totreal.canonicalize(-1, [-1, -1, -1]) == (1, (1, 1, 1))


def test_maslov():
    assert totreal.maslov_index(k=1, l=1, a=10.0, mode="torus", grid=128) == (0, 4)
    assert totreal.maslov_index(k=1, l=2, a=10.0, mode="klein", grid=128) == (3, 0)
    ok, min_j = totreal.total_reality_check(k=1, l=1, a=10.0, grid=64)
    assert ok and min_j > 0
    assert totreal.sl2_realizer(1, 0) == ((0, -1), (1, 0))
    n, residual = totreal.winding_number(
        [complex(1, 0), complex(0, 1), complex(-1, 0), complex(0, -1)]
    )
    assert n == 1 and residual < 1e-9


def test_tables():
    t1 = totreal.table1()
    assert t1["orientable_embeddable"]["CP1xCP1"] == "S^2, T^2 only"
    t2 = totreal.table2()
    assert t2["rows"][4]["RP^2"] == {"d": 1, "s": 0}
    jsonschema.validate(t1, schema("table.schema.json"))
    jsonschema.validate(t2, schema("table.schema.json"))


def test_cli_json_matches_schemas():
    out = cli("classify", "--surface", "nonor:2", "--target", "CP1xCP1", "--format", "json")
    assert out.returncode == 0
    jsonschema.validate(json.loads(out.stdout), schema("classify.schema.json"))

    out = cli("zset", "--surface", "or:1", "--target", "CP2#2", "--format", "json")
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["finite"] is False
    jsonschema.validate(doc, schema("zset.schema.json"))

    out = cli("zset", "--surface", "nonor:2", "--target", "CP1xCP1", "--format", "json")
    jsonschema.validate(json.loads(out.stdout), schema("zset.schema.json"))

    out = cli("dioph", "--m", "8", "--chi", "2", "--dmin", "-10", "--dmax", "10",
              "--format", "json")
    assert out.returncode == 0
    lines = [json.loads(line) for line in out.stdout.splitlines() if line]
    assert len(lines) == 7
    for line in lines:
        jsonschema.validate(line, schema("dioph.schema.json"))

    out = cli("maslov", "--k", "2", "--l", "1", "--a", "10", "--mode", "torus",
              "--grid", "128", "--format", "json")
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    jsonschema.validate(doc, schema("maslov.schema.json"))
    assert doc["index"] == [0, 6]

    for which in ("1", "2"):
        out = cli("table", "--which", which, "--format", "json")
        assert out.returncode == 0
        jsonschema.validate(json.loads(out.stdout), schema("table.schema.json"))


def test_cli_exit_codes():
    assert cli("classify", "--surface", "bad", "--target", "CP2").returncode == 2
    assert cli("nope").returncode == 2
