import json
from fractions import Fraction

import pytest

from equiproj import shapes
from equiproj.cli import main
from equiproj.errors import InputError
from equiproj.files import dumps_polytope, loads_polytope, parse_rational, parse_vector_list, to_off
from equiproj.lattice import face_lattice_isomorphic


def _write(path, P):
    path.write_text(dumps_polytope(P))
    return str(path)


def _run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


# files


def test_parse_rational():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational("-7") == -7
    assert parse_rational(4) == 4
    for bad in ("0.5", "1e3", "1/0", 0.5, True, "a/b", ""):
        with pytest.raises(InputError):
            parse_rational(bad)


def test_vector_list():
    assert parse_vector_list("1,0,0; 0,1/2,0") == [(1, 0, 0), (0, Fraction(1, 2), 0)]
    with pytest.raises(InputError):
        parse_vector_list("1,0")
    with pytest.raises(InputError):
        parse_vector_list(" ; ")


def test_json_round_trip():
    P = shapes.pyritohedron()
    Q = loads_polytope(dumps_polytope(P))
    assert set(Q.vertices) == set(P.vertices)
    assert face_lattice_isomorphic(P, Q)
    assert all(isinstance(c, str) for v in json.loads(dumps_polytope(P))["vertices"] for c in v)


@pytest.mark.parametrize("text", [
    "not json",
    '{"points": []}',
    '{"vertices": []}',
    '{"vertices": [["1", "2"]]}',
    '{"vertices": [[0.5, 0, 0]]}',
])
def test_bad_polytope_files(text):
    with pytest.raises(InputError):
        loads_polytope(text)


def test_off_cube(cube):
    lines = to_off(cube).splitlines()
    assert lines[0] == "OFF"
    assert lines[1] == "8 6 12"
    faces = lines[2 + 8:]
    assert len(faces) == 6 and all(f.split()[0] == "4" for f in faces)


def test_off_pyritohedron_pentagons():
    text = to_off(shapes.pyritohedron(), 6)
    faces = text.splitlines()[2 + 20:]
    assert len(faces) == 12 and all(f.split()[0] == "5" for f in faces)


def test_off_faces_are_outward(cube):
    lines = to_off(cube).splitlines()
    pts = [tuple(float(x) for x in l.split()) for l in lines[2:10]]
    centre = tuple(sum(p[k] for p in pts) / 8 for k in range(3))
    for l in lines[10:]:
        a, b, c = (pts[int(i)] for i in l.split()[1:4])
        u = [b[k] - a[k] for k in range(3)]
        v = [c[k] - a[k] for k in range(3)]
        n = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])
        assert sum(n[k] * (a[k] - centre[k]) for k in range(3)) > 0


# cli


def test_gen_prism(capsys, tmp_path):
    out = tmp_path / "p.json"
    code, stdout, _ = _run(capsys, "gen", "prism", "--sides", 5, "-o", out)
    assert code == 0
    assert json.loads(stdout)["predicted_kappa"] == 7
    assert len(loads_polytope(out.read_text()).vertices) == 10


def test_gen_odd(capsys, tmp_path):
    out = tmp_path / "o.json"
    code, stdout, _ = _run(capsys, "gen", "odd", "--k", 9, "--seed", 1, "-o", out)
    assert code == 0 and json.loads(stdout)["predicted_kappa"] == 9
    code, stdout, _ = _run(capsys, "check", out, "--oracle-samples", 50)
    doc = json.loads(stdout)
    assert code == 0 and doc["kappa"] == 9


def test_gen_zonotope_cube(capsys, tmp_path, cube):
    out = tmp_path / "z.json"
    code, stdout, _ = _run(capsys, "gen", "zonotope", "--generators", "1,0,0;0,1,0;0,0,1", "-o", out)
    assert code == 0 and json.loads(stdout)["predicted_kappa"] == 6
    assert set(loads_polytope(out.read_text()).vertices) == set(cube.vertices)


def test_gen_bad_params(capsys):
    assert _run(capsys, "gen", "odd", "--k", 7)[0] == 3
    assert _run(capsys, "gen", "prism", "--sides", 2)[0] == 3
    assert _run(capsys, "gen", "zonotope")[0] == 3
    assert _run(capsys, "gen", "zonotope", "--generators", "1,0,0;2,0,0")[0] == 3


def test_check_cube(capsys, tmp_path, cube):
    f = _write(tmp_path / "c.json", cube)
    code, stdout, _ = _run(capsys, "check", f, "--method", "both", "--oracle-samples", 100)
    doc = json.loads(stdout)
    assert code == 0
    assert doc["is_equiprojective"] and doc["kappa"] == 6
    assert doc["oracle"]["histogram"] == {"6": 100}
    assert all(d["full_plane"] for d in doc["cone"]["per_direction"])


def test_check_tetrahedron(capsys, tmp_path, tetrahedron):
    f = _write(tmp_path / "t.json", tetrahedron)
    code, stdout, _ = _run(capsys, "check", f, "--oracle-samples", 200)
    doc = json.loads(stdout)
    assert code == 1 and not doc["is_equiprojective"] and "kappa" not in doc
    assert not doc["disagreement"]
    for m in ("cone", "matching"):
        code, _, _ = _run(capsys, "check", f, "--method", m)
        assert code == 1


def test_check_polygon_is_input_error(capsys, tmp_path):
    f = _write(tmp_path / "g.json", shapes.polygon(5))
    code, _, err = _run(capsys, "check", f)
    assert code == 3 and "dimension" in err


def test_check_missing_file(capsys, tmp_path):
    assert _run(capsys, "check", tmp_path / "nope.json")[0] == 3


def test_check_report_reproducible(capsys, tmp_path, pentagonal_prism):
    f = _write(tmp_path / "p.json", pentagonal_prism)
    r1, r2 = tmp_path / "r1.json", tmp_path / "r2.json"
    assert _run(capsys, "check", f, "--oracle-samples", 30, "--seed", 5, "--report", r1)[0] == 0
    assert _run(capsys, "check", f, "--oracle-samples", 30, "--seed", 5, "--report", r2)[0] == 0
    assert r1.read_bytes() == r2.read_bytes()
    assert json.loads(r1.read_text())["seed"] == 5


def test_seed_from_environment(capsys, tmp_path, monkeypatch, tetrahedron):
    f = _write(tmp_path / "t.json", tetrahedron)
    monkeypatch.setenv("EQUIPROJ_SEED", "17")
    _, stdout, _ = _run(capsys, "project", f, "--histogram", 40)
    assert json.loads(stdout)["seed"] == 17
    monkeypatch.setenv("EQUIPROJ_SEED", "x")
    assert _run(capsys, "project", f, "--histogram", 40)[0] == 3


def test_sum_commands(capsys, tmp_path, cube):
    a = _write(tmp_path / "a.json", cube)
    code, stdout, _ = _run(capsys, "sum", a, a)
    doc = json.loads(stdout)
    assert code == 0 and doc["predicted_kappa"] == 6 == doc["direct_kappa"]
    assert doc["certificate"]["lambda"] == 6

    sq = _write(tmp_path / "sq.json", loads_polytope('{"vertices": [[0,0,0],[1,0,0],[0,1,0],[1,1,0]]}'))
    seg = _write(tmp_path / "seg.json", loads_polytope('{"vertices": [[0,0,0],[0,0,1]]}'))
    out = tmp_path / "s.json"
    code, stdout, _ = _run(capsys, "sum", sq, seg, "-o", out)
    assert code == 0 and json.loads(stdout)["direct_kappa"] == 6
    assert set(loads_polytope(out.read_text()).vertices) == set(cube.vertices)

    t1 = _write(tmp_path / "t1.json", loads_polytope('{"vertices": [[0,0,0],[2,1,0],[1,3,0]]}'))
    t2 = _write(tmp_path / "t2.json", loads_polytope('{"vertices": [[0,0,0],[3,0,1],[1,0,4]]}'))
    code, stdout, _ = _run(capsys, "sum", t1, t2)
    doc = json.loads(stdout)
    assert code == 0 and doc["predicted_kappa"] == 6 == doc["direct_kappa"]


def test_sum_rejects_bad_summand(capsys, tmp_path, cube, tetrahedron):
    a, b = _write(tmp_path / "a.json", cube), _write(tmp_path / "b.json", tetrahedron)
    code, _, err = _run(capsys, "sum", a, b)
    assert code == 3 and "not equiprojective" in err


def test_project(capsys, tmp_path, cube, tetrahedron):
    c = _write(tmp_path / "c.json", cube)
    code, stdout, _ = _run(capsys, "project", c, "--direction", "1,2,3")
    assert code == 0 and json.loads(stdout)["shadow_vertices"] == 6
    code, _, err = _run(capsys, "project", c, "--direction", "1,0,0")
    assert code == 3 and "facet" in err
    t = _write(tmp_path / "t.json", tetrahedron)
    _, stdout, _ = _run(capsys, "project", t, "--histogram", 500)
    assert set(json.loads(stdout)["histogram"]) == {"3", "4"}


def test_omatroid_commands(capsys, tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    a.write_text(json.dumps({"generators": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}))
    b.write_text(json.dumps({"generators": [[0, 0, 1], [1, 0, 0], [0, 1, 0]]}))
    code, stdout, _ = _run(capsys, "omatroid", "covectors", a)
    assert code == 0 and json.loads(stdout)["count"] == 26
    code, stdout, _ = _run(capsys, "omatroid", "equiv", a, b)
    assert code == 0 and json.loads(stdout)["equivalent"] is True
    code, stdout, _ = _run(capsys, "omatroid", "census", "--n", 3, "--samples", 50)
    assert code == 0 and json.loads(stdout)["types_found"] == 1
    big = tmp_path / "big.json"
    big.write_text(json.dumps({"generators": [[1, i, i * i] for i in range(9)]}))
    assert _run(capsys, "omatroid", "covectors", big)[0] == 4


def test_export(capsys, tmp_path, cube):
    c = _write(tmp_path / "c.json", cube)
    code, stdout, _ = _run(capsys, "export", c)
    assert code == 0 and stdout.splitlines()[:2] == ["OFF", "8 6 12"]
    out = tmp_path / "x.json"
    assert _run(capsys, "export", c, "--format", "json", "-o", out)[0] == 0
    assert face_lattice_isomorphic(loads_polytope(out.read_text()), cube)
