import json
import pytest
from HoroCalc.document import parse, parse_document, render_document
from HoroCalc.errors import SchemaError, SemanticError

NAMES = ("ex_q", "ex_q_toroidal", "ex_grass", "q_bar", "x_bar", "toric_a1", "torus_line", "sp_standard")


def edit(document, name, fn):
    doc = json.loads(document(name))
    fn(doc)
    return json.dumps(doc)


def test_parse_ex_q(ex_q):
    assert ex_q.rank == 2
    assert ex_q.I == frozenset()
    assert ex_q.fan.maximal_cones[0].colors == {1, 2}
    assert ex_q.rho(1) == (1, 0) and ex_q.rho(2) == (0, 1)


def test_explicit_rho(load):
    d = load("toric_a1")
    assert d.rank == 2 and d.rs.size == 0
    assert d.fan.rays == ((1, 0), (1, 2))


@pytest.mark.parametrize("name", NAMES)
def test_render_then_parse(load, name):
    d = load(name)
    assert parse(render_document(d)) == d
    assert render_document(parse(render_document(d))) == render_document(d)


def test_non_primitive_ray(document, caplog):
    text = edit(document, "toric_a1", lambda doc: doc["fan"]["rays"].__setitem__(1, [2, 4]))
    parsed = parse_document(text)
    assert parsed.datum.fan.rays[1] == (1, 2)
    assert len(parsed.warnings) == 1 and "fan.rays[1]" in parsed.warnings[0]
    assert "not primitive" in caplog.text


def test_empty_cone_list(document):
    text = edit(document, "ex_q", lambda doc: doc["fan"].update(rays=[], cones=[]))
    d = parse(text)
    assert len(d.fan.maximal_cones) == 1 and d.fan.maximal_cones[0].dim == 0


def test_color_in_I(document):
    text = edit(document, "ex_grass", lambda doc: doc["fan"]["cones"][0]["colors"].append(3))
    with pytest.raises(SemanticError) as info:
        parse(text)
    problem = info.value.diagnostics[0]
    assert problem.code == "InvalidColor" and problem.path == "fan.cones[0].colors[2]"


@pytest.mark.parametrize("change,code", [
    (lambda doc: doc.update(root_system=[["C", 2]]), "InvalidType"),
    (lambda doc: doc.update(parabolic_I=[4]), "UnknownNode"),
    (lambda doc: doc["fan"]["cones"][0]["rays"].append(7), "UnknownRay"),
    (lambda doc: doc["fan"]["rays"].append([1, 2, 3]), "DimensionMismatch"),
    (lambda doc: doc["fan"]["cones"][0]["colors"].append(9), "UnknownColor"),
])
def test_semantic_errors(document, change, code):
    with pytest.raises(SemanticError) as info:
        parse(edit(document, "ex_q", change))
    assert code in {p.code for p in info.value.diagnostics}


@pytest.mark.parametrize("basis,code,path", [
    ([[1, 0], [2, 0]], "TorusFactor", "lattice_M.basis"),
    ([[1, 0], [0, 0]], "TorusFactor", "lattice_M.basis"),
    ([[1, 0], [0, 1, 0]], "DimensionMismatch", "lattice_M.basis[1]"),
])
def test_weight_basis_errors(document, basis, code, path):
    with pytest.raises(SemanticError) as info:
        parse(edit(document, "ex_q", lambda doc: doc["lattice_M"].update(basis=basis)))
    problem = info.value.diagnostics[0]
    assert problem.code == code and problem.path == path


def test_torus_factor_needs_explicit_rho(document):
    text = edit(document, "torus_line", lambda doc: doc.update(lattice_M={"mode": "weight_basis", "basis": [[]]}))
    with pytest.raises(SemanticError) as info:
        parse(text)
    assert "explicit_rho" in info.value.diagnostics[0].message


def test_invalid_json():
    with pytest.raises(SchemaError) as info:
        parse('{\n  "root_system": [["A", 2]],\n  oops\n}')
    problem = info.value.diagnostics[0]
    assert problem.code == "InvalidJSON" and problem.line == 3


@pytest.mark.parametrize("change,path", [
    (lambda doc: doc.pop("fan"), "fan"),
    (lambda doc: doc["lattice_M"].update(mode="roots"), "lattice_M.mode"),
    (lambda doc: doc["lattice_M"].update(basis=[[1, "0"], [0, 1]]), "lattice_M.basis[0]"),
    (lambda doc: doc["fan"]["cones"][0].update(rays="01"), "fan.cones[0].rays"),
    (lambda doc: doc.update(root_system=[["A"]]), "root_system[0]"),
])
def test_schema_errors(document, change, path):
    with pytest.raises(SchemaError) as info:
        parse(edit(document, "ex_q", change))
    assert path in {p.path for p in info.value.diagnostics}
    assert info.value.to_dict()["code"] == "SchemaError"


def test_not_an_object():
    with pytest.raises(SchemaError):
        parse("[1, 2]")
