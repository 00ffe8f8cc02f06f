import json

import pytest

from quandlekit import Cochain, FormalChain, InputError, make_dihedral
from quandlekit.io import (load_chain, load_cochain, load_diagram, load_quandle,
                           load_triple_points, named_quandle)


@pytest.mark.parametrize("name,size", [("T4", 4), ("R5", 5), ("S4", 4), ("QS6", 6),
                                       ("3:T+1", 3), ("2:T^2+T+1", 4)])
def test_named(name, size):
    assert named_quandle(name).size == size


def test_named_unknown():
    with pytest.raises(InputError):
        named_quandle("X9")


def test_quandle_file(tmp_path):
    p = tmp_path / "R3.json"
    p.write_text(json.dumps(make_dihedral(3).to_json()))
    assert load_quandle(str(p)) == make_dihedral(3)
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InputError):
        load_quandle(str(bad))


def test_cochain_round_trip(tmp_path, theta):
    p = tmp_path / "theta.json"
    p.write_text(json.dumps(theta.to_json()))
    back = load_cochain(str(p), make_dihedral(3))
    assert back == theta
    data = theta.to_json()
    data["quandle"] = "R3"
    assert load_cochain(data) == theta


def test_cochain_needs_quandle():
    with pytest.raises(InputError):
        load_cochain({"level": 1, "coefficients": {"p": 3}, "values": []})


def test_cochain_values_omitted_are_zero(R3):
    f = Cochain.from_json({"level": 2, "coefficients": {"p": 3, "h": [-1, 1]},
                           "values": [[[0, 1], [2]]]}, R3)
    assert f(0, 1) == 2 and f(1, 0) == 0


def test_diagram_loading(tmp_path):
    assert load_diagram("3_1").n_crossings == 3
    assert load_diagram("3_1.pd").n_crossings == 3
    p = tmp_path / "k.pd"
    p.write_text("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\n")
    assert load_diagram(str(p)).n_crossings == 3
    with pytest.raises(InputError):
        load_diagram("no_such_knot")


def test_chain_and_triple_points():
    c = load_chain({"level": 2, "terms": [[[0, 1], 1], [[1, 0], -1]]})
    assert c == FormalChain(2, {(0, 1): 1, (1, 0): -1})
    one = load_triple_points({"triple_points": [[0, 1, 0, 1]]})
    many = load_triple_points({"colorings": [[[0, 1, 0, 1]], [{"x": 1, "y": 0, "z": 2}]]})
    assert len(one) == 1 and len(many) == 2
    with pytest.raises(InputError):
        load_triple_points({"triple_points": [[0, 1]]})
