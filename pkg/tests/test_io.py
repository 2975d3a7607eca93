import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import DATA
from hopfact import io
from hopfact.hopf import dual_hopf, function_algebra, group_algebra
from hopfact.permcore import InputError, cyclic_group, symmetric_group


def test_group_with_cycle_strings():
    G = io.read_group(DATA / "s3.json")
    assert G.order() == 6


def test_group_round_trip():
    G = symmetric_group(4)
    H = io.group_from_json(json.loads(json.dumps(io.group_to_json(G))))
    assert H.same_group(G)


def test_factorization_with_paths_and_inline():
    G, G1, G2 = io.read_factorization(DATA / "s3_factorization.json")
    assert (G.order(), G1.order(), G2.order()) == (6, 3, 2)


@pytest.mark.parametrize("obj, field", [
    ({"degree": 3}, "generators"),
    ({"degree": 0, "generators": []}, "degree"),
    ({"degree": 3, "generators": [[0, 1]]}, "generators[0]"),
    ({"degree": 3, "generators": [[0, 1, 2], "(1 5)"]}, "generators[1]"),
])
def test_group_errors_name_field(obj, field):
    with pytest.raises(InputError, match=field.replace("[", r"\[").replace("]", r"\]")):
        io.group_from_json(obj)


def test_missing_member(tmp_path):
    p = tmp_path / "f.json"
    p.write_text(json.dumps({"group": {"degree": 2, "generators": [[1, 0]]}, "g1": {"degree": 2, "generators": []}}))
    with pytest.raises(InputError, match="g2"):
        io.read_factorization(p)


def test_malformed_json(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{")
    with pytest.raises(InputError, match="malformed"):
        io.load_json(p)


def test_missing_file(tmp_path):
    with pytest.raises(InputError, match="no such file"):
        io.load_json(tmp_path / "nope.json")


@pytest.mark.parametrize("make", [lambda: group_algebra(symmetric_group(3)),
                                  lambda: function_algebra(cyclic_group(4)),
                                  lambda: dual_hopf(group_algebra(cyclic_group(3)))],
                         ids=["group", "function", "dual"])
def test_hopf_round_trip_bit_exact(make, tmp_path):
    H = make()
    p = tmp_path / "h.json"
    text = io.write_hopf(H, p)
    back = io.read_hopf(p)
    assert back.same_structure(H)
    assert io.dump_json(io.hopf_to_json(back)) == text


def test_hopf_file_is_sorted_lowest_terms(h_s4, tmp_path):
    obj = io.hopf_to_json(h_s4)
    assert obj["mult"] == sorted(obj["mult"])
    assert obj["comult"] == sorted(obj["comult"])
    for entry in obj["mult"] + obj["comult"]:
        assert entry[3] == "1/1"
    p = tmp_path / "h.json"
    io.write_hopf(h_s4, p)
    assert io.read_hopf(p).same_structure(h_s4)


@given(st.lists(st.fractions(max_denominator=50).filter(lambda c: c != 0), min_size=1, max_size=4))
@settings(max_examples=30)
def test_rationals_survive(values):
    H = group_algebra(cyclic_group(4))
    H.mult[(0, 0)] = {k: v for k, v in enumerate(values)}
    obj = json.loads(io.dump_json(io.hopf_to_json(H)))
    assert io.hopf_from_json(obj).mult[(0, 0)] == H.mult[(0, 0)]


@pytest.mark.parametrize("mutate, field", [
    (lambda o: o.update(dim=-1), "dim"),
    (lambda o: o["mult"].append([0, 0, 99, "1/1"]), "mult"),
    (lambda o: o["comult"].append([0, 0, 0, "x"]), "comult"),
    (lambda o: o["unit"].pop(), "unit"),
    (lambda o: o["antipode"].append([0, 1]), "antipode"),
])
def test_hopf_errors_name_field(mutate, field):
    obj = io.hopf_to_json(group_algebra(cyclic_group(3)))
    mutate(obj)
    with pytest.raises(InputError, match=field):
        io.hopf_from_json(obj)
