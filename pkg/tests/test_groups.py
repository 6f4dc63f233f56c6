import json

import pytest

from wreathring.cyclotomic import Cyclotomic
from wreathring.groups import (FiniteGroup, InvalidCharacterTable, InvalidGroupFile,
                               NotAGroup, builtin, column_orthogonality_holds,
                               conjugacy_classes, load_group_file,
                               validate_character_table)


def brute_force_orbits(G):
    seen, orbits = set(), []
    for g in range(G.order):
        if g in seen:
            continue
        orbit = {G.mul(G.mul(h, g), G.inverse[h]) for h in range(G.order)}
        seen |= orbit
        orbits.append(orbit)
    return orbits


@pytest.mark.parametrize("name,sizes", [("trivial", [1]), ("z2", [1, 1]), ("s3", [1, 3, 2])])
def test_class_sizes(name, sizes):
    assert list(builtin(name).ccl.sizes) == sizes


@pytest.mark.parametrize("name", ["trivial", "z2", "z3", "z4", "z5", "z6", "klein", "s3", "z2xz3"])
def test_classes_match_brute_force(name):
    t = builtin(name)
    orbits = brute_force_orbits(t.group)
    assert sorted(map(sorted, orbits)) == sorted(map(sorted, t.ccl.classes))
    assert list(t.ccl.classes[0]) == [t.group.identity]


@pytest.mark.parametrize("name", ["trivial", "z2", "z3", "z4", "z6", "klein", "s3", "z2xz3"])
def test_builtin_tables_are_valid(name):
    t = builtin(name)
    assert column_orthogonality_holds(t)
    assert sum(d * d for d in t.dimensions) == t.group.order
    assert all(v == 1 for v in t.values[0])


def test_s3_is_nonabelian():
    t = builtin("s3")
    assert not t.is_abelian()
    assert sorted(t.dimensions) == [1, 1, 2]
    assert builtin("klein").is_abelian()


def _cyclic_group(m):
    return FiniteGroup(f"z{m}", [[(a + b) % m for b in range(m)] for a in range(m)])


def test_validation_examples():
    G2 = _cyclic_group(2)
    one, minus = Cyclotomic.from_int(2, 1), Cyclotomic.from_int(2, -1)
    validate_character_table(G2, [[one, one], [one, minus]])
    with pytest.raises(InvalidCharacterTable):
        validate_character_table(G2, [[one, one], [one, one]])
    G3 = _cyclic_group(3)
    z = Cyclotomic.zeta
    o = Cyclotomic.from_int(3, 1)
    validate_character_table(G3, [[o, o, o], [o, z(3, 1), z(3, 2)], [o, z(3, 2), z(3, 1)]])


def test_not_a_group():
    with pytest.raises(NotAGroup):
        FiniteGroup("bad", [[0, 1], [0, 1]])


def _z3_description():
    return {
        "name": "myz3", "order": 3, "exponent": 3,
        "cayley": [[(a + b) % 3 for b in range(3)] for a in range(3)],
        "character_table": [["1", "1", "1"], ["1", "z^1", "z^2"], ["1", "z^2", "z^1"]],
        "irreducibles": ["1", "w", "w2"],
    }


def test_group_file_round_trip(tmp_path):
    path = tmp_path / "z3.json"
    path.write_text(json.dumps(_z3_description()))
    t = load_group_file(path)
    assert t.group.name == "myz3"
    assert t.irreducible_names == ("1", "w", "w2")
    assert column_orthogonality_holds(t)


@pytest.mark.parametrize("mutate", [
    lambda d: d.pop("cayley"),
    lambda d: d.update(order=4),
    lambda d: d.update(exponent=6),
    lambda d: d["character_table"].__setitem__(1, ["1", "1", "1"]),
    lambda d: d["character_table"].__setitem__(1, ["1", "q", "1"]),
    lambda d: d.update(cayley=[[0, 1, 2], [1, 1, 0], [2, 0, 1]]),
])
def test_bad_group_files(tmp_path, mutate):
    data = _z3_description()
    mutate(data)
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    with pytest.raises(InvalidGroupFile):
        load_group_file(path)


def test_missing_group_file(tmp_path):
    with pytest.raises(InvalidGroupFile):
        load_group_file(tmp_path / "nope.json")
