import json

import pytest

import modrep


def test_field_info():
    assert modrep.field_info(7) == (7, 3)
    assert modrep.field_info(5) == (5, 2)
    with pytest.raises(ValueError):
        modrep.field_info(4)


def test_partitions_and_classification():
    assert len(modrep.partitions(5)) == 7
    assert modrep.partitions(5, strict=True) == [[5], [4, 1], [3, 2]]
    c = modrep.classify([2, 2, 2], 3)
    assert not c["p_regular"]
    assert modrep.conjugate([3, 1]) == [2, 1, 1]


def test_hooks_and_counts():
    assert modrep.hook_length([7, 5, 3, 2], 1, 2, shifted=True) == 10
    assert modrep.hook_length([7, 5, 3, 2], 1, 4, shifted=True) == 7
    assert modrep.count_standard([3, 2]) == 5
    assert modrep.count_standard([3, 2]) == len(modrep.standard_tableaux([3, 2]))
    assert modrep.count_standard([4, 3, 1], shifted=True) == len(
        modrep.standard_tableaux([4, 3, 1], shifted=True)
    )


def test_dimension_tables_p5():
    dims = {
        tuple(parts): modrep.dim_sym(parts, 5)
        for parts in ([5], [4, 1], [3, 2], [3, 1, 1], [2, 2, 1], [2, 1, 1, 1])
    }
    assert dims == {
        (5,): 1,
        (4, 1): 3,
        (3, 2): 5,
        (3, 1, 1): 3,
        (2, 2, 1): 5,
        (2, 1, 1, 1): 1,
    }
    assert sorted(dims.values()) == [1, 1, 3, 3, 5, 5]
    assert modrep.radical_dim([4, 1], 5) == 1
    assert modrep.dim_sergeev([4, 1], 5) == (16, "M")
    assert modrep.dim_sergeev([3, 2], 5) == (32, "M")


def test_residues():
    rows = [[1, 2, 3, 4, 6], [5, 7], [8]]
    assert modrep.residue_sequence(rows, 7, shifted=True) == [0, 1, 2, 3, 0, 2, 1, 0]
    table = modrep.residue_table([5, 2, 1], 7, shifted=True)
    assert table == [[0, 1, 2, 3, 2], [0, 1], [0]]


def test_build_and_verify():
    doc = modrep.build_sym([3, 2], 5)
    assert doc["dim"] == 5
    assert doc["algebra"] == "sym"
    assert len(doc["generators"]) == 4

    result = modrep.verify_sym([3, 2], 5, trials=30)
    assert result["relations_ok"]
    assert result["jm_ok"]
    assert result["commutant"] == (1, 0)
    assert not result["submodule_found"]

    sresult = modrep.verify_sergeev([4, 1], 5, trials=30)
    assert sresult["relations_ok"]
    assert sresult["jm_ok"]
    assert sresult["commutant"] == (1, 0)
    assert not sresult["submodule_found"]


def test_build_deterministic():
    a = modrep.build_sergeev_json([2, 1], 3)
    b = modrep.build_sergeev_json([2, 1], 3)
    assert a == b
    assert json.loads(a)["dim"] == 4


def test_weight_orbit():
    orbit = modrep.weight_orbit([3, 2], 5)
    assert len(orbit["weights"]) == 2
    assert all(modrep.is_cs_weight(w, 5) for w in orbit["weights"])


def test_classification_boundary():
    rows = modrep.cross_check([5], 7)
    assert rows and all(r["pass"] for r in rows)
    witness = [r for r in rows if r["n"] == 6 and r["check"] == "CP=P_p"]
    assert witness and "(5,1)" in witness[0]["data"]


def test_illegal_shapes():
    with pytest.raises(ValueError):
        modrep.dim_sym([1, 1, 1, 1, 1], 5)
    with pytest.raises(ValueError):
        modrep.dim_sergeev([5], 5)
    with pytest.raises(ValueError):
        modrep.dim_sergeev([2, 2], 5)
