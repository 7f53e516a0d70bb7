import json

import pytest

from Constructions.builders import BUILDERS, build, left_zero, min_chain, rectangular_band, semilattice
from Constructions.power import (extend_hom, members_of, power_construction, setwise_product,
                                 singleton_embedding, subset_label)
from Core.validator import validate
from Properties.deciders import check
from Search.enumeration import plain_semigroups
from Utils.errors import JoinMissing, NotAHomomorphism, SizeBoundError, UnknownTemplate
from Utils.model import PropertyId
from Utils.serialize import load_structure, serialize, write_structure

P = PropertyId


# =====================================================================
# Power construction
# =====================================================================

def test_masks():
    assert members_of(5) == [0, 2]
    assert subset_label(3) == "{0,1}"


def test_power_of_left_zero(lz2):
    PB = power_construction(lz2.plain())
    assert PB.name == "P_f(LZ2)"
    assert PB.labels == ("{0}", "{1}", "{0,1}")
    assert PB.table.tolist() == [[0, 0, 0], [1, 1, 1], [2, 2, 2]]
    assert PB.le(0, 2) and PB.le(1, 2)
    assert not PB.le(0, 1)
    assert check(PB, P.IDEMPOTENT_ORDERED).holds


def test_power_of_cyclic(z2):
    PB = power_construction(z2.plain())
    assert PB.table.tolist() == [[0, 1, 2], [1, 0, 2], [2, 2, 2]]
    v = check(PB, P.IDEMPOTENT_ORDERED)
    assert not v.holds
    assert v.counterexample == (1,)


def test_power_of_trivial(t1):
    assert power_construction(t1.plain()).table.tolist() == [[0]]


def test_power_size_bound():
    with pytest.raises(SizeBoundError):
        power_construction(left_zero(5).plain())


def test_setwise_product(z2):
    assert setwise_product(z2.plain(), 0b10, 0b10) == 0b01
    assert setwise_product(z2.plain(), 0b11, 0b01) == 0b11


def test_singletons(ch3):
    assert singleton_embedding(ch3.plain()) == [0, 1, 3]


def test_power_file_round_trip(tmp_path):
    PB = power_construction(left_zero(4).plain())
    assert PB.n == 15
    assert PB.construction == "power"
    path = tmp_path / "p_lz4.json"
    write_structure(PB, path)
    assert load_structure(path) == PB


def test_unmarked_power_document_hits_the_file_bound():
    doc = serialize(power_construction(left_zero(4).plain()))
    del doc["construction"]
    with pytest.raises(SizeBoundError):
        validate(doc)


def test_power_band_on_small_tables(plain_upto3):
    mismatches = [B.name for B in plain_upto3
                  if check(power_construction(B), P.IDEMPOTENT_ORDERED).holds != B.is_band()]
    assert mismatches == []


# =====================================================================
# Extending homomorphisms
# =====================================================================

def test_extension_into_chain(sl2):
    E = extend_hom(sl2.plain(), min_chain(2), (0, 1))
    assert E.phi == {1: 0, 2: 1, 3: 1}
    assert E.hom_law.holds
    assert E.diagram.holds
    assert E.monotone.holds


def test_extension_needs_joins(sl2):
    with pytest.raises(JoinMissing) as e:
        extend_hom(sl2.plain(), semilattice(2), (0, 1))
    assert tuple(e.value.witness) == (0, 1)


def test_extension_needs_a_homomorphism(sl2, lz2):
    with pytest.raises(NotAHomomorphism) as e:
        extend_hom(sl2.plain(), lz2, (0, 1))
    assert e.value.witness == (1, 0)
    with pytest.raises(NotAHomomorphism):
        extend_hom(sl2.plain(), lz2, (0,))
    with pytest.raises(NotAHomomorphism):
        extend_hom(sl2.plain(), lz2, (0, 2))


@pytest.mark.parametrize("n", [1, 2])
def test_singletons_extend_into_the_power(n):
    bands = [B for B in plain_semigroups(n) if B.is_band()]
    assert len(bands) == {1: 1, 2: 4}[n]
    for B in bands:
        E = extend_hom(B, power_construction(B), singleton_embedding(B))
        assert E.hom_law.holds, B.name
        assert E.diagram.holds, B.name
        assert E.monotone.holds, B.name


def test_constant_map_extends(ch3, lz2):
    E = extend_hom(lz2.plain(), ch3, (1, 1))
    assert set(E.phi.values()) == {1}
    assert E.hom_law.holds and E.diagram.holds and E.monotone.holds


# =====================================================================
# Builders
# =====================================================================

def test_builder_names(fixtures):
    assert [S.name for S in fixtures] == ["T1", "LZ2", "RZ2", "CH3", "SAT3", "Z2", "SL2", "RB2x2"]


def test_min_chain_document():
    doc = serialize(min_chain(3))
    assert doc["table"] == [[0, 0, 0], [0, 1, 1], [0, 1, 2]]
    assert doc["order"] == [[0, 0], [0, 1], [0, 2], [1, 1], [1, 2], [2, 2]]
    assert doc["description"] == "x*y = min(x, y), chain order"


def test_rectangular_band():
    S = rectangular_band(2, 3)
    assert S.n == 6
    assert S.labels[4] == "(1,1)"
    assert S.mul(1, 5) == 2     # (0,1)(1,2) = (0,2)
    assert check(S, P.RECTANGULAR).holds
    assert check(S, P.BAND).holds


def test_build_by_template(tmp_path, ch3):
    assert build("min-chain", "3") == ch3
    assert build("rectangular_band", 2, 2).name == "RB2x2"
    path = tmp_path / "ch3.json"
    path.write_text(json.dumps(serialize(ch3)))
    assert build("from-file", str(path)) == ch3


@pytest.mark.parametrize("template, params", [("nope", ()), ("left_zero", ()), ("trivial", (1,))])
def test_unknown_templates(template, params):
    with pytest.raises(UnknownTemplate):
        build(template, *params)


def test_builder_bound():
    with pytest.raises(SizeBoundError):
        left_zero(13)


@pytest.mark.parametrize("name", sorted(set(BUILDERS) - {"from_file", "trivial", "rectangular_band"}))
def test_every_builder_validates(name):
    S = build(name, 3)
    assert S.n == 3
