from __future__ import annotations

import random

import pytest

from longvk.gauss import mirror, parse_gauss_code
from longvk.invariants import (
    FiniteBiquandle,
    InvalidStructure,
    check_axioms,
    coloring_matrix,
    commutator_witness,
    default_catalog,
    dihedral_quandle,
    enumerate_biquandles,
    mat_identity,
    mat_mul,
    odd_writhe,
    shipped_catalog,
    structure_from_spec,
    structure_from_text,
    trivial_quandle,
)
from longvk.monoid import concat
from oracles import oracle_coloring_matrix, oracle_odd_writhe
from strategies import random_diagram

VT = parse_gauss_code("O1+ O2+ U1+ U2+")
TREFOIL = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+")
FIG8 = parse_gauss_code("O1+ U2+ O3- U4- O2+ U1+ O4- U3-")
INTERLEAVED = parse_gauss_code("O1+ U2+ U1+ O2+")

# frozen from the size-4 enumeration: under-out cycles the under colour,
# over-out comes from a latin square; gives non-commuting matrices below
WITNESS_STRUCTURE = FiniteBiquandle(
    m=4,
    up=((0, 0, 0, 0), (2, 2, 2, 2), (3, 3, 3, 3), (1, 1, 1, 1)),
    down=((0, 2, 3, 1), (2, 0, 1, 3), (3, 1, 0, 2), (1, 3, 2, 0)),
    kind="biquandle",
    name="biq:4:052",
)


def test_odd_writhe_frozen_values():
    assert odd_writhe(parse_gauss_code("")) == 0
    assert odd_writhe(VT) == 2
    assert odd_writhe(mirror(VT)) == -2
    assert odd_writhe(TREFOIL) == 0
    assert odd_writhe(FIG8) == 0
    assert odd_writhe(INTERLEAVED) == 2
    assert odd_writhe(parse_gauss_code("O1+ U2- U1+ O2-")) == 0


def test_odd_writhe_matches_oracle(rng: random.Random):
    for _ in range(250):
        d = random_diagram(rng, rng.randint(0, 8))
        assert odd_writhe(d) == oracle_odd_writhe(d)


def test_odd_writhe_mirror_antisymmetric(rng: random.Random):
    for _ in range(100):
        d = random_diagram(rng, rng.randint(0, 7))
        assert odd_writhe(mirror(d)) == -odd_writhe(d)


def test_odd_writhe_additive_under_concat(rng: random.Random):
    for _ in range(80):
        a = random_diagram(rng, rng.randint(0, 5))
        b = random_diagram(rng, rng.randint(0, 5))
        assert odd_writhe(concat(a, b)) == odd_writhe(a) + odd_writhe(b)


def test_standard_structures_satisfy_axioms():
    for x in (trivial_quandle(2), trivial_quandle(5), dihedral_quandle(3),
              dihedral_quandle(5), dihedral_quandle(7), WITNESS_STRUCTURE):
        assert check_axioms(x) is True


def test_axiom_violations_are_named():
    broken = FiniteBiquandle(
        m=2, up=((0, 0), (0, 0)), down=((0, 1), (0, 1)),
        kind="biquandle", name="bad",
    )
    report = check_axioms(broken)
    assert report is not True
    assert ("up_invertible", (0, 0, 1)) in report

    d3 = dihedral_quandle(3)
    up = [list(row) for row in d3.up]
    up[0][1], up[0][2] = up[0][2], up[0][1]
    tweaked = FiniteBiquandle(
        m=3, up=tuple(tuple(row) for row in up), down=d3.down,
        kind="quandle", name="bad2",
    )
    names = [axiom for axiom, _ in check_axioms(tweaked)]
    assert "up_invertible" in names

    kinkless = FiniteBiquandle(
        m=2, up=((0, 0), (1, 1)), down=((1, 1), (0, 0)),
        kind="biquandle", name="bad3",
    )
    names = [axiom for axiom, _ in check_axioms(kinkless)]
    assert "kink_under_first" in names and "kink_over_first" in names

    false_quandle = FiniteBiquandle(
        m=2, up=((0, 0), (1, 1)), down=((0, 1), (1, 0)),
        kind="quandle", name="bad4",
    )
    names = [axiom for axiom, _ in check_axioms(false_quandle)]
    assert "quandle_down_identity" in names
    assert "exchange" in names


def test_structure_text_round_trip():
    text = "3 quandle\n0 2 1\n2 1 0\n1 0 2\n"
    x = structure_from_text(text, name="dz3")
    assert x.up == dihedral_quandle(3).up
    assert x.kind == "quandle"
    with pytest.raises(InvalidStructure):
        structure_from_text("2 quandle\n0 0\n")
    with pytest.raises(InvalidStructure):
        structure_from_text("nonsense")


def test_structure_from_spec():
    assert structure_from_spec("dihedral:5").name == "dihedral:5"
    assert structure_from_spec("trivial:4").m == 4
    with pytest.raises(InvalidStructure):
        structure_from_spec("dihedral:0")
    with pytest.raises(InvalidStructure):
        structure_from_spec("whatever:3")


def test_catalogs():
    names = [x.name for x in default_catalog()]
    assert names == ["dihedral:3", "dihedral:5"]
    shipped = shipped_catalog()
    assert len(shipped) >= 2
    for x in shipped:
        assert check_axioms(x) is True


def test_coloring_matrix_frozen_values():
    identity3 = mat_identity(3)
    assert coloring_matrix(parse_gauss_code(""), dihedral_quandle(3)) == identity3
    assert coloring_matrix(VT, dihedral_quandle(3)) == identity3
    assert coloring_matrix(TREFOIL, dihedral_quandle(3)) == tuple(
        tuple(3 if i == j else 0 for j in range(3)) for i in range(3)
    )
    assert coloring_matrix(INTERLEAVED, dihedral_quandle(3)) == tuple(
        tuple(1 for _ in range(3)) for _ in range(3)
    )
    assert coloring_matrix(FIG8, dihedral_quandle(5)) == tuple(
        tuple(5 if i == j else 0 for j in range(5)) for i in range(5)
    )
    assert coloring_matrix(parse_gauss_code("O1+ U2- U1+ O2-"), WITNESS_STRUCTURE) == (
        (4, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0)
    )


def test_coloring_matrix_matches_exhaustive_oracle(rng: random.Random):
    dz3 = dihedral_quandle(3)
    for _ in range(60):
        d = random_diagram(rng, rng.randint(0, 3))
        assert coloring_matrix(d, dz3) == oracle_coloring_matrix(d, dz3)
    dz5 = dihedral_quandle(5)
    for _ in range(15):
        d = random_diagram(rng, rng.randint(0, 2))
        assert coloring_matrix(d, dz5) == oracle_coloring_matrix(d, dz5)
    for _ in range(25):
        d = random_diagram(rng, rng.randint(0, 3))
        assert coloring_matrix(d, WITNESS_STRUCTURE) == oracle_coloring_matrix(
            d, WITNESS_STRUCTURE
        )


def test_matrix_product_law(rng: random.Random):
    structures = [dihedral_quandle(3), dihedral_quandle(5), WITNESS_STRUCTURE]
    for _ in range(40):
        a = random_diagram(rng, rng.randint(0, 4))
        b = random_diagram(rng, rng.randint(0, 4))
        ab = concat(a, b)
        for x in structures:
            assert coloring_matrix(ab, x) == mat_mul(
                coloring_matrix(a, x), coloring_matrix(b, x)
            )


def test_commutator_witness_frozen_pair():
    a = parse_gauss_code("O1+ U2- U1+ O2-")
    b = parse_gauss_code("U1+ O2- O1+ U2-")
    hit = commutator_witness(a, b, WITNESS_STRUCTURE)
    assert hit == (0, 1, 4, 0)
    left = mat_mul(coloring_matrix(a, WITNESS_STRUCTURE), coloring_matrix(b, WITNESS_STRUCTURE))
    right = mat_mul(coloring_matrix(b, WITNESS_STRUCTURE), coloring_matrix(a, WITNESS_STRUCTURE))
    assert (left[0][1], right[0][1]) == (4, 0)


def test_commutator_witness_none_for_commuting_pairs():
    assert commutator_witness(TREFOIL, VT, dihedral_quandle(3)) is None
    assert commutator_witness(VT, INTERLEAVED, dihedral_quandle(3)) is None


def test_commutator_witness_agrees_with_products(rng: random.Random, corpus):
    diagrams = list(corpus.values())
    structures = [dihedral_quandle(3), WITNESS_STRUCTURE]
    for _ in range(40):
        a = diagrams[rng.randrange(len(diagrams))]
        b = diagrams[rng.randrange(len(diagrams))]
        for x in structures:
            ma, mb = coloring_matrix(a, x), coloring_matrix(b, x)
            commutes = mat_mul(ma, mb) == mat_mul(mb, ma)
            assert (commutator_witness(a, b, x) is None) == commutes


def test_enumeration_counts_small_sizes():
    assert len(enumerate_biquandles(1)) == 1
    two = enumerate_biquandles(2)
    assert len(two) == 2
    three = enumerate_biquandles(3)
    assert len(three) == 15
    assert sum(1 for x in three if x.kind == "quandle") == 3
    for x in two + three:
        assert check_axioms(x) is True
