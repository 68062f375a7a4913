from __future__ import annotations

import random

import pytest

from longvk.gauss import canonicalize, parse_gauss_code, serialize
from longvk.monoid import (
    NotACutPoint,
    concat,
    cut_points,
    is_diagram_decomposable,
    split_at,
)
from longvk.surface import supporting_genus
from oracles import oracle_cut_points
from strategies import random_diagram

TRIVIAL = parse_gauss_code("")


def test_concat_known_example():
    left = parse_gauss_code("O1+ U1+")
    right = parse_gauss_code("O1- U1-")
    assert serialize(concat(left, right)) == "O1+ U1+ O2- U2-"


def test_concat_identity(rng: random.Random):
    for _ in range(50):
        d = random_diagram(rng, rng.randint(0, 6))
        assert concat(d, TRIVIAL) == canonicalize(d)
        assert concat(TRIVIAL, d) == canonicalize(d)


def test_concat_associative(rng: random.Random):
    for _ in range(60):
        a = random_diagram(rng, rng.randint(0, 4))
        b = random_diagram(rng, rng.randint(0, 4))
        c = random_diagram(rng, rng.randint(0, 4))
        assert concat(concat(a, b), c) == concat(a, concat(b, c))


def test_cut_points_examples():
    assert cut_points(parse_gauss_code("O1+ U1+ O2+ U2+")) == (0, 2, 4)
    assert cut_points(parse_gauss_code("O1+ O2+ U1+ U2+")) == (0, 4)
    assert cut_points(TRIVIAL) == (0,)


def test_cut_points_match_oracle(rng: random.Random):
    for _ in range(200):
        d = random_diagram(rng, rng.randint(0, 7))
        assert cut_points(d) == oracle_cut_points(d)


def test_split_concat_round_trip(rng: random.Random):
    for _ in range(100):
        left = random_diagram(rng, rng.randint(0, 4))
        right = random_diagram(rng, rng.randint(0, 4))
        product = concat(left, right)
        gap = 2 * left.n
        a, b = split_at(product, gap)
        assert a == canonicalize(left)
        assert b == canonicalize(right)
        assert concat(a, b) == product


def test_split_rejects_spanned_gap():
    d = parse_gauss_code("O1+ O2+ U1+ U2+")
    for gap in (1, 2, 3):
        with pytest.raises(NotACutPoint):
            split_at(d, gap)
    with pytest.raises(NotACutPoint):
        split_at(d, 9)


def test_decomposability_is_diagram_level():
    assert is_diagram_decomposable(parse_gauss_code("O1+ U1+ O2+ U2+"))
    assert not is_diagram_decomposable(parse_gauss_code("O1+ O2+ U1+ U2+"))
    assert not is_diagram_decomposable(TRIVIAL)
    assert not is_diagram_decomposable(parse_gauss_code("O1+ U1+"))


def test_concat_genus_subadditive(rng: random.Random):
    for _ in range(150):
        a = random_diagram(rng, rng.randint(0, 5))
        b = random_diagram(rng, rng.randint(0, 5))
        assert supporting_genus(concat(a, b)) <= supporting_genus(a) + supporting_genus(b)
