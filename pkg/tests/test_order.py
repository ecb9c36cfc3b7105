from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from peakit.order import (
    BoundsViolated,
    NotAntisymmetric,
    NotReflexive,
    NotTransitive,
    chain,
    from_covers,
    is_lattice,
    validate_poset,
)

DIAMOND = from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
# 0 < a, b < c, d < 1 with a, b both below c and d: {a, b} has two minimal upper bounds.
BOWTIE = from_covers(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)])


def test_chain_is_lattice():
    assert is_lattice(chain(2)) is True
    assert is_lattice(chain(5)) is True


def test_bowtie_reports_first_pair_without_bounds():
    assert is_lattice(BOWTIE) == (1, 2)
    assert BOWTIE.join(1, 2) is None
    assert BOWTIE.meet(3, 4) is None
    assert BOWTIE.meet(1, 2) == 0


def test_diamond_meets_and_joins():
    assert DIAMOND.meet(1, 2) == 0
    assert DIAMOND.join(1, 2) == 3
    assert DIAMOND.meet_all([1, 3]) == 1
    assert DIAMOND.join_all([]) == 0
    assert DIAMOND.meet_all([]) == 3


@pytest.mark.parametrize(
    "leq, error, witness",
    [
        ([[1, 1], [0, 0]], NotReflexive, (1, 1)),
        ([[1, 1, 1], [0, 1, 1], [0, 1, 1]], NotAntisymmetric, (1, 2)),
        ([[1, 1, 0], [0, 1, 1], [0, 0, 1]], NotTransitive, (0, 1, 2)),
        ([[1, 0], [0, 1]], BoundsViolated, (0, 1)),
    ],
)
def test_validate_poset_first_violation(leq, error, witness):
    with pytest.raises(error) as exc:
        validate_poset(len(leq), leq, 0, len(leq) - 1)
    assert exc.value.witness == witness


def test_relabel_moves_bounds():
    p = chain(3).relabel([2, 1, 0])
    assert (p.bottom, p.top) == (2, 0)
    assert p.le(2, 1) and p.le(1, 0)


def _bound_properties(p):
    r = range(p.n)
    for x, y in product(r, repeat=2):
        m, j = p.meet(x, y), p.join(x, y)
        assert m == p.meet(y, x) and j == p.join(y, x)
        if m is not None:
            assert p.le(m, x) and p.le(m, y)
            assert all(p.le(z, m) for z in r if p.le(z, x) and p.le(z, y))
        if j is not None:
            assert p.le(x, j) and p.le(y, j)
            assert all(p.le(j, z) for z in r if p.le(x, z) and p.le(y, z))


@st.composite
def random_bounded_posets(draw):
    """Bounded posets on up to 6 elements from a random DAG on the interior."""
    n = draw(st.integers(2, 6))
    inner = range(1, n - 1)
    edges = [(0, x) for x in inner] + [(x, n - 1) for x in inner] + [(0, n - 1)]
    for a, b in product(inner, repeat=2):
        if a < b and draw(st.booleans()):
            edges.append((a, b))
    return from_covers(n, edges)


@settings(max_examples=150, deadline=None)
@given(random_bounded_posets())
def test_meet_join_are_greatest_and_least_bounds(p):
    _bound_properties(p)
    if p.is_lattice():
        r = range(p.n)
        for x, y, z in product(r, repeat=3):
            assert p.meet(p.meet(x, y), z) == p.meet(x, p.meet(y, z))
            assert p.join(p.join(x, y), z) == p.join(x, p.join(y, z))
        for x, y in product(r, repeat=2):
            assert p.meet(x, p.join(x, y)) == x == p.join(x, p.meet(x, y))
