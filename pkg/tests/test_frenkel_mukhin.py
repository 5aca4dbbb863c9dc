from collections import Counter

import pytest

from qchar import liealg
from qchar.frenkel_mukhin import q_character, sl2_lowerings
from qchar.liealg import root_system
from qchar.lweight import gen, inv


def test_a1():
    assert q_character(root_system("A", 1), 1) == {gen(1, 0): 1, inv(gen(1, 2)): 1}


def test_c2_spin_node():
    ch = q_character(root_system("C", 2), 1)
    assert len(ch) == 4 and set(ch.values()) == {1}
    assert gen(1, 0) in ch and inv(gen(1, 6)) in ch


def test_sl2_strings():
    assert sl2_lowerings(Counter({0: 1}), 2) == {(): 1, (0,): 1}
    # one string 0, 2 lowers from the top
    assert sl2_lowerings(Counter({0: 1, 2: 1}), 2) == {(): 1, (2,): 1, (0, 2): 1}
    # two separate strings lower independently
    assert sl2_lowerings(Counter({0: 1, 6: 1}), 2) == {(): 1, (0,): 1, (6,): 1, (0, 6): 1}
    assert sl2_lowerings(Counter(), 2) == {(): 1}


@pytest.mark.parametrize("kind,n", [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("B", 4)])
def test_weight_multiplicities_match_classical_character(kind, n):
    rs = root_system(kind, n)
    for i in range(1, n + 1):
        ch = q_character(rs, i)
        mults: dict = {}
        for x, m in ch.items():
            mults[x.weight(n)] = mults.get(x.weight(n), 0) + m
        expected: dict = {}
        for lam in liealg.classical_decomposition(rs, i):
            for mu, m in liealg.full_char(rs, lam).items():
                expected[mu] = expected.get(mu, 0) + m
        assert mults == expected


@pytest.mark.parametrize("kind,n", [("A", 4), ("B", 4), ("C", 4), ("D", 5)])
def test_minuscule_characters_are_multiplicity_free(kind, n):
    rs = root_system(kind, n)
    for i in liealg.minuscule_nodes(rs):
        ch = q_character(rs, i)
        assert set(ch.values()) == {1}
        assert len(ch) == liealg.orbit_size(rs, rs.omega(i))


def test_base_shift():
    rs = root_system("B", 3)
    shifted = q_character(rs, 2, base=5)
    assert shifted == {x.shift(5): m for x, m in q_character(rs, 2).items()}
