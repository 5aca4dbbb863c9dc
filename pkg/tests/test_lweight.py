import pytest
from hypothesis import given, strategies as st

from qchar.liealg import root_system
from qchar.lweight import (
    ONE,
    LWeight,
    coordinate,
    gen,
    inv,
    is_l_dominant,
    mul,
    pow,
    prod,
    simple_l_root,
    weight_of,
)

RANK = 5

terms = st.tuples(st.integers(1, RANK), st.integers(-8, 8), st.integers(-3, 3))
lweights = st.lists(terms, max_size=8).map(LWeight)


def test_group_examples():
    assert mul(gen(1, 0), inv(gen(1, 0))) == ONE
    assert mul(gen(1, 0), gen(1, 0)).as_dict() == {(1, 0): 2}
    assert pow(gen(2, 3), -2).as_dict() == {(2, 3): -2}
    assert len(gen(3, 1)) == 1 and gen(3, 1).triples() == [[3, 1, 1]]


def test_gen_rejects_bad_node():
    with pytest.raises(ValueError):
        gen(0, 1)
    with pytest.raises(ValueError):
        gen(3, 0, rank=2)
    with pytest.raises(ValueError):
        LWeight([(0, 1, 1)])


def test_canonical_form():
    x = LWeight([(2, 1, 1), (1, 5, -1), (2, 1, -1), (1, 0, 2)])
    assert x.triples() == [[1, 0, 2], [1, 5, -1]]
    assert x == LWeight({(1, 5): -1, (1, 0): 2})
    assert hash(x) == hash(LWeight.from_triples(x.triples()))
    # coinciding keys combine instead of overwriting
    assert LWeight([(1, 3, -1), (1, 3, 1)]) == ONE


@given(lweights, lweights, lweights)
def test_group_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * ONE == x
    assert x * x.inverse() == ONE
    assert x / y == x * inv(y)
    assert prod([x, y, z]) == x * y * z


@given(lweights, lweights)
def test_weight_is_homomorphism(x, y):
    wx, wy = weight_of(x, RANK), weight_of(y, RANK)
    assert weight_of(x * y, RANK) == tuple(a + b for a, b in zip(wx, wy))
    assert weight_of(x ** 3, RANK) == tuple(3 * a for a in wx)


def test_weight_examples():
    assert weight_of(ONE, 3) == (0, 0, 0)
    assert weight_of(gen(2, 5), 3) == (0, 1, 0)
    assert weight_of(mul(gen(1, 1), inv(gen(1, 5))), 3) == (0, 0, 0)
    with pytest.raises(ValueError):
        gen(4, 0).weight(3)


def test_coordinate_examples():
    assert coordinate(gen(2, 0), 2) == {0: 1}
    assert coordinate(gen(2, 0), 1) == {}
    assert coordinate(mul(gen(1, 1), inv(gen(1, 5))), 1) == {1: 1, 5: -1}


@given(lweights)
def test_coordinates_rebuild(x):
    coords = {j: x.coordinate(j) for j in range(1, RANK + 1)}
    assert LWeight.from_coordinates(coords) == x


@given(lweights, st.integers(-10, 10), st.integers(-10, 10))
def test_shift(x, a, b):
    assert x.shift(a).shift(b) == x.shift(a + b)
    assert x.shift(a).weight(RANK) == x.weight(RANK)


def test_l_dominance():
    assert is_l_dominant(ONE)
    assert is_l_dominant(gen(1, 0))
    assert not is_l_dominant(inv(gen(1, 0)))


def test_text_rendering():
    x = gen(1, 2) * gen(3, -1) ** -2
    assert x.to_text() == "w[1;2]*w[3;-1]^-2"
    assert x.to_text("y") == "Y_{1,2}*Y_{3,-1}^-2"
    assert ONE.to_text() == "1"


def test_simple_l_root_examples():
    a2 = root_system("A", 2)
    assert simple_l_root(a2, 1, 0) == gen(1, 0) * gen(1, 2) * inv(gen(2, 1))
    c2 = root_system("C", 2)
    assert simple_l_root(c2, 2, 0) == gen(2, 0) * gen(2, 4) * inv(gen(1, 1)) * inv(gen(1, 3))


_SHIFTS = {-1: None, -2: (3, 1), -3: (5, 3, 1)}


@pytest.mark.parametrize("kind,n", [(k, n) for k, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 3))
                                    for n in range(lo, 6)])
def test_simple_l_root_explicit_formula(kind, n):
    rs = root_system(kind, n)
    for i in range(1, n + 1):
        di = rs.d[i - 1]
        for k in range(-10, 11):
            expected = gen(i, k) * gen(i, k + 2 * di)
            for j in range(1, n + 1):
                a = rs.a(j, i) if j != i else 0
                if a == 0:
                    continue
                shifts = (di,) if a == -1 else _SHIFTS[a]
                for s in shifts:
                    expected = expected * inv(gen(j, k + s))
            root = simple_l_root(rs, i, k)
            assert root == expected
            assert root.weight(n) == rs.alpha(i)
