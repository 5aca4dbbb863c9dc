from itertools import combinations
from math import comb

import pytest

from qchar.liealg import RootSystemError, root_system, theorem_nodes
from qchar.partitions import (
    PartitionCtx,
    PartitionError,
    all_partitions,
    canonical_rep,
    closed_count,
    count_J,
    enumerate_J,
    equivalence_class,
    flip,
    flip_set,
    index_set,
    iota,
    mult_exponent,
    sigma,
    supp,
    supp_m,
    supp_pm,
    tau,
)


def ctx(kind, n, i, r):
    return PartitionCtx(root_system(kind, n), i, r)


def contexts(kind, ranks):
    for n in ranks:
        rs = root_system(kind, n)
        for i in theorem_nodes(rs):
            for r in index_set(rs, i):
                yield PartitionCtx(rs, i, r)


def test_index_sets():
    assert index_set(root_system("B", 4), 3) == [0, 1, 2, 3]
    assert index_set(root_system("C", 4), 3) == [1, 3]
    assert index_set(root_system("D", 6), 4) == [0, 2, 4]
    with pytest.raises(RootSystemError):
        index_set(root_system("C", 4), 1)
    with pytest.raises(PartitionError):
        ctx("C", 3, 2, 1)


def test_ctx_derived_values():
    c = ctx("D", 6, 4, 0)
    assert c.M == 2 and c.N == 0
    assert ctx("B", 4, 3, 0).M == 1


def test_enumeration_examples():
    assert enumerate_J(ctx("C", 3, 3, 1)) == {1: [(2,)]}
    assert enumerate_J(ctx("D", 4, 2, 0)) == {0: [()], 1: [(1,), (2,), (3,)]}
    assert all_partitions(ctx("B", 3, 2, 0)) == [(), (1,), (2,), (3,)]


def test_count_examples():
    assert count_J(ctx("C", 3, 3, 1)) == 1 == comb(2, 1) - comb(2, 0)
    assert count_J(ctx("B", 3, 2, 0)) == 4
    assert len(enumerate_J(ctx("D", 4, 2, 0))[1]) == 3


@pytest.mark.parametrize("kind", ["B", "C", "D"])
def test_counts_match_closed_forms(kind):
    lo = 4 if kind == "D" else 2
    for c in contexts(kind, range(lo, 9)):
        assert count_J(c) == closed_count(c)


def test_enumeration_is_brute_force_filter():
    for c in contexts("C", range(2, 7)):
        brute = [p for p in combinations(range(1, c.n + 1), c.M) if c.admits(p)]
        assert enumerate_J(c)[c.M] == brute
        for p in brute:
            assert all(j <= c.n - c.i + c.r + 2 * s - 1 for s, j in enumerate(p, 1))
            assert not p or p[0] > c.r


def test_c_recursion():
    # for an admissible first part j1 <= n - i + r + 1:
    # (j1, ..., jM) in J_r(i)  <=>  (j2, ..., jM) in J_{j1}(i - r + j1 - 2)
    for n in range(2, 7):
        rs = root_system("C", n)
        for i in theorem_nodes(rs):
            for r in index_set(rs, i):
                c = PartitionCtx(rs, i, r)
                if c.M < 1:
                    continue
                members = set(enumerate_J(c)[c.M])
                for p in combinations(range(r + 1, n + 1), c.M):
                    if p[0] > n - i + r + 1:
                        assert p not in members
                        continue
                    i2, r2 = i - r + p[0] - 2, p[0]
                    if i2 in theorem_nodes(rs):
                        tail_ok = PartitionCtx(rs, i2, r2).admits(p[1:])
                    else:
                        tail_ok = 1 <= i2 <= n and not p[1:]
                    assert (p in members) == tail_ok, (n, i, r, p)


def test_binomial_identity():
    for n in range(2, 13):
        for r in range(n):
            for M in range(n - r):
                lhs = sum(comb(n - r, l) for l in range(M + 1))
                rhs = comb(n - r - 1, M) + 2 * sum(comb(n - r - 1, k) for k in range(M))
                assert lhs == rhs


def test_iota_and_supp():
    assert iota((2, 5, 6), 5) == 2
    assert iota((2, 5, 6), 2) == 1
    assert supp((2, 5, 6)) == {2, 5, 6}
    with pytest.raises(PartitionError):
        iota((2, 5, 6), 3)


def test_sigma_tau_examples():
    assert sigma((2, 3), 2, 1) == 3 and tau((2, 3), 2, 1) == 5
    assert sigma((2, 5), 2, 1) == 2 and tau((2, 5), 2, 1) == 3
    assert sigma((2,), 2, 1) == sigma((2,), 2, -1) == 2
    assert tau((2,), 2, 1) == 3 and tau((2,), 2, -1) == 1


def _sigma_by_definition(p, j, sign):
    s = iota(p, j)
    if sign > 0:
        cands = [jj for jj in p if jj >= j and all(p[t - 1] - j < 2 * (t - s) for t in range(s + 1, iota(p, jj) + 1))]
        return max(cands)
    cands = [jj for jj in p if jj <= j and all(j - p[t - 1] < 2 * (s - t) for t in range(iota(p, jj), s))]
    return min(cands)


def test_sigma_against_set_definition():
    for p in combinations(range(1, 10), 4):
        for j in p:
            for sign in (1, -1):
                assert sigma(p, j, sign) == _sigma_by_definition(p, j, sign), (p, j, sign)


def test_flip_examples():
    assert flip((2,), 2, 1) == (3,)
    assert flip((2, 3), 2, 1) == (4, 5)


def test_flip_preserves_length_and_inverts():
    for p in combinations(range(1, 11), 3):
        for j in p:
            for sign in (1, -1):
                t = tau(p, j, sign)
                if t < 1:
                    continue
                q = flip(p, j, sign)
                assert len(q) == len(p)
                assert tau(q, t, -sign) == j
                assert flip(q, t, -sign) == p


def test_supp_examples():
    c = ctx("D", 4, 2, 0)
    assert supp_pm(c, (2,), 1) == {2} and supp_pm(c, (2,), -1) == set()
    assert supp_pm(c, (3,), 1) == set() and supp_pm(c, (3,), -1) == {3}
    assert supp_pm(c, (1,), 1) == supp_pm(c, (1,), -1) == set()


def test_flip_bookkeeping():
    # flipping j in supp_m moves it to tau(j) in supp_{m+1}
    for p in combinations(range(1, 12), 3):
        for m in range(0, 6):
            for j in supp_m(p, m):
                q = flip(p, j, 1)
                t = tau(p, j, 1)
                assert supp_m(q, m) == supp_m(p, m) - {j}
                assert supp_m(q, m + 1) == supp_m(p, m + 1) | {t}


def d_contexts(max_rank=6):
    return list(contexts("D", range(4, max_rank + 1)))


def test_flip_intervals_disjoint_on_supports():
    for c in d_contexts():
        for p in all_partitions(c):
            for sign in (1, -1):
                s = supp_pm(c, p, sign)
                spans = [set(range(min(j, tau(p, j, sign)), max(j, tau(p, j, sign)) + 1)) for j in s]
                for a in range(len(spans)):
                    for b in range(a + 1, len(spans)):
                        assert not spans[a] & spans[b]
                flip_set(p, s, sign)


def test_class_examples():
    c = ctx("D", 4, 2, 0)
    assert equivalence_class(c, (2,)) == {(2,), (3,)}
    assert equivalence_class(c, (1,)) == {(1,)}
    assert equivalence_class(c, ()) == {()}
    assert mult_exponent(c, (2,)) == 1 and mult_exponent(c, (1,)) == 0
    assert canonical_rep(c, (3,)) == (2,) and canonical_rep(c, (2,)) == (2,)
    with pytest.raises(PartitionError):
        equivalence_class(ctx("B", 3, 2, 0), (1,))


def test_classes_partition_J():
    for c in d_contexts():
        for k, ps in enumerate_J(c).items():
            classes = {equivalence_class(c, p) for p in ps}
            assert sorted(q for cls in classes for q in cls) == ps
            reps = set()
            for cls in classes:
                canon = [q for q in cls if not supp_pm(c, q, -1)]
                assert len(canon) == 1
                reps.add(canon[0])
                for q in cls:
                    assert canonical_rep(c, q) == canon[0]
                    assert len(cls) == 2 ** mult_exponent(c, q)
                    assert mult_exponent(c, q) == len(supp_pm(c, q, 1)) + len(supp_pm(c, q, -1))
            assert sum(2 ** len(supp_pm(c, p, 1)) for p in reps) == len(ps) == comb(c.n - c.r - 1, k)
