"""Partition families indexing dominant l-weights, and the type D flip combinatorics.

A partition is a strictly increasing tuple of positive integers.  The
families ``J_{k,r}`` depend on a context (root system, node ``i``, and
``r`` in the index set ``I_i``), carried by :class:`PartitionCtx`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .liealg import RootSystem, RootSystemError, theorem_nodes

Partition = tuple[int, ...]


class PartitionError(ValueError):
    pass


def index_set(rs: RootSystem, i: int) -> list[int]:
    """I_i: all 0 <= r <= i for B, those with r = i mod 2 for C and D."""
    if i not in theorem_nodes(rs):
        raise RootSystemError(f"node {i} of {rs.name} is not covered by the partition formulas")
    if rs.kind == "B":
        return list(range(i + 1))
    return [r for r in range(i + 1) if (i - r) % 2 == 0]


@dataclass(frozen=True)
class PartitionCtx:
    rs: RootSystem
    i: int
    r: int

    def __post_init__(self) -> None:
        if self.r not in index_set(self.rs, self.i):
            raise PartitionError(
                f"r={self.r} not in I_{self.i} for {self.rs.name}: expected one of "
                f"{index_set(self.rs, self.i)}"
            )

    @property
    def n(self) -> int:
        return self.rs.n

    @property
    def kind(self) -> str:
        return self.rs.kind

    @property
    def M(self) -> int:
        return (self.i - self.r) // 2

    @property
    def N(self) -> int:
        return self.n - self.i + self.r - 2

    def lengths(self) -> range:
        if self.kind == "C":
            return range(self.M, self.M + 1)
        return range(self.M + 1)

    def admits(self, p: Partition) -> bool:
        """Membership in J_r."""
        k = len(p)
        if k not in self.lengths():
            return False
        if any(a >= b for a, b in zip(p, p[1:])):
            return False
        if k and not (self.r < p[0] and p[-1] <= self.n):
            return False
        if self.kind == "C":
            return all(j <= self.n - self.i + self.r + 2 * s - 1 for s, j in enumerate(p, 1))
        if self.kind == "D":
            return not k or p[-1] < self.n
        return True

    def with_r(self, r: int) -> PartitionCtx:
        return PartitionCtx(self.rs, self.i, r)


def enumerate_J(ctx: PartitionCtx) -> dict[int, list[Partition]]:
    """J_{k,r} for every admissible length k, each sorted lexicographically."""
    top = ctx.n - 1 if ctx.kind == "D" else ctx.n
    out = {}
    for k in ctx.lengths():
        out[k] = [p for p in combinations(range(ctx.r + 1, top + 1), k) if ctx.admits(p)]
    return out


def all_partitions(ctx: PartitionCtx) -> list[Partition]:
    return [p for ps in enumerate_J(ctx).values() for p in ps]


def closed_count(ctx: PartitionCtx) -> int:
    n, r, M = ctx.n, ctx.r, ctx.M
    if ctx.kind == "C":
        return comb(n - r, M) - (comb(n - r, M - 1) if M >= 1 else 0)
    if ctx.kind == "B":
        return sum(comb(n - r, k) for k in range(M + 1))
    return sum(comb(n - r - 1, k) for k in range(M + 1))


def count_J(ctx: PartitionCtx) -> int:
    """|J_r| by enumeration, checked against the closed formula."""
    fam = enumerate_J(ctx)
    count = sum(len(ps) for ps in fam.values())
    expected = closed_count(ctx)
    if ctx.kind == "D":
        for k, ps in fam.items():
            if len(ps) != comb(ctx.n - ctx.r - 1, k):
                raise RuntimeError(f"|J_{k},{ctx.r}| = {len(ps)} != C({ctx.n - ctx.r - 1},{k})")
    if count != expected:
        raise RuntimeError(f"|J_r| = {count} but the closed formula gives {expected} for {ctx}")
    return count


def d_type_weighted_count(ctx: PartitionCtx) -> int:
    """|J_{M,r}| + 2 sum_{k<M} |J_{k,r}| (type D)."""
    fam = enumerate_J(ctx)
    return len(fam[ctx.M]) + 2 * sum(len(fam[k]) for k in range(ctx.M))


# support machinery


def supp(p: Partition) -> frozenset[int]:
    return frozenset(p)


def iota(p: Partition, j: int) -> int:
    """Position of ``j`` in ``p``, 1-based."""
    try:
        return p.index(j) + 1
    except ValueError:
        raise PartitionError(f"{j} not in support of {p}") from None


def interval(a: int, b: int) -> range:
    """[a, b] with endpoints normalised."""
    return range(min(a, b), max(a, b) + 1)


def sigma(p: Partition, j: int, sign: int) -> int:
    s = iota(p, j)
    best = j
    if sign > 0:
        # walk right while every part in (j, j'] stays within slope 2
        for t in range(s, len(p)):
            jj = p[t]
            if jj - j < 2 * (t + 1 - s):
                best = jj
            else:
                break
    else:
        for t in range(s - 2, -1, -1):
            jj = p[t]
            if j - jj < 2 * (s - (t + 1)):
                best = jj
            else:
                break
    return best


def tau(p: Partition, j: int, sign: int) -> int:
    return j + 2 * (iota(p, sigma(p, j, sign)) - iota(p, j)) + (1 if sign > 0 else -1)


def sym_diff(p: Partition, s) -> Partition:
    return tuple(sorted(set(p) ^ set(s)))


def flip(p: Partition, j: int, sign: int) -> Partition:
    """p^{+-}(j): symmetric difference of supp(p) with [j, tau(j)]."""
    return sym_diff(p, interval(j, tau(p, j, sign)))


def flip_set(p: Partition, subset, sign: int) -> Partition:
    """p^{+-}(S), flipping one element at a time.

    Requires the intervals ``[j, tau(j)]`` for ``j`` in ``S`` to be pairwise
    disjoint in ``p``.
    """
    subset = sorted(subset)
    spans = [set(interval(j, tau(p, j, sign))) for j in subset]
    for a in range(len(spans)):
        for b in range(a + 1, len(spans)):
            if spans[a] & spans[b]:
                raise PartitionError(f"flip intervals overlap for S={subset} in {p}")
    out = p
    for j in subset:
        out = flip(out, j, sign)
    return out


def supp_m(p: Partition, m: int) -> frozenset[int]:
    return frozenset(j for s, j in enumerate(p, 1) if 2 * s == j - m)


def supp_pm(ctx: PartitionCtx, p: Partition, sign: int) -> frozenset[int]:
    """supp^+ = supp_N and supp^- = supp_{N+1} with N = n - i + r - 2."""
    return supp_m(p, ctx.N if sign > 0 else ctx.N + 1)


def _subsets(items):
    items = sorted(items)
    for size in range(len(items) + 1):
        yield from combinations(items, size)


def _require_d(ctx: PartitionCtx) -> None:
    if ctx.kind != "D":
        raise PartitionError(f"type D context required, got {ctx.rs.name}")


def equivalence_class(ctx: PartitionCtx, p: Partition) -> frozenset[Partition]:
    """All (p^-(S^-))^+(S^+) with S^- in supp^-(p) and S^+ in supp^+ of the intermediate."""
    _require_d(ctx)
    out = set()
    for s_minus in _subsets(supp_pm(ctx, p, -1)):
        down = flip_set(p, s_minus, -1)
        for s_plus in _subsets(supp_pm(ctx, down, +1)):
            out.add(flip_set(down, s_plus, +1))
    return frozenset(out)


def mult_exponent(ctx: PartitionCtx, p: Partition) -> int:
    """M_j: number of s with j_s in {n-i+r+2s-2, n-i+r+2s-1}."""
    _require_d(ctx)
    base = ctx.n - ctx.i + ctx.r
    return sum(1 for s, j in enumerate(p, 1) if j in (base + 2 * s - 2, base + 2 * s - 1))


def canonical_rep(ctx: PartitionCtx, p: Partition) -> Partition:
    """The class member with empty supp^-."""
    _require_d(ctx)
    return flip_set(p, supp_pm(ctx, p, -1), -1)
