"""Dominant l-weights from partitions and assembly of fundamental q-characters."""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from . import liealg
from .braid import braid_apply_word, wrj_word
from .liealg import RootSystem, RootSystemError
from .lweight import ONE, LWeight, gen, prod, simple_l_root
from .partitions import (
    Partition,
    PartitionCtx,
    PartitionError,
    enumerate_J,
    index_set,
    iota,
    sigma,
    supp_pm,
)

# pi_r(j, s) with s carried as 4s


def pi_factor(ctx: PartitionCtx, j: int, s4: int) -> LWeight:
    """w[j; d_1(i+j-2s-2r)]^-1 * w[j; d_1(h-i-j+2s)]; identity when j = 0."""
    if j == 0:
        return ONE
    ctx.rs.check_node(j)
    d1, h, i, r = ctx.rs.d[0], ctx.rs.hstar, ctx.i, ctx.r
    low = d1 * (4 * (i + j - 2 * r) - 2 * s4)
    high = d1 * (4 * (h - i - j) + 2 * s4)
    if low % 4 or high % 4:
        raise ValueError(f"s = {s4}/4 gives a non-integral exponent for {ctx.rs.name}")
    return LWeight([(j, low // 4, -1), (j, high // 4, 1)])


def _highest(ctx: PartitionCtx) -> LWeight:
    if ctx.r == 0:
        return ONE
    return gen(ctx.r, ctx.rs.d[0] * (ctx.i - ctx.r))


def pi_of_partition(ctx: PartitionCtx, p: Partition) -> LWeight:
    """pi_r(j)."""
    if not ctx.admits(p):
        raise PartitionError(f"{p} is not in J_{ctx.r} for {ctx.rs.name}, i={ctx.i}")
    n, k = ctx.n, len(p)
    factors = [_highest(ctx)]
    if ctx.kind == "B" and k and p[-1] == n:
        for s, j in enumerate(p[:-1], 1):
            factors += [pi_factor(ctx, j - 1, 4 * (s - 1)), pi_factor(ctx, j, 4 * s).inverse()]
        factors += [pi_factor(ctx, n - 1, 4 * (k - 1)), pi_factor(ctx, n, 4 * k - 1).inverse()]
        return prod(factors)
    for s, j in enumerate(p, 1):
        factors += [pi_factor(ctx, j - 1, 4 * (s - 1)), pi_factor(ctx, j, 4 * s).inverse()]
    if ctx.kind == "D" and k and p[-1] == n - 1:
        factors.append(pi_factor(ctx, n, 4 * k + 2).inverse())
    return prod(factors)


def pi_star(ctx: PartitionCtx, p: Partition) -> LWeight:
    """Spin-node correction in type B."""
    if ctx.kind != "B":
        raise PartitionError(f"pi_star needs a type B context, got {ctx.rs.name}")
    n, i, r, k = ctx.n, ctx.i, ctx.r, len(p)
    if 2 * k != i - r and (k == 0 or p[-1] != n):
        return LWeight([(n, 2 * (n - i + 2 * k) - 1, 1), (n, 2 * (n + i - 2 * k - 2 * r) - 1, -1)])
    return ONE


def pi_pm(ctx: PartitionCtx, p: Partition, sign: int) -> LWeight:
    """Spin-node corrections in type D; ``sign`` +1 uses node n, -1 node n-1."""
    if ctx.kind != "D":
        raise PartitionError(f"pi_pm needs a type D context, got {ctx.rs.name}")
    n, i, r, k = ctx.n, ctx.i, ctx.r, len(p)
    node = n if sign > 0 else n - 1
    return LWeight([(node, n - i + 2 * k - 1, 1), (node, n + i - 2 * r - 2 * k - 1, -1)])


def dominant_monomials(ctx: PartitionCtx) -> list[tuple[LWeight, Partition, int]]:
    """Every (monomial, partition, sign) term of the dominant part at weight omega_r.

    ``sign`` is 0 except for the two spin-corrected copies in type D.
    """
    out = []
    for k, ps in enumerate_J(ctx).items():
        for p in ps:
            base = pi_of_partition(ctx, p)
            if ctx.kind == "B":
                out.append((base * pi_star(ctx, p), p, 0))
            elif ctx.kind == "D" and k < ctx.M:
                out.append((base * pi_pm(ctx, p, +1), p, +1))
                out.append((base * pi_pm(ctx, p, -1), p, -1))
            else:
                out.append((base, p, 0))
    return out


@dataclass(frozen=True)
class DominantEntry:
    lweight: LWeight
    mult: int
    r: int
    sources: tuple[tuple[Partition, int], ...]


def dominant_entries(rs: RootSystem, i: int, r: int | None = None) -> dict[int, list[DominantEntry]]:
    """Collected dominant l-weights per r, with the partitions producing each."""
    out = {}
    for rr in index_set(rs, i):
        if r is not None and rr != r:
            continue
        ctx = PartitionCtx(rs, i, rr)
        groups: dict[LWeight, list[tuple[Partition, int]]] = defaultdict(list)
        for mono, p, sign in dominant_monomials(ctx):
            groups[mono].append((p, sign))
        out[rr] = [
            DominantEntry(mono, len(src), rr, tuple(src)) for mono, src in sorted(groups.items())
        ]
    return out


def dominant_lweights(rs: RootSystem, i: int) -> dict[int, list[tuple[LWeight, int]]]:
    return {
        r: [(e.lweight, e.mult) for e in entries]
        for r, entries in dominant_entries(rs, i).items()
    }


@dataclass(frozen=True)
class LCharacter:
    """A q-character: l-weights with positive multiplicities."""

    rs: RootSystem
    node: int
    base: int
    entries: Mapping[LWeight, int] = field(repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", MappingProxyType(dict(self.entries)))

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, x: LWeight) -> bool:
        return x in self.entries

    def __getitem__(self, x: LWeight) -> int:
        return self.entries.get(x, 0)

    def sorted_items(self) -> list[tuple[LWeight, int]]:
        """Ordered by weight (lexicographic), then by monomial."""
        n = self.rs.n
        return sorted(self.entries.items(), key=lambda kv: (kv[0].weight(n), kv[0]))

    def weight_multiplicities(self) -> dict[tuple[int, ...], int]:
        out: dict[tuple[int, ...], int] = defaultdict(int)
        for x, m in self.entries.items():
            out[x.weight(self.rs.n)] += m
        return dict(out)

    def shift(self, b: int) -> LCharacter:
        return LCharacter(
            self.rs, self.node, self.base + b, {x.shift(b): m for x, m in self.entries.items()}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LCharacter):
            return NotImplemented
        return (self.rs, self.node, self.base) == (other.rs, other.node, other.base) and dict(
            self.entries
        ) == dict(other.entries)

    def __hash__(self) -> int:
        return hash((self.rs, self.node, self.base, frozenset(self.entries.items())))


def _orbit_images(rs: RootSystem, seed: LWeight, mult: int, words) -> list[tuple[LWeight, int]]:
    return [(braid_apply_word(rs, word, seed), mult) for word in words]


def _orbit_tasks(rs: RootSystem, i: int, base: int) -> list[tuple[LWeight, int, list]]:
    if i in liealg.minuscule_nodes(rs):
        words = [w for _, w in liealg.weyl_orbit_minlength(rs, rs.omega(i))]
        return [(gen(i, base), 1, words)]
    if i in liealg.theorem_nodes(rs):
        tasks = []
        for r, entries in dominant_entries(rs, i).items():
            words = [w for _, w in liealg.weyl_orbit_minlength(rs, rs.omega(r))]
            tasks += [(e.lweight.shift(base), e.mult, words) for e in entries]
        return tasks
    raise RootSystemError(f"node {i} of {rs.name} is not handled")


def full_character(rs: RootSystem, i: int, base: int = 0, jobs: int = 1) -> LCharacter:
    """q-character of the fundamental module at node ``i`` with parameter ``q**base``.

    With ``jobs > 1`` the orbit images are computed in worker processes; the
    collected result does not depend on the schedule.
    """
    rs.check_node(i)
    tasks = _orbit_tasks(rs, i, base)
    acc: dict[LWeight, int] = defaultdict(int)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_orbit_images, rs, seed, m, words) for seed, m, words in tasks]
            chunks = [f.result() for f in futures]
    else:
        chunks = [_orbit_images(rs, seed, m, words) for seed, m, words in tasks]
    for chunk in chunks:
        for x, m in chunk:
            acc[x] += m
    return LCharacter(rs, i, base, acc)


# ladder identities


def _coord_pair(a: int, b: int) -> dict[int, int]:
    out: dict[int, int] = defaultdict(int)
    out[a] += 1
    out[b] += 1
    return dict(out)


@dataclass(frozen=True)
class Ladder:
    """One inductive step: ``lhs = target * alpha_{node, q**exponent}``."""

    lhs: LWeight
    target: LWeight
    node: int
    exponent: int
    coordinate: dict[int, int]

    def holds(self, rs: RootSystem) -> bool:
        alpha = simple_l_root(rs, self.node, self.exponent)
        return self.lhs == self.target * alpha and self.lhs.coordinate(self.node) == self.coordinate


def _b_total(ctx: PartitionCtx, p: Partition) -> LWeight:
    return pi_of_partition(ctx, p) * pi_star(ctx, p)


def ladder(ctx: PartitionCtx, p: Partition, case: str, sign: int = 1, start: int | None = None) -> Ladder:
    """Build the ladder step for ``p`` under the named case.

    Cases: ``"C"``; ``"B-i"``, ``"B-ii"``, ``"B-iii"``; ``"D"`` (needs the
    flip start ``start`` in supp^+ and the spin ``sign``).
    """
    rs, n, i, r, k, M = ctx.rs, ctx.n, ctx.i, ctx.r, len(p), ctx.M
    if not ctx.admits(p):
        raise PartitionError(f"{p} not in J_{r}")
    if case == "C":
        if ctx.kind != "C" or M < 1:
            raise PartitionError("case C needs type C with M >= 1")
        j = p[-1]
        up = ctx.with_r(r + 2)
        prev = tuple(x + 2 for x in p[:-1])
        lhs = braid_apply_word(rs, wrj_word(rs, r + 2, j), pi_of_partition(up, prev))
        e = 2 * n + i - j - 2 * r - 2 * M
        return Ladder(lhs, pi_of_partition(ctx, p), j, e, _coord_pair(i + j - 2 * r - 2 * M, e))
    if case in ("B-i", "B-ii"):
        if ctx.kind != "B" or i == r:
            raise PartitionError("B cases need type B with r < i")
        last = p[-1] if k else None
        if case == "B-i":
            if not (2 * k < i - r and (last is None or last < n)):
                raise PartitionError("case B-i needs 2k < i - r and j_k < n")
            prev = tuple(x + 1 for x in p)
            e = 2 * (n + i - 2 * r - 2 * k) - 3
            if last == n - 1 or 2 * k < i - r - 1:
                coord = _coord_pair(e, 2 * (n - i + 2 * k) - 1)
            else:
                coord = _coord_pair(e, 2 * (n + i - 2 * r - 2 * k) - 5)
        else:
            if last != n:
                raise PartitionError("case B-ii needs j_k = n")
            prev = tuple(x + 1 for x in p[:-1])
            e = 2 * (n - i + 2 * k) - 5
            coord = _coord_pair(e, 2 * (n + i - 2 * r - 2 * k) + 1)
        up = ctx.with_r(r + 1)
        lhs = braid_apply_word(rs, wrj_word(rs, r + 1, n), _b_total(up, prev))
        return Ladder(lhs, _b_total(ctx, p), n, e, coord)
    if case == "B-iii":
        if ctx.kind != "B" or k == 0 or 2 * k != i - r or p[-1] >= n:
            raise PartitionError("case B-iii needs type B, 2k = i - r > 0 and j_k < n")
        j = p[-1]
        up = ctx.with_r(r + 2)
        prev = tuple(x + 2 for x in p[:-1])
        lhs = braid_apply_word(rs, wrj_word(rs, r + 2, j), _b_total(up, prev))
        d1 = rs.d[0]
        e = d1 * (2 * n - j - r - 3)
        return Ladder(lhs, _b_total(ctx, p), j, e, _coord_pair(d1 * (j - r), e))
    if case == "D":
        if ctx.kind != "D":
            raise PartitionError("case D needs type D")
        if supp_pm(ctx, p, -1):
            raise PartitionError(f"{p} is not a canonical representative (supp^- nonempty)")
        if start is None or start not in supp_pm(ctx, p, +1):
            raise PartitionError(f"flip start {start} not in supp^+({p})")
        l = sigma(p, start, +1)
        up = ctx.with_r(r + 2)
        prev = tuple(sorted(
            [x + 2 for x in p if r < x < l] + [x for x in p if l < x < n]
        ))
        # w_{r+2,l} exchanges the two spin nodes, so the source carries the opposite sign
        lhs = braid_apply_word(rs, wrj_word(rs, r + 2, l), pi_of_partition(up, prev) * pi_pm(up, prev, -sign))
        s = iota(p, l)
        e = 2 * n - i - l + 2 * s - 4
        if l == start:
            coord = {n - r - 2: 2}
        else:
            coord = _coord_pair(e, i + l - 2 * r - 2 * s)
        return Ladder(lhs, pi_of_partition(ctx, p) * pi_pm(ctx, p, sign), l, e, coord)
    raise ValueError(f"unknown ladder case {case!r}")


def ladder_check(ctx: PartitionCtx, p: Partition, case: str, **kw) -> bool:
    return ladder(ctx, p, case, **kw).holds(ctx.rs)


def ladder_cases(ctx: PartitionCtx):
    """Yield (p, case, kwargs) for every applicable ladder step in this context."""
    n = ctx.n
    if ctx.i == ctx.r:
        return
    for k, ps in enumerate_J(ctx).items():
        for p in ps:
            if ctx.kind == "C":
                yield p, "C", {}
            elif ctx.kind == "B":
                if k and p[-1] == n:
                    yield p, "B-ii", {}
                elif 2 * k < ctx.i - ctx.r:
                    yield p, "B-i", {}
                else:
                    yield p, "B-iii", {}
            elif ctx.kind == "D":
                if supp_pm(ctx, p, -1):
                    continue
                for start in sorted(supp_pm(ctx, p, +1)):
                    yield p, "D", {"start": start, "sign": +1}
                    yield p, "D", {"start": start, "sign": -1}
