"""Executable identity checks with independent oracles.

Every check walks its parameter space in a fixed order (rank first, then
lexicographic parameters) and stops at the first failure, so a failing
report carries the minimal counterexample.  Randomised checks draw from
``random.Random(seed)``:

* monomial length is geometric on ``{0, 1, 2, ...}`` with mean 4,
* nodes are uniform in ``1..n``,
* exponents are uniform in ``[-5, 5]``,
* each factor has multiplicity ``+1`` or ``-1`` with equal probability.
"""

from __future__ import annotations

import json
import random
import time
from collections import Counter, defaultdict
from dataclasses import asdict, dataclass, field
from math import comb
from typing import Any, Callable, Iterator

from . import liealg
from .braid import (
    braid_apply,
    braid_apply_inverse,
    braid_apply_word,
    closed_Trj,
    closed_Trj_cases,
    wrj_valid,
    wrj_word,
)
from .frenkel_mukhin import q_character
from .liealg import RootSystem, root_system
from .lweight import LWeight, gen
from .partitions import (
    PartitionCtx,
    canonical_rep,
    closed_count,
    d_type_weighted_count,
    enumerate_J,
    equivalence_class,
    index_set,
    mult_exponent,
    supp_pm,
)
from .qcharacter import (
    dominant_entries,
    dominant_monomials,
    full_character,
    ladder,
    ladder_cases,
    pi_of_partition,
    pi_pm,
    pi_star,
)

MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
KINDS = ("A", "B", "C", "D")


@dataclass
class VerifyReport:
    name: str
    params: dict[str, Any]
    passed: bool
    cases: int
    counterexample: dict[str, Any] | None = None
    elapsed: float = 0.0

    def to_dict(self, timing: bool = True) -> dict[str, Any]:
        out = asdict(self)
        if not timing:
            del out["elapsed"]
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True)


def _plain(x: Any) -> Any:
    """JSON-friendly copy of a counterexample value."""
    if isinstance(x, LWeight):
        return x.to_text()
    if isinstance(x, RootSystem):
        return x.name
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (tuple, list, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_plain(v) for v in items]
    return x


@dataclass
class _Run:
    name: str
    params: dict[str, Any]
    cases: int = 0
    failure: dict[str, Any] | None = None
    start: float = field(default_factory=time.perf_counter)

    def check(self, ok: bool, **where: Any) -> bool:
        """Record one case; returns False once a failure has been recorded."""
        self.cases += 1
        if not ok and self.failure is None:
            self.failure = {k: _plain(v) for k, v in where.items()}
        return self.failure is None

    def report(self) -> VerifyReport:
        return VerifyReport(
            self.name, dict(self.params), self.failure is None, self.cases,
            self.failure, round(time.perf_counter() - self.start, 6),
        )


def _merge(name: str, params: dict[str, Any], parts: list[VerifyReport]) -> VerifyReport:
    failed = next((p for p in parts if not p.passed), None)
    cex = None if failed is None else {"check": failed.name, **(failed.counterexample or {})}
    return VerifyReport(
        name, params, failed is None, sum(p.cases for p in parts), cex,
        round(sum(p.elapsed for p in parts), 6),
    )


def root_systems(max_rank: int, kinds=KINDS, min_rank: dict[str, int] | None = None) -> Iterator[RootSystem]:
    """Every root system of the given kinds with rank up to ``max_rank``, ordered by rank."""
    lows = dict(MIN_RANK, **(min_rank or {}))
    for n in range(1, max_rank + 1):
        for kind in kinds:
            if n >= lows[kind]:
                yield root_system(kind, n)


def random_lweight(rng: random.Random, n: int) -> LWeight:
    terms = []
    while rng.random() >= 0.2:
        terms.append((rng.randint(1, n), rng.randint(-5, 5), rng.choice((1, -1))))
    return LWeight(terms)


# partition counts


def verify_counts(max_rank: int = 8) -> VerifyReport:
    """Enumerated |J_r| against the closed forms, with the type D refinements."""
    run = _Run("counts", {"max_rank": max_rank})
    for rs in root_systems(max_rank, ("B", "C", "D"), {"D": 4}):
        for i in liealg.theorem_nodes(rs):
            for r in index_set(rs, i):
                ctx = PartitionCtx(rs, i, r)
                fam = enumerate_J(ctx)
                n, M = rs.n, ctx.M
                got = sum(len(ps) for ps in fam.values())
                if not run.check(got == closed_count(ctx), type=rs, i=i, r=r, enumerated=got,
                                 closed=closed_count(ctx)):
                    return run.report()
                if rs.kind != "D":
                    continue
                for k, ps in fam.items():
                    if not run.check(len(ps) == comb(n - r - 1, k), type=rs, i=i, r=r, k=k):
                        return run.report()
                total = sum(comb(n - r, l) for l in range(M + 1))
                if not run.check(d_type_weighted_count(ctx) == total, type=rs, i=i, r=r,
                                 weighted=d_type_weighted_count(ctx), expected=total):
                    return run.report()
    return run.report()


# dimensions and weights


def _decomposition_mass(rs: RootSystem, i: int) -> int:
    return sum(liealg.weyl_dim(rs, lam) for lam in liealg.classical_decomposition(rs, i))


def _classical_character(rs: RootSystem, i: int) -> dict[tuple[int, ...], int]:
    out: Counter = Counter()
    for lam in liealg.classical_decomposition(rs, i):
        out.update(liealg.full_char(rs, lam))
    return dict(out)


def _character_cases(max_rank: int, extra=()) -> Iterator[tuple[RootSystem, int]]:
    for rs in root_systems(max_rank):
        for i in range(1, rs.n + 1):
            yield rs, i
    for kind, n, i in extra:
        if n > max_rank:
            yield root_system(kind, n), i


def verify_dimensions(max_rank: int = 5, extra=(("D", 6, 4),)) -> VerifyReport:
    """Total mass against Weyl dimensions; dominant masses against Freudenthal."""
    run = _Run("dims", {"max_rank": max_rank, "extra": [list(e) for e in extra]})
    for rs, i in _character_cases(max_rank, extra):
        ch = full_character(rs, i)
        expected = _decomposition_mass(rs, i)
        if not run.check(ch.total == expected, type=rs, node=i, mass=ch.total, expected=expected):
            break
        if i in liealg.theorem_nodes(rs):
            dom: Counter = Counter()
            for lam in liealg.classical_decomposition(rs, i):
                dom.update(liealg.dominant_char(rs, lam))
            for r, entries in dominant_entries(rs, i).items():
                got = sum(e.mult for e in entries)
                if not run.check(got == dom[rs.omega(r)], type=rs, node=i, r=r, mass=got,
                                 expected=dom[rs.omega(r)]):
                    return run.report()
    return run.report()


def verify_weight_projection(max_rank: int = 5, extra=(("D", 6, 4),)) -> VerifyReport:
    """wt-pushforward equals the classical character; orbit images sit at w(lambda)."""
    run = _Run("proj", {"max_rank": max_rank, "extra": [list(e) for e in extra]})
    for rs, i in _character_cases(max_rank, extra):
        got = full_character(rs, i).weight_multiplicities()
        expected = _classical_character(rs, i)
        if not run.check(got == expected, type=rs, node=i,
                         difference=sorted(set(got.items()) ^ set(expected.items()))):
            break
        if i not in liealg.theorem_nodes(rs):
            continue
        for r, entries in dominant_entries(rs, i).items():
            orbit = liealg.weyl_orbit_minlength(rs, rs.omega(r))
            for e in entries:
                for lam, word in orbit:
                    image = braid_apply_word(rs, word, e.lweight)
                    if not run.check(image.weight(rs.n) == lam, type=rs, node=i, r=r,
                                     lweight=e.lweight, word=word):
                        return run.report()
    return run.report()


# braid action


def _relation(rs: RootSystem, i: int, j: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    m = {0: 2, 1: 3, 2: 4, 3: 6}[rs.a(i, j) * rs.a(j, i)]
    left = tuple((i, j) * m)[:m]
    right = tuple((j, i) * m)[:m]
    return left, right


def verify_braid_relations(max_rank: int = 5, samples: int = 100, seed: int = 0) -> VerifyReport:
    """Braid relations, inverse round trip and wt-equivariance on seeded random l-weights."""
    run = _Run("braid-relations", {"max_rank": max_rank, "samples": samples, "seed": seed})
    rng = random.Random(seed)
    for rs in root_systems(max_rank):
        n = rs.n
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                left, right = _relation(rs, i, j)
                for _ in range(samples):
                    x = random_lweight(rng, n)
                    lhs, rhs = braid_apply_word(rs, left, x), braid_apply_word(rs, right, x)
                    if not run.check(lhs == rhs, type=rs, pair=(i, j), sample=x):
                        return run.report()
        for i in range(1, n + 1):
            for _ in range(samples):
                x = random_lweight(rng, n)
                y = braid_apply(rs, i, x)
                ok = braid_apply_inverse(rs, i, y) == x and y.weight(n) == liealg.reflect(rs, i, x.weight(n))
                if not run.check(ok, type=rs, node=i, sample=x):
                    return run.report()
    return run.report()


def verify_closed_forms(max_rank: int = 6, exponents=range(-3, 4)) -> VerifyReport:
    """Generic evaluation of T_{w_{r,j}} against every displayed closed form, plus the weight identities."""
    run = _Run("closed-forms", {"max_rank": max_rank, "exponents": [min(exponents), max(exponents)]})
    for rs in root_systems(max_rank, ("B", "C", "D"), {"D": 4}):
        n = rs.n
        for r in range(1, n + 1):
            for j in range(1, n + 1):
                if not wrj_valid(rs, r, j):
                    continue
                lam = liealg.apply_word(rs, wrj_word(rs, r, j), rs.omega(r))
                drop = 1 if rs.kind == "B" and j == n else 2
                expected = tuple(a + b for a, b in zip(rs.omega(r - drop), rs.alpha(j)))
                if not run.check(lam == expected, type=rs, r=r, j=j, weight=lam, expected=expected):
                    return run.report()
        for r, j, l in closed_Trj_cases(rs):
            word = wrj_word(rs, r, j)
            for k in exponents:
                generic = braid_apply_word(rs, word, gen(l, k))
                closed = closed_Trj(rs, r, j, l, k)
                if not run.check(generic == closed, type=rs, r=r, j=j, l=l, k=k,
                                 generic=generic, closed=closed):
                    return run.report()
    return run.report()


def verify_braid_and_closed_forms(max_rank: int = 5, samples: int = 100, seed: int = 0) -> VerifyReport:
    params = {"max_rank": max_rank, "samples": samples, "seed": seed}
    parts = [verify_braid_relations(max_rank, samples, seed), verify_closed_forms(max_rank)]
    return _merge("braid", params, parts)


# partition formulas


def verify_injectivity(max_rank: int = 6) -> VerifyReport:
    """pi_r (type C) and pi_r * pi_r(., *) (type B) are injective on J_r."""
    run = _Run("injectivity", {"max_rank": max_rank})
    for rs in root_systems(max_rank, ("B", "C")):
        for i in liealg.theorem_nodes(rs):
            for r in index_set(rs, i):
                ctx = PartitionCtx(rs, i, r)
                seen: dict[LWeight, tuple[int, ...]] = {}
                for k, ps in enumerate_J(ctx).items():
                    for p in ps:
                        x = pi_of_partition(ctx, p)
                        if rs.kind == "B":
                            x = x * pi_star(ctx, p)
                        clash = seen.setdefault(x, p)
                        if not run.check(clash == p, type=rs, i=i, r=r, partitions=[clash, p], value=x):
                            return run.report()
    return run.report()


def verify_dn_classes(max_rank: int = 6) -> VerifyReport:
    """Type D: flip classes against pi-grouping, class sizes, spin separation and multiplicities."""
    run = _Run("dn-classes", {"max_rank": max_rank})
    for rs in root_systems(max_rank, ("D",), {"D": 4}):
        for i in liealg.theorem_nodes(rs):
            ch = full_character(rs, i)
            for r in index_set(rs, i):
                ctx = PartitionCtx(rs, i, r)
                for k, ps in enumerate_J(ctx).items():
                    groups: dict[LWeight, set] = defaultdict(set)
                    for p in ps:
                        groups[pi_of_partition(ctx, p)].add(p)
                    for p in ps:
                        cls = equivalence_class(ctx, p)
                        size = 2 ** (len(supp_pm(ctx, p, 1)) + len(supp_pm(ctx, p, -1)))
                        ok = (
                            cls == frozenset(groups[pi_of_partition(ctx, p)])
                            and len(cls) == size == 2 ** mult_exponent(ctx, p)
                            and sum(1 for q in cls if not supp_pm(ctx, q, -1)) == 1
                            and canonical_rep(ctx, p) in cls
                        )
                        if not run.check(ok, type=rs, i=i, r=r, partition=p, flip_class=cls,
                                         pi_class=groups[pi_of_partition(ctx, p)]):
                            return run.report()
                        signs = (1, -1) if k < ctx.M else (0,)
                        for sign in signs:
                            x = pi_of_partition(ctx, p)
                            if sign:
                                x = x * pi_pm(ctx, p, sign)
                            if not run.check(ch[x] == size, type=rs, i=i, r=r, partition=p,
                                             sign=sign, multiplicity=ch[x], expected=size):
                                return run.report()
                plus = {m for m, _, s in dominant_monomials(ctx) if s > 0}
                minus = {m for m, _, s in dominant_monomials(ctx) if s < 0}
                if not run.check(not plus & minus, type=rs, i=i, r=r, shared=plus & minus):
                    return run.report()
    return run.report()


def verify_ladders(max_rank: int = 5) -> VerifyReport:
    """Every applicable ladder step holds exactly, including its coordinate factorisation."""
    run = _Run("ladders", {"max_rank": max_rank})
    for rs in root_systems(max_rank, ("B", "C", "D"), {"D": 4}):
        for i in liealg.theorem_nodes(rs):
            for r in index_set(rs, i):
                ctx = PartitionCtx(rs, i, r)
                for p, case, kw in ladder_cases(ctx):
                    step = ladder(ctx, p, case, **kw)
                    if not run.check(step.holds(rs), type=rs, i=i, r=r, partition=p, case=case, **kw):
                        return run.report()
    return run.report()


def verify_dn_classes_and_ladders(max_rank: int = 6) -> VerifyReport:
    parts = [verify_dn_classes(max_rank), verify_ladders(max_rank)]
    return _merge("classes", {"max_rank": max_rank}, parts)


# whole characters


def verify_minuscule(max_rank: int = 5) -> VerifyReport:
    """Type A: C(n+1, i) distinct orbit images, each with multiplicity one."""
    run = _Run("minuscule", {"max_rank": max_rank})
    for rs in root_systems(max_rank, ("A",)):
        for i in range(1, rs.n + 1):
            ch = full_character(rs, i)
            images = [braid_apply_word(rs, w, gen(i, 0)) for _, w in liealg.weyl_orbit_minlength(rs, rs.omega(i))]
            ok = (
                len(ch) == comb(rs.n + 1, i)
                and set(ch.entries.values()) == {1}
                and len(set(images)) == len(images) == len(ch)
                and set(images) == set(ch.entries)
            )
            if not run.check(ok, type=rs, node=i, entries=len(ch)):
                break
    return run.report()


def verify_oracle(max_rank: int = 5) -> VerifyReport:
    """Closed formulas against the Frenkel-Mukhin algorithm, monomial by monomial."""
    run = _Run("oracle", {"max_rank": max_rank})
    for rs, i in _character_cases(max_rank):
        ours = dict(full_character(rs, i).entries)
        theirs = q_character(rs, i)
        if not run.check(ours == theirs, type=rs, node=i,
                         only_formulas=sorted(set(ours) - set(theirs))[:5],
                         only_oracle=sorted(set(theirs) - set(ours))[:5]):
            break
    return run.report()


# registry

CHECKS: dict[str, Callable[..., VerifyReport]] = {
    "counts": verify_counts,
    "dims": verify_dimensions,
    "proj": verify_weight_projection,
    "braid-relations": verify_braid_relations,
    "closed-forms": verify_closed_forms,
    "injectivity": verify_injectivity,
    "dn-classes": verify_dn_classes,
    "ladders": verify_ladders,
    "minuscule": verify_minuscule,
    "oracle": verify_oracle,
}

SUITES: dict[str, tuple[str, ...]] = {
    "counts": ("counts",),
    "dims": ("dims",),
    "proj": ("proj",),
    "braid": ("braid-relations", "closed-forms"),
    "classes": ("dn-classes", "ladders"),
    "injective": ("injectivity",),
    "minuscule": ("minuscule",),
    "oracle": ("oracle",),
}
SUITES["all"] = tuple(name for names in SUITES.values() for name in names)

# identity -> check exercising it
COVERAGE: dict[str, str] = {
    "l-weight group laws and wt homomorphism": "braid-relations",
    "braid action on l-weights": "braid-relations",
    "braid relations": "braid-relations",
    "simple l-roots": "oracle",
    "count of J_r, type C": "counts",
    "count of J_r, type B": "counts",
    "count of J_{k,r}, type D": "counts",
    "weighted count identity, type D": "counts",
    "w_{r,j} weight identities": "closed-forms",
    "closed forms of T_{r,j}, type C": "closed-forms",
    "closed forms of T_{r,j}, type B": "closed-forms",
    "closed forms of T_{r,j}, type D": "closed-forms",
    "pi_r(j), pi_r(j,*), pi_r(j,+-)": "oracle",
    "character assembly over W_lambda": "dims",
    "classical decomposition": "dims",
    "dominant l-weight masses": "dims",
    "weight projection": "proj",
    "orbit images at w(lambda)": "proj",
    "injectivity, types B and C": "injectivity",
    "flip classes equal pi-classes, type D": "dn-classes",
    "class size 2^{M_j}": "dn-classes",
    "spin corrections separate, type D": "dn-classes",
    "multiplicity equality, type D": "dn-classes",
    "ladder step, type C": "ladders",
    "ladder steps (i)-(iii), type B": "ladders",
    "ladder step, type D": "ladders",
    "minuscule characters": "minuscule",
}


def run_checks(names, max_rank: int = 5, samples: int = 100, seed: int = 0) -> list[VerifyReport]:
    out = []
    for name in names:
        fn = CHECKS[name]
        if name == "braid-relations":
            out.append(fn(max_rank, samples, seed))
        else:
            out.append(fn(max_rank))
    return out


def run_suite(suite: str, max_rank: int = 5, samples: int = 100, seed: int = 0) -> list[VerifyReport]:
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; expected one of {sorted(SUITES)}")
    return run_checks(SUITES[suite], max_rank, samples, seed)
