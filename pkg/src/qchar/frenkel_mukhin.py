"""Frenkel-Mukhin algorithm: an independent q-character oracle.

Starting from the highest monomial, every monomial that is dominant in
direction ``i`` and not yet accounted for by ``i``-strings spawns the
q-character of the corresponding U_{q_i}(sl_2-hat) module, lowered by the
simple l-roots.  Fundamental modules have a single dominant monomial, so
the algorithm returns their q-character.  Nothing here uses the braid
action on the lattice beyond the definition of the simple l-roots.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from itertools import product

from .liealg import RootSystem
from .lweight import LWeight, gen, simple_l_root


class AlgorithmFailed(RuntimeError):
    pass


def _strings(points: Counter, step: int) -> list[list[int]]:
    """Split a multiset of exponents into q-strings in general position."""
    pts = Counter(points)
    out = []
    while pts:
        b = min(pts)
        run = []
        c = b
        while pts[c] > 0:
            run.append(c)
            pts[c] -= 1
            if not pts[c]:
                del pts[c]
            c += step
        out.append(run)
    return out


def sl2_lowerings(exponents: Counter, step: int) -> Counter:
    """Terms of the sl_2 q-character as multisets of lowering exponents.

    A string ``b, b+step, ..., top`` lowers its points from the top: the
    t-th lowering multiplies by ``alpha^{-1}`` at ``top - (t-1) step``.
    """
    per_string = []
    for run in _strings(exponents, step):
        options = [tuple(run[len(run) - t:][::-1]) for t in range(len(run) + 1)]
        per_string.append(options)
    out: Counter = Counter()
    for combo in product(*per_string):
        out[tuple(sorted(c for part in combo for c in part))] += 1
    return out


def q_character(rs: RootSystem, node: int, base: int = 0) -> dict[LWeight, int]:
    """q-character of the fundamental module with highest monomial ``w[node; base]``."""
    top = gen(node, base, rs.n)
    alpha_inv: dict[tuple[int, int], LWeight] = {}

    def lower(i: int, c: int) -> LWeight:
        key = (i, c)
        if key not in alpha_inv:
            alpha_inv[key] = simple_l_root(rs, i, c).inverse()
        return alpha_inv[key]

    colours: dict[LWeight, dict[int, int]] = defaultdict(lambda: defaultdict(int))
    depth_of: dict[LWeight, int] = {top: 0}
    layers: dict[int, set[LWeight]] = defaultdict(set)
    layers[0].add(top)
    result: dict[LWeight, int] = {}
    d = 0
    while layers.get(d):
        for m in sorted(layers.pop(d)):
            col = colours.pop(m, {})
            total = 1 if m == top else max(col.values(), default=0)
            if total == 0:
                raise AlgorithmFailed(f"monomial {m} reached with zero colour")
            result[m] = total
            for i in range(1, rs.n + 1):
                part = m.coordinate(i)
                if any(v < 0 for v in part.values()):
                    if col.get(i, 0) != total:
                        raise AlgorithmFailed(f"{m} is not {i}-dominant but not covered by {i}-strings")
                    continue
                extra = total - col.get(i, 0)
                if extra <= 0:
                    continue
                step = 2 * rs.d[i - 1]
                for lows, c in sl2_lowerings(Counter(part), step).items():
                    if not lows:
                        continue
                    mm = m
                    for e in lows:
                        mm = mm * lower(i, e)
                    dd = d + len(lows)
                    if mm in result:
                        raise AlgorithmFailed(f"{mm} reached after it was finalised")
                    prev = depth_of.setdefault(mm, dd)
                    if prev != dd:
                        raise AlgorithmFailed(f"inconsistent depth for {mm}")
                    layers[dd].add(mm)
                    colours[mm][i] += extra * c
        d += 1
    return result
