"""Braid group action on l-weights.

``T_i`` acts coordinate-wise: coordinate ``i`` is inverted and shifted by
``2 d_i``; a neighbour ``j`` picks up copies of coordinate ``i`` shifted by
``d_i`` (when ``a_ji = -1``), by 3 and 1 (``a_ji = -2``) or by 5, 3 and 1
(``a_ji = -3``).  A word ``(i_1, ..., i_k)`` acts as ``T_{i_1} ... T_{i_k}``,
so its rightmost letter is applied first.
"""

from __future__ import annotations

from collections.abc import Sequence

from .liealg import RootSystem, RootSystemError
from .lweight import LWeight

_SHIFTS = {-2: (3, 1), -3: (5, 3, 1)}


def _neighbour_shifts(rs: RootSystem, i: int) -> list[tuple[int, tuple[int, ...]]]:
    out = []
    for j in range(1, rs.n + 1):
        if j == i:
            continue
        a = rs.a(j, i)
        if a == 0:
            continue
        out.append((j, (rs.d[i - 1],) if a == -1 else _SHIFTS[a]))
    return out


def braid_apply(rs: RootSystem, i: int, x: LWeight) -> LWeight:
    """T_i(x)."""
    rs.check_node(i)
    x.check_rank(rs.n)
    col = x.coordinate(i)
    if not col:
        return x
    acc = {(j, k): m for j, k, m in x if j != i}
    two_d = 2 * rs.d[i - 1]
    for k, m in col.items():
        key = (i, k + two_d)
        acc[key] = acc.get(key, 0) - m
    for j, shifts in _neighbour_shifts(rs, i):
        for s in shifts:
            for k, m in col.items():
                key = (j, k + s)
                acc[key] = acc.get(key, 0) + m
    return LWeight._raw(acc)


def braid_apply_inverse(rs: RootSystem, i: int, y: LWeight) -> LWeight:
    """T_i^{-1}(y): recover coordinate i first, then strip it from the neighbours."""
    rs.check_node(i)
    y.check_rank(rs.n)
    col_y = y.coordinate(i)
    if not col_y:
        return y
    two_d = 2 * rs.d[i - 1]
    col = {k - two_d: -m for k, m in col_y.items()}
    acc = {(j, k): m for j, k, m in y if j != i}
    for k, m in col.items():
        acc[(i, k)] = m
    for j, shifts in _neighbour_shifts(rs, i):
        for s in shifts:
            for k, m in col.items():
                key = (j, k + s)
                acc[key] = acc.get(key, 0) - m
    return LWeight._raw(acc)


def braid_apply_word(rs: RootSystem, word: Sequence[int], x: LWeight) -> LWeight:
    for i in word:
        rs.check_node(i)
    for i in reversed(word):
        x = braid_apply(rs, i, x)
    return x


def _down(a: int, b: int) -> list[int]:
    """a, a-1, ..., b (empty when a < b)."""
    return list(range(a, b - 1, -1))


def _up(a: int, b: int) -> list[int]:
    """a, a+1, ..., b (empty when a > b)."""
    return list(range(a, b + 1))


def wrj_valid(rs: RootSystem, r: int, j: int) -> bool:
    n = rs.n
    if rs.kind == "C":
        return 1 < r <= n and r - 1 <= j < n
    if rs.kind == "B":
        if j == n:
            return 1 <= r < n
        return 1 < r < n and r - 1 <= j < n
    if rs.kind == "D":
        return 1 < r <= n - 2 and r - 1 <= j <= n
    return False


def wrj_word(rs: RootSystem, r: int, j: int) -> tuple[int, ...]:
    """The Weyl group element w_{r,j} as a word, letters as displayed left to right."""
    if not wrj_valid(rs, r, j):
        raise RootSystemError(f"w_(r={r}, j={j}) undefined for {rs.name}")
    n = rs.n
    if rs.kind == "B" and j == n:
        return tuple(_down(n - 1, r))
    if rs.kind in ("B", "C"):
        return tuple(_down(j - 1, r - 1) + _up(j + 1, n - 1) + _down(n, r))
    if j <= n - 2:
        return tuple(_down(j - 1, r - 1) + _up(j + 1, n - 2) + [n] + _down(n - 1, r))
    j_other = 2 * n - 1 - j
    return tuple(_down(n - 2, r - 1) + [j_other] + _down(n - 2, r))


def _w(i: int, k: int, m: int = 1) -> tuple[int, int, int]:
    return (i, k, m)


def _mono(rs: RootSystem, triples) -> LWeight:
    # drops omega_0 factors
    return LWeight((i, k, m) for i, k, m in triples if i != 0)


def closed_Trj(rs: RootSystem, r: int, j: int, l: int, k: int) -> LWeight:
    """Closed-form value of T_{w_{r,j}}(w[l; k]) for the displayed cases.

    Type B formulas are displayed for parameter 1 (or q**-1 at the spin
    node); other parameters follow by shifting every exponent.
    """
    if not wrj_valid(rs, r, j):
        raise RootSystemError(f"w_(r={r}, j={j}) undefined for {rs.name}")
    n = rs.n
    if rs.kind == "C":
        if r <= l <= j:
            t = [_w(l - 2, 2), _w(j - 1, j - l + 3, -1), _w(j, j - l + 2),
                 _w(j, 2 * n - j - l + 2), _w(j + 1, 2 * n - j - l + 3, -1)]
        elif j < l <= n:
            t = [_w(l, 2), _w(j, l - j), _w(j, 2 * n - j - l + 2),
                 _w(j + 1, l - j + 1, -1), _w(j + 1, 2 * n - j - l + 3, -1)]
        else:
            raise ValueError(f"no closed form for l={l}")
        return _mono(rs, t).shift(k)
    if rs.kind == "B":
        # exponents below are in q_1 = q^2 units unless marked plain
        if l == n:
            base = k + 1  # displayed input is w[n; -1]
            if j == n:
                raise ValueError("no closed form for T_{r,n}(w[n; .])")
            if j == n - 1:
                t = [_w(n - 1, 0), _w(n, 1, -1)]
            else:
                t = [_w(j, 2 * (n - j - 1)), _w(j + 1, 2 * (n - j), -1), _w(n, 3)]
            return _mono(rs, t).shift(base)
        if not r <= l < n:
            raise ValueError(f"no closed form for l={l}")
        if j == n:
            t = [_w(l - 1, 2), _w(n - 1, 2 * (n - l + 1), -1),
                 _w(n, 2 * (n - l) - 1), _w(n, 2 * (n - l) + 1)]
        elif j == n - 1:
            t = [_w(l - 2, 4), _w(n - 2, 2 * (n - l + 2), -1), _w(n - 1, 2 * (n - l + 1)),
                 _w(n - 1, 2 * (n - l)), _w(n, 2 * (n - l) + 1, -1), _w(n, 2 * (n - l) + 3, -1)]
        elif l <= j:
            t = [_w(l - 2, 4), _w(j - 1, 2 * (j - l + 3), -1), _w(j, 2 * (j - l + 2)),
                 _w(j, 2 * (2 * n - j - l - 1)), _w(j + 1, 2 * (2 * n - j - l), -1)]
        else:
            t = [_w(l, 4), _w(j, 2 * (l - j)), _w(j, 2 * (2 * n - j - l - 1)),
                 _w(j + 1, 2 * (l - j + 1), -1), _w(j + 1, 2 * (2 * n - j - l), -1)]
        return _mono(rs, t).shift(k)
    if rs.kind == "D":
        if r <= l <= n - 2:
            if j < l:
                t = [_w(l, 2), _w(j, l - j), _w(j, 2 * n - l - 2 - j),
                     _w(j + 1, l - j + 1, -1), _w(j + 1, 2 * n - l - j - 1, -1)]
            elif j <= n - 2:
                t = [_w(l - 2, 2), _w(j - 1, j - l + 3, -1), _w(j, j - l + 2),
                     _w(j, 2 * n - l - j - 2), _w(j + 1, 2 * n - l - j - 1, -1)]
                if j == n - 2:
                    # node n-2 forks: "j+1" stands for both spin nodes
                    t.append(_w(n, 2 * n - l - j - 1, -1))
            else:
                t = [_w(l - 2, 2), _w(n - 2, n - l + 2, -1), _w(j, n - l - 1), _w(j, n - l + 1)]
            return _mono(rs, t).shift(k)
        if l in (n - 1, n):
            l_other = 2 * n - 1 - l
            if j < n - 2:
                t = [_w(j, n - 1 - j), _w(j + 1, n - j, -1), _w(l_other, 2)]
            elif j == n - 2:
                t = [_w(n - 2, 1), _w(l, 2, -1)]
            elif j == l:
                t = [_w(l, 0)]
            else:
                t = [_w(n - 3, 2), _w(n - 2, 3, -1), _w(l_other, 2)]
            return _mono(rs, t).shift(k)
        raise ValueError(f"no closed form for l={l}")
    raise RootSystemError(f"no closed forms for type {rs.kind}")


def closed_Trj_cases(rs: RootSystem):
    """Yield every (r, j, l) covered by a displayed closed form."""
    n = rs.n
    for r in range(1, n + 1):
        for j in range(1, n + 1):
            if not wrj_valid(rs, r, j):
                continue
            if rs.kind == "C":
                ls = range(r, n + 1)
            elif rs.kind == "B":
                if j == n:
                    ls = range(r, n)
                elif j == n - 1:
                    ls = list(range(r, n)) + [n]
                else:
                    ls = list(range(r, n)) + [n]
            else:
                ls = range(r, n + 1)
            for l in ls:
                yield r, j, l
