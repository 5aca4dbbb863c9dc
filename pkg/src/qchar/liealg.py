"""Root data for the classical types, Weyl orbits and classical character oracles.

Weights are integer tuples in the fundamental-weight basis.  Roots are kept
internally as integer tuples in the simple-root basis; the bilinear form is
normalised so that ``(alpha_i, alpha_i) = 2 * d_i``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import factorial

import sympy

Weight = tuple[int, ...]
Word = tuple[int, ...]

KINDS = ("A", "B", "C", "D")
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


class RootSystemError(ValueError):
    """Invalid type/rank/node data."""


def _cartan(kind: str, n: int) -> tuple[tuple[int, ...], ...]:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
    for i in range(n - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    if kind == "B":
        # alpha_n short
        a[n - 1][n - 2] = -2
    elif kind == "C":
        # alpha_n long
        a[n - 2][n - 1] = -2
    elif kind == "D":
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    return tuple(tuple(row) for row in a)


def _symmetrizer(cartan) -> tuple[int, ...]:
    """Minimal positive integers d with d_i a_ij = d_j a_ji (connected diagram)."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(n):
            if cartan[i][j] and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                queue.append(j)
    lcm = 1
    for x in d:
        lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in d]
    g = 0
    for x in ints:
        g = _gcd(g, x)
    return tuple(x // g for x in ints)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


_HSTAR = {
    "A": lambda n: n + 1,
    "B": lambda n: 2 * n - 1,
    "C": lambda n: 2 * n + 2,
    "D": lambda n: 2 * n - 2,
}


@dataclass(frozen=True)
class RootSystem:
    """Classical root system with Bourbaki labelling (nodes are 1-based)."""

    kind: str
    n: int
    cartan: tuple[tuple[int, ...], ...] = field(repr=False)
    d: tuple[int, ...]
    hstar: int

    def __post_init__(self) -> None:
        a, n = self.cartan, self.n
        for i in range(n):
            if a[i][i] != 2:
                raise RootSystemError("diagonal Cartan entries must be 2")
            for j in range(n):
                if i == j:
                    continue
                if a[i][j] > 0 or (a[i][j] == 0) != (a[j][i] == 0):
                    raise RootSystemError(f"bad Cartan entry ({i + 1},{j + 1})")
                if self.d[i] * a[i][j] != self.d[j] * a[j][i]:
                    raise RootSystemError("d does not symmetrize the Cartan matrix")

    @property
    def name(self) -> str:
        return f"{self.kind}{self.n}"

    def a(self, i: int, j: int) -> int:
        """Cartan entry a_ij with 1-based indices."""
        return self.cartan[i - 1][j - 1]

    def check_node(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise RootSystemError(f"node {i} out of range 1..{self.n} for {self.name}")

    def omega(self, i: int) -> Weight:
        """Fundamental weight; ``omega(0)`` is the zero weight."""
        if i == 0:
            return (0,) * self.n
        self.check_node(i)
        return tuple(int(j == i) for j in range(1, self.n + 1))

    def alpha(self, j: int) -> Weight:
        """Simple root alpha_j in fundamental coordinates (column j of the Cartan matrix)."""
        self.check_node(j)
        return tuple(self.cartan[i][j - 1] for i in range(self.n))

    def neighbours(self, i: int) -> list[int]:
        return [j for j in range(1, self.n + 1) if j != i and self.a(j, i) != 0]

    @cached_property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        """Positive roots in simple-root coordinates."""
        return _positive_roots(self.cartan)

    @cached_property
    def positive_coroots(self) -> tuple[tuple[int, ...], ...]:
        """Positive coroots in simple-coroot coordinates."""
        transpose = tuple(zip(*self.cartan))
        return _positive_roots(transpose)

    @cached_property
    def dual_coxeter_number(self) -> int:
        # highest root theta is long; theta^vee = sum c_i (d_i / d_max) alpha_i^vee
        theta = max(self.positive_roots, key=sum)
        dmax = max(self.d)
        height = Fraction(sum(c * di for c, di in zip(theta, self.d)), dmax)
        assert height.denominator == 1
        return 1 + int(height)

    @cached_property
    def _form_fund(self) -> tuple[tuple[Fraction, ...], ...]:
        # omega_i = sum_k (A^{-1})_{ki} alpha_k and (alpha_k, omega_j) = delta_kj d_j
        inv = sympy.Matrix(self.cartan).inv()
        n = self.n
        return tuple(
            tuple(Fraction(int(inv[j, i].p), int(inv[j, i].q)) * self.d[j] for j in range(n))
            for i in range(n)
        )

    def form(self, lam: Weight, mu: Weight) -> Fraction:
        """Invariant bilinear form on weights given in fundamental coordinates."""
        g = self._form_fund
        return sum(
            (lam[i] * mu[j] * g[i][j] for i in range(self.n) for j in range(self.n) if lam[i] and mu[j]),
            Fraction(0),
        )

    def root_to_weight(self, beta: tuple[int, ...]) -> Weight:
        """Convert simple-root coordinates to fundamental coordinates."""
        return tuple(
            sum(self.cartan[i][j] * beta[j] for j in range(self.n)) for i in range(self.n)
        )


def _positive_roots(cartan) -> tuple[tuple[int, ...], ...]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for i in range(n):
            pairing = sum(beta[j] * cartan[i][j] for j in range(n))
            image = tuple(b - pairing * (k == i) for k, b in enumerate(beta))
            if image not in seen:
                seen.add(image)
                queue.append(image)
    pos = [b for b in seen if all(c >= 0 for c in b)]
    return tuple(sorted(pos, key=lambda b: (sum(b), b)))


def root_system(kind: str, n: int) -> RootSystem:
    kind = kind.upper()
    if kind not in KINDS:
        raise RootSystemError(f"unknown type {kind!r}; expected one of {', '.join(KINDS)}")
    if n < _MIN_RANK[kind]:
        raise RootSystemError(f"type {kind} needs rank >= {_MIN_RANK[kind]}, got {n}")
    cartan = _cartan(kind, n)
    rs = RootSystem(kind, n, cartan, _symmetrizer(cartan), _HSTAR[kind](n))
    expected = rs.dual_coxeter_number * (2 if kind == "C" else 1)
    if expected != rs.hstar:
        raise RootSystemError(f"h mismatch for {rs.name}: {rs.hstar} vs {expected}")
    return rs


def weyl_group_order(kind: str, n: int) -> int:
    return {
        "A": lambda: factorial(n + 1),
        "B": lambda: 2**n * factorial(n),
        "C": lambda: 2**n * factorial(n),
        "D": lambda: 2 ** (n - 1) * factorial(n),
    }[kind]()


def reflect(rs: RootSystem, i: int, lam: Weight) -> Weight:
    """s_i(lam) = lam - lam_i alpha_i."""
    rs.check_node(i)
    c = lam[i - 1]
    if c == 0:
        return tuple(lam)
    return tuple(x - c * rs.cartan[k][i - 1] for k, x in enumerate(lam))


def apply_word(rs: RootSystem, word: Word, lam: Weight) -> Weight:
    """Act by s_{w_1} ... s_{w_k}; the rightmost letter acts first."""
    for i in reversed(word):
        lam = reflect(rs, i, lam)
    return lam


def is_dominant(lam: Weight) -> bool:
    return all(x >= 0 for x in lam)


def dominant_conjugate(rs: RootSystem, lam: Weight) -> Weight:
    lam = tuple(lam)
    while True:
        for i in range(1, rs.n + 1):
            if lam[i - 1] < 0:
                lam = reflect(rs, i, lam)
                break
        else:
            return lam


def weyl_orbit_minlength(rs: RootSystem, lam: Weight) -> list[tuple[Weight, Word]]:
    """Orbit of a dominant weight paired with minimal-length coset representatives.

    Breadth-first from ``lam``: a point ``mu`` with ``mu_i > 0`` is sent to
    ``s_i mu`` and the word grows on the left.  Each level is processed in
    ascending lexicographic order of the coordinates and the nodes in
    increasing order, so the recorded words are canonical.
    """
    lam = tuple(lam)
    if len(lam) != rs.n:
        raise RootSystemError("weight has wrong length")
    if not is_dominant(lam):
        raise RootSystemError(f"{lam} is not dominant")
    words: dict[Weight, Word] = {lam: ()}
    out = [(lam, ())]
    level = [lam]
    while level:
        nxt: list[Weight] = []
        for mu in sorted(level):
            for i in range(1, rs.n + 1):
                if mu[i - 1] > 0:
                    nu = reflect(rs, i, mu)
                    if nu not in words:
                        words[nu] = (i,) + words[mu]
                        nxt.append(nu)
        nxt.sort()
        out.extend((nu, words[nu]) for nu in nxt)
        level = nxt
    return out


def orbit_size(rs: RootSystem, lam: Weight) -> int:
    return len(weyl_orbit_minlength(rs, dominant_conjugate(rs, lam)))


def weyl_dim(rs: RootSystem, lam: Weight) -> int:
    """Weyl dimension formula, product over positive coroots."""
    if not is_dominant(lam):
        raise RootSystemError(f"{tuple(lam)} is not dominant")
    num = den = 1
    for beta in rs.positive_coroots:
        ht = sum(beta)
        num *= sum(c * (x + 1) for c, x in zip(beta, lam))
        den *= ht
    assert num % den == 0
    return num // den


def dominant_weights(rs: RootSystem, lam: Weight) -> list[Weight]:
    """Dominant weights mu <= lam (all occur in V(lam)), highest first."""
    lam = tuple(lam)
    roots = [rs.root_to_weight(b) for b in rs.positive_roots]
    seen = {lam}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        for beta in roots:
            nu = tuple(m - b for m, b in zip(mu, beta))
            if nu not in seen and is_dominant(nu):
                seen.add(nu)
                queue.append(nu)
    return sorted(seen, key=lambda mu: (-rs.form(mu, (1,) * rs.n), mu))


def dominant_char(rs: RootSystem, lam: Weight) -> dict[Weight, int]:
    """Multiplicities of the dominant weights of V(lam) by Freudenthal's recursion."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise RootSystemError(f"{lam} is not dominant")
    roots = [rs.root_to_weight(b) for b in rs.positive_roots]
    doms = dominant_weights(rs, lam)
    # |lam+rho|^2 - |mu+rho|^2 is positive and strictly increases down the dominance order
    lr = tuple(x + 1 for x in lam)
    norm_top = rs.form(lr, lr)

    def gap(mu):
        mr = tuple(x + 1 for x in mu)
        return norm_top - rs.form(mr, mr)

    mult: dict[Weight, int] = {}
    for mu in sorted(doms, key=lambda m: (gap(m), m)):
        if mu == lam:
            mult[mu] = 1
            continue
        total = Fraction(0)
        for beta in roots:
            k = 1
            while True:
                nu = tuple(m + k * b for m, b in zip(mu, beta))
                m_nu = mult.get(dominant_conjugate(rs, nu), 0)
                if m_nu == 0:
                    break
                total += m_nu * rs.form(nu, beta)
                k += 1
        value = 2 * total / gap(mu)
        assert value.denominator == 1
        mult[mu] = int(value)
    return {mu: mult[mu] for mu in doms if mult[mu]}


def full_char(rs: RootSystem, lam: Weight) -> dict[Weight, int]:
    """All weight multiplicities of V(lam), by orbit expansion of ``dominant_char``."""
    out: dict[Weight, int] = {}
    for mu, m in dominant_char(rs, lam).items():
        for nu, _ in weyl_orbit_minlength(rs, mu):
            out[nu] = out.get(nu, 0) + m
    return out


def minuscule_nodes(rs: RootSystem) -> tuple[int, ...]:
    """Nodes whose fundamental q-character is a single braid orbit."""
    n = rs.n
    return {
        "A": tuple(range(1, n + 1)),
        "B": (n,),
        "C": (1,),
        "D": (1, n - 1, n),
    }[rs.kind]


def theorem_nodes(rs: RootSystem) -> tuple[int, ...]:
    """Nodes handled by the partition formulas."""
    n = rs.n
    return {
        "A": (),
        "B": tuple(range(1, n)),
        "C": tuple(range(2, n + 1)),
        "D": tuple(range(2, n - 1)),
    }[rs.kind]


def classical_decomposition(rs: RootSystem, i: int) -> list[Weight]:
    """Highest weights of the U_q(g)-summands of the fundamental module at node i."""
    rs.check_node(i)
    if i in theorem_nodes(rs) and rs.kind in ("B", "D"):
        return [rs.omega(j) for j in range(i, -1, -2)]
    return [rs.omega(i)]


def stabilizer_order(rs: RootSystem, lam: Weight) -> int:
    """|W(lam)|, by counting the orbit."""
    return weyl_group_order(rs.kind, rs.n) // orbit_size(rs, lam)


__all__ = [
    "KINDS",
    "RootSystem",
    "RootSystemError",
    "Weight",
    "Word",
    "apply_word",
    "classical_decomposition",
    "dominant_char",
    "dominant_conjugate",
    "dominant_weights",
    "full_char",
    "is_dominant",
    "minuscule_nodes",
    "orbit_size",
    "reflect",
    "root_system",
    "stabilizer_order",
    "theorem_nodes",
    "weyl_dim",
    "weyl_group_order",
    "weyl_orbit_minlength",
]
