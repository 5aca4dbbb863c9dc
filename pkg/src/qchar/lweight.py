"""The l-weight lattice with spectral parameters restricted to powers of q.

An :class:`LWeight` is a Laurent monomial in the generators ``w[i;k]``
standing for the fundamental l-weight at node ``i`` and spectral parameter
``q**k``.  Values are immutable and kept in a canonical sorted form, so
equality, hashing and ordering are structural.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from typing import Union

Triple = tuple[int, int, int]
Coordinate = dict[int, int]


class LWeight:
    """Finitely supported map ``(node, exponent) -> nonzero multiplicity``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[tuple[int, int], int], Iterable[Triple]] = ()):
        if isinstance(terms, Mapping):
            items = ((i, k, m) for (i, k), m in terms.items())
        else:
            items = terms
        acc: dict[tuple[int, int], int] = {}
        for i, k, m in items:
            if i < 1:
                raise ValueError(f"node index must be positive, got {i}")
            acc[(i, k)] = acc.get((i, k), 0) + m
        self._terms: tuple[Triple, ...] = tuple(
            (i, k, m) for (i, k), m in sorted(acc.items()) if m
        )
        self._hash = hash(self._terms)

    @classmethod
    def _raw(cls, acc: dict[tuple[int, int], int]) -> LWeight:
        obj = cls.__new__(cls)
        obj._terms = tuple((i, k, m) for (i, k), m in sorted(acc.items()) if m)
        obj._hash = hash(obj._terms)
        return obj

    # group structure

    def __mul__(self, other: LWeight) -> LWeight:
        if not isinstance(other, LWeight):
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = self.as_dict()
        for i, k, m in other._terms:
            acc[(i, k)] = acc.get((i, k), 0) + m
        return LWeight._raw(acc)

    def inverse(self) -> LWeight:
        return LWeight._raw({(i, k): -m for i, k, m in self._terms})

    def __truediv__(self, other: LWeight) -> LWeight:
        if not isinstance(other, LWeight):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, e: int) -> LWeight:
        return LWeight._raw({(i, k): m * e for i, k, m in self._terms})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LWeight):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: LWeight) -> bool:
        return self._terms < other._terms

    def __bool__(self) -> bool:
        # truthy unless identity
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    # views

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(i, k): m for i, k, m in self._terms}

    def triples(self) -> list[list[int]]:
        return [[i, k, m] for i, k, m in self._terms]

    @classmethod
    def from_triples(cls, triples: Iterable[Iterable[int]]) -> LWeight:
        return cls(tuple(t) for t in triples)

    def nodes(self) -> set[int]:
        return {i for i, _, _ in self._terms}

    def max_node(self) -> int:
        return max((i for i, _, _ in self._terms), default=0)

    def coordinate(self, j: int) -> Coordinate:
        """Exponent -> multiplicity at node ``j``: the j-th entry prod (1 - q^k u)^m."""
        if j < 1:
            raise ValueError(f"node index must be positive, got {j}")
        return {k: m for i, k, m in self._terms if i == j}

    @classmethod
    def from_coordinates(cls, coords: Mapping[int, Mapping[int, int]]) -> LWeight:
        return cls((j, k, m) for j, poly in coords.items() for k, m in poly.items())

    def weight(self, rank: int) -> tuple[int, ...]:
        """Image under wt: w[i;k] -> omega_i."""
        out = [0] * rank
        for i, _, m in self._terms:
            if i > rank:
                raise ValueError(f"node {i} exceeds rank {rank}")
            out[i - 1] += m
        return tuple(out)

    def shift(self, b: int) -> LWeight:
        """Multiply every spectral parameter by q**b."""
        if b == 0:
            return self
        return LWeight._raw({(i, k + b): m for i, k, m in self._terms})

    def is_l_dominant(self) -> bool:
        return all(m > 0 for _, _, m in self._terms)

    def check_rank(self, rank: int) -> None:
        if self.max_node() > rank:
            raise ValueError(f"node {self.max_node()} exceeds rank {rank}")

    # rendering

    def to_text(self, notation: str = "w") -> str:
        if not self._terms:
            return "1"
        parts = []
        for i, k, m in self._terms:
            base = f"w[{i};{k}]" if notation == "w" else f"Y_{{{i},{k}}}"
            parts.append(base if m == 1 else f"{base}^{m}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"LWeight({self.to_text()})"


ONE = LWeight()


def gen(i: int, k: int, rank: int | None = None) -> LWeight:
    """The fundamental l-weight at node ``i`` with parameter ``q**k``."""
    if i < 1 or (rank is not None and i > rank):
        raise ValueError(f"node {i} out of range" + (f" 1..{rank}" if rank else ""))
    return LWeight._raw({(i, k): 1})


def mul(x: LWeight, y: LWeight) -> LWeight:
    return x * y


def inv(x: LWeight) -> LWeight:
    return x.inverse()


def pow(x: LWeight, e: int) -> LWeight:  # noqa: A001
    return x**e


def prod(factors: Iterable[LWeight]) -> LWeight:
    acc: dict[tuple[int, int], int] = {}
    for f in factors:
        for i, k, m in f:
            acc[(i, k)] = acc.get((i, k), 0) + m
    return LWeight._raw(acc)


def weight_of(x: LWeight, rank: int) -> tuple[int, ...]:
    return x.weight(rank)


def coordinate(x: LWeight, j: int) -> Coordinate:
    return x.coordinate(j)


def is_l_dominant(x: LWeight) -> bool:
    return x.is_l_dominant()


def simple_l_root(rs, i: int, k: int) -> LWeight:
    """alpha_{i, q^k} = T_i(w[i;k])^{-1} * w[i;k]."""
    from .braid import braid_apply

    top = gen(i, k, rs.n)
    return braid_apply(rs, i, top).inverse() * top
