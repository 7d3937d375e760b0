"""Exact integer lattices: membership and rank by xgcd row reduction.

Rows are kept in echelon form (pivot columns strictly increasing, pivots
positive), which is enough for membership tests and rank; `basis()` finishes
the reduction to Hermite normal form for a canonical, reproducible matrix.
All arithmetic is on Python ints, so there is no overflow to guard against.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DimensionMismatchError


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) = a*x + b*y, g >= 0 for (a, b) != (0, 0)."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


class IntegerLattice:
    """A sublattice of Z^dimension, built up by absorbing generator vectors."""

    def __init__(self, dimension: int):
        if dimension < 0:
            raise DimensionMismatchError("dimension must be nonnegative")
        self.dimension = dimension
        self._rows: list[list[int]] = []  # echelon; _pivots[i] = pivot col of row i
        self._pivots: list[int] = []

    @classmethod
    def from_vectors(cls, dimension: int, vectors: Iterable[Sequence[int]]) -> "IntegerLattice":
        lat = cls(dimension)
        for v in vectors:
            lat.add(v)
        return lat

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _check(self, vector: Sequence[int]) -> list[int]:
        v = [int(c) for c in vector]
        if len(v) != self.dimension:
            raise DimensionMismatchError(
                f"vector length {len(v)} != lattice dimension {self.dimension}"
            )
        return v

    def add(self, vector: Sequence[int]) -> None:
        """Absorb a vector; no-op if it is already in the lattice."""
        v = self._check(vector)
        while True:
            j = _first_nonzero(v)
            if j is None:
                return
            i = _index_of(self._pivots, j)
            if i is None:
                if v[j] < 0:
                    v = [-c for c in v]
                pos = 0
                while pos < len(self._pivots) and self._pivots[pos] < j:
                    pos += 1
                self._rows.insert(pos, v)
                self._pivots.insert(pos, j)
                return
            a, b = self._rows[i][j], v[j]
            if b % a == 0:
                q = b // a
                row = self._rows[i]
                v = [c - q * r for c, r in zip(v, row)]
            else:
                g, x, y = _xgcd(a, b)
                row = self._rows[i]
                merged = [x * r + y * c for r, c in zip(row, v)]
                v = [(a // g) * c - (b // g) * r for r, c in zip(row, v)]
                self._rows[i] = merged

    def contains(self, vector: Sequence[int]) -> bool:
        """Exact membership: reduce against the echelon rows; in the lattice
        iff every pivot divides cleanly and the residue is zero."""
        v = self._check(vector)
        for row, p in zip(self._rows, self._pivots):
            if v[p] == 0:
                continue
            q, r = divmod(v[p], row[p])
            if r:
                return False
            v = [c - q * rc for c, rc in zip(v, row)]
        return not any(v)

    def basis(self) -> tuple[tuple[int, ...], ...]:
        """Hermite normal form of the row span: pivots positive, entries
        above each pivot reduced into [0, pivot)."""
        rows = [list(r) for r in self._rows]
        for i in range(len(rows)):
            p = self._pivots[i]
            for k in range(i):
                q = rows[k][p] // rows[i][p]
                if q:
                    rows[k] = [a - q * b for a, b in zip(rows[k], rows[i])]
        return tuple(tuple(r) for r in rows)


def _first_nonzero(v: list[int]) -> int | None:
    for j, c in enumerate(v):
        if c:
            return j
    return None


def _index_of(pivots: list[int], j: int) -> int | None:
    # pivots is short and sorted; linear scan is fine
    for i, p in enumerate(pivots):
        if p == j:
            return i
        if p > j:
            return None
    return None
