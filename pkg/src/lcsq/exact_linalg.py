"""Exact sparse row reduction over Q, with an opt-in prime-field mode.

Vectors are plain ``{column: coefficient}`` dicts in the hot paths; the
:class:`SparseVector` wrapper exists for the public API and validates
indices.  Rational arithmetic uses ``gmpy2.mpq``.

Prime-field mode (``modulus=p``) is probabilistic: for an integer matrix the
rank mod ``p`` never exceeds the rank over Q and agrees with it except for
finitely many primes.  It is never used on its own for acceptance claims.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from gmpy2 import mpq

#: Default modulus for prime-field mode, the Mersenne prime 2**61 - 1.
DEFAULT_PRIME = (1 << 61) - 1


class DimensionError(ValueError):
    """A column index or vector length does not fit the ambient space."""


def _coerce(value, modulus):
    if modulus is None:
        if isinstance(value, Fraction):
            return mpq(value.numerator, value.denominator)
        return mpq(value)
    if isinstance(value, Fraction):
        return value.numerator * pow(value.denominator, -1, modulus) % modulus
    return int(value) % modulus


class SparseVector:
    """Immutable sparse vector with exact coefficients."""

    __slots__ = ("entries", "dim")

    def __init__(self, entries: Mapping[int, object], dim: int):
        clean = {}
        for col, val in entries.items():
            if not 0 <= col < dim:
                raise DimensionError(f"column {col} outside ambient dimension {dim}")
            if val:
                clean[col] = Fraction(val) if not isinstance(val, Fraction) else val
        self.entries = clean
        self.dim = dim

    @classmethod
    def from_dense(cls, values: Iterable) -> "SparseVector":
        values = list(values)
        return cls({i: v for i, v in enumerate(values) if v}, len(values))

    def to_dense(self) -> list[Fraction]:
        out = [Fraction(0)] * self.dim
        for col, val in self.entries.items():
            out[col] = val
        return out

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, SparseVector):
            return NotImplemented
        return self.dim == other.dim and self.entries == other.entries

    def __hash__(self):
        return hash((self.dim, frozenset(self.entries.items())))

    def __repr__(self):
        inner = ", ".join(f"{c}: {v}" for c, v in sorted(self.entries.items()))
        return f"SparseVector({{{inner}}}, dim={self.dim})"


class RowReducer:
    """Incremental reduced row-echelon basis.

    Rows are kept fully reduced: every row has a 1 in its pivot column and a
    zero in every other pivot column.  Reducing a vector therefore needs one
    pass over the vector's pivot entries.
    """

    def __init__(self, ambient_dim: int, modulus: int | None = None):
        self.ambient_dim = ambient_dim
        self.modulus = modulus
        self._rows: dict[int, dict] = {}  # pivot column -> row

    @property
    def rank(self) -> int:
        return len(self._rows)

    def is_full(self) -> bool:
        return len(self._rows) == self.ambient_dim

    def reduce(self, vec: dict) -> dict:
        """Return the remainder of ``vec`` (a fresh dict) against the basis."""
        p = self.modulus
        out = dict(vec)
        rows = self._rows
        for col in [c for c in vec if c in rows]:
            coef = out.pop(col, 0)
            if not coef:
                continue
            for c, v in rows[col].items():
                if c == col:
                    continue
                nv = out.get(c, 0) - coef * v
                if p is not None:
                    nv %= p
                if nv:
                    out[c] = nv
                else:
                    out.pop(c, None)
        return out

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; return True iff it enlarged the span.

        Coefficients must already be in the working domain (``mpq`` or ints
        reduced mod the prime).
        """
        rem = self.reduce(vec)
        if not rem:
            return False
        p = self.modulus
        pivot = min(rem)
        lead = rem[pivot]
        if p is None:
            inv = 1 / lead
            rem = {c: v * inv for c, v in rem.items()}
        else:
            inv = pow(lead, -1, p)
            rem = {c: v * inv % p for c, v in rem.items()}
        for row in self._rows.values():
            coef = row.get(pivot)
            if not coef:
                continue
            for c, v in rem.items():
                nv = row.get(c, 0) - coef * v
                if p is not None:
                    nv %= p
                if nv:
                    row[c] = nv
                else:
                    del row[c]
        self._rows[pivot] = rem
        return True

    def freeze(self) -> "GradedSubspace":
        pivots = sorted(self._rows)
        return GradedSubspace(self.ambient_dim, [dict(self._rows[c]) for c in pivots],
                              pivots, self.modulus)


class GradedSubspace:
    """A subspace of one graded piece, stored as a reduced row-echelon basis."""

    __slots__ = ("ambient_dim", "rows", "pivot_cols", "modulus")

    def __init__(self, ambient_dim: int, rows: list[dict], pivot_cols: list[int],
                 modulus: int | None = None):
        self.ambient_dim = ambient_dim
        self.rows = rows
        self.pivot_cols = pivot_cols
        self.modulus = modulus

    @property
    def rank(self) -> int:
        return len(self.pivot_cols)

    @classmethod
    def full(cls, ambient_dim: int, modulus: int | None = None) -> "GradedSubspace":
        one = mpq(1) if modulus is None else 1
        return cls(ambient_dim, [{i: one} for i in range(ambient_dim)],
                   list(range(ambient_dim)), modulus)

    def basis(self) -> list[SparseVector]:
        return [SparseVector({c: _to_fraction(v) for c, v in row.items()}, self.ambient_dim)
                for row in self.rows]

    def reducer(self) -> RowReducer:
        red = RowReducer(self.ambient_dim, self.modulus)
        for col, row in zip(self.pivot_cols, self.rows):
            red._rows[col] = dict(row)
        return red

    def contains(self, v: SparseVector | Mapping[int, object]) -> bool:
        return contains(self, v)

    def __repr__(self):
        return f"GradedSubspace(rank={self.rank}, ambient_dim={self.ambient_dim})"


def _to_fraction(v) -> Fraction:
    if isinstance(v, int):
        return Fraction(v)
    return Fraction(int(v.numerator), int(v.denominator))


def _raw(v, ambient_dim: int, modulus: int | None) -> dict:
    if isinstance(v, SparseVector):
        if v.dim != ambient_dim:
            raise DimensionError(f"vector of dimension {v.dim} in ambient dimension {ambient_dim}")
        items = v.entries.items()
    else:
        items = v.items()
    out = {}
    for col, val in items:
        if not 0 <= col < ambient_dim:
            raise DimensionError(f"column {col} outside ambient dimension {ambient_dim}")
        val = _coerce(val, modulus)
        if val:
            out[col] = val
    return out


def subspace_span(vectors: Iterable[SparseVector | Mapping[int, object]], ambient_dim: int,
                  modulus: int | None = None) -> GradedSubspace:
    """Reduced row-echelon basis of the span of ``vectors``."""
    red = RowReducer(ambient_dim, modulus)
    for v in vectors:
        red.add(_raw(v, ambient_dim, modulus))
    return red.freeze()


def contains(space: GradedSubspace, v: SparseVector | Mapping[int, object]) -> bool:
    raw = _raw(v, space.ambient_dim, space.modulus)
    rows = dict(zip(space.pivot_cols, space.rows))
    red = RowReducer(space.ambient_dim, space.modulus)
    red._rows = rows
    return not red.reduce(raw)


def is_subspace(small: GradedSubspace, big: GradedSubspace) -> bool:
    """True iff every basis row of ``small`` lies in ``big``."""
    if small.ambient_dim != big.ambient_dim:
        raise DimensionError("ambient dimensions differ")
    red = RowReducer(big.ambient_dim, big.modulus)
    red._rows = dict(zip(big.pivot_cols, big.rows))
    return all(not red.reduce(row) for row in small.rows)


def rank(vectors: Iterable[SparseVector | Mapping[int, object]], ambient_dim: int,
         modulus: int | None = None) -> int:
    return subspace_span(vectors, ambient_dim, modulus).rank
