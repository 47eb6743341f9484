"""Torus characters, Schur polynomials and tensor-field module characters.

A :class:`Character` is a truncated power series in commuting variables
``t_1..t_n`` stored as ``{multidegree: coefficient}``.  The character of the
tensor-field module ``F_D`` is ``s_D(t) / prod(1 - t_i)`` when ``D`` has more
than one column; for a single column of ``k`` boxes it is the character of
closed polynomial ``k``-forms, obtained from exactness of the polynomial de
Rham complex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping

from .free_algebra import MultiDegree, multidegrees_of_total, multidegrees_up_to


class DecompositionError(ValueError):
    """The character is not a non-negative combination of ``F_D`` characters."""


class OutOfHypothesisError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Partition:
    """Young diagram as a weakly decreasing tuple; trailing zeros are dropped."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def rows(self) -> int:
        return len(self.parts)

    @property
    def columns(self) -> int:
        return self.parts[0] if self.parts else 0

    def is_one_column(self) -> bool:
        return self.columns == 1

    def padded(self, n: int) -> tuple[int, ...]:
        if self.rows > n:
            raise ValueError(f"{self} has more than {n} rows")
        return self.parts + (0,) * (n - self.rows)

    def conjugate(self) -> "Partition":
        return Partition(sum(1 for p in self.parts if p > j) for j in range(self.columns))

    def __repr__(self):
        return f"Partition{self.parts}"


def partitions_of(size: int, max_rows: int, max_part: int | None = None) -> list[Partition]:
    """Partitions of ``size`` with at most ``max_rows`` rows, in reverse-lex order."""
    if max_part is None:
        max_part = size
    if size == 0:
        return [Partition()]
    if max_rows == 0:
        return []
    out = []
    for first in range(min(size, max_part), 0, -1):
        for rest in partitions_of(size - first, max_rows - 1, first):
            out.append(Partition((first,) + rest.parts))
    return out


@dataclass
class Character:
    num_vars: int
    deg_max: int
    coefficients: dict[MultiDegree, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for d, c in self.coefficients.items():
            d = tuple(d)
            if len(d) != self.num_vars:
                raise ValueError(f"multidegree {d} for {self.num_vars} variables")
            if sum(d) <= self.deg_max and c:
                clean[d] = Fraction(c)
        self.coefficients = clean

    @classmethod
    def zero(cls, n: int, deg_max: int) -> "Character":
        return cls(n, deg_max, {})

    @classmethod
    def one(cls, n: int, deg_max: int) -> "Character":
        return cls(n, deg_max, {(0,) * n: 1})

    def _check(self, other: "Character"):
        if other.num_vars != self.num_vars:
            raise ValueError("characters in different numbers of variables")

    def __add__(self, other: "Character") -> "Character":
        self._check(other)
        out = dict(self.coefficients)
        for d, c in other.coefficients.items():
            out[d] = out.get(d, 0) + c
        return Character(self.num_vars, min(self.deg_max, other.deg_max), out)

    def __neg__(self):
        return Character(self.num_vars, self.deg_max, {d: -c for d, c in self.coefficients.items()})

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def scale(self, c) -> "Character":
        return Character(self.num_vars, self.deg_max,
                         {d: c * v for d, v in self.coefficients.items()})

    def __mul__(self, other):
        if not isinstance(other, Character):
            return self.scale(other)
        self._check(other)
        deg = min(self.deg_max, other.deg_max)
        out: dict[MultiDegree, Fraction] = {}
        for d1, c1 in self.coefficients.items():
            s1 = sum(d1)
            for d2, c2 in other.coefficients.items():
                if s1 + sum(d2) > deg:
                    continue
                d = tuple(a + b for a, b in zip(d1, d2))
                out[d] = out.get(d, 0) + c1 * c2
        return Character(self.num_vars, deg, out)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return (self.num_vars == other.num_vars and self.deg_max == other.deg_max
                and self.coefficients == other.coefficients)

    def truncate(self, deg: int) -> "Character":
        return Character(self.num_vars, min(deg, self.deg_max), self.coefficients)

    def slice(self, degree: int) -> dict[MultiDegree, Fraction]:
        return {d: c for d, c in self.coefficients.items() if sum(d) == degree}

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_symmetric(self) -> bool:
        return all(self.coefficients.get(perm, 0) == c
                   for d, c in self.coefficients.items()
                   for perm in set(itertools.permutations(d)))

    def specialize(self) -> list[Fraction]:
        """Single-variable series (all ``t_i := t``), coefficients of ``t^0..t^deg_max``."""
        out = [Fraction(0)] * (self.deg_max + 1)
        for d, c in self.coefficients.items():
            out[sum(d)] += c
        return out

    def evaluate_at_ones(self) -> Fraction:
        return sum(self.coefficients.values(), Fraction(0))

    def __repr__(self):
        return f"Character(n={self.num_vars}, deg_max={self.deg_max}, {len(self.coefficients)} terms)"


def from_counts(counts: Mapping[MultiDegree, int], n: int, deg_max: int) -> Character:
    return Character(n, deg_max, dict(counts))


# -- Schur polynomials --------------------------------------------------------------

def _ssyt_weights(shape: tuple[int, ...], n: int) -> dict[MultiDegree, int]:
    """Content histogram of semistandard tableaux of ``shape`` with entries in 1..n."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    filling: dict[tuple[int, int], int] = {}
    out: dict[MultiDegree, int] = {}

    def rec(pos):
        if pos == len(cells):
            w = [0] * n
            for v in filling.values():
                w[v - 1] += 1
            w = tuple(w)
            out[w] = out.get(w, 0) + 1
            return
        r, c = cells[pos]
        lo = 1
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, n + 1):
            filling[(r, c)] = v
            rec(pos + 1)
        filling.pop((r, c), None)

    rec(0)
    return out


@lru_cache(maxsize=None)
def _schur_dict(parts: tuple[int, ...], n: int) -> dict[MultiDegree, int]:
    if len(parts) > n:
        return {}
    if not parts:
        return {(0,) * n: 1}
    return _ssyt_weights(parts, n)


def schur(D: Partition, n: int, deg_max: int | None = None) -> Character:
    """Schur polynomial ``s_D(t_1..t_n)``, via semistandard tableaux."""
    if D.rows > n:
        raise ValueError(f"{D} has more than {n} rows")
    if deg_max is None:
        deg_max = D.size
    return Character(n, deg_max, dict(_schur_dict(D.parts, n)))


def _complete_homogeneous(k: int, n: int) -> dict[MultiDegree, int]:
    if k < 0:
        return {}
    return {d: 1 for d in multidegrees_of_total(n, k)}


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for d1, c1 in a.items():
        for d2, c2 in b.items():
            d = tuple(x + y for x, y in zip(d1, d2))
            out[d] = out.get(d, 0) + c1 * c2
    return {d: c for d, c in out.items() if c}


def schur_jacobi_trudi(D: Partition, n: int) -> dict[MultiDegree, int]:
    """``det(h_{D_i - i + j})`` expanded by permutations; cross-check for :func:`schur`."""
    parts = D.parts
    L = len(parts)
    if L == 0:
        return {(0,) * n: 1}
    out: dict = {}
    for perm in itertools.permutations(range(L)):
        sign = 1
        for i in range(L):
            for j in range(i + 1, L):
                if perm[i] > perm[j]:
                    sign = -sign
        term = {(0,) * n: sign}
        for i in range(L):
            term = _poly_mul(term, _complete_homogeneous(parts[i] - i + perm[i], n))
            if not term:
                break
        for d, c in term.items():
            out[d] = out.get(d, 0) + c
    return {d: c for d, c in out.items() if c}


def weyl_dimension(D: Partition, n: int) -> int:
    """``dim`` of the irreducible ``GL_n`` module of highest weight ``D``."""
    lam = D.padded(n)
    num, den = 1, 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    return num // den


def schur_expand(poly: Mapping[MultiDegree, Fraction], n: int) -> dict[Partition, Fraction]:
    """Schur-basis coefficients of a symmetric homogeneous polynomial.

    Repeatedly strips the lexicographically largest monomial, which for a
    symmetric polynomial is a dominant weight, by subtracting the matching
    Schur polynomial.
    """
    rem = {d: Fraction(c) for d, c in poly.items() if c}
    out: dict[Partition, Fraction] = {}
    while rem:
        lead = max(rem)
        if any(a < b for a, b in zip(lead, lead[1:])):
            raise ValueError(f"polynomial is not symmetric (leading monomial {lead})")
        c = rem[lead]
        D = Partition(lead)
        out[D] = out.get(D, 0) + c
        for d, v in _schur_dict(D.parts, n).items():
            nv = rem.get(d, 0) - c * v
            if nv:
                rem[d] = nv
            else:
                rem.pop(d, None)
    return out


# -- de Rham characters -------------------------------------------------------------

def polynomial_ring_char(n: int, deg_max: int) -> Character:
    """``prod 1/(1 - t_i)`` truncated at ``deg_max``."""
    return Character(n, deg_max, {d: 1 for d in multidegrees_up_to(n, deg_max)})


def elementary(j: int, n: int) -> dict[MultiDegree, int]:
    out = {}
    for subset in itertools.combinations(range(n), j):
        d = [0] * n
        for i in subset:
            d[i] = 1
        out[tuple(d)] = 1
    return out


def forms_char(j: int, n: int, deg_max: int) -> Character:
    """Polynomial ``j``-forms on ``C^n``: ``e_j(t) / prod(1 - t_i)``."""
    if not 0 <= j <= n:
        return Character.zero(n, deg_max)
    return Character(n, deg_max, elementary(j, n)) * polynomial_ring_char(n, deg_max)


@lru_cache(maxsize=None)
def _closed_cached(k: int, n: int, deg_max: int) -> Character:
    if k == 0:
        return Character.one(n, deg_max)
    if k > n:
        return Character.zero(n, deg_max)
    # 0 -> closed^{k-1} -> Omega^{k-1} --d--> closed^k -> 0 for k >= 1
    return forms_char(k - 1, n, deg_max) - _closed_cached(k - 1, n, deg_max)


def closed_forms_char(k: int, n: int, deg_max: int) -> Character:
    return _closed_cached(k, n, deg_max)


def exact_even_positive_char(n: int, deg_max: int) -> Character:
    """Exact forms of even rank ``>= 2``; equal to the closed ones there."""
    out = Character.zero(n, deg_max)
    for k in range(2, n + 1, 2):
        out = out + closed_forms_char(k, n, deg_max)
    return out


def even_mod_exact_char(n: int, deg_max: int) -> Character:
    """Even forms modulo exact even forms."""
    out = Character.zero(n, deg_max)
    for k in range(0, n + 1, 2):
        out = out + forms_char(k, n, deg_max)
    return out - exact_even_positive_char(n, deg_max)


def char_tensor_field(D: Partition, n: int, deg_max: int) -> Character:
    if D.size == 0:
        raise ValueError("the empty diagram has no tensor-field module here")
    if D.rows > n:
        raise ValueError(f"{D} has more than {n} rows")
    return _module_char(D, n, deg_max)


def _module_char(D: Partition, n: int, deg_max: int) -> Character:
    # the empty diagram stands for the constants (closed 0-forms)
    if D.columns <= 1:
        return closed_forms_char(D.size, n, deg_max)
    return schur(D, n, deg_max) * polynomial_ring_char(n, deg_max)


# -- decomposition ------------------------------------------------------------------

@dataclass
class Decomposition:
    multiplicities: dict[Partition, int]
    remainder: Character
    deg_reliable: int

    def max_size(self) -> int:
        return max((D.size for D, k in self.multiplicities.items() if k), default=0)

    def __add__(self, other: "Decomposition") -> "Decomposition":
        mult = dict(self.multiplicities)
        for D, k in other.multiplicities.items():
            mult[D] = mult.get(D, 0) + k
        return Decomposition({D: k for D, k in mult.items() if k},
                             self.remainder + other.remainder,
                             min(self.deg_reliable, other.deg_reliable))


def decompose(chi: Character, deg_reliable: int) -> Decomposition:
    """Peel ``F_D`` characters off ``chi`` degree by degree.

    The lowest-degree slice of ``char F_D`` is ``s_D`` in degree ``|D|``, so the
    Schur expansion of the unexplained slice in degree ``d`` gives the
    multiplicities of the diagrams with ``d`` boxes.  A degree-0 term is read
    as the trivial module of constants.
    """
    n = chi.num_vars
    deg_reliable = min(deg_reliable, chi.deg_max)
    rem = chi
    mult: dict[Partition, int] = {}
    for d in range(deg_reliable + 1):
        piece = rem.slice(d)
        if not piece:
            continue
        for D, c in sorted(schur_expand(piece, n).items(), reverse=True):
            if c < 0 or c.denominator != 1:
                raise DecompositionError(
                    f"Schur coefficient {c} at shape {D.parts} in degree {d}")
            mult[D] = int(c)
            rem = rem - _module_char(D, n, chi.deg_max).scale(c)
    return Decomposition(mult, rem, deg_reliable)


# -- the size bound -----------------------------------------------------------------

def bound(m: int, n: int) -> int:
    """``(m-1)^2 + 2 floor((n-2)/2) (m-1)``, valid for ``m >= 3, n >= 2``."""
    if m < 3 or n < 2:
        raise OutOfHypothesisError(f"bound needs m >= 3 and n >= 2, got m={m}, n={n}")
    return (m - 1) ** 2 + 2 * ((n - 2) // 2) * (m - 1)


def rank_cutoff(m: int, n: int) -> int:
    """Exterior rank above which the tensor forms are killed: ``2 floor((n-2)/2)(m-1)``."""
    return 2 * max((n - 2) // 2, 0) * (m - 1)


@dataclass
class BoundReport:
    m: int
    n: int
    bound: int
    ok: bool
    rows: list[tuple[Partition, int, int]]
    violations: list[Partition]


def check_bound(dec: Decomposition, m: int, n: int) -> BoundReport:
    b = bound(m, n)
    rows = [(D, D.size, b) for D, k in sorted(dec.multiplicities.items()) if k]
    bad = [D for D, size, _ in rows if size > b]
    return BoundReport(m, n, b, not bad, rows, bad)


def lambda_truncated_series(m: int, n: int, r: int) -> list[int]:
    """Single-variable character of the rank-``<= r`` part of ``Lambda^even(C^n)^{(x)m}``."""
    factor = [comb(n, q) if q % 2 == 0 else 0 for q in range(n + 1)]
    series = [1]
    for _ in range(m):
        nxt = [0] * (len(series) + n)
        for a, x in enumerate(series):
            for q, y in enumerate(factor):
                nxt[a + q] += x * y
        series = nxt
    return [c for c in series[: r + 1]]
