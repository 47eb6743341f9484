"""Polynomial differential forms on ``C^n`` and their ``m``-fold tensor powers.

A :class:`PolyForm` is an element of ``O_mn (x) Lambda(C^n)^{(x)m}``: each term
is a monomial in the ``x_ij`` (flat layout as in :mod:`lcsq.groebner`) times
one wedge monomial ``dx_J`` per tensor factor, each ``J`` a sorted tuple of
indices in ``1..n``.  Factor ``j`` differentiates in the column-``j``
variables.  With ``m = 1`` this is just ``Omega(C^n)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .groebner import CommPoly, monomials_of_degree, var_index

Wedge = tuple[int, ...]
TermKey = tuple[tuple[int, ...], tuple[Wedge, ...]]


def merge_wedge(a: Wedge, b: Wedge) -> tuple[int, Wedge]:
    """``dx_a ^ dx_b = sign * dx_c``; sign 0 when they share an index."""
    if set(a) & set(b):
        return 0, ()
    inversions = sum(1 for x in a for y in b if x > y)
    return (-1) ** inversions, tuple(sorted(a + b))


class PolyForm:
    __slots__ = ("n", "m", "terms")

    def __init__(self, n: int, m: int, terms: Mapping[TermKey, object] | None = None):
        self.n = n
        self.m = m
        clean: dict[TermKey, Fraction] = {}
        for (exps, wedges), c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n * m or len(wedges) != m:
                raise ValueError("term shape does not match (n, m)")
            sign = 1
            normal = []
            for J in wedges:
                J = tuple(J)
                if any(not 1 <= i <= n for i in J):
                    raise ValueError(f"wedge index outside 1..{n}: {J}")
                s, K = 1, ()
                for i in J:
                    t, K = merge_wedge(K, (i,))
                    s *= t
                sign *= s
                normal.append(K)
            if sign == 0 or not c:
                continue
            key = (exps, tuple(normal))
            clean[key] = clean.get(key, 0) + sign * Fraction(c)
        self.terms = {k: v for k, v in clean.items() if v}

    # -- construction ------------------------------------------------------------

    @classmethod
    def zero(cls, n: int, m: int = 1) -> "PolyForm":
        return cls(n, m)

    @classmethod
    def from_poly(cls, p: CommPoly, n: int, m: int = 1) -> "PolyForm":
        if p.nvars != n * m:
            raise ValueError(f"polynomial in {p.nvars} variables, expected {n * m}")
        empty = ((),) * m
        return cls(n, m, {(e, empty): c for e, c in p.terms.items()})

    @classmethod
    def dx(cls, i: int, n: int, m: int = 1, factor: int = 1) -> "PolyForm":
        wedges = tuple((i,) if j == factor else () for j in range(1, m + 1))
        return cls(n, m, {((0,) * (n * m), wedges): 1})

    @classmethod
    def coordinate(cls, i: int, n: int, m: int = 1, column: int = 1) -> "PolyForm":
        e = [0] * (n * m)
        e[var_index(i, column, n)] = 1
        return cls(n, m, {(tuple(e), ((),) * m): 1})

    # -- arithmetic --------------------------------------------------------------

    def _same(self, other: "PolyForm"):
        if (self.n, self.m) != (other.n, other.m):
            raise ValueError(f"shape mismatch: (n={self.n}, m={self.m}) vs (n={other.n}, m={other.m})")

    def __add__(self, other: "PolyForm") -> "PolyForm":
        self._same(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return PolyForm(self.n, self.m, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "PolyForm":
        c = Fraction(c)
        return PolyForm(self.n, self.m, {k: c * v for k, v in self.terms.items()})

    def times_poly(self, p: CommPoly) -> "PolyForm":
        if p.nvars != self.n * self.m:
            raise ValueError("polynomial lives in a different ring")
        out: dict = {}
        for (e, w), c in self.terms.items():
            for f, d in p.terms.items():
                key = (tuple(a + b for a, b in zip(e, f)), w)
                out[key] = out.get(key, 0) + c * d
        return PolyForm(self.n, self.m, out)

    def __mul__(self, other):
        if isinstance(other, CommPoly):
            return self.times_poly(other)
        if isinstance(other, PolyForm):
            return wedge(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PolyForm):
            return NotImplemented
        return (self.n, self.m) == (other.n, other.m) and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.m, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def ranks(self) -> set[int]:
        return {sum(len(J) for J in w) for _, w in self.terms}

    def factor_ranks(self) -> set[tuple[int, ...]]:
        return {tuple(len(J) for J in w) for _, w in self.terms}

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (e, w), c in sorted(self.terms.items()):
            mono = "*".join(f"x{(k % self.n) + 1}{(k // self.n) + 1}^{p}" for k, p in enumerate(e) if p)
            dxs = " (x) ".join("^".join(f"dx{i}" for i in J) or "1" for J in w)
            parts.append(f"{c}*{mono or '1'}[{dxs}]")
        return " + ".join(parts)


def wedge(a: PolyForm, b: PolyForm) -> PolyForm:
    """Factorwise wedge product with Koszul signs across tensor factors."""
    a._same(b)
    out: dict = {}
    for (ea, wa), ca in a.terms.items():
        for (eb, wb), cb in b.terms.items():
            sign = 1
            # moving b_j past a_l for l > j
            for j in range(a.m):
                for l in range(j + 1, a.m):
                    if len(wb[j]) * len(wa[l]) % 2:
                        sign = -sign
            merged = []
            for Ja, Jb in zip(wa, wb):
                s, K = merge_wedge(Ja, Jb)
                sign *= s
                merged.append(K)
            if not sign:
                continue
            key = (tuple(x + y for x, y in zip(ea, eb)), tuple(merged))
            out[key] = out.get(key, 0) + sign * ca * cb
    return PolyForm(a.n, a.m, out)


def exterior_d(a: PolyForm, factor: int = 1) -> PolyForm:
    """Exterior derivative in tensor factor ``factor`` (1-based)."""
    if not 1 <= factor <= a.m:
        raise ValueError(f"factor {factor} outside 1..{a.m}")
    n = a.n
    j = factor - 1
    out: dict = {}
    for (e, w), c in a.terms.items():
        koszul = (-1) ** sum(len(J) for J in w[:j])
        for i in range(1, n + 1):
            k = var_index(i, factor, n)
            if not e[k]:
                continue
            s, K = merge_wedge((i,), w[j])
            if not s:
                continue
            f = list(e)
            f[k] -= 1
            key = (tuple(f), w[:j] + (K,) + w[j + 1:])
            out[key] = out.get(key, 0) + koszul * s * c * e[k]
    return PolyForm(n, a.m, out)


def tensor(a: PolyForm, b: PolyForm) -> PolyForm:
    """``a (x) b``; column blocks of ``b`` follow those of ``a``."""
    if a.n != b.n:
        raise ValueError("tensor factors over different C^n")
    out = {}
    for (ea, wa), ca in a.terms.items():
        for (eb, wb), cb in b.terms.items():
            out[(ea + eb, wa + wb)] = ca * cb
    return PolyForm(a.n, a.m + b.m, out)


def merge_factors(a: PolyForm) -> PolyForm:
    """Identify all columns (``x_ij -> x_i``) and wedge the factors together in order."""
    n = a.n
    out: dict = {}
    for (e, w), c in a.terms.items():
        f = tuple(sum(e[var_index(i, j, n)] for j in range(1, a.m + 1)) for i in range(1, n + 1))
        sign, K = 1, ()
        for J in w:
            s, K = merge_wedge(K, J)
            sign *= s
        if sign:
            key = (f, (K,))
            out[key] = out.get(key, 0) + sign * c
    return PolyForm(n, 1, out)


class OddFormError(ValueError):
    pass


def phi_tensor(omega: PolyForm) -> PolyForm:
    """``w1 (x) w2 -> dw1 ^ dw2`` on a two-factor form, columns merged afterwards."""
    if omega.m != 2:
        raise ValueError("phi acts on two-factor forms")
    if any(r1 % 2 or r2 % 2 for r1, r2 in omega.factor_ranks()):
        raise OddFormError("phi is defined on even forms")
    # factor 2 first, while factor 1 is still even, so no Koszul sign enters
    return merge_factors(exterior_d(exterior_d(omega, 2), 1))


def phi(omega1: PolyForm, omega2: PolyForm) -> PolyForm:
    if omega1.m != 1 or omega2.m != 1:
        raise ValueError("phi takes single-factor forms; use phi_tensor for general elements")
    return phi_tensor(tensor(omega1, omega2))


def rank_truncate(a: PolyForm, r: int) -> PolyForm:
    if r < 0:
        raise ValueError("r must be non-negative")
    return PolyForm(a.n, a.m, {k: c for k, c in a.terms.items()
                               if sum(len(J) for J in k[1]) <= r})


# -- vector fields on O_mn ----------------------------------------------------------

@dataclass(frozen=True)
class VectorField:
    """``f d/dy_i`` with ``f`` a polynomial in ``y_1..y_n``."""

    component_index: int
    coefficient: CommPoly

    @property
    def n(self) -> int:
        return self.coefficient.nvars


def column_copy(f: CommPoly, column: int, m: int) -> CommPoly:
    """``f_j``: substitute ``y_l -> x_{l,column}`` in ``f``."""
    n = f.nvars

    def image(e):
        out = [0] * (n * m)
        for l in range(n):
            out[var_index(l + 1, column, n)] = e[l]
        return tuple(out)

    return CommPoly({image(e): c for e, c in f.terms.items()}, n * m)


def act_vector_field(v: VectorField, p: CommPoly, m: int) -> CommPoly:
    """Diagonal action: ``x_{i'j} -> delta_{i i'} f_j``, extended as a derivation."""
    n = v.n
    if p.nvars != n * m:
        raise ValueError(f"polynomial in {p.nvars} variables, expected {n * m}")
    i = v.component_index
    if not 1 <= i <= n:
        raise ValueError(f"component index {i} outside 1..{n}")
    out = CommPoly({}, n * m)
    for j in range(1, m + 1):
        dp = p.derivative(var_index(i, j, n))
        if not dp.is_zero():
            out = out + dp * column_copy(v.coefficient, j, m)
    return out


# -- random forms for identity checks -----------------------------------------------

def random_form(n: int, rng: random.Random, ranks=(0, 2), max_degree: int = 3,
                max_terms: int = 4, coef_range: int = 5) -> PolyForm:
    """Random single-factor form with the given possible ranks."""
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        r = rng.choice([q for q in ranks if q <= n])
        J = tuple(sorted(rng.sample(range(1, n + 1), r)))
        deg = rng.randint(0, max_degree)
        e = [0] * n
        for _ in range(deg):
            e[rng.randrange(n)] += 1
        c = rng.randint(-coef_range, coef_range) or 1
        terms[(tuple(e), (J,))] = c
    return PolyForm(n, 1, terms)


def even_ranks(n: int) -> tuple[int, ...]:
    """Even ranks below ``n``; rank-``n`` forms are closed and add nothing to phi."""
    top = max(n - 1, 0)
    return tuple(range(0, top + 1, 2))


def monomial_fields(n: int, max_degree: int) -> list[VectorField]:
    out = []
    for d in range(max_degree + 1):
        for e in monomials_of_degree(n, d):
            f = CommPoly({e: 1}, n)
            for i in range(1, n + 1):
                out.append(VectorField(i, f))
    return out
