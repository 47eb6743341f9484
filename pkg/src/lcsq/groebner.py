"""Commutative polynomials in ``x_ij``, Buchberger's algorithm, Hilbert series.

The ring ``O_mn`` has variables ``x_ij`` (``1 <= i <= n``, ``1 <= j <= m``);
variable ``x_ij`` sits at flat position ``(j-1)*n + (i-1)`` of an exponent
vector, so column ``j`` is a contiguous block.  The lex order puts
``x_ij > x_kl`` iff ``j > l`` or ``j == l and i > k``, i.e. higher flat
position means larger variable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping

Monomial = tuple[int, ...]


class PartialBasisError(RuntimeError):
    """A degree-capped basis was asked about a degree it does not certify."""


class CommPoly:
    """Sparse polynomial ``{exponent vector: Fraction}``."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: Mapping[Monomial, object], nvars: int):
        clean = {}
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} for {nvars} variables")
            if c:
                clean[e] = Fraction(c)
        self.terms = clean
        self.nvars = nvars

    @classmethod
    def constant(cls, c, nvars: int) -> "CommPoly":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def variable(cls, index: int, nvars: int) -> "CommPoly":
        e = [0] * nvars
        e[index] = 1
        return cls({tuple(e): 1}, nvars)

    def _same(self, other):
        if other.nvars != self.nvars:
            raise ValueError(f"{self.nvars} vs {other.nvars} variables")

    def __add__(self, other):
        if not isinstance(other, CommPoly):
            other = CommPoly.constant(other, self.nvars)
        self._same(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return _raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return _raw({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        if not isinstance(other, CommPoly):
            other = CommPoly.constant(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, CommPoly):
            c = Fraction(other)
            return _raw({e: c * v for e, v in self.terms.items() if c}, self.nvars)
        self._same(other)
        out: dict[Monomial, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return CommPoly(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = CommPoly.constant(1, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CommPoly.constant(other, self.nvars)
        if not isinstance(other, CommPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def derivative(self, index: int) -> "CommPoly":
        out = {}
        for e, c in self.terms.items():
            if e[index]:
                f = list(e)
                f[index] -= 1
                out[tuple(f)] = c * e[index]
        return CommPoly(out, self.nvars)

    def substitute_monomial_map(self, image) -> "CommPoly":
        """Apply ``image(exponent) -> exponent`` termwise (a monomial relabelling)."""
        out: dict = {}
        for e, c in self.terms.items():
            f = image(e)
            out[f] = out.get(f, 0) + c
        return CommPoly(out, len(next(iter(out))) if out else self.nvars)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*x^{e}" for e, c in sorted(self.terms.items(), reverse=True))


def _raw(terms: dict, nvars: int) -> CommPoly:
    p = CommPoly.__new__(CommPoly)
    p.terms = terms
    p.nvars = nvars
    return p


def var_index(i: int, j: int, n: int) -> int:
    """Flat position of ``x_ij`` (1-based ``i``, ``j``)."""
    return (j - 1) * n + (i - 1)


def x(i: int, j: int, n: int, m: int) -> CommPoly:
    return CommPoly.variable(var_index(i, j, n), n * m)


@dataclass(frozen=True)
class MonomialOrder:
    """``lex`` (later column first, then higher row) or ``grlex`` for diagnostics."""

    kind: str = "lex"

    def key(self, e: Monomial):
        rev = e[::-1]
        if self.kind == "lex":
            return rev
        if self.kind == "grlex":
            return (sum(e), rev)
        raise ValueError(f"unknown monomial order {self.kind!r}")


LEX = MonomialOrder("lex")


def leading_monomial(p: CommPoly, order: MonomialOrder) -> Monomial:
    return max(p.terms, key=order.key)


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _monic(p: CommPoly, order: MonomialOrder) -> CommPoly:
    lc = p.terms[leading_monomial(p, order)]
    return p * (1 / lc)


@dataclass
class GroebnerBasis:
    polys: list[CommPoly]
    order: MonomialOrder
    partial: bool = False
    complete_through: int | None = None  # degree up to which the basis is certified
    stats: dict = field(default_factory=dict)

    @property
    def nvars(self) -> int:
        return self.polys[0].nvars if self.polys else 0

    def leading_monomials(self) -> list[Monomial]:
        return [leading_monomial(p, self.order) for p in self.polys]

    def certified(self, degree: int) -> bool:
        return not self.partial or (self.complete_through is not None
                                    and degree <= self.complete_through)


def _reduce(p: dict, basis: list[tuple[Monomial, dict]], key) -> dict:
    """Full reduction of ``p`` (a term dict) by monic polys given as (lm, terms)."""
    p = dict(p)
    out: dict = {}
    while p:
        lm = max(p, key=key)
        c = p[lm]
        for g_lm, g in basis:
            if _divides(g_lm, lm):
                shift = tuple(a - b for a, b in zip(lm, g_lm))
                for e, v in g.items():
                    t = tuple(a + b for a, b in zip(e, shift))
                    nv = p.get(t, 0) - c * v
                    if nv:
                        p[t] = nv
                    else:
                        p.pop(t, None)
                break
        else:
            out[lm] = c
            del p[lm]
    return out


def buchberger(generators: Iterable[CommPoly], order: MonomialOrder = LEX,
               deg_cap: int = 10) -> GroebnerBasis:
    """Reduced Groebner basis, with the product and chain criteria.

    S-pairs are taken in order of lcm degree.  Pairs whose lcm degree exceeds
    ``deg_cap`` are left unprocessed and the result is flagged partial; for
    homogeneous input it is still a Groebner basis through degree ``deg_cap``.
    """
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    nvars = gens[0].nvars
    key = order.key
    homogeneous = all(g.is_homogeneous() for g in gens)

    G: list[tuple[Monomial, dict]] = []
    pairs: set[tuple[int, int]] = set()
    n_spairs = n_zero = 0

    def insert(terms: dict):
        lm = max(terms, key=key)
        inv = 1 / terms[lm]
        G.append((lm, {e: c * inv for e, c in terms.items()}))
        k = len(G) - 1
        for i in range(k):
            pairs.add((i, k))

    for g in sorted(gens, key=lambda g: (g.degree(), key(leading_monomial(g, order)))):
        r = _reduce(g.terms, G, key)
        if r:
            insert(r)

    skipped_high = False
    while pairs:
        def pair_key(pr):
            lcm = _lcm(G[pr[0]][0], G[pr[1]][0])
            return (sum(lcm), key(lcm), pr)
        pr = min(pairs, key=pair_key)
        pairs.discard(pr)
        i, j = pr
        lm_i, gi = G[i]
        lm_j, gj = G[j]
        lcm = _lcm(lm_i, lm_j)
        if sum(lcm) > deg_cap:
            skipped_high = True
            continue
        # product criterion
        if all(a == 0 or b == 0 for a, b in zip(lm_i, lm_j)):
            continue
        # chain criterion
        if any(k not in (i, j) and _divides(G[k][0], lcm)
               and (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs
               for k in range(len(G))):
            continue
        n_spairs += 1
        si = tuple(a - b for a, b in zip(lcm, lm_i))
        sj = tuple(a - b for a, b in zip(lcm, lm_j))
        s: dict = {}
        for e, c in gi.items():
            t = tuple(a + b for a, b in zip(e, si))
            s[t] = s.get(t, 0) + c
        for e, c in gj.items():
            t = tuple(a + b for a, b in zip(e, sj))
            v = s.get(t, 0) - c
            if v:
                s[t] = v
            else:
                s.pop(t, None)
        r = _reduce(s, G, key)
        if r:
            insert(r)
        else:
            n_zero += 1

    polys = _interreduce(G, key, nvars)
    polys.sort(key=lambda p: key(leading_monomial(p, order)))
    # without homogeneity a capped run certifies nothing
    complete = deg_cap if skipped_high and homogeneous else None
    stats = {"s_pairs_reduced": n_spairs, "zero_reductions": n_zero,
             "input_generators": len(gens), "homogeneous": homogeneous}
    return GroebnerBasis(polys, order, skipped_high, complete, stats)


def _interreduce(G: list[tuple[Monomial, dict]], key, nvars: int) -> list[CommPoly]:
    # drop elements whose leading monomial is divisible by another's
    keep = []
    for idx, (lm, g) in enumerate(G):
        if any(j != idx and _divides(G[j][0], lm) and (G[j][0] != lm or j < idx)
               for j in range(len(G))):
            continue
        keep.append((lm, g))
    out = []
    for idx, (lm, g) in enumerate(keep):
        others = [h for j, h in enumerate(keep) if j != idx]
        tail = {e: c for e, c in g.items() if e != lm}
        red = _reduce(tail, others, key)
        red[lm] = Fraction(1)
        out.append(CommPoly(red, nvars))
    return out


def reduce_mod(gb: GroebnerBasis, p: CommPoly) -> CommPoly:
    """Normal form of ``p``; zero iff ``p`` lies in the ideal."""
    if not gb.certified(p.degree()):
        raise PartialBasisError(
            f"basis certified through degree {gb.complete_through}, asked about {p.degree()}")
    key = gb.order.key
    basis = [(leading_monomial(g, gb.order), g.terms) for g in gb.polys]
    return CommPoly(_reduce(p.terms, basis, key), p.nvars)


def monomials_of_degree(nvars: int, degree: int) -> Iterable[Monomial]:
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        yield tuple(e)


def standard_monomial_count(gb: GroebnerBasis, degree: int) -> int:
    """Degree-``degree`` monomials outside the initial ideal."""
    if not gb.certified(degree):
        raise PartialBasisError(
            f"basis certified through degree {gb.complete_through}, asked about {degree}")
    lms = gb.leading_monomials()
    return sum(1 for e in monomials_of_degree(gb.nvars, degree)
               if not any(_divides(lm, e) for lm in lms))


def hilbert_series_from_basis(gb: GroebnerBasis, deg_max: int) -> list[int]:
    return [standard_monomial_count(gb, d) for d in range(deg_max + 1)]


# -- the ideal I and the product formula --------------------------------------------

def ideal_generator(m: int, n: int, k: int, i_list, j_list) -> CommPoly:
    """``prod_{s<k} (x_{i_s s} - x_{i_s k}) (x_{j_s s} - x_{j_s k})``."""
    if not 2 <= k <= m:
        raise ValueError(f"need 2 <= k <= m, got k={k}, m={m}")
    if len(i_list) != k - 1 or len(j_list) != k - 1:
        raise ValueError(f"need {k - 1} indices in i_list and j_list")
    if any(not 1 <= i <= n for i in list(i_list) + list(j_list)):
        raise ValueError(f"indices must lie in 1..{n}")
    p = CommPoly.constant(1, n * m)
    for s, (i, j) in enumerate(zip(i_list, j_list), start=1):
        p = p * (x(i, s, n, m) - x(i, k, n, m)) * (x(j, s, n, m) - x(j, k, n, m))
    return p


def ideal_generators(m: int, n: int) -> list[CommPoly]:
    """Generators of ``I``, deduplicated: ``i_s <= j_s`` per factor pair."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    out = []
    for k in range(2, m + 1):
        for choice in itertools.product(pairs, repeat=k - 1):
            out.append(ideal_generator(m, n, k, [c[0] for c in choice], [c[1] for c in choice]))
    return out


def ideal_basis(m: int, n: int, deg_cap: int = 10) -> GroebnerBasis:
    return buchberger(ideal_generators(m, n), LEX, deg_cap)


def hilbert_series_product_formula(m: int, n: int, deg_max: int) -> list[int]:
    """``(1-t)^{-n} prod_{k=2}^m sum_{a<=2k-3} C(a+n-1, n-1) t^a``, truncated."""
    series = [comb(d + n - 1, n - 1) for d in range(deg_max + 1)]
    for k in range(2, m + 1):
        factor = [comb(a + n - 1, n - 1) for a in range(2 * k - 2)]
        series = [sum(factor[a] * series[d - a] for a in range(min(d, len(factor) - 1) + 1))
                  for d in range(deg_max + 1)]
    return series


def numerator_polynomial(series: list[int], n: int) -> list[int]:
    """Coefficients of ``(1-t)^n * series``, truncated like the input."""
    out = list(series)
    for _ in range(n):
        out = [out[d] - (out[d - 1] if d else 0) for d in range(len(out))]
    return out


def polynomial_degree(coeffs: list[int]) -> int:
    return max((d for d, c in enumerate(coeffs) if c), default=-1)


def column_claim_holds(gb: GroebnerBasis, m: int, n: int) -> dict[int, bool]:
    """For each column ``k >= 2``: is every degree ``2k-2`` monomial in column ``k`` initial?"""
    lms = gb.leading_monomials()
    out = {}
    for k in range(2, m + 1):
        ok = True
        for combo in itertools.combinations_with_replacement(range(1, n + 1), 2 * k - 2):
            e = [0] * (n * m)
            for i in combo:
                e[var_index(i, k, n)] += 1
            if not any(_divides(lm, tuple(e)) for lm in lms):
                ok = False
                break
        out[k] = ok
    return out


def initial_ideal_matches_claim(gb: GroebnerBasis, m: int, n: int) -> bool:
    """Are the leading monomials exactly the column-``k`` degree ``2k-2`` monomials?"""
    claimed = set()
    for k in range(2, m + 1):
        for combo in itertools.combinations_with_replacement(range(1, n + 1), 2 * k - 2):
            e = [0] * (n * m)
            for i in combo:
                e[var_index(i, k, n)] += 1
            claimed.add(tuple(e))
    return set(gb.leading_monomials()) == claimed
