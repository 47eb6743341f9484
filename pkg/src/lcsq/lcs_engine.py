"""Lower central series of the free algebra, one multigraded block at a time.

``L_1 = A`` and ``L_m = [A, L_{m-1}]``.  Since brackets are bilinear,
``L_m[delta]`` is spanned by ``[w, u]`` with ``w`` a nonempty word and ``u``
running over a basis of ``L_{m-1}`` in the complementary multidegree; that
is exactly the generating set used here.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction

from .exact_linalg import GradedSubspace, RowReducer, _coerce
from .free_algebra import (FreeAlgebraElement, MultiDegree, Word, bracket, left_normed,
                           multidegrees_of_total, multidegrees_up_to, sub_multidegrees,
                           word_index, words_of_multidegree)

DEFAULT_RESOURCE_CAP = 20000


class ResourceLimitError(RuntimeError):
    """A graded piece is larger than the configured cap."""


def resource_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get("LCSQ_RESOURCE_CAP")
    return int(env) if env else DEFAULT_RESOURCE_CAP


def _check_cap(n: int, deg_max: int, cap: int | None) -> None:
    limit = resource_cap(cap)
    if n ** deg_max > limit:
        raise ResourceLimitError(
            f"degree-{deg_max} piece of A_{n} has dimension {n ** deg_max} > cap {limit}")


@dataclass
class LcsTable:
    n: int
    m_max: int
    deg_max: int
    spaces: dict[tuple[int, MultiDegree], GradedSubspace]
    modulus: int | None = None

    def dim(self, m: int, delta: MultiDegree) -> int:
        if sum(delta) > self.deg_max:
            raise ValueError(f"multidegree {delta} beyond deg_max {self.deg_max}")
        if not 1 <= m <= self.m_max + 1:
            raise ValueError(f"m={m} outside 1..{self.m_max + 1}")
        return self.spaces[(m, tuple(delta))].rank

    def total_dims(self, m: int) -> list[int]:
        """``dim L_m[l]`` for ``l = 0..deg_max``."""
        return [sum(self.dim(m, d) for d in multidegrees_of_total(self.n, l))
                for l in range(self.deg_max + 1)]


@dataclass
class BQuotientCharacter:
    """Graded dimensions of ``B_m = L_m / L_{m+1}`` (or of the reduced ``B_1``)."""

    m: int
    n: int
    deg_max: int
    coefficients: dict[MultiDegree, int] = field(default_factory=dict)

    def total_series(self) -> list[int]:
        out = [0] * (self.deg_max + 1)
        for delta, c in self.coefficients.items():
            out[sum(delta)] += c
        return out

    def nonzero(self) -> dict[MultiDegree, int]:
        return {d: c for d, c in self.coefficients.items() if c}


def _bracket_row(w: Word, u_row: dict, u_words: tuple, target: dict, one) -> dict:
    vec: dict = {}
    for idx, c in u_row.items():
        v = u_words[idx]
        a = target[w + v]
        b = target[v + w]
        if a == b:
            continue
        vec[a] = vec.get(a, 0) + c
        vec[b] = vec.get(b, 0) - c
    return {k: v for k, v in vec.items() if v}


def _bracket_row_mod(w, u_row, u_words, target, p):
    vec: dict = {}
    for idx, c in u_row.items():
        v = u_words[idx]
        a = target[w + v]
        b = target[v + w]
        if a == b:
            continue
        vec[a] = (vec.get(a, 0) + c) % p
        vec[b] = (vec.get(b, 0) - c) % p
    return {k: v for k, v in vec.items() if v}


def _next_block(prev: dict[MultiDegree, GradedSubspace], delta: MultiDegree,
                modulus: int | None) -> GradedSubspace:
    target = word_index(delta)
    red = RowReducer(len(target), modulus)
    if sum(delta) == 0:
        return red.freeze()
    # smallest left factors first: single letters already span most of the block
    eps_list = sorted((e for e in sub_multidegrees(delta) if any(e)), key=sum)
    for eps in eps_list:
        rest = tuple(d - e for d, e in zip(delta, eps))
        if not any(rest):
            continue
        u_space = prev.get(rest)
        if u_space is None or not u_space.rank:
            continue
        u_words = words_of_multidegree(rest)
        for w in words_of_multidegree(eps):
            for row in u_space.rows:
                if modulus is None:
                    vec = _bracket_row(w, row, u_words, target, None)
                else:
                    vec = _bracket_row_mod(w, row, u_words, target, modulus)
                if vec:
                    red.add(vec)
                if red.is_full():
                    return red.freeze()
    return red.freeze()


def build_lcs_table(n: int, m_max: int, deg_max: int, modulus: int | None = None,
                    cap: int | None = None) -> LcsTable:
    """Bases of ``L_m(A_n)[delta]`` for ``m <= m_max + 1`` and ``|delta| <= deg_max``."""
    if n < 1 or m_max < 1 or deg_max < 1:
        raise ValueError("need n >= 1, m_max >= 1, deg_max >= 1")
    _check_cap(n, deg_max, cap)
    degrees = multidegrees_up_to(n, deg_max)
    spaces: dict[tuple[int, MultiDegree], GradedSubspace] = {}
    level = {d: GradedSubspace.full(len(words_of_multidegree(d)), modulus) for d in degrees}
    for d, sp in level.items():
        spaces[(1, d)] = sp
    for m in range(2, m_max + 2):
        # blocks at fixed m are independent; the m-recursion is the barrier
        level = {d: _next_block(level, d, modulus) for d in degrees}
        for d, sp in level.items():
            spaces[(m, d)] = sp
    return LcsTable(n, m_max, deg_max, spaces, modulus)


def b_character(table: LcsTable, m: int) -> BQuotientCharacter:
    if not 1 <= m <= table.m_max:
        raise ValueError(f"m={m} outside 1..{table.m_max}")
    coeffs = {}
    for d in multidegrees_up_to(table.n, table.deg_max):
        coeffs[d] = table.spaces[(m, d)].rank - table.spaces[(m + 1, d)].rank
    return BQuotientCharacter(m, table.n, table.deg_max, coeffs)


# -- cyclic words, Z and the reduced B_1 -------------------------------------------

def canonical_rotation(word: Word) -> Word:
    if not word:
        return word
    return min(word[i:] + word[:i] for i in range(len(word)))


def necklaces_of_multidegree(delta: MultiDegree) -> tuple[list[Word], dict[Word, int]]:
    """Cyclic-word classes of multidegree ``delta`` and a word -> class index map."""
    reps = sorted({canonical_rotation(w) for w in words_of_multidegree(delta)})
    rep_index = {r: i for i, r in enumerate(reps)}
    return reps, {w: rep_index[canonical_rotation(w)] for w in words_of_multidegree(delta)}


def _double_bracket(a: Word, b: Word, c: Word) -> dict[Word, int]:
    # [[a,b],c] = abc - bac - cab + cba
    out: dict[Word, int] = {}
    for w, s in ((a + b + c, 1), (b + a + c, -1), (c + a + b, -1), (c + b + a, 1)):
        out[w] = out.get(w, 0) + s
    return out


def _z_block(delta: MultiDegree, modulus: int | None) -> GradedSubspace:
    reps, cls = necklaces_of_multidegree(delta)
    red = RowReducer(len(reps), modulus)
    if sum(delta) < 3:
        return red.freeze()
    one = 1 if modulus is not None else _coerce(1, None)
    # w1 X w5 is congruent to (w5 w1) X modulo [A, A], so a single prefix word suffices
    for u_eps in sub_multidegrees(delta):
        rest = tuple(d - e for d, e in zip(delta, u_eps))
        if sum(rest) < 3:
            continue
        for a_eps in sub_multidegrees(rest):
            if not any(a_eps):
                continue
            bc = tuple(r - e for r, e in zip(rest, a_eps))
            for b_eps in sub_multidegrees(bc):
                c_eps = tuple(x - y for x, y in zip(bc, b_eps))
                if not any(b_eps) or not any(c_eps):
                    continue
                for u in words_of_multidegree(u_eps):
                    for a in words_of_multidegree(a_eps):
                        for b in words_of_multidegree(b_eps):
                            for c in words_of_multidegree(c_eps):
                                vec: dict = {}
                                for w, s in _double_bracket(a, b, c).items():
                                    k = cls[u + w]
                                    vec[k] = vec.get(k, 0) + s
                                vec = {k: v * one for k, v in vec.items() if v}
                                if modulus is not None:
                                    vec = {k: v % modulus for k, v in vec.items()}
                                if vec:
                                    red.add(vec)
                                    if red.is_full():
                                        return red.freeze()
    return red.freeze()


def z_subspace(n: int, deg_max: int, modulus: int | None = None,
               cap: int | None = None) -> dict[MultiDegree, GradedSubspace]:
    """Image of ``A[[A,A],A]A`` in ``A/[A,A]``, in cyclic-word coordinates."""
    if n < 1:
        raise ValueError("need n >= 1")
    _check_cap(n, deg_max, cap)
    return {d: _z_block(d, modulus) for d in multidegrees_up_to(n, deg_max)}


def bbar1_character(n: int, deg_max: int, modulus: int | None = None,
                    cap: int | None = None) -> BQuotientCharacter:
    z = z_subspace(n, deg_max, modulus, cap)
    coeffs = {d: sp.ambient_dim - sp.rank for d, sp in z.items()}
    return BQuotientCharacter(1, n, deg_max, coeffs)


# -- bracket rearrangement ---------------------------------------------------------

@dataclass
class RearrangementCertificate:
    """``[[b_1,b_2],...,b_m] = sum c * [[b_k, b_s1], ..., b_s(m-1)]``."""

    m: int
    k: int
    terms: list[tuple[tuple[int, ...], Fraction]]

    def verify(self) -> bool:
        return certificate_residual(self).is_zero()


def _rearrange(leaves: tuple[tuple[int, ...], ...], t: int) -> dict[tuple[int, ...], int]:
    """Rewrite the left-normed bracket of ``leaves`` so it starts with leaf ``t``.

    Each leaf is a left-normed bracket of atoms given by its index tuple; only
    the target leaf is ever composite.  Returns flattened atom sequences.
    """
    if t == 0:
        return {sum(leaves, ()): 1}
    if t == 1:
        return {sum((leaves[1], leaves[0]) + leaves[2:], ()): -1}
    out: dict[tuple[int, ...], int] = {}
    head, prev, tgt, tail = leaves[:t - 1], leaves[t - 1], leaves[t], leaves[t + 1:]
    # Jacobi: [[P, x], y] = [[P, y], x] + [P, [x, y]]
    for seq, c in _rearrange(head + (tgt, prev) + tail, t - 1).items():
        out[seq] = out.get(seq, 0) + c
    # [x, y] = -[y, x], with [y, x] the left-normed bracket (y..., x)
    for seq, c in _rearrange(head + (tgt + prev,) + tail, t - 1).items():
        out[seq] = out.get(seq, 0) - c
    return {s: c for s, c in out.items() if c}


def rearrangement(m: int, k: int) -> RearrangementCertificate:
    if m < 2 or not 1 <= k <= m:
        raise ValueError(f"need m >= 2 and 1 <= k <= m, got m={m}, k={k}")
    leaves = tuple((i,) for i in range(1, m + 1))
    terms = sorted((seq[1:], Fraction(c)) for seq, c in _rearrange(leaves, k - 1).items())
    return RearrangementCertificate(m, k, terms)


def certificate_residual(cert: RearrangementCertificate) -> FreeAlgebraElement:
    """Expand both sides over ``A_m`` with ``b_i = x_i``; zero iff the certificate holds."""
    m = cert.m
    gens = [FreeAlgebraElement.generator(i, m) for i in range(1, m + 1)]
    lhs = left_normed(gens)
    rhs = FreeAlgebraElement.zero(m)
    for perm, c in cert.terms:
        rhs = rhs + left_normed([gens[cert.k - 1]] + [gens[i - 1] for i in perm]).scale(c)
    return lhs - rhs
