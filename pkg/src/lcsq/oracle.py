"""Naive dense brute-force oracle for golden values.

Deliberately shares nothing with the optimized pipeline beyond the
definitions: one dense integer matrix per *total* degree (no multigrading,
no sparsity), words encoded as base-``n`` integers, and exact ranks from
FLINT.  Used to freeze the fixtures that the fast pipeline is tested
against.
"""

from __future__ import annotations

import itertools

import flint

CHUNK = 1500


class _DenseSpan:
    def __init__(self, ncols: int):
        self.ncols = ncols
        self.basis: list[list[int]] = []
        self.pending: list[list[int]] = []

    @property
    def full(self) -> bool:
        return len(self.basis) == self.ncols

    def add(self, row: list[int]) -> None:
        if any(row):
            self.pending.append(row)
            if len(self.pending) >= CHUNK:
                self.flush()

    def flush(self) -> None:
        if not self.pending:
            return
        rows = self.basis + self.pending
        self.pending = []
        R, _den, rank = flint.fmpz_mat(rows).rref()
        flat = [int(v) for v in R.entries()]
        self.basis = [flat[i * self.ncols:(i + 1) * self.ncols] for i in range(rank)]

    def rank(self) -> int:
        self.flush()
        return len(self.basis)


def _word_ints(n: int, d: int) -> list[tuple[int, ...]]:
    return list(itertools.product(range(n), repeat=d))


def _encode(word, n: int) -> int:
    v = 0
    for a in word:
        v = v * n + a
    return v


def lcs_dims(n: int, m_max: int, deg_max: int) -> dict[int, list[int]]:
    """``dim L_m(A_n)[d]`` for ``m = 1..m_max+1`` and ``d = 0..deg_max``."""
    dims = {1: [n ** d for d in range(deg_max + 1)]}
    # basis of L_{m-1} in each total degree, as dense integer rows
    prev = {d: [[1 if i == j else 0 for j in range(n ** d)] for i in range(n ** d)]
            for d in range(deg_max + 1)}
    for m in range(2, m_max + 2):
        cur = {0: []}
        dims[m] = [0]
        for d in range(1, deg_max + 1):
            N = n ** d
            span = _DenseSpan(N)
            for e in range(1, d):
                rest = d - e
                shift_right = n ** rest
                shift_left = n ** e
                for w in range(n ** e):
                    for u in prev[rest]:
                        row = [0] * N
                        for v, c in enumerate(u):
                            if c:
                                row[w * shift_right + v] += c
                                row[v * shift_left + w] -= c
                        span.add(row)
                    if span.full:
                        break
                if span.full:
                    break
            dims[m].append(span.rank())
            cur[d] = span.basis
        prev = cur
    return dims


def b_dims(n: int, m: int, deg_max: int) -> list[int]:
    dims = lcs_dims(n, m, deg_max)
    return [a - b for a, b in zip(dims[m], dims[m + 1])]


def _commutator_and_z_ranks(n: int, d: int) -> tuple[int, int]:
    """Ranks of ``[A,A]`` and of ``[A,A] + A[[A,A],A]A`` in degree ``d``.

    Uses the literal two-sided family ``w1 [[w2, w3], w4] w5``.
    """
    N = n ** d
    comm = _DenseSpan(N)
    for a in range(d + 1):
        for u in _word_ints(n, a):
            for v in _word_ints(n, d - a):
                row = [0] * N
                row[_encode(u + v, n)] += 1
                row[_encode(v + u, n)] -= 1
                comm.add(row)
    base = comm.rank()
    both = _DenseSpan(N)
    for row in comm.basis:
        both.add(list(row))
    for lengths in itertools.product(range(d + 1), repeat=5):
        l1, l2, l3, l4, l5 = lengths
        if sum(lengths) != d or min(l2, l3, l4) == 0:
            continue
        for w1, w2, w3, w4, w5 in itertools.product(*(_word_ints(n, k) for k in lengths)):
            row = [0] * N
            for mid, s in ((w2 + w3 + w4, 1), (w3 + w2 + w4, -1),
                           (w4 + w2 + w3, -1), (w4 + w3 + w2, 1)):
                row[_encode(w1 + mid + w5, n)] += s
            both.add(row)
            if both.full:
                return base, both.rank()
    return base, both.rank()


def z_dims(n: int, deg_max: int) -> list[int]:
    """``dim Z[d]``, the image of ``A[[A,A],A]A`` in ``A/[A,A]``."""
    out = []
    for d in range(deg_max + 1):
        base, both = _commutator_and_z_ranks(n, d)
        out.append(both - base)
    return out


def bbar1_dims(n: int, deg_max: int) -> list[int]:
    """``dim A[d] - rank([A,A] + A[[A,A],A]A)`` in each degree."""
    return [n ** d - _commutator_and_z_ranks(n, d)[1] for d in range(deg_max + 1)]
