"""Free associative algebra on ``n`` generators over Q.

Words are tuples of generator indices in ``1..n``; the empty tuple is the
unit.  Graded pieces are indexed by multidegree (a length-``n`` letter
histogram) and their words are enumerated in lexicographic order, which fixes
the coordinates used by the linear algebra.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .exact_linalg import SparseVector

Word = tuple[int, ...]
MultiDegree = tuple[int, ...]


def multidegree(word: Word, n: int) -> MultiDegree:
    counts = [0] * n
    for letter in word:
        counts[letter - 1] += 1
    return tuple(counts)


def multidegrees_of_total(n: int, total: int) -> list[MultiDegree]:
    """All length-``n`` compositions of ``total``, in reverse-lex order."""
    if n == 1:
        return [(total,)]
    out = []
    for first in range(total, -1, -1):
        for rest in multidegrees_of_total(n - 1, total - first):
            out.append((first,) + rest)
    return out


def multidegrees_up_to(n: int, deg_max: int) -> list[MultiDegree]:
    return [d for total in range(deg_max + 1) for d in multidegrees_of_total(n, total)]


def sub_multidegrees(delta: MultiDegree) -> Iterator[MultiDegree]:
    """Every ``eps`` with ``0 <= eps <= delta`` componentwise."""
    return itertools.product(*(range(k + 1) for k in delta))


@lru_cache(maxsize=None)
def words_of_multidegree(delta: MultiDegree) -> tuple[Word, ...]:
    """Words with letter histogram ``delta``, lexicographically sorted."""
    total = sum(delta)
    if total == 0:
        return ((),)
    out = []
    counts = list(delta)

    def rec(prefix):
        if len(prefix) == total:
            out.append(tuple(prefix))
            return
        for i, c in enumerate(counts):
            if c:
                counts[i] -= 1
                prefix.append(i + 1)
                rec(prefix)
                prefix.pop()
                counts[i] += 1

    rec([])
    return tuple(out)


@lru_cache(maxsize=None)
def word_index(delta: MultiDegree) -> dict[Word, int]:
    return {w: i for i, w in enumerate(words_of_multidegree(delta))}


def words_of_degree(n: int, degree: int) -> list[Word]:
    """All ``n**degree`` words of the given length, lexicographically sorted."""
    return list(itertools.product(range(1, n + 1), repeat=degree))


class GeneratorMismatch(ValueError):
    pass


class FreeAlgebraElement:
    """Sparse rational combination of words in ``n`` noncommuting generators."""

    __slots__ = ("terms", "n")

    def __init__(self, terms: Mapping[Word, object], n: int):
        clean = {}
        for word, coef in terms.items():
            word = tuple(word)
            if any(not 1 <= a <= n for a in word):
                raise ValueError(f"word {word} uses a letter outside 1..{n}")
            if coef:
                clean[word] = clean.get(word, 0) + Fraction(coef)
        self.terms = {w: c for w, c in clean.items() if c}
        self.n = n

    @classmethod
    def generator(cls, i: int, n: int) -> "FreeAlgebraElement":
        return cls({(i,): 1}, n)

    @classmethod
    def word(cls, word: Iterable[int], n: int, coef=1) -> "FreeAlgebraElement":
        return cls({tuple(word): coef}, n)

    @classmethod
    def one(cls, n: int) -> "FreeAlgebraElement":
        return cls({(): 1}, n)

    @classmethod
    def zero(cls, n: int) -> "FreeAlgebraElement":
        return cls({}, n)

    def _check(self, other):
        if not isinstance(other, FreeAlgebraElement):
            raise TypeError(f"expected FreeAlgebraElement, got {type(other).__name__}")
        if other.n != self.n:
            raise GeneratorMismatch(f"{self.n} vs {other.n} generators")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return FreeAlgebraElement(out, self.n)

    def __neg__(self):
        return FreeAlgebraElement({w: -c for w, c in self.terms.items()}, self.n)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "FreeAlgebraElement":
        c = Fraction(c)
        return FreeAlgebraElement({w: c * v for w, v in self.terms.items()}, self.n)

    def __mul__(self, other):
        if not isinstance(other, FreeAlgebraElement):
            return self.scale(other)
        return multiply(self, other)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, FreeAlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {len(w) for w in self.terms}

    def is_homogeneous(self) -> bool:
        return len({multidegree(w, self.n) for w in self.terms}) <= 1

    def component(self, delta: MultiDegree) -> "FreeAlgebraElement":
        return FreeAlgebraElement(
            {w: c for w, c in self.terms.items() if multidegree(w, self.n) == tuple(delta)}, self.n)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms):
            name = "".join(f"x{a}" for a in w) or "1"
            parts.append(f"{self.terms[w]}*{name}")
        return " + ".join(parts)


def multiply(a: FreeAlgebraElement, b: FreeAlgebraElement) -> FreeAlgebraElement:
    a._check(b)
    out: dict[Word, Fraction] = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            w = u + v
            out[w] = out.get(w, 0) + cu * cv
    return FreeAlgebraElement(out, a.n)


def bracket(a: FreeAlgebraElement, b: FreeAlgebraElement) -> FreeAlgebraElement:
    """Commutator ``ab - ba``."""
    a._check(b)
    out: dict[Word, Fraction] = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            c = cu * cv
            uv, vu = u + v, v + u
            out[uv] = out.get(uv, 0) + c
            out[vu] = out.get(vu, 0) - c
    return FreeAlgebraElement(out, a.n)


def left_normed(elements: list[FreeAlgebraElement]) -> FreeAlgebraElement:
    """``[[...[[e1, e2], e3], ...], ek]``; a single element is returned as is."""
    acc = elements[0]
    for e in elements[1:]:
        acc = bracket(acc, e)
    return acc


def coordinates(a: FreeAlgebraElement, degree_filter: MultiDegree) -> SparseVector:
    """Coordinates of the ``degree_filter`` component in the lex word basis."""
    delta = tuple(degree_filter)
    if len(delta) != a.n:
        raise GeneratorMismatch(f"multidegree of length {len(delta)} for {a.n} generators")
    index = word_index(delta)
    entries = {index[w]: c for w, c in a.terms.items() if w in index}
    return SparseVector(entries, len(index))


def from_coordinates(v: SparseVector, delta: MultiDegree) -> FreeAlgebraElement:
    words = words_of_multidegree(tuple(delta))
    return FreeAlgebraElement({words[i]: c for i, c in v.entries.items()}, len(delta))
