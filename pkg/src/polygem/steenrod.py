"""Exact arithmetic in the mod-2 Steenrod algebra.

Elements are F_2 sums of admissible monomials Sq^{i_1}...Sq^{i_r}; a monomial
is the tuple (i_1, ..., i_r) and the empty tuple is the unit.  Coefficients are
implicit: a monomial is present in the support or it is not.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct
from typing import Dict, FrozenSet, Iterable, Tuple

from .errors import InputError

Word = Tuple[int, ...]


def binom_mod2(m: int, n: int) -> int:
    """C(m, n) mod 2 by Lucas' theorem."""
    if n < 0 or n > m:
        return 0
    return int((m - n) & n == 0)


def word_degree(word: Word) -> int:
    return sum(word)


def word_excess(word: Word) -> int:
    """i_1 - (i_2 + ... + i_r); zero for the unit."""
    if not word:
        return 0
    return 2 * word[0] - sum(word)


def is_admissible(word: Word) -> bool:
    return all(word[j] >= 2 * word[j + 1] for j in range(len(word) - 1))


@lru_cache(maxsize=None)
def _adem_pair(a: int, b: int) -> FrozenSet[Word]:
    """Adem relation for Sq^a Sq^b with a < 2b, as a set of admissible pairs."""
    out = set()
    for c in range(a // 2 + 1):
        if binom_mod2(b - c - 1, a - 2 * c):
            out.add((a + b - c,) if c == 0 else (a + b - c, c))
    return frozenset(out)


def adem_reduce(word: Iterable[int]) -> "SteenrodElement":
    """Rewrite a composite Sq^{w_1}...Sq^{w_r} into the admissible basis.

    Rejects nonpositive entries.  Idempotent on admissible words; terminates
    because each rewrite strictly decreases the standard moment order.
    """
    word = tuple(word)
    if any(w <= 0 for w in word):
        raise InputError(f"Sq exponents must be positive, got {word}")
    todo = [word]
    support: set[Word] = set()
    while todo:
        w = todo.pop()
        for j in range(len(w) - 1):
            if w[j] < 2 * w[j + 1]:
                head, tail = w[:j], w[j + 2 :]
                for pair in _adem_pair(w[j], w[j + 1]):
                    todo.append(head + pair + tail)
                break
        else:
            support ^= {w}
    return SteenrodElement(frozenset(support))


@dataclass(frozen=True)
class SteenrodElement:
    """F_2 combination of admissible monomials."""

    support: FrozenSet[Word] = frozenset()

    def __post_init__(self):
        for w in self.support:
            if not is_admissible(w):
                raise InputError(f"non-admissible monomial {w}")

    def __bool__(self) -> bool:
        return bool(self.support)

    def __add__(self, other: "SteenrodElement") -> "SteenrodElement":
        return SteenrodElement(self.support ^ other.support)

    def __mul__(self, other: "SteenrodElement") -> "SteenrodElement":
        return multiply(self, other)

    @property
    def is_homogeneous(self) -> bool:
        return len({word_degree(w) for w in self.support}) <= 1

    @property
    def degree(self) -> int:
        """Degree of a homogeneous nonzero element; errors otherwise."""
        degs = {word_degree(w) for w in self.support}
        if len(degs) != 1:
            raise InputError("degree of a zero or inhomogeneous element")
        return degs.pop()

    def sorted_words(self) -> list[Word]:
        return sorted(self.support, key=lambda w: (word_degree(w), w))


UNIT = SteenrodElement(frozenset({()}))
ZERO = SteenrodElement()


def sq(k: int) -> SteenrodElement:
    """Sq^k as an element; Sq^0 is the unit."""
    if k < 0:
        raise InputError("negative Sq exponent")
    return UNIT if k == 0 else SteenrodElement(frozenset({(k,)}))


def element_from_words(words: Iterable[Iterable[int]]) -> SteenrodElement:
    acc = ZERO
    for w in words:
        acc = acc + adem_reduce(w)
    return acc


def multiply(a: SteenrodElement, b: SteenrodElement) -> SteenrodElement:
    support: set[Word] = set()
    for u in a.support:
        for v in b.support:
            support ^= adem_reduce(u + v).support
    return SteenrodElement(frozenset(support))


@lru_cache(maxsize=None)
def milnor_q(i: int) -> SteenrodElement:
    """Milnor derivation Q_i: Q_0 = Sq^1, Q_{i+1} = [Sq^{2^{i+1}}, Q_i]."""
    if i < 0:
        raise InputError("Milnor index must be nonnegative")
    if i == 0:
        return sq(1)
    s = sq(2**i)
    prev = milnor_q(i - 1)
    return multiply(s, prev) + multiply(prev, s)


# ---------------------------------------------------------------------------
# Action on polynomial algebras F_2[x_1, ..., x_t]


@dataclass(frozen=True)
class PolyElement:
    """F_2 polynomial in t variables; monomials are exponent tuples."""

    nvars: int
    support: FrozenSet[Tuple[int, ...]] = frozenset()

    def __post_init__(self):
        for m in self.support:
            if len(m) != self.nvars or any(e < 0 for e in m):
                raise InputError(f"bad monomial {m} for {self.nvars} variables")

    def __bool__(self) -> bool:
        return bool(self.support)

    def __add__(self, other: "PolyElement") -> "PolyElement":
        self._check(other)
        return PolyElement(self.nvars, self.support ^ other.support)

    def __mul__(self, other: "PolyElement") -> "PolyElement":
        self._check(other)
        acc: set[Tuple[int, ...]] = set()
        for a in self.support:
            for b in other.support:
                acc ^= {tuple(x + y for x, y in zip(a, b))}
        return PolyElement(self.nvars, frozenset(acc))

    def _check(self, other: "PolyElement") -> None:
        if self.nvars != other.nvars:
            raise InputError("variable-count mismatch")

    @property
    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.support}) <= 1

    @property
    def degree(self) -> int:
        degs = {sum(m) for m in self.support}
        if len(degs) != 1:
            raise InputError("degree of a zero or inhomogeneous polynomial")
        return degs.pop()


def poly_vars(t: int) -> list[PolyElement]:
    """The variables x_1, ..., x_t."""
    return [
        PolyElement(t, frozenset({tuple(1 if j == i else 0 for j in range(t))}))
        for i in range(t)
    ]


def poly_product_of_vars(t: int) -> PolyElement:
    """x_1 x_2 ... x_t."""
    return PolyElement(t, frozenset({(1,) * t}))


@lru_cache(maxsize=None)
def _submask_shifts(a: int) -> Tuple[int, ...]:
    """All j with C(a, j) odd, i.e. bitwise submasks of a, ascending."""
    subs = [0]
    bit = 1
    rest = a
    while rest:
        if rest & 1:
            subs += [s | bit for s in subs]
        bit <<= 1
        rest >>= 1
    return tuple(sorted(subs))


def _sq_on_monomial(k: int, mono: Tuple[int, ...]) -> Iterable[Tuple[int, ...]]:
    """Total-square expansion: Sq^k(x^a) = sum over odd multinomial shifts."""
    choices = []
    for a in mono:
        choices.append([j for j in _submask_shifts(a) if j <= k])
    # distribute k among variables, pruning by remaining capacity
    t = len(mono)
    suffix_max = [0] * (t + 1)
    for i in range(t - 1, -1, -1):
        suffix_max[i] = suffix_max[i + 1] + (choices[i][-1] if choices[i] else 0)

    def rec(i: int, remaining: int, acc: list[int]):
        if i == t:
            if remaining == 0:
                yield tuple(x + j for x, j in zip(mono, acc))
            return
        if remaining > suffix_max[i]:
            return
        for j in choices[i]:
            if j > remaining:
                break
            acc.append(j)
            yield from rec(i + 1, remaining - j, acc)
            acc.pop()

    yield from rec(0, k, [])


def sq_on_poly(k: int, p: PolyElement) -> PolyElement:
    """Single Sq^k on a polynomial (Cartan formula, any homogeneity)."""
    if k < 0:
        raise InputError("negative Sq exponent")
    acc: set[Tuple[int, ...]] = set()
    for mono in p.support:
        for out in _sq_on_monomial(k, mono):
            acc ^= {out}
    return PolyElement(p.nvars, frozenset(acc))


def word_on_poly(word: Iterable[int], p: PolyElement) -> PolyElement:
    """Composite Sq^{w_1} o ... o Sq^{w_r} applied directly, no Adem rewriting."""
    for k in reversed(tuple(word)):
        p = sq_on_poly(k, p)
    return p


def act_on_polynomial(a: SteenrodElement, p: PolyElement) -> PolyElement:
    """Action of an element on a homogeneous polynomial."""
    if p and not p.is_homogeneous:
        raise InputError("polynomial action requires a homogeneous input")
    acc = PolyElement(p.nvars)
    for w in a.support:
        acc = acc + word_on_poly(w, p)
    return acc
