"""GF(2) linear algebra on int bitsets.

A vector over F_2 is an int whose bit i is the coefficient of basis element i.
All routines are deterministic.
"""

from __future__ import annotations

from typing import Iterable, List


class Span:
    """A subspace of F_2^n maintained in reduced echelon form.

    Stored rows are keyed by their leading bit; no stored row contains
    another row's pivot bit, so ``reduce`` is a single descending scan.
    """

    def __init__(self, rows: Iterable[int] = ()):
        self.pivot_rows: dict[int, int] = {}
        for r in rows:
            self.add(r)

    @property
    def dim(self) -> int:
        return len(self.pivot_rows)

    def reduce(self, vec: int) -> int:
        """Canonical representative of vec modulo the span."""
        out = 0
        while vec:
            p = vec.bit_length() - 1
            row = self.pivot_rows.get(p)
            if row is None:
                out |= 1 << p
                vec ^= 1 << p
            else:
                vec ^= row
        return out

    def add(self, row: int) -> bool:
        """Insert a vector; returns True if the dimension grew."""
        row = self.reduce(row)
        if row == 0:
            return False
        p = row.bit_length() - 1
        for q, b in self.pivot_rows.items():
            if (b >> p) & 1:
                self.pivot_rows[q] = b ^ row
        self.pivot_rows[p] = row
        return True

    def __contains__(self, vec: int) -> bool:
        return self.reduce(vec) == 0


def rank(rows: Iterable[int]) -> int:
    return Span(rows).dim


def in_span(vec: int, rows: Iterable[int]) -> bool:
    return vec in Span(rows)


def nullspace(rows: List[int], n_cols: int) -> List[int]:
    """Basis of {x : xor of rows[i] over set bits i of x = 0}.

    Null vectors are bitsets over row indices, in deterministic order.
    """
    m = len(rows)
    pivot_rows: dict[int, int] = {}
    null: List[int] = []
    for i, r0 in enumerate(rows):
        r = (r0 << m) | (1 << i)
        while r >> m:
            p = r.bit_length() - 1
            b = pivot_rows.get(p)
            if b is None:
                pivot_rows[p] = r
                r = 0
                break
            r ^= b
        if r:
            null.append(r & ((1 << m) - 1))
    return null


def complement_indices(rows: Iterable[int], n_cols: int) -> List[int]:
    """Standard basis indices extending rowspace(rows) to all of F_2^n."""
    pivots = set(Span(rows).pivot_rows)
    return [c for c in range(n_cols) if c not in pivots]
