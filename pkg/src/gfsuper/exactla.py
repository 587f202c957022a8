"""Exact sparse linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`.  Ranks are computed by fraction-free
elimination on integer rows (each row is scaled to a primitive integer vector
first), choosing pivots with a Markowitz-style cost to keep fill-in low.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Mapping, Tuple

Rational = Fraction

__all__ = ["Rational", "SparseMatrix", "rank", "kernel_dim", "rref_rows"]


class SparseMatrix:
    """Immutable sparse matrix with rational entries; zeros are never stored."""

    __slots__ = ("nrows", "ncols", "_entries", "_rank")

    def __init__(self, nrows: int, ncols: int, entries: Mapping[Tuple[int, int], object] = ()):
        if nrows < 0 or ncols < 0:
            raise ValueError("negative shape")
        self.nrows = nrows
        self.ncols = ncols
        clean: Dict[Tuple[int, int], Fraction] = {}
        items = entries.items() if isinstance(entries, Mapping) else entries
        for (i, j), v in items:
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise IndexError(f"entry ({i}, {j}) outside {nrows}x{ncols}")
            v = Fraction(v)
            if v:
                clean[i, j] = v
        self._entries = clean
        self._rank = None

    @classmethod
    def from_rows(cls, rows: List[Mapping[int, object]], ncols: int) -> "SparseMatrix":
        ent = {}
        for i, row in enumerate(rows):
            for j, v in row.items():
                if v:
                    ent[i, j] = v
        return cls(len(rows), ncols, ent)

    @classmethod
    def from_dense(cls, rows: List[List[object]]) -> "SparseMatrix":
        ncols = len(rows[0]) if rows else 0
        ent = {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r) if v}
        return cls(len(rows), ncols, ent)

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def nnz(self) -> int:
        return len(self._entries)

    def items(self):
        return self._entries.items()

    def __getitem__(self, key: Tuple[int, int]) -> Fraction:
        return self._entries.get(key, Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self):
        return hash((self.shape, frozenset(self._entries.items())))

    def __repr__(self):
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz})"

    def rows(self) -> List[Dict[int, Fraction]]:
        out: List[Dict[int, Fraction]] = [{} for _ in range(self.nrows)]
        for (i, j), v in self._entries.items():
            out[i][j] = v
        return out

    def to_dense(self) -> List[List[Fraction]]:
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self._entries.items():
            out[i][j] = v
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.ncols, self.nrows, {(j, i): v for (i, j), v in self._entries.items()})

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        right = other.rows()
        acc: Dict[Tuple[int, int], Fraction] = {}
        for (i, k), a in self._entries.items():
            for j, b in right[k].items():
                acc[i, j] = acc.get((i, j), 0) + a * b
        return SparseMatrix(self.nrows, other.ncols, acc)

    def is_zero(self) -> bool:
        return not self._entries

    def rank(self) -> int:
        if self._rank is None:
            self._rank = _rank_rows(self.rows() if self.nrows <= self.ncols else self.transpose().rows())
        return self._rank


def _primitive(row: Mapping[int, Fraction]) -> Dict[int, int]:
    """Scale a rational row to a primitive integer row (content 1)."""
    den = 1
    for v in row.values():
        den = lcm(den, Fraction(v).denominator)
    out = {j: int(Fraction(v) * den) for j, v in row.items() if v}
    g = 0
    for v in out.values():
        g = gcd(g, v)
        if g == 1:
            return out
    if g > 1:
        out = {j: v // g for j, v in out.items()}
    return out


def _rank_rows(rows: Iterable[Mapping[int, object]]) -> int:
    work: Dict[int, Dict[int, int]] = {}
    cols: Dict[int, set] = {}
    for idx, r in enumerate(rows):
        p = _primitive(r)
        if p:
            work[idx] = p
            for j in p:
                cols.setdefault(j, set()).add(idx)

    heap = [(len(r), i) for i, r in work.items()]
    heapq.heapify(heap)
    rank = 0
    while heap:
        # Markowitz: cheapest row, then cheapest column in it; prefer unit pivots.
        n, ri = heapq.heappop(heap)
        prow = work.get(ri)
        if prow is None or len(prow) != n:
            continue
        del work[ri]
        rlen = len(prow) - 1
        pc = min(prow, key=lambda j: (rlen * (len(cols[j]) - 1), abs(prow[j]) != 1, j))
        for j in prow:
            cols[j].discard(ri)
        pv = prow[pc]
        targets = sorted(cols.pop(pc))
        for t in targets:
            trow = work[t]
            tv = trow[pc]
            g = gcd(pv, tv)
            a, b = pv // g, tv // g
            new: Dict[int, int] = {}
            for j, v in trow.items():
                new[j] = a * v
            for j, v in prow.items():
                nv = new.get(j, 0) - b * v
                if nv:
                    new[j] = nv
                else:
                    new.pop(j, None)
            for j in trow:
                if j not in new and j != pc:
                    cols[j].discard(t)
            for j in new:
                if j not in trow:
                    cols.setdefault(j, set()).add(t)
            if new:
                c = 0
                for v in new.values():
                    c = gcd(c, v)
                    if c == 1:
                        break
                if c > 1:
                    new = {j: v // c for j, v in new.items()}
                work[t] = new
                heapq.heappush(heap, (len(new), t))
            else:
                del work[t]
        rank += 1
    return rank


def rank(m: SparseMatrix) -> int:
    """Dimension of the row space of ``m`` over Q."""
    return m.rank()


def kernel_dim(m: SparseMatrix) -> int:
    return m.ncols - m.rank()


def rref_rows(vectors: List[Mapping[int, object]]) -> Tuple[List[Dict[int, Fraction]], List[int]]:
    """Reduced row echelon basis of the span of ``vectors``.

    Returns ``(basis, pivots)``; ``basis[k]`` has a 1 in column ``pivots[k]``
    and 0 in every other pivot column, so coordinates of any vector in the
    span are read off at the pivot columns.
    """
    basis: List[Dict[int, Fraction]] = []
    pivots: List[int] = []
    for vec in vectors:
        v = {j: Fraction(x) for j, x in vec.items() if x}
        for b, p in zip(basis, pivots):
            c = v.get(p)
            if c:
                for j, x in b.items():
                    nv = v.get(j, 0) - c * x
                    if nv:
                        v[j] = nv
                    else:
                        v.pop(j, None)
        if not v:
            continue
        p = min(v)
        c = v[p]
        v = {j: x / c for j, x in v.items()}
        for b in basis:
            c2 = b.get(p)
            if c2:
                for j, x in v.items():
                    nv = b.get(j, 0) - c2 * x
                    if nv:
                        b[j] = nv
                    else:
                        b.pop(j, None)
        basis.append(v)
        pivots.append(p)
    order = sorted(range(len(pivots)), key=pivots.__getitem__)
    return [basis[k] for k in order], [pivots[k] for k in order]
