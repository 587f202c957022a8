"""Young diagram combinatorics for super Schur functors.

Partitions are tuples of weakly decreasing positive integers.  Boxes are
addressed ``(row, column)`` starting from 1; row 1 is the longest row.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(int(x) for x in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(x <= 0 for x in parts):
            raise ValueError(f"partition parts must be positive: {parts!r}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts!r}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def height(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """Row length ``lambda_i`` (1-based); 0 beyond the height."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def boxes(self) -> List[Tuple[int, int]]:
        return [(i + 1, j + 1) for i, r in enumerate(self) for j in range(r)]

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    def __str__(self):
        return ",".join(map(str, self))


def parse_partition(text: str) -> Partition:
    """Parse ``"2,1"`` style strings; the empty string is the empty diagram."""
    text = text.strip()
    if not text:
        return Partition()
    try:
        return Partition(int(t) for t in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad partition {text!r}: {exc}") from None


def partitions(p: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of ``p`` in reverse lexicographic order: (p), (p-1, 1), ..."""
    if p < 0:
        return
    if max_part is None:
        max_part = p

    def rec(n, mx):
        if n == 0:
            yield ()
            return
        for k in range(min(n, mx), 0, -1):
            for rest in rec(n - k, k):
                yield (k,) + rest

    for parts in rec(p, max_part):
        yield Partition(parts)


def transpose(lam: Sequence[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for x in lam if x >= j) for j in range(1, lam[0] + 1))


def fits_thick_hook(lam: Sequence[int], m: int, n: int) -> bool:
    """True iff ``lambda_i <= n`` for every row ``i > m``."""
    if m < 0 or n < 0:
        raise ValueError("m, n must be >= 0")
    return all(x <= n for x in tuple(lam)[m:])


def tilde(lam: Sequence[int]) -> Partition:
    """Shift right by one column and add a first column of height ``|lam|``."""
    lam = Partition(lam)
    p = lam.size
    return Partition(lam.part(i) + 1 for i in range(1, p + 1))


def plus(lam: Sequence[int]) -> Partition:
    """Add one box at the bottom of the first column."""
    return Partition(tuple(lam) + (1,))


def prefix_row_sum(lam: Sequence[int], k: int) -> int:
    if k < 0:
        raise ValueError("k must be >= 0")
    return sum(tuple(lam)[:k])


def horizontal_strip_subdiagrams(lam: Sequence[int]) -> List[Tuple[Partition, int]]:
    """All ``beta`` inside ``lam`` with ``lam / beta`` a horizontal strip.

    Equivalently ``lam_{i+1} <= beta_i <= lam_i``.  Returned with the strip
    size, ordered by increasing strip size.
    """
    lam = Partition(lam)
    ranges = [range(lam.part(i + 1), lam.part(i) + 1) for i in range(1, lam.height + 1)]
    out = []
    for beta in product(*ranges):
        b = Partition(beta)
        out.append((b, lam.size - b.size))
    out.sort(key=lambda t: (t[1], tuple(-x for x in t[0])))
    return out


def strip_decompositions(lam: Sequence[int], beta: Sequence[int]) -> List[Partition]:
    """Every common subdiagram ``alpha`` with ``lam / alpha`` a horizontal strip
    and ``beta / alpha`` a vertical strip of the same size.

    Brute force over all diagrams inside ``lam`` and ``beta``.
    """
    lam, beta = Partition(lam), Partition(beta)
    if lam.size != beta.size:
        return []
    h = max(lam.height, beta.height)
    found = []
    for cand in product(*[range(min(lam.part(i), beta.part(i)) + 1) for i in range(1, h + 1)]):
        if any(cand[i] < cand[i + 1] for i in range(len(cand) - 1)):
            continue
        alpha = Partition(cand)
        if _is_decomposition(lam, beta, alpha):
            found.append(alpha)
    return found


def _is_decomposition(lam: Partition, beta: Partition, alpha: Partition) -> bool:
    for i in range(1, max(lam.height, beta.height) + 1):
        a = alpha.part(i)
        if not lam.part(i + 1) <= a <= lam.part(i):
            return False
        if not beta.part(i) - 1 <= a <= beta.part(i):
            return False
    return True


def minimal_decomposition(lam: Sequence[int], beta: Sequence[int]) -> Optional[Partition]:
    """The decomposition ``alpha`` with the smallest strip size, or ``None``.

    The row-wise maximum ``min(lam_i, beta_i)`` is the only candidate; it is
    checked against the strip conditions directly.
    """
    lam, beta = Partition(lam), Partition(beta)
    if lam.size != beta.size:
        return None
    h = max(lam.height, beta.height)
    cand = [min(lam.part(i), beta.part(i)) for i in range(1, h + 1)]
    if any(cand[i] < cand[i + 1] for i in range(len(cand) - 1)):
        return None
    alpha = Partition(cand)
    return alpha if _is_decomposition(lam, beta, alpha) else None


def flippable_boxes(lam: Sequence[int], beta: Sequence[int]) -> Optional[List[Tuple[int, int]]]:
    """Boxes ``(i, j)`` of the minimal ``alpha`` that end their row in ``beta``
    (``beta_i == j``) and end their column in ``lam`` (``lam'_j == i``)."""
    lam, beta = Partition(lam), Partition(beta)
    alpha = minimal_decomposition(lam, beta)
    if alpha is None:
        return None
    lt = transpose(lam)
    return [(i, j) for (i, j) in alpha.boxes() if beta.part(i) == j and lt.part(j) == i]


def flippable_count(lam: Sequence[int], beta: Sequence[int]) -> Optional[int]:
    boxes = flippable_boxes(lam, beta)
    return None if boxes is None else len(boxes)


def super_tableaux(lam: Sequence[int], m: int, n: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """(m, n)-semistandard tableaux of shape ``lam``.

    Alphabet ``0..m-1`` (unprimed) then ``m..m+n-1`` (primed).  Unprimed
    letters weakly increase along rows and strictly down columns; primed
    letters strictly increase along rows and weakly down columns.
    """
    lam = Partition(lam)
    cells = lam.boxes()
    letters = m + n
    fill = {}

    def ok(cell, a):
        i, j = cell
        left = fill.get((i, j - 1))
        if left is not None and (left > a or (left == a and a >= m)):
            return False
        up = fill.get((i - 1, j))
        if up is not None and (up > a or (up == a and a < m)):
            return False
        return True

    def rec(k):
        if k == len(cells):
            yield tuple(tuple(fill[i, j] for j in range(1, lam.part(i) + 1)) for i in range(1, lam.height + 1))
            return
        cell = cells[k]
        for a in range(letters):
            if ok(cell, a):
                fill[cell] = a
                yield from rec(k + 1)
                del fill[cell]

    yield from rec(0)


@lru_cache(maxsize=None)
def _super_schur_dim(lam: Tuple[int, ...], m: int, n: int) -> Tuple[int, int]:
    if not fits_thick_hook(lam, m, n):
        return (0, 0)
    even = odd = 0
    for t in super_tableaux(lam, m, n):
        primed = sum(1 for row in t for a in row if a >= m)
        if primed % 2:
            odd += 1
        else:
            even += 1
    return (even, odd)


def super_schur_dim(lam: Sequence[int], m: int, n: int) -> Tuple[int, int]:
    """(even, odd) dimension of the Schur functor of shape ``lam`` applied to
    a space of superdimension (m, n)."""
    if m < 0 or n < 0:
        raise ValueError("m, n must be >= 0")
    return _super_schur_dim(tuple(Partition(lam)), m, n)


def cauchy_exterior(p: int) -> List[Tuple[Partition, Partition]]:
    """Index pairs ``(lam, lam')`` of the Cauchy decomposition of the p-th
    exterior power of a tensor product."""
    if p < 0:
        raise ValueError("p must be >= 0")
    return [(lam, transpose(lam)) for lam in partitions(p)]


def invariant_diagram_count(m: int, n: int, p: int) -> int:
    """Number of ``lam |- p`` whose tilde diagram fits the (m, n) thick hook."""
    if min(m, n, p) < 0:
        raise ValueError("m, n, p must be >= 0")
    return sum(1 for lam in partitions(p) if fits_thick_hook(tilde(lam), m, n))
