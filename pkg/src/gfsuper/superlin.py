"""Super vector spaces: parity-tagged bases, Koszul signs, super powers.

Conventions: a basis is an ordered list of labels with parities 0 (even) and
1 (odd).  In the super exterior power even vectors anticommute and odd vectors
commute, so a monomial is a strictly increasing tuple of even positions
followed by a weakly increasing tuple of odd positions.  The super symmetric
power is the mirror image.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from typing import Dict, Hashable, List, Sequence, Tuple

from .exactla import SparseMatrix

EVEN = 0
ODD = 1

SignedVector = Dict[Hashable, Fraction]


def parity(value: int) -> int:
    if value not in (0, 1):
        raise ValueError(f"parity must be 0 or 1, got {value!r}")
    return value


@dataclass(frozen=True)
class SuperBasis:
    labels: Tuple[Hashable, ...]
    parities: Tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.parities):
            raise ValueError("labels and parities differ in length")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("basis labels must be distinct")
        for p in self.parities:
            parity(p)

    @classmethod
    def standard(cls, m: int, n: int) -> "SuperBasis":
        """Basis x1..xm (even), y1..yn (odd) of a space of superdimension (m, n)."""
        labels = tuple(f"x{i + 1}" for i in range(m)) + tuple(f"y{j + 1}" for j in range(n))
        return cls(labels, (EVEN,) * m + (ODD,) * n)

    def __len__(self):
        return len(self.labels)

    @property
    def sdim(self) -> Tuple[int, int]:
        odd = sum(self.parities)
        return (len(self.parities) - odd, odd)


def _check_permutation(perm: Sequence[int]) -> None:
    if sorted(perm) != list(range(len(perm))):
        raise ValueError(f"not a permutation of 0..{len(perm) - 1}: {list(perm)!r}")


def koszul_sign(permutation: Sequence[int], parities: Sequence[int]) -> int:
    """Sign picked up when the items ``permutation[k]`` (k = 0, 1, ...) are
    brought into increasing order by adjacent swaps, each swap of items
    ``a``, ``b`` contributing ``(-1)**(parities[a] * parities[b])``.

    ``permutation`` lists which original item sits in each slot.
    """
    _check_permutation(permutation)
    if len(parities) != len(permutation):
        raise ValueError("parities and permutation differ in length")
    seq = list(permutation)
    sign = 1
    # bubble sort, one Koszul factor per adjacent swap
    for end in range(len(seq) - 1, 0, -1):
        for k in range(end):
            a, b = seq[k], seq[k + 1]
            if a > b:
                seq[k], seq[k + 1] = b, a
                if parities[a] and parities[b]:
                    sign = -sign
    return sign


def permute_tensor(word: Sequence[int], parities: Sequence[int], perm: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """Apply ``perm`` to a pure tensor of basis vectors.

    ``perm`` sends the factor in slot ``k`` to slot ``perm[k]``.  Returns
    ``(sign, new_word)``.
    """
    k = len(word)
    new = [0] * k
    src = [0] * k  # src[slot] = original slot now sitting there
    for i in range(k):
        new[perm[i]] = word[i]
        src[perm[i]] = i
    sign = koszul_sign(src, [parities[word[i]] for i in range(k)])
    return sign, tuple(new)


def tensor_power_basis(dim: int, k: int) -> List[Tuple[int, ...]]:
    return list(product(range(dim), repeat=k))


def super_tensor_power_action(space: SuperBasis, k: int, permutation: Sequence[int]) -> SparseMatrix:
    """Matrix of ``permutation`` acting on V^{(x)k} with Koszul signs.

    Basis of the tensor power is :func:`tensor_power_basis` order.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    _check_permutation(permutation)
    if len(permutation) != k:
        raise ValueError("permutation length differs from k")
    words = tensor_power_basis(len(space), k)
    index = {w: i for i, w in enumerate(words)}
    ent = {}
    for col, w in enumerate(words):
        s, nw = permute_tensor(w, space.parities, permutation)
        ent[index[nw], col] = s
    return SparseMatrix(len(words), len(words), ent)


def super_exterior_basis(space: SuperBasis, p: int) -> List[Tuple[int, ...]]:
    """Monomials of the super exterior power, as tuples of basis positions.

    Even factors come first (strictly increasing), then odd ones (weakly
    increasing).
    """
    return _super_power_basis(space.parities, p, strict_parity=EVEN)


def super_symmetric_basis(space: SuperBasis, p: int) -> List[Tuple[int, ...]]:
    """Monomials of the super symmetric power: even factors repeat, odd don't."""
    return _super_power_basis(space.parities, p, strict_parity=ODD)


def _super_power_basis(parities: Sequence[int], p: int, strict_parity: int) -> List[Tuple[int, ...]]:
    if p < 0:
        raise ValueError("p must be >= 0")
    evens = [i for i, q in enumerate(parities) if q == EVEN]
    odds = [i for i, q in enumerate(parities) if q == ODD]
    strict, loose = (evens, odds) if strict_parity == EVEN else (odds, evens)
    out = []
    for j in range(min(p, len(strict)) + 1):
        for a in combinations(strict, j):
            for b in combinations_with_replacement(loose, p - j):
                mono = a + b if strict_parity == EVEN else b + a
                out.append(mono)
    return out


def normal_order(factors: Sequence[int], parities: Sequence[int], exterior: bool) -> Tuple[int, Tuple[int, ...]]:
    """Bring a product of basis vectors to the canonical monomial order.

    Canonical order is even positions first, then odd, each increasing.  In
    the exterior algebra a swap of ``a``, ``b`` costs ``-(-1)**(|a||b|)``, in
    the symmetric algebra ``(-1)**(|a||b|)``.  Returns ``(0, ())`` when the
    product vanishes.
    """
    seq = list(factors)
    key = [(parities[f], f) for f in seq]
    sign = 1
    n = len(seq)
    for end in range(n - 1, 0, -1):
        for k in range(end):
            if key[k] > key[k + 1]:
                a, b = seq[k], seq[k + 1]
                both_odd = parities[a] & parities[b]
                flip = (not both_odd) if exterior else both_odd
                if flip:
                    sign = -sign
                seq[k], seq[k + 1] = b, a
                key[k], key[k + 1] = key[k + 1], key[k]
    vanishing = EVEN if exterior else ODD
    for k in range(n - 1):
        if seq[k] == seq[k + 1] and parities[seq[k]] == vanishing:
            return 0, ()
    return sign, tuple(seq)
