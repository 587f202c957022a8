"""Commutative DGA models of the comparison spaces and their Betti numbers.

``X_{2d}`` (the universal GL(m)-bundle restricted to the 2d-skeleton of
BGL(m)) is modelled by ``L[e_1, e_3, .., e_{2m-1}] (x) k[c_1, .., c_m]`` with
``d e_{2i-1} = c_i`` and every monomial in the c's of degree > 2d set to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .cohomology import BettiTable
from .exactla import SparseMatrix

Monomial = Tuple[int, ...]
Poly = Dict[Monomial, Fraction]


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int

    @property
    def parity(self) -> int:
        return self.degree % 2


class CDGAModel:
    """Free graded-commutative algebra on ``generators`` modulo monomials whose
    even-generator degree exceeds ``truncation``, with differential given on
    generators.  ``d^2 = 0`` is checked on every basis monomial."""

    def __init__(self, generators: Sequence[Tuple[str, int]], differential: Optional[Dict[str, Poly]] = None,
                 truncation: Optional[int] = None):
        self.generators = tuple(Generator(n, d) for n, d in generators)
        if any(g.degree <= 0 for g in self.generators):
            raise ValueError("generator degrees must be positive")
        self.names = [g.name for g in self.generators]
        if len(set(self.names)) != len(self.names):
            raise ValueError("generator names must be distinct")
        self.truncation = truncation
        self.d: Dict[int, Poly] = {}
        for name, poly in (differential or {}).items():
            i = self.names.index(name)
            clean = {tuple(m): Fraction(c) for m, c in poly.items() if c}
            for mono in clean:
                if self.degree(mono) != self.generators[i].degree + 1:
                    raise ValueError(f"d({name}) must have degree {self.generators[i].degree + 1}")
            self.d[i] = clean
        self._basis: Dict[int, List[Monomial]] = {}
        self._check_d2()

    def degree(self, mono: Monomial) -> int:
        return sum(e * g.degree for e, g in zip(mono, self.generators))

    def even_degree(self, mono: Monomial) -> int:
        return sum(e * g.degree for e, g in zip(mono, self.generators) if g.parity == 0)

    def top_degree(self) -> int:
        odd = sum(g.degree for g in self.generators if g.parity)
        if self.truncation is None:
            if any(g.parity == 0 for g in self.generators):
                raise ValueError("untruncated polynomial generators give an infinite algebra")
            return odd
        return odd + self.truncation

    def alive(self, mono: Monomial) -> bool:
        return self.truncation is None or self.even_degree(mono) <= self.truncation

    def basis(self, k: int) -> List[Monomial]:
        if k not in self._basis:
            gens = self.generators
            out: List[Monomial] = []
            cur = [0] * len(gens)

            def rec(i, rem):
                if i == len(gens):
                    if rem == 0:
                        mono = tuple(cur)
                        if self.alive(mono):
                            out.append(mono)
                    return
                deg = gens[i].degree
                top = 1 if gens[i].parity else rem // deg
                for e in range(min(top, rem // deg) + 1):
                    cur[i] = e
                    rec(i + 1, rem - e * deg)
                cur[i] = 0

            rec(0, k)
            self._basis[k] = out
        return self._basis[k]

    def multiply(self, a: Monomial, b: Monomial) -> Tuple[int, Optional[Monomial]]:
        sign = 1
        odd = [g.parity for g in self.generators]
        for j, eb in enumerate(b):
            if eb and odd[j]:
                if a[j]:
                    return 0, None
                if sum(a[i] for i in range(j + 1, len(a)) if odd[i]) % 2:
                    sign = -sign
        prod_ = tuple(x + y for x, y in zip(a, b))
        if not self.alive(prod_):
            return 0, None
        return sign, prod_

    def mul_poly(self, p: Poly, q: Poly) -> Poly:
        out: Poly = {}
        for a, x in p.items():
            for b, y in q.items():
                s, m = self.multiply(a, b)
                if s:
                    out[m] = out.get(m, 0) + s * x * y
        return {m: c for m, c in out.items() if c}

    def differential(self, mono: Monomial) -> Poly:
        """Leibniz rule, generators in canonical order."""
        out: Poly = {}
        n = len(mono)
        odd_before = 0
        for i in range(n):
            e = mono[i]
            if not e or i not in self.d:
                if e and self.generators[i].parity:
                    odd_before += 1
                continue
            prefix = tuple(mono[j] if j < i else 0 for j in range(n))
            own = tuple(e - 1 if j == i else 0 for j in range(n))
            suffix = tuple(mono[j] if j > i else 0 for j in range(n))
            coeff = e if self.generators[i].parity == 0 else 1
            sign = -1 if odd_before % 2 else 1
            term = self.mul_poly({prefix: Fraction(sign * coeff)}, {own: Fraction(1)})
            term = self.mul_poly(term, self.d[i])
            term = self.mul_poly(term, {suffix: Fraction(1)})
            for m, c in term.items():
                out[m] = out.get(m, 0) + c
            if self.generators[i].parity:
                odd_before += 1
        return {m: c for m, c in out.items() if c}

    def matrix(self, k: int) -> SparseMatrix:
        src, dst = self.basis(k), self.basis(k + 1)
        index = {m: i for i, m in enumerate(dst)}
        ent = {}
        for j, mono in enumerate(src):
            for m, c in self.differential(mono).items():
                ent[index[m], j] = c
        return SparseMatrix(len(dst), len(src), ent)

    def _check_d2(self) -> None:
        try:
            top = self.top_degree()
        except ValueError:
            return
        for k in range(top):
            if not (self.matrix(k + 1) @ self.matrix(k)).is_zero():
                raise ValueError(f"d^2 != 0 in degree {k}")


def skeleton_bundle_model(m: int, top: int) -> CDGAModel:
    """Model of the GL(m)-bundle over the ``top``-skeleton of BGL(m)."""
    if m < 1 or top < 0:
        raise ValueError("need m >= 1 and top >= 0")
    gens = [(f"e{2 * i - 1}", 2 * i - 1) for i in range(1, m + 1)] + [(f"c{i}", 2 * i) for i in range(1, m + 1)]
    d = {}
    for i in range(1, m + 1):
        mono = [0] * (2 * m)
        mono[m + i - 1] = 1
        d[f"e{2 * i - 1}"] = {tuple(mono): 1}
    return CDGAModel(gens, d, truncation=top)


def exterior_model(degrees: Sequence[int], names: Optional[Sequence[str]] = None) -> CDGAModel:
    """Free exterior algebra on odd-degree generators, zero differential."""
    if any(d % 2 == 0 for d in degrees):
        raise ValueError("exterior generators must have odd degree")
    names = names or [f"g{i}_{d}" for i, d in enumerate(degrees)]
    return CDGAModel(list(zip(names, degrees)), {}, truncation=0)


def general_linear_model(m: int) -> CDGAModel:
    """GL(m, C): exterior on generators of degree 1, 3, .., 2m-1."""
    return exterior_model([2 * i - 1 for i in range(1, m + 1)], [f"e{2 * i - 1}" for i in range(1, m + 1)])


def cdga_cohomology(model: CDGAModel, P: Optional[int] = None) -> BettiTable:
    """Betti numbers in degrees ``0..P`` (default: up to the top degree)."""
    if P is None:
        P = model.top_degree()
    if P < 0:
        raise ValueError("P must be >= 0")
    dims = []
    prev_rank = 0
    for k in range(P + 1):
        mat = model.matrix(k)
        r = mat.rank()
        dims.append(len(model.basis(k)) - r - prev_rank)
        prev_rank = r
    return BettiTable(dims)


def trim(b: Sequence[int]) -> List[int]:
    out = list(b)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def suspend(b: Optional[Sequence[int]], N: int) -> Optional[List[int]]:
    """Betti numbers of the N-fold suspension.

    ``b = None`` is the empty space, whose suspension is S^0.  Reduced
    cohomology moves up by ``N``; the point class stays in degree 0.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    if N == 0:
        return None if b is None else list(b)
    if b is None:
        if N == 1:
            return [2]
        return [1] + [0] * (N - 2) + [1]
    b = list(b)
    if not b:
        raise ValueError("use None for the empty space")
    out = [0] * (len(b) + N)
    out[0] = 1
    for i in range(1, len(b)):
        out[i + N] = b[i]
    out[N] += b[0] - 1
    return out


def predicted_betti(m: int, n: int, P: Optional[int] = None) -> BettiTable:
    """Betti numbers of the 2n-fold suspension of X_{2(m-n)} for GL(m).

    For ``m == n`` the base is a point and X_0 = GL(m); for ``m < n`` the base
    is empty.  With ``P`` the table is cut or zero-padded to degrees ``0..P``.
    """
    if m < 0 or n < 0 or m + n == 0:
        raise ValueError("need m, n >= 0 and (m, n) != (0, 0)")
    if m > n:
        base = cdga_cohomology(skeleton_bundle_model(m, 2 * (m - n))).dims
    elif m == n:
        base = cdga_cohomology(general_linear_model(m)).dims
    else:
        base = None
    table = trim(suspend(base, 2 * n))
    if P is not None:
        table = (table + [0] * (P + 1))[:P + 1]
    return BettiTable(table)


def exterior_betti(degrees: Sequence[int], P: Optional[int] = None) -> BettiTable:
    """Poincare coefficients of a free exterior algebra, via its zero-differential model."""
    model = exterior_model(degrees)
    table = cdga_cohomology(model).dims
    if P is not None:
        table = (table + [0] * (P + 1))[:P + 1]
    return BettiTable(table)
