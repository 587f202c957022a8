"""Chevalley-Eilenberg cohomology of Lie superalgebras, block by weight.

A p-cochain is a super-alternating p-linear map ``g^p -> M``.  Its basis is
``(I, a)``: ``I`` a sorted tuple of algebra basis indices (odd ones may
repeat) and ``a`` a module basis index, standing for the cochain sending
``x_I`` to ``m_a`` and every other sorted tuple to zero.  The weight of
``(I, a)`` is ``wt(m_a) - sum wt(x_I)``; the differential preserves it, and
since the torus lies inside every algebra we build, cohomology lives in
weight zero.

The differential is

    (d w)(x_1..x_q) = sum_s (-1)^{s+1+|x_s|(|w| + |x_1..x_{s-1}|)} x_s . w(.., ^x_s, ..)
                    + sum_{s<t} (-1)^{s+t+|x_s||x_1..x_{s-1}| + |x_t|(|x_1..x_{t-1}| - |x_s|)}
                              w([x_s, x_t], .., ^x_s, .., ^x_t, ..)

with every sign coming from moving arguments past each other under the
Koszul rule.  ``d^2 = 0`` is asserted on every pair of consecutive blocks
that gets built.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .algebras import (LieSuperalgebra, SuperModule, Weight, delta_module, gl, offdiagonal_module,
                       trivial_module, vect_truncated)
from .diagrams import Partition
from .exactla import SparseMatrix

log = logging.getLogger(__name__)

Cochain = Tuple[Tuple[int, ...], int]


class DifferentialError(RuntimeError):
    """d o d != 0 on some block: a sign or structure-constant bug."""


class ResourceCapError(RuntimeError):
    """A block's estimated size exceeds the configured cap."""


@dataclass
class BettiTable:
    """dims[p] = dim H^p for 0 <= p <= len(dims) - 1."""

    dims: List[int]
    by_weight: Dict[Weight, List[int]] = field(default_factory=dict, compare=False, repr=False)

    @property
    def max_degree(self) -> int:
        return len(self.dims) - 1

    def __getitem__(self, p: int) -> int:
        return self.dims[p] if 0 <= p < len(self.dims) else 0

    def __iter__(self):
        return iter(self.dims)

    def __len__(self):
        return len(self.dims)

    def to_list(self) -> List[int]:
        return list(self.dims)


def enumerate_tuples(parities: Sequence[int], weights: Sequence[Weight], p: int, target: Weight) -> List[Tuple[int, ...]]:
    """Sorted index tuples of length ``p`` (even indices not repeated) whose
    weights sum to ``target``.

    Pruning uses the exact range of sums reachable with ``k`` more picks from
    indices ``>= i``, per weight coordinate and for the coordinate total.
    """
    n = len(parities)
    if p == 0:
        return [()] if all(t == 0 for t in target) else []
    ext = [tuple(w) + (sum(w),) for w in weights]
    goal = tuple(target) + (sum(target),)
    r = len(goal)
    INF = float("inf")
    # lo[i][k][c], hi[i][k][c]: extreme sums of coordinate c over k picks from i..n-1
    lo = [[[INF] * r for _ in range(p + 1)] for _ in range(n + 2)]
    hi = [[[-INF] * r for _ in range(p + 1)] for _ in range(n + 2)]
    for i in range(n + 1):
        lo[i][0] = [0] * r
        hi[i][0] = [0] * r
    for i in range(n - 1, -1, -1):
        again = i if parities[i] else i + 1
        wi = ext[i]
        for k in range(1, p + 1):
            skip_lo, skip_hi = lo[i + 1][k], hi[i + 1][k]
            take_lo, take_hi = lo[again][k - 1], hi[again][k - 1]
            lo[i][k] = [min(skip_lo[c], take_lo[c] + wi[c]) for c in range(r)]
            hi[i][k] = [max(skip_hi[c], take_hi[c] + wi[c]) for c in range(r)]
    out: List[Tuple[int, ...]] = []
    cur: List[int] = []
    need = list(goal)

    def feasible(i, k):
        L, H = lo[i][k], hi[i][k]
        for c in range(r):
            if not L[c] <= need[c] <= H[c]:
                return False
        return True

    def rec(start, k):
        if k == 0:
            if not any(need):
                out.append(tuple(cur))
            return
        for i in range(start, n):
            # the reachable range only shrinks as i grows
            if not feasible(i, k):
                break
            wi = ext[i]
            for c in range(r):
                need[c] -= wi[c]
            cur.append(i)
            if feasible(i if parities[i] else i + 1, k - 1):
                rec(i if parities[i] else i + 1, k - 1)
            cur.pop()
            for c in range(r):
                need[c] += wi[c]

    rec(0, p)
    return out


class CochainComplex:
    """Weight blocks of ``C^p(g, M)`` for ``0 <= p <= pmax + 1``, built lazily.

    ``weights`` is a set of torus weights to expose; ``None`` means weight 0.
    """

    def __init__(self, g: LieSuperalgebra, M: SuperModule, pmax: int,
                 weights: Optional[Iterable[Weight]] = None, check_d2: bool = True,
                 max_block: Optional[int] = None):
        if pmax < 0:
            raise ValueError("pmax must be >= 0")
        if M.algebra is not g:
            raise ValueError("module is over a different algebra")
        self.g = g
        self.M = M
        self.pmax = pmax
        zero = (0,) * g.torus_rank
        self.weights = sorted(set(tuple(w) for w in weights)) if weights is not None else [zero]
        self.check_d2 = check_d2
        self.max_block = max_block
        self._density: Optional[Tuple[float, float]] = None
        self._basis: Dict[Tuple[int, Weight], List[Cochain]] = {}
        self._rank: Dict[Tuple[int, Weight], int] = {}
        self._d: Dict[Tuple[int, Weight], SparseMatrix] = {}

    def basis(self, p: int, w: Weight) -> List[Cochain]:
        key = (p, tuple(w))
        if key not in self._basis:
            g, M = self.g, self.M
            by_target: Dict[Weight, List[int]] = {}
            for a, wa in enumerate(M.weights):
                by_target.setdefault(tuple(s - t for s, t in zip(wa, w)), []).append(a)
            cells: List[Cochain] = []
            for target, mods in by_target.items():
                for I in enumerate_tuples(g.parities, g.weights, p, target):
                    cells.extend((I, a) for a in mods)
            cells.sort()
            self._basis[key] = cells
        return self._basis[key]

    def dim(self, p: int, w: Weight) -> int:
        return len(self.basis(p, w))

    def differential(self, p: int, w: Weight) -> SparseMatrix:
        """Matrix of ``d: C^{p,w} -> C^{p+1,w}`` (rows index the target)."""
        key = (p, tuple(w))
        if key in self._d:
            return self._d[key]
        if self.max_block is not None:
            est = self.estimate_nnz(p, w)
            if est > self.max_block:
                raise ResourceCapError(
                    f"d_{p} at weight {tuple(w)}: about {est} nonzeros "
                    f"({self.dim(p + 1, w)} x {self.dim(p, w)}), cap is {self.max_block}")
        mat = self._assemble(p, tuple(w))
        self._d[key] = mat
        if self.check_d2:
            prev = self._d.get((p - 1, tuple(w)))
            if prev is not None:
                self._assert_d2(mat, prev, p)
            nxt = self._d.get((p + 1, tuple(w)))
            if nxt is not None:
                self._assert_d2(nxt, mat, p + 1)
        return mat

    def estimate_nnz(self, p: int, w: Weight) -> int:
        """Rough nonzero count of ``d_p`` from the block dims and the average
        density of the action and the bracket table."""
        if self._density is None:
            g, M = self.g, self.M
            act = sum(len(col) for x in range(g.dim) for col in M.action[x].values())
            a = act / max(1, g.dim * M.dim) if M.dim else 0.0
            br = sum(len(g.bracket(i, j)) for i in range(g.dim) for j in range(i, g.dim))
            b = br / max(1, g.dim * (g.dim + 1) // 2)
            self._density = (a, b)
        a, b = self._density
        q = p + 1
        rows = self.dim(p + 1, w)
        return int(rows * (q * a + q * (q - 1) / 2 * b)) + rows

    def _assert_d2(self, later: SparseMatrix, earlier: SparseMatrix, p: int) -> None:
        if later.ncols != earlier.nrows:
            raise DifferentialError("block shapes do not compose")
        if not (later @ earlier).is_zero():
            raise DifferentialError(f"d^2 != 0 from degree {p - 1} on {self.g.name} with {self.M.name}")

    def _assemble(self, p: int, w: Weight) -> SparseMatrix:
        g, M = self.g, self.M
        P = g.parities
        MP = M.parities
        src = self.basis(p, w)
        dst = self.basis(p + 1, w)
        cols_by_I: Dict[Tuple[int, ...], Dict[int, int]] = {}
        for c, (I, a) in enumerate(src):
            cols_by_I.setdefault(I, {})[a] = c
        rows_by_J: Dict[Tuple[int, ...], Dict[int, int]] = {}
        for r, (J, b) in enumerate(dst):
            rows_by_J.setdefault(J, {})[b] = r
        ipar = {I: sum(P[i] for i in I) % 2 for I in cols_by_I}
        entries: Dict[Tuple[int, int], object] = {}

        def add(key, val):
            nv = entries.get(key, 0) + val
            if nv:
                entries[key] = nv
            else:
                entries.pop(key, None)

        for J, rows in rows_by_J.items():
            q = len(J)
            pre = [0] * (q + 1)
            for s in range(q):
                pre[s + 1] = pre[s] + P[J[s]]
            # action terms
            for s in range(q):
                x = J[s]
                rest = J[:s] + J[s + 1:]
                cols = cols_by_I.get(rest)
                if not cols:
                    continue
                px = P[x]
                base = -1 if (s + px * pre[s]) % 2 else 1
                act = M.action[x]
                for a, c in cols.items():
                    col = act.get(a)
                    if not col:
                        continue
                    sign = -base if (px * (ipar[rest] + MP[a])) % 2 else base
                    for b, v in col.items():
                        r = rows.get(b)
                        if r is not None:
                            add((r, c), sign * v)
            # bracket terms
            for s in range(q):
                x = J[s]
                for t in range(s + 1, q):
                    y = J[t]
                    br = g.bracket(x, y)
                    if not br:
                        continue
                    e = s + t + P[x] * pre[s] + P[y] * (pre[t] - P[x])
                    base = -1 if e % 2 else 1
                    rest = J[:s] + J[s + 1:t] + J[t + 1:]
                    for k, cval in br.items():
                        sign = base
                        pk = P[k]
                        pos = 0
                        dead = False
                        for rr in rest:
                            if rr < k:
                                pos += 1
                                if not (pk and P[rr]):
                                    sign = -sign
                            elif rr == k and not pk:
                                dead = True
                                break
                            else:
                                break
                        if dead:
                            continue
                        I = rest[:pos] + (k,) + rest[pos:]
                        cols = cols_by_I.get(I)
                        if not cols:
                            continue
                        for b, r in rows.items():
                            c = cols.get(b)
                            if c is not None:
                                add((r, c), sign * cval)
        return SparseMatrix(len(dst), len(src), entries)

    def rank(self, p: int, w: Weight) -> int:
        """Rank of ``d: C^{p,w} -> C^{p+1,w}``; ``p = -1`` gives 0."""
        key = (p, tuple(w))
        if p < 0:
            return 0
        if key not in self._rank:
            mat = self.differential(p, w)
            self._rank[key] = mat.rank()
            log.debug("rank d_%d at %s: %d (%dx%d, nnz %d)", p, w, self._rank[key], mat.nrows, mat.ncols, mat.nnz)
        return self._rank[key]

    def release(self, p: int, w: Weight) -> None:
        self._d.pop((p, tuple(w)), None)

    def betti_block(self, p: int, w: Weight) -> int:
        return self.dim(p, w) - self.rank(p, w) - self.rank(p - 1, w)


def ce_complex(g: LieSuperalgebra, M: SuperModule, pmax: int,
               weights: Optional[Iterable[Weight]] = None, check_d2: bool = True,
               max_block: Optional[int] = None) -> CochainComplex:
    return CochainComplex(g, M, pmax, weights, check_d2=check_d2, max_block=max_block)


def betti(C: CochainComplex, p_range: Optional[Iterable[int]] = None) -> BettiTable:
    """Sum over the exposed weights of ``dim ker d_p - rank d_{p-1}``."""
    ps = sorted(p_range) if p_range is not None else list(range(C.pmax + 1))
    for p in ps:
        if p < 0 or p > C.pmax:
            raise ValueError(f"degree {p} outside the built range 0..{C.pmax}")
    dims = [0] * (max(ps) + 1 if ps else 0)
    by_weight = {}
    for w in C.weights:
        row = [0] * len(dims)
        for p in range(0, (max(ps) if ps else -1) + 1):
            b = C.betti_block(p, w)
            row[p] = b
            # keep d_{p-1} until d_p has been checked against it
            C.release(p - 1, w)
        for p in ps:
            dims[p] += row[p]
        by_weight[w] = row
    out = BettiTable([dims[p] if p in ps else 0 for p in range(len(dims))], by_weight)
    return out


def euler_characteristic_check(C: CochainComplex, w: Weight) -> bool:
    """Alternating sums of cochain dims and Betti numbers agree on ``0..pmax``
    provided ``C^{pmax+1, w}`` is zero."""
    if C.dim(C.pmax + 1, w):
        raise ValueError("block does not vanish above pmax")
    chi_c = sum((-1) ** p * C.dim(p, w) for p in range(C.pmax + 1))
    chi_h = sum((-1) ** p * C.betti_block(p, w) for p in range(C.pmax + 1))
    return chi_c == chi_h


def vfield_cohomology(m: int, n: int, P: int, dmax: Optional[int] = None,
                      max_block: Optional[int] = None) -> BettiTable:
    """``H^p`` of formal vector fields on the (m, n) superspace for ``p <= P``.

    Weight-zero cochains of degree ``<= P + 1`` only see fields of weight
    ``<= P``, so truncating at ``dmax = P`` is exact.
    """
    if P < 0:
        raise ValueError("P must be >= 0")
    dmax = P if dmax is None else dmax
    if dmax < P:
        raise ValueError("dmax must be >= P for an exact answer")
    g = vect_truncated(m, n, dmax)
    C = ce_complex(g, trivial_module(g), P, max_block=max_block)
    return betti(C)


def gl_coefficient_cohomology(n: int, lam: Sequence[int], P: int,
                              max_block: Optional[int] = None) -> BettiTable:
    """``H^p(gl(n,1), Delta^lam)`` for ``p <= P``."""
    g = gl(n, 1)
    M = delta_module(g, Partition(lam))
    return betti(ce_complex(g, M, P, max_block=max_block))


def nonzero_weight_blocks(g: LieSuperalgebra, wmax: int) -> List[Weight]:
    from itertools import product
    r = g.torus_rank
    return [w for w in product(range(-wmax, wmax + 1), repeat=r) if any(w)]


def nonzero_weight_acyclicity_check(g: LieSuperalgebra, M: SuperModule, pmax: int, wmax: int) -> bool:
    """True iff every torus-weight block ``w != 0`` with ``max |w_i| <= wmax``
    has no cohomology in degrees ``<= pmax``."""
    weights = nonzero_weight_blocks(g, wmax)
    C = ce_complex(g, M, pmax, weights)
    for w in weights:
        if not any(C.dim(p, w) for p in range(pmax + 1)):
            continue
        for p in range(pmax + 1):
            if C.betti_block(p, w):
                return False
    return True


def vanishing_offdiagonal_check(n: int, alpha: Sequence[int], beta: Sequence[int], P: int) -> bool:
    """True iff ``H^{<=P}(gl(n,1), S^alpha V (x) S^beta V*)`` vanishes."""
    alpha, beta = Partition(alpha), Partition(beta)
    if alpha == beta or alpha.size != beta.size:
        raise ValueError("need |alpha| == |beta| and alpha != beta")
    g = gl(n, 1)
    M = offdiagonal_module(g, alpha, beta)
    return not any(betti(ce_complex(g, M, P)).dims)
