"""Finite-dimensional Lie superalgebras and their modules.

Every basis element (of an algebra or a module) carries a parity and a weight
for the diagonal torus: a tuple of integers, one per coordinate of the
underlying superspace.  The Euler element ``h`` acts by the sum of that
tuple, which is what :func:`h_weight` returns.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from . import superlin
from .diagrams import Partition, transpose
from .exactla import SparseMatrix, kernel_dim, rref_rows

Vec = Dict[int, object]  # basis index -> coefficient (int or Fraction)
Weight = Tuple[int, ...]


class StructureError(ValueError):
    """Raised when a constructed algebra or module violates its axioms."""


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _axpy(acc: Dict, vec: Dict, scale) -> None:
    for k, v in vec.items():
        nv = acc.get(k, 0) + scale * v
        if nv:
            acc[k] = _clean(nv)
        else:
            acc.pop(k, None)


def h_weight(w: Weight) -> int:
    return sum(w)


class LieSuperalgebra:
    """Basis with parities and torus weights plus structure constants.

    ``brackets[(i, j)]`` is the sparse vector ``[b_i, b_j]``; missing pairs are
    zero.
    """

    def __init__(self, name: str, labels: Sequence[Hashable], parities: Sequence[int],
                 weights: Sequence[Weight], brackets: Dict[Tuple[int, int], Vec],
                 check: bool = True, jacobi_bound: Optional[int] = None):
        self.name = name
        self.basis = superlin.SuperBasis(tuple(labels), tuple(parities))
        self.labels = tuple(labels)
        self.parities = tuple(parities)
        self.weights = tuple(tuple(w) for w in weights)
        self.brackets = {k: {i: _clean(Fraction(c)) for i, c in v.items() if c}
                         for k, v in brackets.items()}
        self.brackets = {k: v for k, v in self.brackets.items() if v}
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        self.gl_dims: Optional[Tuple[int, int]] = None
        if check:
            self.check(jacobi_bound)

    def __repr__(self):
        return f"<LieSuperalgebra {self.name} sdim={self.sdim}>"

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def sdim(self) -> Tuple[int, int]:
        return self.basis.sdim

    @property
    def torus_rank(self) -> int:
        return len(self.weights[0]) if self.weights else 0

    def bracket(self, i: int, j: int) -> Vec:
        return self.brackets.get((i, j), {})

    def bracket_vec(self, x: Vec, y: Vec) -> Vec:
        out: Dict = {}
        for i, a in x.items():
            for j, b in y.items():
                _axpy(out, self.bracket(i, j), a * b)
        return out

    def check(self, jacobi_bound: Optional[int] = None) -> None:
        """Super-antisymmetry and weight additivity on all pairs, then the
        super Jacobi identity on triples whose total h-weight is at most
        ``jacobi_bound`` (all triples when ``None``)."""
        P, W = self.parities, self.weights
        for (i, j), v in self.brackets.items():
            target = tuple(a + b for a, b in zip(W[i], W[j]))
            for k in v:
                if W[k] != target:
                    raise StructureError(f"{self.name}: [{self.labels[i]},{self.labels[j]}] breaks weights")
                if P[k] != (P[i] + P[j]) % 2:
                    raise StructureError(f"{self.name}: [{self.labels[i]},{self.labels[j]}] breaks parity")
        n = self.dim
        for i in range(n):
            for j in range(n):
                lhs = self.bracket(i, j)
                rhs = {}
                _axpy(rhs, self.bracket(j, i), -(-1) ** (P[i] * P[j]))
                if lhs != rhs:
                    raise StructureError(f"{self.name}: antisymmetry fails on ({self.labels[i]}, {self.labels[j]})")
        bad = self.jacobi_violations(jacobi_bound, first_only=True)
        if bad:
            i, j, k = bad[0]
            raise StructureError(
                f"{self.name}: Jacobi fails on ({self.labels[i]}, {self.labels[j]}, {self.labels[k]})")

    def jacobi_violations(self, max_weight: Optional[int] = None, first_only: bool = False) -> List[Tuple[int, int, int]]:
        """Basis triples violating ``[[x,y],z] = [x,[y,z]] - (-1)^{xy}[y,[x,z]]``."""
        P, W = self.parities, self.weights
        wset = set(W)
        hw = [h_weight(w) for w in W]
        n = self.dim
        out = []
        for i in range(n):
            for j in range(n):
                xy = self.bracket(i, j)
                wij = tuple(a + b for a, b in zip(W[i], W[j]))
                for k in range(n):
                    if max_weight is not None and hw[i] + hw[j] + hw[k] > max_weight:
                        continue
                    if tuple(a + b for a, b in zip(wij, W[k])) not in wset:
                        continue
                    lhs: Dict = {}
                    for t, c in xy.items():
                        _axpy(lhs, self.bracket(t, k), c)
                    rhs: Dict = {}
                    for t, c in self.bracket(j, k).items():
                        _axpy(rhs, self.bracket(i, t), c)
                    s = -(-1) ** (P[i] * P[j])
                    for t, c in self.bracket(i, k).items():
                        _axpy(rhs, self.bracket(j, t), s * c)
                    if lhs != rhs:
                        out.append((i, j, k))
                        if first_only:
                            return out
        return out

    def subalgebra_table(self, indices: Sequence[int]) -> Dict[Tuple[int, int], Vec]:
        """Bracket table restricted to ``indices`` (renumbered 0..len-1).

        Raises if the span is not closed under the bracket.
        """
        pos = {g: k for k, g in enumerate(indices)}
        out = {}
        for a, i in enumerate(indices):
            for b, j in enumerate(indices):
                v = self.bracket(i, j)
                if any(t not in pos for t in v):
                    raise StructureError("not a subalgebra")
                if v:
                    out[a, b] = {pos[t]: c for t, c in v.items()}
        return out


def gl(m: int, n: int, check: bool = True) -> LieSuperalgebra:
    """gl(m, n) with basis ``e_ij`` (row-major), ``e_ij v_k = delta_jk v_i``."""
    if m < 0 or n < 0 or m + n < 1:
        raise ValueError("need m, n >= 0 and m + n >= 1")
    N = m + n
    par = [0] * m + [1] * n
    idx = {}
    labels, parities, weights = [], [], []
    for i in range(N):
        for j in range(N):
            idx[i, j] = len(labels)
            labels.append(f"e{i + 1}{j + 1}" if N < 10 else f"e{i + 1}_{j + 1}")
            parities.append((par[i] + par[j]) % 2)
            w = [0] * N
            w[i] += 1
            w[j] -= 1
            weights.append(tuple(w))
    brackets: Dict[Tuple[int, int], Vec] = {}
    for (i, j), a in idx.items():
        for (k, l), b in idx.items():
            v: Dict = {}
            if j == k:
                _axpy(v, {idx[i, l]: 1}, 1)
            if l == i:
                sign = (-1) ** (parities[a] * parities[b])
                _axpy(v, {idx[k, j]: 1}, -sign)
            if v:
                brackets[a, b] = v
    g = LieSuperalgebra(f"gl({m},{n})", labels, parities, weights, brackets, check=check)
    g.gl_dims = (m, n)
    g.gl_index = idx
    return g


# --- polynomial vector fields -------------------------------------------------

def _mono_mul(a: Tuple[int, ...], b: Tuple[int, ...], m: int) -> Tuple[int, Optional[Tuple[int, ...]]]:
    """Product of monomials in x_1..x_m (even) and xi_1..xi_n (odd)."""
    sign = 1
    out = list(a)
    for t in range(m, len(a)):
        if b[t]:
            if a[t]:
                return 0, None
            # xi_t from b moves left past the odd factors of a with larger index
            if sum(a[s] for s in range(t + 1, len(a))) % 2:
                sign = -sign
    # moving b's odd factors past each other is accounted for pairwise above
    for t in range(len(a)):
        out[t] = a[t] + b[t]
    return sign, tuple(out)


def _mono_diff(k: int, a: Tuple[int, ...], m: int) -> Tuple[int, Optional[Tuple[int, ...]]]:
    """Left derivative d/du_k of a monomial."""
    if not a[k]:
        return 0, None
    out = list(a)
    out[k] -= 1
    if k < m:
        return a[k], tuple(out)
    sign = -1 if sum(a[s] for s in range(m, k)) % 2 else 1
    return sign, tuple(out)


def _vf_label(mono, k, m, n):
    names = [f"x{i + 1}" for i in range(m)] + [f"xi{j + 1}" for j in range(n)]
    parts = []
    for t, e in enumerate(mono):
        if e == 1:
            parts.append(names[t])
        elif e > 1:
            parts.append(f"{names[t]}^{e}")
    return ("*".join(parts) + "*" if parts else "") + f"d_{names[k]}"


def vector_field_basis(m: int, n: int, dmax: int) -> List[Tuple[Tuple[int, ...], int]]:
    """``(monomial, k)`` pairs meaning ``u^monomial d/du_k``, ordered by degree."""
    N = m + n
    out = []
    for deg in range(dmax + 2):
        monos = []
        for odd in product((0, 1), repeat=n):
            rest = deg - sum(odd)
            if rest < 0:
                continue
            for ev in _compositions(rest, m):
                monos.append(ev + odd)
        monos.sort(reverse=True)
        for mono in monos:
            for k in range(N):
                out.append((mono, k))
    return out


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def vect_truncated(m: int, n: int, dmax: int, check: bool = True) -> LieSuperalgebra:
    """Vector fields on the (m, n) superspace with polynomial coefficients of
    degree <= dmax + 1, brackets of weight > dmax set to zero.

    Weight of ``u^a d_k`` is ``a - e_k`` per coordinate; its sum is the
    polynomial degree minus one.

    Dropping the high brackets is not a Lie superalgebra quotient (weight -1
    fields lower weight), so the Jacobi identity is exact only on triples of
    total weight <= dmax - 1; construction checks that range.  Every bracket
    met by weight-zero cochains of degree <= dmax + 1 lies inside it.
    """
    if m < 0 or n < 0 or m + n == 0:
        raise ValueError("need (m, n) != (0, 0)")
    if dmax < 0:
        raise ValueError("dmax must be >= 0")
    N = m + n
    basis = vector_field_basis(m, n, dmax)
    index = {b: i for i, b in enumerate(basis)}
    parities = [(sum(mono[m:]) + (k >= m)) % 2 for mono, k in basis]
    weights = []
    for mono, k in basis:
        w = list(mono)
        w[k] -= 1
        weights.append(tuple(w))

    def apply(X, Y):
        # X(f) d_l for X = f_X d_k, Y = f_Y d_l : f_X * d_k(f_Y) d_l
        (fx, k), (fy, l) = X, Y
        s1, df = _mono_diff(k, fy, m)
        if not s1:
            return None
        s2, prod_ = _mono_mul(fx, df, m)
        if not s2:
            return None
        return s1 * s2, (prod_, l)

    brackets: Dict[Tuple[int, int], Vec] = {}
    for i, X in enumerate(basis):
        for j, Y in enumerate(basis):
            if h_weight(weights[i]) + h_weight(weights[j]) > dmax:
                continue
            v: Dict = {}
            t = apply(X, Y)
            if t and t[1] in index:
                _axpy(v, {index[t[1]]: 1}, t[0])
            t = apply(Y, X)
            if t and t[1] in index:
                _axpy(v, {index[t[1]]: 1}, -((-1) ** (parities[i] * parities[j])) * t[0])
            if v:
                brackets[i, j] = v
    labels = [_vf_label(mono, k, m, n) for mono, k in basis]
    g = LieSuperalgebra(f"W({m},{n})<={dmax}", labels, parities, weights, brackets,
                        check=check, jacobi_bound=dmax - 1)
    g.vf_basis = basis
    g.vf_dims = (m, n)
    g.dmax = dmax
    return g


def linear_vector_fields(g: LieSuperalgebra) -> Dict[Tuple[int, int], int]:
    """Indices of ``u_i d_j`` inside a truncated vector field algebra, keyed
    like ``gl(m, n).gl_index``."""
    m, n = g.vf_dims
    N = m + n
    idx = {}
    for i in range(N):
        for j in range(N):
            mono = tuple(1 if t == i else 0 for t in range(N))
            idx[i, j] = g.index[_vf_label(mono, j, m, n)]
    return idx


# --- modules -------------------------------------------------------------------

class SuperModule:
    """Finite-dimensional module: ``action[x][a]`` is the sparse vector ``x . m_a``."""

    def __init__(self, algebra: LieSuperalgebra, labels: Sequence[Hashable], parities: Sequence[int],
                 weights: Sequence[Weight], action: Sequence[Dict[int, Vec]], name: str = "M",
                 check: bool = True):
        self.algebra = algebra
        self.name = name
        self.labels = tuple(labels)
        self.parities = tuple(parities)
        self.weights = tuple(tuple(w) for w in weights)
        self.action = [
            {a: {b: _clean(Fraction(c)) for b, c in col.items() if c} for a, col in act.items()}
            for act in action
        ]
        self.action = [{a: col for a, col in act.items() if col} for act in self.action]
        if len(self.action) != algebra.dim:
            raise ValueError("one action map per algebra basis element required")
        if check:
            self.check()

    def __repr__(self):
        return f"<SuperModule {self.name} over {self.algebra.name}, sdim={self.sdim}>"

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def sdim(self) -> Tuple[int, int]:
        odd = sum(self.parities)
        return (self.dim - odd, odd)

    def act(self, x: int, vec: Vec) -> Vec:
        out: Dict = {}
        ax = self.action[x]
        for a, c in vec.items():
            col = ax.get(a)
            if col:
                _axpy(out, col, c)
        return out

    def matrix(self, x: int) -> SparseMatrix:
        ent = {(b, a): c for a, col in self.action[x].items() for b, c in col.items()}
        return SparseMatrix(self.dim, self.dim, ent)

    def check(self) -> None:
        """rho([x,y]) = rho(x)rho(y) - (-1)^{xy} rho(y)rho(x) on basis vectors,
        with parity and weight compatibility."""
        g = self.algebra
        P, W = g.parities, g.weights
        for x in range(g.dim):
            for a, col in self.action[x].items():
                for b in col:
                    if self.parities[b] != (self.parities[a] + P[x]) % 2:
                        raise StructureError(f"{self.name}: {g.labels[x]} breaks parity")
                    if self.weights[b] != tuple(s + t for s, t in zip(self.weights[a], W[x])):
                        raise StructureError(f"{self.name}: {g.labels[x]} breaks weights")
        for x in range(g.dim):
            for y in range(g.dim):
                s = (-1) ** (P[x] * P[y])
                xy = g.bracket(x, y)
                for a in range(self.dim):
                    e = {a: 1}
                    lhs: Dict = {}
                    for t, c in xy.items():
                        _axpy(lhs, self.act(t, e), c)
                    rhs: Dict = {}
                    _axpy(rhs, self.act(x, self.act(y, e)), 1)
                    _axpy(rhs, self.act(y, self.act(x, e)), -s)
                    if lhs != rhs:
                        raise StructureError(
                            f"{self.name}: representation identity fails on ({g.labels[x]}, {g.labels[y]})")


def trivial_module(g: LieSuperalgebra) -> SuperModule:
    return SuperModule(g, ["1"], [0], [(0,) * g.torus_rank], [{} for _ in range(g.dim)], name="k")


def standard_module(g: LieSuperalgebra) -> SuperModule:
    """Defining representation of gl(m, n)."""
    if g.gl_dims is None:
        raise ValueError("standard_module needs an algebra built by gl()")
    m, n = g.gl_dims
    N = m + n
    labels = [f"v{i + 1}" for i in range(N)]
    parities = [0] * m + [1] * n
    weights = [tuple(1 if t == i else 0 for t in range(N)) for i in range(N)]
    action: List[Dict[int, Vec]] = [{} for _ in range(g.dim)]
    for (i, j), x in g.gl_index.items():
        action[x][j] = {i: 1}
    return SuperModule(g, labels, parities, weights, action, name="V")


def dual_module(M: SuperModule, check: bool = True) -> SuperModule:
    """``(x . phi)(v) = -(-1)^{|x||phi|} phi(x . v)`` on the dual basis."""
    g = M.algebra
    action: List[Dict[int, Vec]] = [{} for _ in range(g.dim)]
    for x in range(g.dim):
        for a, col in M.action[x].items():
            # x . v_a = sum_b c v_b  =>  x . phi_b gets -(-1)^{|x||b|} c phi_a
            for b, c in col.items():
                s = -((-1) ** (g.parities[x] * M.parities[b]))
                action[x].setdefault(b, {})
                _axpy(action[x][b], {a: 1}, s * c)
    weights = [tuple(-t for t in w) for w in M.weights]
    labels = [f"{lab}*" for lab in M.labels]
    return SuperModule(g, labels, M.parities, weights, action, name=f"{M.name}*", check=check)


def tensor_module(M: SuperModule, N: SuperModule, check: bool = True) -> SuperModule:
    """``x . (m (x) n) = x.m (x) n + (-1)^{|x||m|} m (x) x.n``; basis row-major."""
    g = M.algebra
    if N.algebra is not g:
        raise ValueError("modules over different algebras")
    dn = N.dim
    labels, parities, weights = [], [], []
    for a in range(M.dim):
        for b in range(dn):
            labels.append((M.labels[a], N.labels[b]))
            parities.append((M.parities[a] + N.parities[b]) % 2)
            weights.append(tuple(s + t for s, t in zip(M.weights[a], N.weights[b])))
    action: List[Dict[int, Vec]] = [{} for _ in range(g.dim)]
    for x in range(g.dim):
        px = g.parities[x]
        for a in range(M.dim):
            ma = M.action[x].get(a, {})
            s = (-1) ** (px * M.parities[a])
            for b in range(dn):
                col: Dict = {}
                for a2, c in ma.items():
                    _axpy(col, {a2 * dn + b: 1}, c)
                for b2, c in N.action[x].get(b, {}).items():
                    _axpy(col, {a * dn + b2: 1}, s * c)
                if col:
                    action[x][a * dn + b] = col
    return SuperModule(g, labels, parities, weights, action, name=f"({M.name}(x){N.name})", check=check)


def _power_module(M: SuperModule, p: int, exterior: bool, check: bool) -> SuperModule:
    g = M.algebra
    basis = superlin._super_power_basis(M.parities, p, strict_parity=0 if exterior else 1)
    index = {mono: i for i, mono in enumerate(basis)}
    action: List[Dict[int, Vec]] = [{} for _ in range(g.dim)]
    for x in range(g.dim):
        px = g.parities[x]
        for col_i, mono in enumerate(basis):
            col: Dict = {}
            before = 0
            for s, f in enumerate(mono):
                sign = -1 if (px and before % 2) else 1
                for f2, c in M.action[x].get(f, {}).items():
                    factors = mono[:s] + (f2,) + mono[s + 1:]
                    s2, nm = superlin.normal_order(factors, M.parities, exterior)
                    if s2:
                        _axpy(col, {index[nm]: 1}, sign * s2 * c)
                before += M.parities[f]
            if col:
                action[x][col_i] = col
    parities = [sum(M.parities[f] for f in mono) % 2 for mono in basis]
    zero = (0,) * g.torus_rank
    weights = [tuple(sum(t) for t in zip(zero, *(M.weights[f] for f in mono))) for mono in basis]
    labels = [tuple(M.labels[f] for f in mono) for mono in basis]
    kind = "L" if exterior else "S"
    return SuperModule(g, labels, parities, weights, action, name=f"{kind}^{p}({M.name})", check=check)


def exterior_power_module(M: SuperModule, p: int, check: bool = True) -> SuperModule:
    """Super exterior power on the monomial basis of :func:`superlin.super_exterior_basis`."""
    return _power_module(M, p, exterior=True, check=check)


def symmetric_power_module(M: SuperModule, p: int, check: bool = True) -> SuperModule:
    return _power_module(M, p, exterior=False, check=check)


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def _young_groups(lam: Partition):
    """Row and column subgroups (as slot permutations with signs) of the
    row-reading tableau of shape ``lam``."""
    k = lam.size
    slot = {}
    c = 0
    for i, r in enumerate(lam):
        for j in range(r):
            slot[i, j] = c
            c += 1
    rows = [[slot[i, j] for j in range(r)] for i, r in enumerate(lam)]
    lt = transpose(lam)
    cols = [[slot[i, j] for i in range(h)] for j, h in enumerate(lt)]

    def group(blocks, signed):
        out = [(list(range(k)), 1)]
        for blk in blocks:
            new = []
            for perm, s in out:
                for img in permutations(blk):
                    p = list(perm)
                    for src, dst in zip(blk, img):
                        p[src] = dst
                    new.append((p, s * (_perm_sign([blk.index(t) for t in img]) if signed else 1)))
            out = new
        return out

    return group(rows, False), group(cols, True)


def schur_module(M: SuperModule, lam: Sequence[int], check: bool = True) -> SuperModule:
    """Image of the Young symmetrizer (rows symmetrized, then columns
    antisymmetrized, Koszul signs throughout) in the tensor power of ``M``."""
    g = M.algebra
    lam = Partition(lam)
    k = lam.size
    if k == 0:
        return trivial_module(g)
    row_group, col_group = _young_groups(lam)
    P = M.parities
    words = list(product(range(M.dim), repeat=k))
    windex = {w: i for i, w in enumerate(words)}

    def symmetrize(w):
        vec: Dict = {}
        for perm, _ in row_group:
            s, nw = superlin.permute_tensor(w, P, perm)
            vec[nw] = vec.get(nw, 0) + s
        out: Dict = {}
        for u, c in vec.items():
            if not c:
                continue
            for perm, sg in col_group:
                s, nw = superlin.permute_tensor(u, P, perm)
                out[nw] = out.get(nw, 0) + sg * s * c
        return {windex[u]: c for u, c in out.items() if c}

    classes: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = {}
    for w in words:
        classes.setdefault(tuple(sorted(w)), []).append(w)
    basis: List[Dict[int, Fraction]] = []
    pivots: List[int] = []
    for key in sorted(classes):
        b, p = rref_rows([symmetrize(w) for w in classes[key]])
        basis.extend(b)
        pivots.extend(p)
    pivot_pos = {p: i for i, p in enumerate(pivots)}

    def tensor_act(x, w):
        out: Dict = {}
        before = 0
        px = g.parities[x]
        for s, f in enumerate(w):
            sign = -1 if (px and before % 2) else 1
            for f2, c in M.action[x].get(f, {}).items():
                nw = w[:s] + (f2,) + w[s + 1:]
                _axpy(out, {windex[nw]: 1}, sign * c)
            before += P[f]
        return out

    action: List[Dict[int, Vec]] = [{} for _ in range(g.dim)]
    for x in range(g.dim):
        for i, vec in enumerate(basis):
            img: Dict = {}
            for wi, c in vec.items():
                _axpy(img, tensor_act(x, words[wi]), c)
            col = {pivot_pos[p]: img[p] for p in pivots if p in img}
            if col:
                action[x][i] = col
    parities = [sum(P[f] for f in words[p]) % 2 for p in pivots]
    zero = (0,) * g.torus_rank
    weights = [tuple(sum(t) for t in zip(zero, *(M.weights[f] for f in words[p]))) for p in pivots]
    labels = [tuple(M.labels[f] for f in words[p]) for p in pivots]
    return SuperModule(g, labels, parities, weights, action, name=f"S^{lam}({M.name})", check=check)


def delta_module(g: LieSuperalgebra, lam: Sequence[int], check: bool = True) -> SuperModule:
    """Schur functor of ``lam`` on V tensored with the one on V*."""
    V = standard_module(g)
    Vd = dual_module(V)
    A = schur_module(V, lam, check=check)
    B = schur_module(Vd, lam, check=check)
    D = tensor_module(A, B, check=check)
    D.name = f"Delta^({Partition(lam)})"
    return D


def offdiagonal_module(g: LieSuperalgebra, alpha: Sequence[int], beta: Sequence[int], check: bool = True) -> SuperModule:
    V = standard_module(g)
    D = tensor_module(schur_module(V, alpha, check=check), schur_module(dual_module(V), beta, check=check), check=check)
    D.name = f"S^({Partition(alpha)})V(x)S^({Partition(beta)})V*"
    return D


def gl_identity(g: LieSuperalgebra) -> Vec:
    """The identity matrix ``h`` of gl(m, n) as a vector in the basis."""
    m, n = g.gl_dims
    return {g.gl_index[i, i]: 1 for i in range(m + n)}


# --- coinduction from the even part ------------------------------------------

class _PBW:
    """Normal ordering in U(g) modulo the left ideal U(g_0)^+ U(g), i.e.
    words that start with an even element are dropped.  Surviving normal
    words are strictly increasing products of odd basis elements."""

    def __init__(self, g: LieSuperalgebra):
        self.g = g
        self.memo: Dict[Tuple[int, ...], Dict[Tuple[int, ...], Fraction]] = {}

    def reduce(self, word: Tuple[int, ...]) -> Dict[Tuple[int, ...], Fraction]:
        if word in self.memo:
            return self.memo[word]
        P = self.g.parities
        result: Dict = {}
        if word and P[word[0]] == 0:
            self.memo[word] = result
            return result
        k = next((t for t, x in enumerate(word) if P[x] == 0), None)
        if k is not None:
            # odd a, even b: ab = ba + [a,b]
            a, b = word[k - 1], word[k]
            self._add(result, word[:k - 1] + (b, a) + word[k + 1:], 1)
            for t, c in self.g.bracket(a, b).items():
                self._add(result, word[:k - 1] + (t,) + word[k + 1:], c)
        else:
            k = next((t for t in range(len(word) - 1) if word[t] >= word[t + 1]), None)
            if k is None:
                result = {word: Fraction(1)}
            else:
                a, b = word[k], word[k + 1]
                if a == b:
                    # aa = [a,a]/2
                    for t, c in self.g.bracket(a, a).items():
                        self._add(result, word[:k] + (t,) + word[k + 2:], Fraction(c, 2))
                else:
                    # odd a > b: ab = -ba + [a,b]
                    self._add(result, word[:k] + (b, a) + word[k + 2:], -1)
                    for t, c in self.g.bracket(a, b).items():
                        self._add(result, word[:k] + (t,) + word[k + 2:], c)
        self.memo[word] = result
        return result

    def _add(self, acc, word, c):
        for w, v in self.reduce(word).items():
            nv = acc.get(w, 0) + c * v
            if nv:
                acc[w] = nv
            else:
                acc.pop(w, None)


def coinduced_trivial(g: LieSuperalgebra, check: bool = True) -> SuperModule:
    """``Hom_{U g_0}(U g, k)`` realized on the dual of the odd PBW monomials.

    ``(x . f)(u) = (-1)^{|x|(|f| + |u|)} f(u x)``.
    """
    P = g.parities
    odd = [i for i in range(g.dim) if P[i]]
    subsets = [c for r in range(len(odd) + 1) for c in combinations(odd, r)]
    index = {s: i for i, s in enumerate(subsets)}
    pbw = _PBW(g)
    action: List[Dict[int, Vec]] = [{} for _ in range(g.dim)]
    for x in range(g.dim):
        for I in subsets:
            # coefficient of f_I in x . f_J is (-1)^{|x|(|J|+|I|)} * [y_J] (y_I x)
            for J, c in pbw.reduce(I + (x,)).items():
                s = -1 if (P[x] and (len(I) + len(J)) % 2) else 1
                action[x].setdefault(index[J], {})
                _axpy(action[x][index[J]], {index[I]: 1}, s * c)
    zero = (0,) * g.torus_rank
    weights = [tuple(-sum(t) for t in zip(zero, *(g.weights[i] for i in s))) for s in subsets]
    parities = [len(s) % 2 for s in subsets]
    labels = ["f(" + ",".join(g.labels[i] for i in s) + ")" for s in subsets]
    return SuperModule(g, labels, parities, weights, action, name="Ind(k)", check=check)


def invariants_dim(g: LieSuperalgebra, M: SuperModule) -> int:
    """Dimension of the subspace killed by every basis element of ``g``.

    When ``g`` contains its torus (gl and vector fields do), invariants have
    weight zero, so only weight-zero columns are kept.
    """
    zero = (0,) * g.torus_rank
    cols = [a for a in range(M.dim) if M.weights[a] == zero] if _has_torus(g) else list(range(M.dim))
    pos = {a: i for i, a in enumerate(cols)}
    rows: Dict[Tuple[int, int], Dict[int, object]] = {}
    for x in range(g.dim):
        for a in cols:
            for b, c in M.action[x].get(a, {}).items():
                rows.setdefault((x, b), {})[pos[a]] = c
    mat = SparseMatrix.from_rows(list(rows.values()), len(cols))
    return kernel_dim(mat)


def _has_torus(g: LieSuperalgebra) -> bool:
    if g.gl_dims is not None:
        return True
    return getattr(g, "vf_dims", None) is not None


def invariant_test_module(g: LieSuperalgebra, p: int, check: bool = True) -> SuperModule:
    """``L^p(V) (x) L^p(S^2(V*) (x) V)`` for V the standard gl(m, n) module."""
    V = standard_module(g)
    Vd = dual_module(V)
    A = exterior_power_module(V, p, check=check)
    inner = tensor_module(symmetric_power_module(Vd, 2, check=check), V, check=check)
    B = exterior_power_module(inner, p, check=check)
    return tensor_module(A, B, check=check)
