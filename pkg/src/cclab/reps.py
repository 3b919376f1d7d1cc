"""Quiver representations with the homological toolkit.

Representations carry exact matrices (rationals by default, prime-field
entries for per-prime work).  Morphisms are vertex-indexed tuples of
matrices; Hom and Ext^1 are computed by solving the intertwiner system
and the arrow-wise coboundary complex of the hereditary path algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, PrimeInstabilityError
from .linalg import GF, Mat, QQ, hstack
from .quiver import Quiver, check_dimvec


@dataclass
class Representation:
    quiver: Quiver
    field: object
    dim: tuple[int, ...]
    matrices: list  # one Mat per arrow, shape dim[t-1] x dim[s-1]

    @property
    def total_dim(self) -> int:
        return sum(self.dim)

    def is_zero(self) -> bool:
        return self.total_dim == 0


@dataclass
class ClusterObject:
    """A module together with shifted-projective multiplicities P_i[1]."""

    module: Representation
    shifted: tuple[int, ...]

    def is_zero(self) -> bool:
        return self.module.is_zero() and not any(self.shifted)


@dataclass
class ExtCocycle:
    """Arrow-indexed cocycle for an extension of M by L (0 -> L -> Y -> M -> 0)."""

    M: Representation
    L: Representation
    components: list  # per arrow a:i->j, a Mat of shape L_j x M_i


def make_rep(q: Quiver, dim, matrices, field=QQ) -> Representation:
    dim = check_dimvec(q, dim)
    if len(matrices) != len(q.arrows):
        raise InputError(
            f"expected {len(q.arrows)} matrices, got {len(matrices)}")
    mats = []
    for a, (s, t) in enumerate(q.arrows):
        rows, cols = dim[t - 1], dim[s - 1]
        data = matrices[a]
        if isinstance(data, Mat):
            if (data.rows, data.cols) != (rows, cols):
                raise InputError(f"matrix shape mismatch at arrow {a}")
            mats.append(data if data.field == field else
                        Mat(field, rows, cols, data.data))
            continue
        if rows == 0 or cols == 0:
            if data not in ([], None) and any(len(r) for r in data):
                raise InputError(f"matrix at arrow {a} should be empty")
            mats.append(Mat(field, rows, cols))
        else:
            mats.append(Mat(field, rows, cols, data))
    return Representation(q, field, dim, mats)


def zero_rep(q: Quiver, field=QQ) -> Representation:
    return Representation(q, field, (0,) * q.n, [
        Mat(field, 0, 0) for _ in q.arrows])


def cluster_object(module: Representation, shifted=None) -> ClusterObject:
    shifted = tuple(shifted) if shifted is not None else (0,) * module.quiver.n
    if len(shifted) != module.quiver.n or any(x < 0 for x in shifted):
        raise InputError("bad shifted multiplicity vector")
    return ClusterObject(module, shifted)


def max_entry_height(M: Representation) -> int:
    """Largest numerator/denominator magnitude across all matrix entries."""
    h = 0
    for m in M.matrices:
        for row in m.data:
            for x in row:
                f = Fraction(x)
                h = max(h, abs(f.numerator), f.denominator)
    return h


def reduce_rep(M: Representation, p: int) -> Representation:
    """Reduce a rational representation modulo p."""
    if isinstance(M.field, GF):
        if M.field.p != p:
            raise InputError("representation already carries a different prime")
        return M
    F = GF(p)
    return Representation(M.quiver, F, M.dim, [
        Mat(F, m.rows, m.cols, m.data) for m in M.matrices])


# -- paths and standard modules -------------------------------------------

_PATH_CACHE: dict[Quiver, dict] = {}


def all_paths(q: Quiver) -> dict:
    """Ordered lists of directed paths, keyed by (source, target).

    A path is a tuple of arrow indices in traversal order; the empty tuple
    is the trivial path at each vertex.  Finite because q is acyclic.
    """
    if q in _PATH_CACHE:
        return _PATH_CACHE[q]
    paths = {(i, j): [] for i in range(1, q.n + 1) for j in range(1, q.n + 1)}
    for i in range(1, q.n + 1):
        frontier = [((), i)]
        while frontier:
            new = []
            for path, end in frontier:
                paths[(i, end)].append(path)
                for a, (s, t) in enumerate(q.arrows):
                    if s == end:
                        new.append((path + (a,), t))
            frontier = new
    _PATH_CACHE[q] = paths
    return paths


def path_source(q: Quiver, path, default: int) -> int:
    return q.arrows[path[0]][0] if path else default


def apply_path(M: Representation, path, vertex: int) -> Mat:
    """Composite matrix of M along a path starting at `vertex`."""
    cur = Mat.identity(M.field, M.dim[vertex - 1])
    for a in path:
        cur = M.matrices[a].mul(cur)
    return cur


def projective_rep(q: Quiver, i: int, field=QQ) -> Representation:
    """P_i with path basis: (P_i)_j = span of paths i -> j."""
    paths = all_paths(q)
    dim = tuple(len(paths[(i, j)]) for j in range(1, q.n + 1))
    mats = []
    for a, (s, t) in enumerate(q.arrows):
        m = Mat(field, dim[t - 1], dim[s - 1])
        for col, p in enumerate(paths[(i, s)]):
            row = paths[(i, t)].index(p + (a,))
            m.data[row][col] = field.one
        mats.append(m)
    return Representation(q, field, dim, mats)


def injective_rep(q: Quiver, i: int, field=QQ) -> Representation:
    """I_i with path basis: (I_i)_j = span of paths j -> i."""
    paths = all_paths(q)
    dim = tuple(len(paths[(j, i)]) for j in range(1, q.n + 1))
    mats = []
    for a, (s, t) in enumerate(q.arrows):
        # an arrow acts by chopping itself off the front of a path into i
        m = Mat(field, dim[t - 1], dim[s - 1])
        for col, p in enumerate(paths[(s, i)]):
            if p and p[0] == a:
                row = paths[(t, i)].index(p[1:])
                m.data[row][col] = field.one
        mats.append(m)
    return Representation(q, field, dim, mats)


def simple_rep(q: Quiver, i: int, field=QQ) -> Representation:
    dim = tuple(1 if j == i else 0 for j in range(1, q.n + 1))
    return make_rep(q, dim, [[] for _ in q.arrows], field)


def standard_module(q: Quiver, kind: str, i: int, field=QQ) -> Representation:
    if not 1 <= i <= q.n:
        raise InputError(f"vertex {i} out of range")
    if kind == "simple":
        return simple_rep(q, i, field)
    if kind == "projective":
        return projective_rep(q, i, field)
    if kind == "injective":
        return injective_rep(q, i, field)
    raise InputError(f"unknown standard module kind: {kind}")


# -- direct sums -----------------------------------------------------------

def direct_sum(M: Representation, N: Representation) -> Representation:
    if M.quiver != N.quiver or M.field != N.field:
        raise InputError("direct sum of incompatible representations")
    dim = tuple(a + b for a, b in zip(M.dim, N.dim))
    mats = []
    for a, (s, t) in enumerate(M.quiver.arrows):
        m = Mat(M.field, dim[t - 1], dim[s - 1])
        A, B = M.matrices[a], N.matrices[a]
        for i in range(A.rows):
            m.data[i][:A.cols] = A.data[i][:]
        for i in range(B.rows):
            m.data[A.rows + i][A.cols:] = B.data[i][:]
        mats.append(m)
    return Representation(M.quiver, M.field, dim, mats)


def direct_sum_many(q: Quiver, reps, field=QQ) -> Representation:
    out = zero_rep(q, field)
    for r in reps:
        out = direct_sum(out, r)
    return out


def sum_cluster_objects(A: ClusterObject, B: ClusterObject) -> ClusterObject:
    return ClusterObject(direct_sum(A.module, B.module),
                         tuple(a + b for a, b in zip(A.shifted, B.shifted)))


# -- Hom -------------------------------------------------------------------

def _hom_system(M: Representation, N: Representation) -> Mat:
    """Matrix of the intertwiner system over the vectorized f_i blocks."""
    q = M.quiver
    F = M.field
    offs = []
    total = 0
    for i in range(q.n):
        offs.append(total)
        total += N.dim[i] * M.dim[i]
    rows = sum(N.dim[t - 1] * M.dim[s - 1] for s, t in q.arrows)
    sys = Mat(F, rows, total)
    r0 = 0
    for a, (s, t) in enumerate(q.arrows):
        Ma, Na = M.matrices[a], N.matrices[a]
        ns, nt = N.dim[s - 1], N.dim[t - 1]
        ms, mt = M.dim[s - 1], M.dim[t - 1]
        # equation f_t @ Ma - Na @ f_s = 0, entry (r, c) of the result
        for r in range(nt):
            for c in range(ms):
                row = sys.data[r0 + r * ms + c]
                for k in range(mt):
                    # f_t[r][k] * Ma[k][c]
                    row[offs[t - 1] + r * mt + k] = F.add(
                        row[offs[t - 1] + r * mt + k], Ma.data[k][c])
                for k in range(ns):
                    row[offs[s - 1] + k * ms + c] = F.sub(
                        row[offs[s - 1] + k * ms + c], Na.data[r][k])
        r0 += nt * ms
    return sys


def _unvectorize(M, N, vec) -> tuple:
    F = M.field
    mats = []
    pos = 0
    for i in range(M.quiver.n):
        r, c = N.dim[i], M.dim[i]
        m = Mat(F, r, c)
        for rr in range(r):
            m.data[rr] = vec[pos + rr * c: pos + (rr + 1) * c]
        pos += r * c
        mats.append(m)
    return tuple(mats)


def hom_basis(M: Representation, N: Representation) -> list:
    """Basis of Hom(M, N) as vertex-indexed matrix tuples."""
    if M.quiver != N.quiver or M.field != N.field:
        raise InputError("Hom of incompatible representations")
    ker = _hom_system(M, N).nullspace()
    return [_unvectorize(M, N, ker.column(j)) for j in range(ker.cols)]


def hom_dim(M: Representation, N: Representation) -> int:
    total = sum(n * m for n, m in zip(N.dim, M.dim))
    return total - _hom_system(M, N).rank()


def stable_hom_dim(M: Representation, N: Representation, primes) -> int:
    """hom_dim computed per prime; raises if the answer varies with p."""
    dims = {p: hom_dim(reduce_rep(M, p), reduce_rep(N, p)) for p in primes}
    if len(set(dims.values())) != 1:
        raise PrimeInstabilityError(f"Hom dimension varies with prime: {dims}")
    return next(iter(dims.values()))


# -- Ext^1 -----------------------------------------------------------------

def _coboundary(M: Representation, L: Representation) -> Mat:
    """Matrix of d: (+) Hom(M_i, L_i) -> (+)_a Hom(M_s, L_t).

    d(f)_a = L_a f_s - f_t M_a; Ext^1(M, L) is its cokernel.
    """
    q = M.quiver
    F = M.field
    offs = []
    total = 0
    for i in range(q.n):
        offs.append(total)
        total += L.dim[i] * M.dim[i]
    rows = sum(L.dim[t - 1] * M.dim[s - 1] for s, t in q.arrows)
    d = Mat(F, rows, total)
    r0 = 0
    for a, (s, t) in enumerate(q.arrows):
        Ma, La = M.matrices[a], L.matrices[a]
        ls, lt = L.dim[s - 1], L.dim[t - 1]
        ms, mt = M.dim[s - 1], M.dim[t - 1]
        for r in range(lt):
            for c in range(ms):
                row = d.data[r0 + r * ms + c]
                for k in range(ls):
                    row[offs[s - 1] + k * ms + c] = F.add(
                        row[offs[s - 1] + k * ms + c], La.data[r][k])
                for k in range(mt):
                    row[offs[t - 1] + r * mt + k] = F.sub(
                        row[offs[t - 1] + r * mt + k], Ma.data[k][c])
        r0 += lt * ms
    return d


def _cocycle_from_vector(M, L, vec) -> ExtCocycle:
    F = M.field
    comps = []
    pos = 0
    for s, t in M.quiver.arrows:
        r, c = L.dim[t - 1], M.dim[s - 1]
        m = Mat(F, r, c)
        for rr in range(r):
            m.data[rr] = vec[pos + rr * c: pos + (rr + 1) * c]
        pos += r * c
        comps.append(m)
    return ExtCocycle(M, L, comps)


def ext1_setup(M: Representation, L: Representation):
    """Coboundary image matrix and standard-vector coset representatives.

    Returns (image_matrix, representative_indices): the image of d as
    column vectors in the cocycle space, plus indices of standard basis
    cocycles spanning a complement (a basis of Ext^1 representatives).
    """
    d = _coboundary(M, L)
    image = d  # columns span im(d) inside the cocycle space
    F = M.field
    reps = []
    cur = image
    for i in range(d.rows):
        e = Mat(F, d.rows, 1)
        e.data[i][0] = F.one
        test = hstack(F, [cur, e], rows=d.rows)
        if test.rank() > cur.rank():
            reps.append(i)
            cur = test
    return image, reps


def ext1_basis(M: Representation, L: Representation) -> list[ExtCocycle]:
    if M.quiver != L.quiver or M.field != L.field:
        raise InputError("Ext of incompatible representations")
    image, reps = ext1_setup(M, L)
    F = M.field
    out = []
    for i in reps:
        vec = [F.zero] * image.rows
        vec[i] = F.one
        out.append(_cocycle_from_vector(M, L, vec))
    return out


def ext1_dim(M: Representation, L: Representation) -> int:
    d = _coboundary(M, L)
    return d.rows - d.rank()


def stable_ext1_dim(M: Representation, L: Representation, primes) -> int:
    dims = {p: ext1_dim(reduce_rep(M, p), reduce_rep(L, p)) for p in primes}
    if len(set(dims.values())) != 1:
        raise PrimeInstabilityError(f"Ext^1 dimension varies with prime: {dims}")
    return next(iter(dims.values()))


def middle_term(cocycle: ExtCocycle) -> Representation:
    """Middle term Y of the extension 0 -> L -> Y -> M -> 0 defined by phi."""
    M, L = cocycle.M, cocycle.L
    F = M.field
    dim = tuple(a + b for a, b in zip(L.dim, M.dim))
    mats = []
    for a, (s, t) in enumerate(M.quiver.arrows):
        La, Ma, Pa = L.matrices[a], M.matrices[a], cocycle.components[a]
        if (Pa.rows, Pa.cols) != (L.dim[t - 1], M.dim[s - 1]):
            raise InputError("cocycle component shape mismatch")
        m = Mat(F, dim[t - 1], dim[s - 1])
        for i in range(La.rows):
            m.data[i][:La.cols] = La.data[i][:]
            m.data[i][La.cols:] = Pa.data[i][:]
        for i in range(Ma.rows):
            m.data[La.rows + i][La.cols:] = Ma.data[i][:]
        mats.append(m)
    return Representation(M.quiver, F, dim, mats)


# -- subobjects and quotients ---------------------------------------------

def sub_rep(M: Representation, bases: list) -> tuple[Representation, list]:
    """Subrepresentation spanned by per-vertex column bases.

    Returns (S, inclusion); raises if the given subspaces are not
    arrow-stable.
    """
    F = M.field
    mats = []
    for a, (s, t) in enumerate(M.quiver.arrows):
        img = M.matrices[a].mul(bases[s - 1])
        try:
            mats.append(bases[t - 1].solve(img))
        except ValueError as exc:
            raise InputError("subspaces are not arrow-stable") from exc
    dim = tuple(b.cols for b in bases)
    return Representation(M.quiver, F, dim, mats), list(bases)


def kernel_rep(f: list, M: Representation, N: Representation):
    """Kernel of a morphism f: M -> N, as (K, inclusion into M)."""
    bases = []
    for i in range(M.quiver.n):
        bases.append(f[i].nullspace())
    return sub_rep(M, bases)


def quotient_rep(M: Representation, sub_bases: list):
    """Quotient of M by an arrow-stable subrepresentation.

    Returns (Q, projection maps M_i -> Q_i).
    """
    from .linalg import column_complement
    F = M.field
    comps = [column_complement(F, b) for b in sub_bases]
    full = [hstack(F, [b, c], rows=M.dim[i])
            for i, (b, c) in enumerate(zip(sub_bases, comps))]
    inv = [m.inverse() if m.rows else m for m in full]
    projs = []
    for i in range(M.quiver.n):
        k = sub_bases[i].cols
        pr = Mat(F, M.dim[i] - k, M.dim[i])
        pr.data = [row[:] for row in inv[i].data[k:]]
        projs.append(pr)
    mats = []
    dim = tuple(M.dim[i] - sub_bases[i].cols for i in range(M.quiver.n))
    for a, (s, t) in enumerate(M.quiver.arrows):
        sect = Mat(F, M.dim[s - 1], dim[s - 1])
        k = sub_bases[s - 1].cols
        for r in range(M.dim[s - 1]):
            sect.data[r] = full[s - 1].data[r][k:]
        mats.append(projs[t - 1].mul(M.matrices[a]).mul(sect))
    return Representation(M.quiver, F, dim, mats), projs


def cokernel_rep(f: list, M: Representation, N: Representation):
    """Cokernel of f: M -> N, as (C, projection maps)."""
    F = N.field
    bases = []
    for i in range(N.quiver.n):
        img = f[i]
        red, pivots = img.transpose().rref()
        cols = Mat(F, N.dim[i], len(pivots))
        # row space of f^T = column space of f; re-orthogonalized basis
        for j in range(len(pivots)):
            for r in range(N.dim[i]):
                cols.data[r][j] = red.data[j][r]
        bases.append(cols)
    return quotient_rep(N, bases)


# -- isomorphism testing ---------------------------------------------------

def _battery(q: Quiver, field) -> list[Representation]:
    out = []
    for i in range(1, q.n + 1):
        out.append(simple_rep(q, i, field))
        out.append(projective_rep(q, i, field))
        out.append(injective_rep(q, i, field))
    return out


def fingerprint(M: Representation) -> tuple:
    """Cheap isomorphism invariant: dims + Hom battery + dim End."""
    battery = _battery(M.quiver, M.field)
    dims = []
    for B in battery:
        dims.append(hom_dim(M, B))
        dims.append(hom_dim(B, M))
    return (M.dim, tuple(dims), hom_dim(M, M))


def _generic_invertible(M: Representation, N: Representation, basis) -> bool:
    """Whether some combination of the Hom basis is invertible everywhere.

    The product of vertex determinants of sum_k t_k f_k is a polynomial in
    the t_k; it is nonzero as a polynomial iff an invertible intertwiner
    exists over some field extension, which suffices for isomorphism of
    finite-dimensional modules (Noether-Deuring).
    """
    F = M.field
    k = len(basis)
    one = {(0,) * k: F.one}

    def padd(p1, p2):
        out = dict(p1)
        for e, c in p2.items():
            v = F.add(out.get(e, F.zero), c)
            if F.is_zero(v):
                out.pop(e, None)
            else:
                out[e] = v
        return out

    def pmul(p1, p2):
        out = {}
        for e1, c1 in p1.items():
            for e2, c2 in p2.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = F.add(out.get(e, F.zero), F.mul(c1, c2))
                if F.is_zero(v):
                    out.pop(e, None)
                else:
                    out[e] = v
        return out

    def pneg(p):
        return {e: F.neg(c) for e, c in p.items()}

    total = one
    for i in range(M.quiver.n):
        n = M.dim[i]
        if n == 0:
            continue
        entries = [[{} for _ in range(n)] for _ in range(n)]
        for t, f in enumerate(basis):
            for r in range(n):
                for c in range(n):
                    x = f[i].data[r][c]
                    if not F.is_zero(x):
                        e = tuple(1 if j == t else 0 for j in range(k))
                        entries[r][c] = padd(entries[r][c], {e: x})

        def det(rows, cols):
            if not rows:
                return one
            r = rows[0]
            acc = {}
            for idx, c in enumerate(cols):
                minor = det(rows[1:], cols[:idx] + cols[idx + 1:])
                term = pmul(entries[r][c], minor)
                acc = padd(acc, term if idx % 2 == 0 else pneg(term))
            return acc

        total = pmul(total, det(list(range(n)), list(range(n))))
        if not total:
            return False
    return bool(total)


def is_isomorphic(M: Representation, N: Representation) -> bool:
    if M.quiver != N.quiver or M.field != N.field:
        return False
    if M.dim != N.dim:
        return False
    if M.total_dim == 0:
        return True
    if fingerprint(M) != fingerprint(N):
        return False
    basis = hom_basis(M, N)
    if not basis:
        return False
    return _generic_invertible(M, N, basis)
