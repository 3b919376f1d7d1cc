"""Auslander-Reiten translate and inverse via the Nakayama functor.

tau M is the kernel of nu(P1) -> nu(P0) for a minimal projective
presentation P1 -> P0 -> M -> 0; tau^{-1} is dual, with injective
summands of the input turning into shifted projectives P_i[1].

Maps between sums of projectives (resp. injectives) are expanded in the
path basis Hom(P_u, P_v) = span{paths v -> u}, on which the Nakayama
functor acts path-by-path.
"""

from __future__ import annotations

from .errors import PreconditionError
from .linalg import Mat, hstack, column_complement
from .reps import (ClusterObject, Representation, all_paths, apply_path,
                   cluster_object, cokernel_rep, direct_sum_many, hom_basis,
                   injective_rep, kernel_rep, projective_rep)


# -- tops, radicals, socles ------------------------------------------------

def radical_bases(M: Representation) -> list:
    """Per-vertex column bases of rad M = sum of images of incoming arrows."""
    q, F = M.quiver, M.field
    out = []
    for j in range(1, q.n + 1):
        imgs = [M.matrices[a] for a in q.arrows_into(j)]
        stacked = hstack(F, imgs, rows=M.dim[j - 1]) if imgs else Mat(
            F, M.dim[j - 1], 0)
        red, pivots = stacked.transpose().rref()
        basis = Mat(F, M.dim[j - 1], len(pivots))
        for k in range(len(pivots)):
            for r in range(M.dim[j - 1]):
                basis.data[r][k] = red.data[k][r]
        out.append(basis)
    return out


def top_multiplicities(M: Representation) -> tuple[int, ...]:
    return tuple(M.dim[i] - b.cols for i, b in enumerate(radical_bases(M)))


def socle_bases(M: Representation) -> list:
    """Per-vertex bases of soc M = joint kernel of outgoing arrows."""
    q, F = M.quiver, M.field
    out = []
    for i in range(1, q.n + 1):
        mats = [M.matrices[a] for a in q.arrows_out_of(i)]
        if mats:
            from .linalg import vstack
            out.append(vstack(F, mats, cols=M.dim[i - 1]).nullspace())
        else:
            out.append(Mat.identity(F, M.dim[i - 1]))
    return out


# -- sums of standard modules with block bookkeeping -----------------------

def _proj_sum(q, field, gens):
    """Direct sum of P_u for u in gens, plus per-block basis offsets."""
    paths = all_paths(q)
    rep = direct_sum_many(q, [projective_rep(q, u, field) for u in gens], field)
    offsets = []
    pos = [0] * q.n
    for u in gens:
        offsets.append(tuple(pos))
        for j in range(q.n):
            pos[j] += len(paths[(u, j + 1)])
    return rep, offsets


def _inj_sum(q, field, gens):
    paths = all_paths(q)
    rep = direct_sum_many(q, [injective_rep(q, u, field) for u in gens], field)
    offsets = []
    pos = [0] * q.n
    for u in gens:
        offsets.append(tuple(pos))
        for j in range(q.n):
            pos[j] += len(paths[(j + 1, u)])
    return rep, offsets


# -- covers and envelopes --------------------------------------------------

def projective_cover(M: Representation):
    """Minimal cover: (generator vertices, P0, block offsets, surjection pi)."""
    q, F = M.quiver, M.field
    paths = all_paths(q)
    rads = radical_bases(M)
    gens = []      # vertex of each generator
    gen_vecs = []  # chosen top-lifting vector in M at that vertex
    for i in range(1, q.n + 1):
        comp = column_complement(F, rads[i - 1])
        for c in range(comp.cols):
            gens.append(i)
            gen_vecs.append(Mat(F, M.dim[i - 1], 1,
                                [[comp.data[r][c]] for r in range(M.dim[i - 1])]))
    P0, offsets = _proj_sum(q, F, gens)
    pi = [Mat(F, M.dim[j], P0.dim[j]) for j in range(q.n)]
    for g, (u, v) in enumerate(zip(gens, gen_vecs)):
        for j in range(1, q.n + 1):
            for k, path in enumerate(paths[(u, j)]):
                img = apply_path(M, path, u).mul(v)
                col = offsets[g][j - 1] + k
                for r in range(M.dim[j - 1]):
                    pi[j - 1].data[r][col] = img.data[r][0]
    return gens, P0, offsets, pi


def injective_envelope(M: Representation):
    """Minimal envelope: (socle vertices, I0, block offsets, embedding eps)."""
    q, F = M.quiver, M.field
    paths = all_paths(q)
    socs = socle_bases(M)
    gens = []
    gen_funcs = []  # row functional on M at that vertex
    for i in range(1, q.n + 1):
        basis = socs[i - 1]
        if basis.cols == 0:
            continue
        full = hstack(F, [basis, column_complement(F, basis)],
                      rows=M.dim[i - 1])
        inv = full.inverse() if full.rows else full
        for c in range(basis.cols):
            gens.append(i)
            fn = Mat(F, 1, M.dim[i - 1])
            fn.data[0] = inv.data[c][:]
            gen_funcs.append(fn)
    I0, offsets = _inj_sum(q, F, gens)
    eps = [Mat(F, I0.dim[j], M.dim[j]) for j in range(q.n)]
    for g, (u, fn) in enumerate(zip(gens, gen_funcs)):
        for j in range(1, q.n + 1):
            for k, path in enumerate(paths[(j, u)]):
                row_fn = fn.mul(apply_path(M, path, j))
                row = offsets[g][j - 1] + k
                for c in range(M.dim[j - 1]):
                    eps[j - 1].data[row][c] = row_fn.data[0][c]
    return gens, I0, offsets, eps


# -- Nakayama functor on maps between standard sums ------------------------

def _nu_of_proj_map(q, field, f, gens1, offs1, gens0, offs0):
    """Apply nu to f: (+)P_{gens1} -> (+)P_{gens0}, giving (+)I -> (+)I.

    Block Hom(P_u, P_v) is spanned by paths v -> u; the coefficient of a
    path p is read off at vertex u against the trivial-path generator.
    On injectives the path p acts by chopping itself off the tail.
    """
    paths = all_paths(q)
    I1, ioffs1 = _inj_sum(q, field, gens1)
    I0, ioffs0 = _inj_sum(q, field, gens0)
    nf = [Mat(field, I0.dim[j], I1.dim[j]) for j in range(q.n)]
    for g1, u in enumerate(gens1):
        col_u = offs1[g1][u - 1] + paths[(u, u)].index(())
        for g0, v in enumerate(gens0):
            for p in paths[(v, u)]:
                row_p = offs0[g0][u - 1] + paths[(v, u)].index(p)
                c = f[u - 1].data[row_p][col_u]
                if field.is_zero(c):
                    continue
                lp = len(p)
                for j in range(1, q.n + 1):
                    for k, r in enumerate(paths[(j, u)]):
                        if lp and (lp > len(r) or r[len(r) - lp:] != p):
                            continue
                        rr = r[:len(r) - lp]
                        row = ioffs0[g0][j - 1] + paths[(j, v)].index(rr)
                        col = ioffs1[g1][j - 1] + k
                        nf[j - 1].data[row][col] = field.add(
                            nf[j - 1].data[row][col], c)
    return I1, I0, nf


def _nuinv_of_inj_map(q, field, h, gens0, offs0, gens1, offs1):
    """Apply nu^{-1} to h: (+)I_{gens0} -> (+)I_{gens1}, giving (+)P -> (+)P.

    The coefficient of path p: v -> u in block I_u -> I_v is the entry
    sending basis path p at vertex v to the trivial path; on projectives
    p acts by prepending.
    """
    paths = all_paths(q)
    P0, poffs0 = _proj_sum(q, field, gens0)
    P1, poffs1 = _proj_sum(q, field, gens1)
    nf = [Mat(field, P1.dim[j], P0.dim[j]) for j in range(q.n)]
    for g0, u in enumerate(gens0):
        for g1, v in enumerate(gens1):
            row_triv = offs1[g1][v - 1] + paths[(v, v)].index(())
            for p in paths[(v, u)]:
                col_p = offs0[g0][v - 1] + paths[(v, u)].index(p)
                c = h[v - 1].data[row_triv][col_p]
                if field.is_zero(c):
                    continue
                for j in range(1, q.n + 1):
                    for k, qq in enumerate(paths[(u, j)]):
                        row = poffs1[g1][j - 1] + paths[(v, j)].index(p + qq)
                        col = poffs0[g0][j - 1] + k
                        nf[j - 1].data[row][col] = field.add(
                            nf[j - 1].data[row][col], c)
    return P0, P1, nf


# -- splitting off projective / injective summands -------------------------

def _end_scalar_entry(q, i, g, f, path_index):
    """Entry of g o f in End at the 1-dim trivial-path coordinate."""
    comp = g[i - 1].mul(f[i - 1])
    return comp.data[path_index][path_index]


def split_projective_summands(M: Representation):
    """Decompose M = (+) P_i^{c_i} (+) M' with M' projective-free.

    Returns (multiplicity tuple, M').  Uses the trace pairing
    Hom(M, P_i) x Hom(P_i, M) -> End(P_i) = k (acyclicity makes the
    endomorphism ring of each P_i one-dimensional): a nonzero value
    yields an idempotent splitting, which is peeled off and repeated.
    """
    q, F = M.quiver, M.field
    paths = all_paths(q)
    mults = [0] * q.n
    cur = M
    changed = True
    while changed:
        changed = False
        for i in range(1, q.n + 1):
            P = projective_rep(q, i, F)
            idx = paths[(i, i)].index(())
            fs = hom_basis(P, cur)
            gs = hom_basis(cur, P)
            found = None
            for f in fs:
                for g in gs:
                    c = _end_scalar_entry(q, i, g, f, idx)
                    if not F.is_zero(c):
                        found = (f, g, c)
                        break
                if found:
                    break
            if found:
                f, g, c = found
                g = [m.scale(F.inv(c)) for m in g]
                cur, _ = kernel_rep(g, cur, P)
                mults[i - 1] += 1
                changed = True
    return tuple(mults), cur


def split_injective_summands(M: Representation):
    """Decompose M = (+) I_i^{c_i} (+) M' with M' injective-free."""
    q, F = M.quiver, M.field
    paths = all_paths(q)
    mults = [0] * q.n
    cur = M
    changed = True
    while changed:
        changed = False
        for i in range(1, q.n + 1):
            I = injective_rep(q, i, F)
            idx = paths[(i, i)].index(())
            fs = hom_basis(I, cur)
            gs = hom_basis(cur, I)
            found = None
            for f in fs:
                for g in gs:
                    c = _end_scalar_entry(q, i, g, f, idx)
                    if not F.is_zero(c):
                        found = (f, g, c)
                        break
                if found:
                    break
            if found:
                f, g, c = found
                g = [m.scale(F.inv(c)) for m in g]
                cur, _ = kernel_rep(g, cur, I)
                mults[i - 1] += 1
                changed = True
    return tuple(mults), cur


def has_projective_summand(M: Representation) -> bool:
    mults, _ = split_projective_summands(M)
    return any(mults)


# -- the translate and its inverse ----------------------------------------

def minimal_presentation(M: Representation):
    """Minimal P1 -> P0 -> M -> 0; returns (gens1, gens0, map, offsets)."""
    q, F = M.quiver, M.field
    gens0, P0, offs0, pi = projective_cover(M)
    K, incl = kernel_rep(pi, P0, M)
    gens1, P1, offs1, rho = projective_cover(K)
    f = [incl[j].mul(rho[j]) for j in range(q.n)]
    return gens1, offs1, gens0, offs0, f


def ar_translate(M: Representation) -> Representation:
    """tau M = Ker(nu P1 -> nu P0); M must have no projective summands."""
    if M.is_zero():
        return M
    if has_projective_summand(M):
        raise PreconditionError("module has a projective direct summand")
    q, F = M.quiver, M.field
    gens1, offs1, gens0, offs0, f = minimal_presentation(M)
    I1, I0, nf = _nu_of_proj_map(q, F, f, gens1, offs1, gens0, offs0)
    tau, _ = kernel_rep(nf, I1, I0)
    return tau


def ar_inverse(M: Representation) -> ClusterObject:
    """tau^{-1} as a cluster object: injective summands become P_i[1]."""
    q, F = M.quiver, M.field
    if M.is_zero():
        return cluster_object(M)
    inj_mults, core = split_injective_summands(M)
    if core.is_zero():
        return cluster_object(core, inj_mults)
    gens0, I0, offs0, eps = injective_envelope(core)
    C, projs = cokernel_rep(eps, core, I0)
    gens1, I1, offs1, eps1 = injective_envelope(C)
    h = [eps1[j].mul(projs[j]) for j in range(q.n)]
    P0, P1, nh = _nuinv_of_inj_map(q, F, h, gens0, offs0, gens1, offs1)
    tinv, _ = cokernel_rep(nh, P0, P1)
    return cluster_object(tinv, inj_mults)


def hom_side_middle_term(g: list, L: Representation,
                         tau_M: Representation) -> ClusterObject:
    """Middle term for g in Hom(L, tau M): Ker g (+) tau^{-1}(Coker g).

    Injective summands of the cokernel contribute shifted projectives;
    this is the hereditary mapping-cone splitting.
    """
    K, _ = kernel_rep(g, L, tau_M)
    C, _ = cokernel_rep(g, L, tau_M)
    rest = ar_inverse(C)
    from .reps import direct_sum
    return ClusterObject(direct_sum(K, rest.module), rest.shifted)
