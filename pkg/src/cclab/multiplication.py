"""Stratified verification of the cluster multiplication formulas.

Projectivized morphism spaces are enumerated pointwise over each sample
prime, middle terms are bucketed by a homological fingerprint of their
isomorphism class, bucket sizes are interpolated into counting
polynomials, and each stratum contributes chi = P(1) times the character
of a rational-form representative.  All final identities are exact
Laurent-polynomial equalities.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .artranslate import (ar_translate, has_projective_summand,
                          hom_side_middle_term, split_projective_summands,
                          top_multiplicities)
from .character import cc, describe
from .errors import (CCLabError, ConfigurationError, PreconditionError,
                     PrimeInstabilityError)
from .grassmannian import fit_and_verify
from .laurent import LaurentPolynomial
from .linalg import GF, Mat, QQ, hstack
from .reps import (ClusterObject, ExtCocycle, Representation, _coboundary,
                   _cocycle_from_vector, cluster_object, cokernel_rep,
                   direct_sum_many, ext1_setup, fingerprint, hom_basis,
                   injective_rep, kernel_rep, middle_term, projective_rep,
                   reduce_rep, stable_ext1_dim, stable_hom_dim)


@dataclass
class StratumReport:
    middle_term: ClusterObject
    chi: int
    side: str  # ext | hom | proj-shift-hom | proj-shift-inj

    def describe(self) -> str:
        return f"{describe(self.middle_term)}: chi={self.chi} ({self.side})"


@dataclass
class VerificationReport:
    lhs: LaurentPolynomial
    rhs: LaurentPolynomial
    strata: list
    verdict: bool
    label: str = ""


def _projective_points(p: int, d: int):
    """Points of P^{d-1}(F_p), normalized to first nonzero coordinate 1."""
    for lead in range(d):
        for rest in product(range(p), repeat=d - lead - 1):
            yield (0,) * lead + (1,) + rest


def _bucket_key(Y: ClusterObject):
    return (Y.shifted, fingerprint(Y.module))


def _run_strata(middle_at_prime, middle_at_qq, d: int, primes, side: str):
    """Shared enumerate/bucket/interpolate loop for one projectivized space.

    middle_at_prime(p) returns a callable mapping a coefficient tuple over
    F_p to the middle-term ClusterObject; middle_at_qq builds the same
    object over the rationals from lifted integer coefficients.
    """
    if d == 0:
        return []
    counts: dict = {}
    witnesses: dict = {}
    for p in primes:
        mk = middle_at_prime(p)
        for c in _projective_points(p, d):
            Y = mk(c)
            key = _bucket_key(Y)
            counts.setdefault(key, {})[p] = counts.setdefault(key, {}).get(p, 0) + 1
            witnesses.setdefault(key, (p, []))
            if witnesses[key][0] == p:
                witnesses[key][1].append(c)
    reports = []
    total = 0
    for key in sorted(counts):
        by_prime = {p: counts[key].get(p, 0) for p in primes}
        poly = fit_and_verify(by_prime, max(d - 1, 0))
        chi = poly(1)
        rep = _find_representative(witnesses[key][1], middle_at_qq, key, primes)
        reports.append(StratumReport(rep, chi, side))
        total += chi
    if total != d:
        raise CCLabError(
            f"stratum Euler characteristics sum to {total}, expected {d}")
    return reports


def _find_representative(points, middle_at_qq, key, primes) -> ClusterObject:
    """Rational-form middle term whose reduction matches the bucket at
    every sample prime."""
    for c in sorted(points, key=lambda t: (max(t), t)):
        Y = middle_at_qq(tuple(int(x) for x in c))
        if Y.shifted != key[0]:
            continue
        try:
            ok = all(fingerprint(reduce_rep(Y.module, p)) == key[1]
                     for p in primes)
        except ZeroDivisionError:
            ok = False
        if ok:
            return Y
    raise PrimeInstabilityError(
        "no projective-space point lifts to a stable representative")


def _reduce_or_config_error(M: Representation, p: int) -> Representation:
    try:
        return reduce_rep(M, p)
    except ZeroDivisionError as exc:
        raise ConfigurationError(
            f"prime {p} collides with matrix denominators") from exc


# -- the ext-side stratification ------------------------------------------

def stratify_ext_side(M: Representation, L: Representation, primes,
                      side: str = "ext"):
    """Strata of P Ext^1(M, L) by middle-term class, with chi per class."""
    d = stable_ext1_dim(M, L, primes)
    if d == 0:
        return []
    image_qq, rep_indices = ext1_setup(M, L)

    def basis_cocycles(field, Mf, Lf):
        out = []
        for i in rep_indices:
            vec = [field.zero] * image_qq.rows
            vec[i] = field.one
            out.append(_cocycle_from_vector(Mf, Lf, vec))
        return out

    def middle_at_prime(p):
        F = GF(p)
        Mp = _reduce_or_config_error(M, p)
        Lp = _reduce_or_config_error(L, p)
        image = _coboundary(Mp, Lp)
        probe = Mat(F, image.rows, d)
        for j, i in enumerate(rep_indices):
            probe.data[i][j] = F.one
        if (hstack(F, [image, probe], rows=image.rows).rank()
                != image.rank() + d):
            raise PrimeInstabilityError(
                f"Ext^1 representatives degenerate mod {p}")
        basis = basis_cocycles(F, Mp, Lp)

        def mk(coeffs):
            comps = [m.scale(coeffs[0]) for m in basis[0].components]
            for k in range(1, d):
                comps = [a.add(b.scale(coeffs[k]))
                         for a, b in zip(comps, basis[k].components)]
            return cluster_object(middle_term(ExtCocycle(Mp, Lp, comps)))
        return mk

    basis_qq = basis_cocycles(QQ, M, L)

    def middle_at_qq(coeffs):
        comps = [m.scale(coeffs[0]) for m in basis_qq[0].components]
        for k in range(1, d):
            comps = [a.add(b.scale(coeffs[k]))
                     for a, b in zip(comps, basis_qq[k].components)]
        return cluster_object(middle_term(ExtCocycle(M, L, comps)))

    return _run_strata(middle_at_prime, middle_at_qq, d, primes, side)


# -- the hom-side stratifications -----------------------------------------

def _stratify_hom_space(L: Representation, T: Representation, primes,
                        middle_from_map, side: str):
    """Strata of P Hom(L, T) with a caller-chosen middle-term rule."""
    d = stable_hom_dim(L, T, primes)
    if d == 0:
        return []
    basis_qq = hom_basis(L, T)
    if len(basis_qq) != d:
        raise PrimeInstabilityError("rational Hom basis size disagrees")

    def combine(basis, coeffs):
        g = [m.scale(coeffs[0]) for m in basis[0]]
        for k in range(1, d):
            g = [a.add(b.scale(coeffs[k])) for a, b in zip(g, basis[k])]
        return g

    def middle_at_prime(p):
        F = GF(p)
        Lp = _reduce_or_config_error(L, p)
        Tp = _reduce_or_config_error(T, p)
        basis_p = [tuple(Mat(F, m.rows, m.cols, m.data) for m in f)
                   for f in basis_qq]
        vecs = Mat(F, sum(m.rows * m.cols for m in basis_p[0]) or 1, d)
        for j, f in enumerate(basis_p):
            flat = [x for m in f for row in m.data for x in row] or [F.zero]
            for i, x in enumerate(flat):
                vecs.data[i][j] = x
        if vecs.rank() != d:
            raise PrimeInstabilityError(f"Hom basis degenerates mod {p}")

        def mk(coeffs):
            return middle_from_map(combine(basis_p, coeffs), Lp, Tp)
        return mk

    def middle_at_qq(coeffs):
        return middle_from_map(combine(basis_qq, coeffs), L, T)

    return _run_strata(middle_at_prime, middle_at_qq, d, primes, side)


def stratify_hom_side(L: Representation, M: Representation, primes,
                      side: str = "hom"):
    """Strata of P Hom(L, tau M); middle term Ker g (+) tau^{-1}(Coker g)."""
    if has_projective_summand(M):
        raise PreconditionError("module has a projective direct summand")
    tau = ar_translate(M)
    return _stratify_hom_space(L, tau, primes, hom_side_middle_term, side)


def _proj_shift_middle(f, P: Representation, M: Representation) -> ClusterObject:
    """Middle term Coker f (+) (Ker f)[1] for f: P -> M with P projective."""
    K, _ = kernel_rep(f, P, M)
    C, _ = cokernel_rep(f, P, M)
    mults = top_multiplicities(K)
    q = K.quiver
    expected = [0] * q.n
    for i, m in enumerate(mults):
        if m:
            Pi = projective_rep(q, i + 1, K.field)
            for j in range(q.n):
                expected[j] += m * Pi.dim[j]
    if tuple(expected) != K.dim:
        raise CCLabError("kernel of a map out of a projective is not projective")
    return ClusterObject(C, mults)


# -- the verification operations ------------------------------------------

def _x_monomial(n: int, shifted) -> LaurentPolynomial:
    return LaurentPolynomial.monomial(tuple(shifted))


def verify_xx1(L: Representation, M: Representation, primes) -> VerificationReport:
    """dim Ext^1(M,L) * X_L X_M = sum over strata of both sides."""
    if has_projective_summand(M):
        raise PreconditionError(
            "second argument must have no projective direct summands")
    d = stable_ext1_dim(M, L, primes)
    if d == 0:
        raise PreconditionError("Ext^1(M, L) = 0: the identity is vacuous")
    strata = stratify_ext_side(M, L, primes) + stratify_hom_side(L, M, primes)
    lhs = (cc(L, primes).value * cc(M, primes).value).scale(d)
    rhs = LaurentPolynomial.zero(L.quiver.n)
    for s in strata:
        rhs = rhs + cc(s.middle_term, primes).value.scale(s.chi)
    return VerificationReport(lhs, rhs, strata, lhs == rhs,
                              label=f"xx1: {d} * X_L X_M")


def verify_xx2(P: Representation, M: Representation, primes) -> VerificationReport:
    """dim Hom(P,M) * X_M X_{P[1]} = Hom(M,I)-strata + Hom(P,M)-strata."""
    mults, rest = split_projective_summands(P)
    if not rest.is_zero() or not any(mults):
        raise PreconditionError("first argument must be a nonzero projective")
    d = stable_hom_dim(P, M, primes)
    if d == 0:
        raise PreconditionError("Hom(P, M) = 0: the identity is vacuous")
    q = P.quiver
    I = direct_sum_many(q, [injective_rep(q, i + 1, P.field)
                            for i, m in enumerate(mults) for _ in range(m)],
                        P.field)
    if stable_hom_dim(M, I, primes) != d:
        raise CCLabError("dim Hom(M, nu P) disagrees with dim Hom(P, M)")
    strata = _stratify_hom_space(M, I, primes, hom_side_middle_term,
                                 "proj-shift-inj")
    strata += _stratify_hom_space(P, M, primes, _proj_shift_middle,
                                  "proj-shift-hom")
    lhs = (cc(M, primes).value * _x_monomial(q.n, mults)).scale(d)
    rhs = LaurentPolynomial.zero(q.n)
    for s in strata:
        rhs = rhs + cc(s.middle_term, primes).value.scale(s.chi)
    return VerificationReport(lhs, rhs, strata, lhs == rhs,
                              label=f"xx2: {d} * X_M X_P[1]")


def verify_unified(M, N, primes) -> VerificationReport:
    """Both direction-wise stratifications against (d1+d2) * X_M X_N."""
    M = M if isinstance(M, ClusterObject) else cluster_object(M)
    N = N if isinstance(N, ClusterObject) else cluster_object(N)
    m_shift, n_shift = any(M.shifted), any(N.shifted)
    if m_shift and not M.module.is_zero() or n_shift and not N.module.is_zero():
        raise PreconditionError(
            "mixed module/shifted operands are not supported")
    if m_shift or n_shift:
        if m_shift and n_shift:
            raise PreconditionError(
                "both operands shifted: extension space vanishes")
        shifted = M if m_shift else N
        module = N.module if m_shift else M.module
        q = module.quiver
        P = direct_sum_many(q, [projective_rep(q, i + 1, module.field)
                                for i, k in enumerate(shifted.shifted)
                                for _ in range(k)], module.field)
        rep = verify_xx2(P, module, primes)
        rep.label = "unified (via shifted reduction): " + rep.label
        return rep
    A, B = M.module, N.module
    d1 = stable_ext1_dim(A, B, primes)
    d2 = stable_ext1_dim(B, A, primes)
    if d1 + d2 == 0:
        raise PreconditionError("Ext^1 in the cluster category vanishes")
    strata = []
    if d1:
        strata += stratify_ext_side(A, B, primes)
        strata += stratify_hom_side(B, A, primes)
    if d2:
        strata += stratify_ext_side(B, A, primes)
        strata += stratify_hom_side(A, B, primes)
    lhs = (cc(A, primes).value * cc(B, primes).value).scale(d1 + d2)
    rhs = LaurentPolynomial.zero(A.quiver.n)
    for s in strata:
        rhs = rhs + cc(s.middle_term, primes).value.scale(s.chi)
    return VerificationReport(lhs, rhs, strata, lhs == rhs,
                              label=f"unified: {d1 + d2} * X_M X_N")
