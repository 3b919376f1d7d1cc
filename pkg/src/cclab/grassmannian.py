"""Quiver-Grassmannian point counting and Euler characteristics.

Points are counted over several prime fields, a counting polynomial in q
is interpolated through the counts, verified at held-out primes, and the
Euler characteristic is read off as P(1).  Non-polynomial behavior is an
explicit error, never a silent value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .errors import ConfigurationError, InputError, NotPolynomialCountError
from .linalg import GF, Mat, hstack
from .reps import Representation, reduce_rep


@dataclass(frozen=True)
class CountingPolynomial:
    """Integer polynomial in q, coefficients in ascending degree."""

    coefficients: tuple[int, ...]

    def __call__(self, q: int) -> int:
        total = 0
        for c in reversed(self.coefficients):
            total = total * q + c
        return total

    def degree(self) -> int:
        return len(self.coefficients) - 1 if self.coefficients else -1


def subspace_bases(field: GF, d: int, k: int):
    """All k-dim subspaces of F_p^d as reduced column-echelon bases.

    Pivot rows are chosen among the d coordinates; free entries range over
    F_p.  Each subspace appears exactly once.
    """
    if k == 0:
        yield Mat(field, d, 0)
        return
    p = field.p
    for pivots in combinations(range(d), k):
        free_pos = []
        for j, pr in enumerate(pivots):
            for r in range(pr + 1, d):
                if r not in pivots:
                    free_pos.append((r, j))
        for vals in product(range(p), repeat=len(free_pos)):
            m = Mat(field, d, k)
            for j, pr in enumerate(pivots):
                m.data[pr][j] = field.one
            for (r, j), v in zip(free_pos, vals):
                m.data[r][j] = v
            yield m


def _contained_in(field, big: Mat, small: Mat) -> bool:
    """Whether the column span of `small` lies inside that of `big`."""
    if small.cols == 0:
        return True
    if big.cols == 0:
        return small.is_zero()
    return hstack(field, [big, small], rows=big.rows).rank() == big.rank()


def count_subreps(M: Representation, e, p: int) -> int:
    """Number of subrepresentations of dimension vector e over F_p."""
    q = M.quiver
    if len(e) != q.n:
        raise InputError("dimension vector length mismatch")
    if any(ei > di or ei < 0 for ei, di in zip(e, M.dim)):
        raise InputError("target dimension vector exceeds the module")
    Mp = reduce_rep(M, p)
    F = Mp.field
    count = 0
    choices = [list(subspace_bases(F, Mp.dim[i], e[i])) for i in range(q.n)]
    for tup in product(*choices):
        ok = True
        for a, (s, t) in enumerate(q.arrows):
            img = Mp.matrices[a].mul(tup[s - 1])
            if not _contained_in(F, tup[t - 1], img):
                ok = False
                break
        if ok:
            count += 1
    return count


def interpolate_counts(points, degree_bound: int) -> CountingPolynomial:
    """Lagrange interpolation through (prime, count) pairs; must be integral."""
    xs = [x for x, _ in points]
    ys = [y for _, y in points]
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        # basis polynomial for node i, expanded coefficient-wise
        num = [Fraction(1)]
        den = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            num = [Fraction(0)] + num[:]
            for k in range(len(num) - 1):
                num[k] -= xs[j] * num[k + 1]
            den *= xs[i] - xs[j]
        for k in range(len(num)):
            coeffs[k] += Fraction(ys[i]) * num[k] / den
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if any(c.denominator != 1 for c in coeffs):
        raise NotPolynomialCountError("interpolant has non-integer coefficients")
    if len(coeffs) - 1 > degree_bound:
        raise NotPolynomialCountError("interpolant exceeds its degree bound")
    return CountingPolynomial(tuple(int(c) for c in coeffs))


def fit_and_verify(counts_by_prime: dict, degree_bound: int) -> CountingPolynomial:
    """Fit a polynomial on the first degree_bound+1 primes, verify on the rest."""
    primes = sorted(counts_by_prime)
    if len(primes) < degree_bound + 2:
        raise ConfigurationError(
            f"need at least {degree_bound + 2} primes, have {len(primes)}")
    fit = [(p, counts_by_prime[p]) for p in primes[:degree_bound + 1]]
    poly = interpolate_counts(fit, degree_bound)
    for p in primes[degree_bound + 1:]:
        if poly(p) != counts_by_prime[p]:
            raise NotPolynomialCountError(
                f"count at verification prime {p} is {counts_by_prime[p]}, "
                f"polynomial predicts {poly(p)}")
    return poly


def grassmannian_degree_bound(dim, e) -> int:
    return sum(ei * (di - ei) for di, ei in zip(dim, e))


def euler_char_grassmannian(M: Representation, e, primes) -> int:
    """chi(Gr_e M) as P(1) of the verified counting polynomial."""
    bound = grassmannian_degree_bound(M.dim, e)
    counts = {p: count_subreps(M, e, p) for p in sorted(primes)}
    poly = fit_and_verify(counts, bound)
    return poly(1)


_PROFILE_CACHE: dict = {}


def _profile_key(M: Representation, primes):
    return (M.quiver.n, M.quiver.arrows, M.dim,
            tuple(tuple(tuple(row) for row in m.data) for m in M.matrices),
            repr(M.field), tuple(sorted(primes)))


def grassmannian_profile(M: Representation, primes) -> dict:
    """chi(Gr_e M) for every e <= dim M, zero entries omitted."""
    key = _profile_key(M, primes)
    hit = _PROFILE_CACHE.get(key)
    if hit is None:
        hit = {}
        for e in product(*[range(d + 1) for d in M.dim]):
            chi = euler_char_grassmannian(M, e, primes)
            if chi:
                hit[e] = chi
        _PROFILE_CACHE[key] = hit
    return dict(hit)
