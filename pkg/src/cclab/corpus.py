"""Stock desk-scale modules used by tests, demos and the compare command."""

from __future__ import annotations

from .errors import InputError
from .linalg import QQ
from .quiver import Quiver, d4tilde_quiver, kronecker_quiver
from .reps import Representation, make_rep


def linear_an_quiver_check(q: Quiver) -> bool:
    """Whether q is the linearly oriented A_n quiver 1 -> 2 -> ... -> n."""
    want = tuple((i, i + 1) for i in range(1, q.n))
    return q.arrows == want


def interval_module(q: Quiver, lo: int, hi: int, field=QQ) -> Representation:
    """Interval module over linear A_n: dimension 1 on [lo, hi], identity maps."""
    if not linear_an_quiver_check(q):
        raise InputError("interval modules require a linearly oriented A_n quiver")
    if not 1 <= lo <= hi <= q.n:
        raise InputError("bad interval")
    dim = tuple(1 if lo <= v <= hi else 0 for v in range(1, q.n + 1))
    mats = [[[1]] if lo <= s and t <= hi else [] for s, t in q.arrows]
    return make_rep(q, dim, mats, field)


def all_interval_modules(q: Quiver, field=QQ):
    return [interval_module(q, lo, hi, field)
            for lo in range(1, q.n + 1) for hi in range(lo, q.n + 1)]


def kronecker_regular(alpha: int, beta: int, field=QQ) -> Representation:
    """Regular module of dimension (1,1) with arrow scalars (alpha, beta)."""
    if alpha == 0 and beta == 0:
        raise InputError("arrow scalars cannot both vanish")
    return make_rep(kronecker_quiver(), (1, 1), [[[alpha]], [[beta]]], field)


def d4tilde_tube_simples(field=QQ):
    """A pair of regular simple modules in a rank-2 tube of the D4-tilde star.

    Supported on complementary arm pairs, dimension vectors (1,1,0,0,1)
    and (0,0,1,1,1) with the center last; both have trivial endomorphism
    ring and a one-dimensional extension space in each direction, which
    the test suite verifies before any flagship computation.
    """
    q = d4tilde_quiver()
    e1 = make_rep(q, (1, 1, 0, 0, 1), [[[1]], [[1]], [], []], field)
    e2 = make_rep(q, (0, 0, 1, 1, 1), [[], [], [[1]], [[1]]], field)
    return e1, e2
