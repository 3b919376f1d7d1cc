"""Independent seed-mutation engine, used as ground truth for cluster
variables of small quivers.

Cluster variables are carried as exact Laurent polynomials in the
initial variables; every mutation step performs an explicit exact
division, so any arithmetic slip surfaces as a hard error instead of a
wrong value.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .laurent import LaurentPolynomial, divide_exact
from .quiver import Quiver


@dataclass(frozen=True)
class Seed:
    bmatrix: tuple[tuple[int, ...], ...]  # skew-symmetric exchange matrix
    cluster: tuple[LaurentPolynomial, ...]

    @property
    def n(self) -> int:
        return len(self.cluster)


def exchange_matrix(q: Quiver) -> tuple[tuple[int, ...], ...]:
    """b_ij = #(arrows i->j) - #(arrows j->i)."""
    n = q.n
    b = [[0] * n for _ in range(n)]
    for s, t in q.arrows:
        b[s - 1][t - 1] += 1
        b[t - 1][s - 1] -= 1
    return tuple(tuple(row) for row in b)


def initial_seed(q: Quiver) -> Seed:
    n = q.n
    cluster = tuple(LaurentPolynomial.variable(n, i) for i in range(1, n + 1))
    return Seed(exchange_matrix(q), cluster)


def mutate(seed: Seed, k: int) -> Seed:
    """Fomin-Zelevinsky mutation in direction k (1-indexed)."""
    n = seed.n
    if not 1 <= k <= n:
        raise InputError(f"mutation direction {k} out of range")
    kk = k - 1
    b = seed.bmatrix
    nb = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == kk or j == kk:
                nb[i][j] = -b[i][j]
            else:
                nb[i][j] = b[i][j] + (abs(b[i][kk]) * b[kk][j]
                                      + b[i][kk] * abs(b[kk][j])) // 2
    plus = LaurentPolynomial.one(n)
    minus = LaurentPolynomial.one(n)
    for i in range(n):
        if b[i][kk] > 0:
            plus = plus * seed.cluster[i] ** b[i][kk]
        elif b[i][kk] < 0:
            minus = minus * seed.cluster[i] ** (-b[i][kk])
    new_var = divide_exact(plus + minus, seed.cluster[kk])
    cluster = tuple(new_var if i == kk else seed.cluster[i] for i in range(n))
    return Seed(tuple(tuple(r) for r in nb), cluster)


def apply_mutations(seed: Seed, directions) -> Seed:
    for k in directions:
        seed = mutate(seed, k)
    return seed


def _seed_key(seed: Seed):
    return (seed.bmatrix, tuple(sorted(str(x) for x in seed.cluster)))


def enumerate_cluster_variables(q: Quiver, depth: int,
                                report_stable: bool = False):
    """Breadth-first mutation closure up to the given depth.

    Variables are deduplicated by canonical form.  With report_stable the
    return value is (variables, stabilized): stabilized is False when the
    final layer still produced new variables, i.e. the variable set was
    plausibly truncated by the depth cutoff.
    """
    if depth < 0:
        raise InputError("depth must be non-negative")
    start = initial_seed(q)
    variables = {str(x): x for x in start.cluster}
    seen = {_seed_key(start)}
    layer = [start]
    stabilized = True
    for step in range(depth):
        next_layer = []
        grew = False
        for seed in layer:
            for k in range(1, q.n + 1):
                new = mutate(seed, k)
                key = _seed_key(new)
                if key in seen:
                    continue
                seen.add(key)
                next_layer.append(new)
                for x in new.cluster:
                    s = str(x)
                    if s not in variables:
                        variables[s] = x
                        grew = True
        if step == depth - 1 and grew:
            stabilized = False
        layer = next_layer
        if not layer:
            break
    vars_out = [variables[k] for k in sorted(variables)]
    if report_stable:
        return vars_out, stabilized
    return vars_out
