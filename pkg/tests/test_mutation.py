import pytest

from cclab.corpus import all_interval_modules
from cclab.character import cc
from cclab.errors import InputError
from cclab.mutation import (apply_mutations, enumerate_cluster_variables,
                            exchange_matrix, initial_seed, mutate)
from cclab.quiver import a2_quiver, a3_quiver, kronecker_quiver
from cclab.reps import ClusterObject, cluster_object, zero_rep


def test_exchange_matrix_signs():
    assert exchange_matrix(a2_quiver()) == ((0, 1), (-1, 0))
    assert exchange_matrix(kronecker_quiver()) == ((0, 2), (-2, 0))


def test_mutation_is_involutive():
    for q in (a2_quiver(), a3_quiver(), kronecker_quiver()):
        s = initial_seed(q)
        s = apply_mutations(s, [1, 2, 1])  # move off the initial seed first
        for k in range(1, q.n + 1):
            assert mutate(mutate(s, k), k) == s


def test_a2_first_step():
    s = mutate(initial_seed(a2_quiver()), 1)
    assert str(s.cluster[0]) == "x1^-1 + x1^-1*x2"


def test_kronecker_first_step():
    s = mutate(initial_seed(kronecker_quiver()), 1)
    assert str(s.cluster[0]) == "x1^-1 + x1^-1*x2^2"


def test_invalid_direction():
    with pytest.raises(InputError):
        mutate(initial_seed(a2_quiver()), 3)


def test_a2_pentagon_closure():
    variables, stable = enumerate_cluster_variables(a2_quiver(), 5,
                                                    report_stable=True)
    assert stable
    got = {str(v) for v in variables}
    assert got == {
        "x1", "x2", "x1^-1 + x1^-1*x2", "x2^-1 + x1*x2^-1",
        "x1^-1*x2^-1 + x1^-1 + x2^-1",
    }


def test_depth_zero():
    variables = enumerate_cluster_variables(a3_quiver(), 0)
    assert {str(v) for v in variables} == {"x1", "x2", "x3"}


def test_a3_nine_variables():
    variables, stable = enumerate_cluster_variables(a3_quiver(), 6,
                                                    report_stable=True)
    assert stable and len(variables) == 9


def test_kronecker_does_not_stabilize():
    _, stable = enumerate_cluster_variables(kronecker_quiver(), 4,
                                            report_stable=True)
    assert not stable


def test_variables_laurent_positive():
    for v in enumerate_cluster_variables(a3_quiver(), 6):
        assert all(c > 0 for c in v.terms.values())


def test_oracle_matches_characters_a2_a3(primes):
    for q, depth in ((a2_quiver(), 5), (a3_quiver(), 6)):
        oracle = {str(v) for v in enumerate_cluster_variables(q, depth)}
        objs = [cluster_object(m) for m in all_interval_modules(q)]
        objs += [ClusterObject(zero_rep(q),
                               tuple(1 if j == i else 0 for j in range(q.n)))
                 for i in range(q.n)]
        images = {str(cc(o, primes).value) for o in objs}
        assert oracle == images
