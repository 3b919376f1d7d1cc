import pytest

from cclab.errors import (ConfigurationError, InputError,
                          NotPolynomialCountError)
from cclab.grassmannian import (CountingPolynomial, count_subreps,
                                euler_char_grassmannian, fit_and_verify,
                                grassmannian_profile, interpolate_counts,
                                subspace_bases)
from cclab.linalg import GF
from cclab.quiver import a2_quiver
from cclab.reps import direct_sum, projective_rep, simple_rep, zero_rep


def test_subspace_bases_counts_gaussian():
    F = GF(3)
    # number of k-subspaces of F_3^3: 1, 13, 13, 1
    assert sum(1 for _ in subspace_bases(F, 3, 0)) == 1
    assert sum(1 for _ in subspace_bases(F, 3, 1)) == 13
    assert sum(1 for _ in subspace_bases(F, 3, 2)) == 13
    assert sum(1 for _ in subspace_bases(F, 3, 3)) == 1


def test_count_zero_subrep():
    q = a2_quiver()
    assert count_subreps(projective_rep(q, 1), (0, 0), 5) == 1


def test_count_unique_submodule_of_p1():
    q = a2_quiver()
    for p in (3, 5, 7):
        assert count_subreps(projective_rep(q, 1), (0, 1), p) == 1


def test_count_lines_at_sink():
    q = a2_quiver()
    s2 = simple_rep(q, 2)
    M = direct_sum(s2, s2)
    for p in (3, 5, 7):
        assert count_subreps(M, (0, 1), p) == p + 1


def test_count_rejects_oversized_vector():
    q = a2_quiver()
    with pytest.raises(InputError):
        count_subreps(simple_rep(q, 1), (2, 0), 5)


def test_euler_char_examples(primes):
    q = a2_quiver()
    p1 = projective_rep(q, 1)
    assert euler_char_grassmannian(p1, (0, 1), primes) == 1
    assert euler_char_grassmannian(p1, (1, 0), primes) == 0
    s2 = simple_rep(q, 2)
    assert euler_char_grassmannian(direct_sum(s2, s2), (0, 1), primes) == 2


def test_profile_examples(primes):
    q = a2_quiver()
    assert grassmannian_profile(simple_rep(q, 1), primes) == {
        (0, 0): 1, (1, 0): 1}
    assert grassmannian_profile(projective_rep(q, 1), primes) == {
        (0, 0): 1, (0, 1): 1, (1, 1): 1}
    assert grassmannian_profile(zero_rep(q), primes) == {(0, 0): 1}


def test_profile_total_count_consistency(primes):
    """The per-e counts at one prime sum to the total submodule count."""
    q = a2_quiver()
    M = projective_rep(q, 1)
    p = primes[0]
    total = sum(count_subreps(M, e, p)
                for e in [(0, 0), (1, 0), (0, 1), (1, 1)])
    assert total == 3  # 0, S2, P1 itself


def test_counting_polynomial_evaluation():
    poly = CountingPolynomial((1, 1))  # 1 + q
    assert poly(5) == 6 and poly(1) == 2 and poly.degree() == 1


def test_interpolation_integer_fit():
    poly = interpolate_counts([(2, 1), (3, 2)], 1)  # q - 1
    assert poly.coefficients == (-1, 1)


def test_interpolation_rejects_non_integer():
    with pytest.raises(NotPolynomialCountError):
        interpolate_counts([(2, 0), (4, 1)], 1)  # slope 1/2


def test_fit_and_verify_flags_mismatch():
    counts = {23: 24, 29: 30, 31: 33}  # last count breaks q+1
    with pytest.raises(NotPolynomialCountError):
        fit_and_verify(counts, 1)


def test_fit_and_verify_needs_enough_primes():
    with pytest.raises(ConfigurationError):
        fit_and_verify({23: 1, 29: 1}, 1)
