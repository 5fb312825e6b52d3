import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quandlebounds.modp import (
    MatrixModP,
    all_vectors,
    check_prime,
    inv_mod,
    is_prime,
    is_quadratic_residue,
    kernel_basis,
    legendre,
    pow_mod,
    shifted_squares,
    span,
    sqrt_mod,
)

PRIMES_TO_23 = [3, 5, 7, 11, 13, 17, 19, 23]


def test_primality_by_trial_division():
    small = [n for n in range(60) if is_prime(n)]
    assert small == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
    assert check_prime(32749) == 32749


@pytest.mark.parametrize("bad", [2, 4, 9, 1, 0, -3, 1 << 15, 32771, "5"])
def test_check_prime_rejects(bad):
    with pytest.raises(ValueError):
        check_prime(bad)


def test_kernel_of_zero_map_is_everything():
    assert len(kernel_basis(MatrixModP.zeros(2, 2, 3))) == 2


def test_kernel_of_identity_is_trivial():
    assert kernel_basis(MatrixModP.identity(2, 3)) == []


def test_kernel_canonical_form():
    M = MatrixModP(np.array([[1, 1], [2, 2]]), 3)
    assert kernel_basis(M) == [(1, 2)]


@pytest.mark.parametrize("args, expected", [((2, 3, 9), 8), ((7, 0, 13), 1), ((5, 7, 49), 19), ((0, 0, 5), 1)])
def test_pow_mod_examples(args, expected):
    assert pow_mod(*args) == expected


def test_fermat_congruence_holds_mod_p_not_p_squared():
    assert pow_mod(5, 7, 49) % 7 == 5
    assert pow_mod(5, 7, 49) != 5


def test_pow_mod_rejects_tiny_modulus():
    with pytest.raises(ValueError):
        pow_mod(3, 2, 1)


@given(st.integers(-10**6, 10**6), st.integers(0, 200), st.integers(2, 10**5))
def test_pow_mod_matches_builtin(b, e, m):
    assert pow_mod(b, e, m) == pow(b, e, m)


def test_quadratic_residue_examples():
    assert is_quadratic_residue(1, 7) is True
    assert is_quadratic_residue(6, 7) is False
    assert is_quadratic_residue(3, 11) is True
    assert is_quadratic_residue(0, 7) is None
    assert is_quadratic_residue(14, 7) is None


@pytest.mark.parametrize("p", PRIMES_TO_23)
def test_quadratic_residue_against_squaring(p):
    squares = {x * x % p for x in range(1, p)}
    for a in range(1, p):
        assert is_quadratic_residue(a, p) is (a in squares)
        assert legendre(a, p) == (1 if a in squares else -1)
        r = sqrt_mod(a, p)
        assert (r is not None) == (a in squares)
        if r is not None:
            assert r * r % p == a
        assert a * inv_mod(a, p) % p == 1


@pytest.mark.parametrize("p", PRIMES_TO_23)
def test_shifted_square_count(p):
    for n in range(1, p):
        for shift in range(p):
            assert len(shifted_squares(n, shift, p)) == (p + 1) // 2


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.sampled_from([3, 5]), st.data())
def test_kernel_basis_against_brute_force(rows, cols, p, data):
    entries = data.draw(st.lists(st.integers(0, p - 1), min_size=rows * cols, max_size=rows * cols))
    M = MatrixModP(np.array(entries).reshape(rows, cols), p)
    basis = kernel_basis(M)
    for v in basis:
        assert not np.any(M @ np.array(v))
    assert len(basis) == cols - M.rank()
    brute = {v for v in itertools.product(range(p), repeat=cols) if not np.any(M @ np.array(v))}
    spanned = {tuple(int(c) for c in row) for row in span(basis, p, cols)}
    assert spanned == brute
    assert len(brute) == p ** (cols - M.rank())


def test_kernel_basis_is_reduced():
    # the basis rows stacked together already form a reduced echelon matrix
    M = MatrixModP(np.array([[1, 2, 0, 1], [0, 0, 1, 1]]), 5)
    basis = np.array(kernel_basis(M))
    R = MatrixModP(basis, 5)
    assert R.rref()[0] == R


def test_matrix_arithmetic():
    A = MatrixModP(np.array([[0, 1], [2, 2]]), 3)
    I = MatrixModP.identity(2, 3)
    assert A @ I == A
    assert (A - A) == MatrixModP.zeros(2, 2, 3)
    assert -A + A == MatrixModP.zeros(2, 2, 3)
    assert A**0 == I
    assert A**3 == A @ A @ A
    assert A.shape == (2, 2)
    assert A.tolist() == [[0, 1], [2, 2]]
    assert hash(A) == hash(MatrixModP(np.array([[3, 4], [5, 8]]), 3))


def test_matrix_entries_are_read_only():
    A = MatrixModP.identity(2, 5)
    with pytest.raises(ValueError):
        A.entries[0, 0] = 3


def test_all_vectors_enumerates_in_order():
    v = all_vectors(2, 3)
    assert v.shape == (9, 2)
    assert [tuple(r) for r in v] == list(itertools.product(range(3), repeat=2))
