import numpy as np
import pytest

from parcelwalk.clifford import (
    adjoint,
    bracket,
    dirac_symbol_square,
    element,
    gamma_basis,
    mul,
    pauli_basis,
    pauli_coefficients,
    scalar_decompose,
)

I, S1, S2, S3 = pauli_basis()
ZERO = np.zeros((2, 2), dtype=np.complex128)


def test_pauli_squares_are_identity_exactly():
    for s in (S1, S2, S3):
        assert np.array_equal(mul(s, s), I)


def test_pauli_anticommutators_vanish_exactly():
    pairs = [(S1, S2), (S1, S3), (S2, S3)]
    for a, b in pairs:
        assert np.array_equal(bracket("anticommutator", a, b), ZERO)


def test_sigma1_sigma2_is_i_sigma3():
    assert np.array_equal(mul(S1, S2), 1j * S3)


def test_sigma3_is_diagonal_plus_minus_one():
    assert np.array_equal(S3, np.diag([1.0 + 0j, -1.0 + 0j]))


def test_paulis_self_adjoint_and_unitary():
    for s in (S1, S2, S3):
        assert np.array_equal(adjoint(s), s)
        assert np.array_equal(mul(adjoint(s), s), I)


def test_identity_is_multiplicative_unit():
    assert np.array_equal(mul(I, S1), S1)
    assert np.array_equal(mul(S1, I), S1)


def test_commutator_examples():
    assert np.array_equal(bracket("commutator", S1, S1), ZERO)
    assert np.array_equal(bracket("commutator", S1, S2), 2j * S3)


def test_bracket_rejects_unknown_kind():
    with pytest.raises(ValueError):
        bracket("jordan", S1, S2)


def test_gamma_basis_is_independent_instance_with_same_relations():
    gi, g1, g2, g3 = gamma_basis()
    assert np.array_equal(gi, I) and gi is not I
    for g in (g1, g2, g3):
        assert np.array_equal(mul(g, g), I)
    assert np.array_equal(bracket("anticommutator", g1, g2), ZERO)


def test_dirac_symbol_square_axis_cases():
    scalar, offdiag = dirac_symbol_square(1.0, 0.0, 0.0)
    assert scalar == 1.0 + 0j and offdiag == 0.0
    scalar, offdiag = dirac_symbol_square(0.0, 1.0, 0.0)
    assert scalar == -1.0 + 0j and offdiag == 0.0
    scalar, offdiag = dirac_symbol_square(2.0, 1.0, 1.0)
    assert scalar == pytest.approx(2.0, abs=1e-14) and offdiag <= 1e-14


def test_dirac_symbol_square_scalar_law_random():
    rng = np.random.default_rng(2024)
    for s, u, v in rng.uniform(-2.0, 2.0, size=(1000, 3)):
        scalar, offdiag = dirac_symbol_square(s, u, v)
        assert abs(scalar - (s * s - u * u - v * v)) <= 1e-12
        assert offdiag <= 1e-12


def test_adjoint_reverses_products():
    rng = np.random.default_rng(7)
    for _ in range(50):
        a = element(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
        b = element(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
        lhs = adjoint(mul(a, b))
        rhs = mul(adjoint(b), adjoint(a))
        assert np.abs(lhs - rhs).max() <= 1e-12


def test_adjoint_is_involution():
    rng = np.random.default_rng(8)
    a = element(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
    assert np.array_equal(adjoint(adjoint(a)), a)


def test_mul_associativity_spot_check():
    rng = np.random.default_rng(9)
    a, b, c = (element(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
               for _ in range(3))
    assert np.abs(mul(mul(a, b), c) - mul(a, mul(b, c))).max() <= 1e-12


def test_element_validates_shape_and_finiteness():
    with pytest.raises(ValueError):
        element([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(ValueError):
        element([[np.inf, 0], [0, 1]])


def test_pauli_coefficients_reconstruct():
    rng = np.random.default_rng(10)
    a = element(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
    c0, c1, c2, c3 = pauli_coefficients(a)
    rebuilt = c0 * I + c1 * S1 + c2 * S2 + c3 * S3
    assert np.abs(rebuilt - a).max() <= 1e-13


def test_scalar_decompose_splits_scalar_part():
    scalar, resid = scalar_decompose(3.5 * I)
    assert scalar == 3.5 + 0j and resid == 0.0
    scalar, resid = scalar_decompose(S1)
    assert scalar == 0.0 + 0j and resid == pytest.approx(np.sqrt(2.0))
