"""Smoke tests for the python bindings."""

import math

import numpy as np
import pytest

import alphacomp as ac


def test_lex_tuples():
    assert ac.lex_tuples(3, 2) == [[1, 2], [1, 3], [2, 3]]


def test_compounds_on_numpy_arrays():
    A = np.diag([1.0, 2.0, 3.0]).astype(complex)
    D2 = ac.add_compound(A, 2)
    assert np.allclose(np.diag(D2), [3.0, 4.0, 5.0])

    B = np.random.default_rng(7).standard_normal((4, 4)) + 0j
    C = np.random.default_rng(8).standard_normal((4, 4)) + 0j
    for k in (1, 2, 3, 4):
        lhs = ac.mult_compound(B @ C, k)
        rhs = ac.mult_compound(B, k) @ ac.mult_compound(C, k)
        assert np.allclose(lhs, rhs, atol=1e-10 * (1 + np.abs(rhs).max()))


def test_alpha_add_matches_oracle():
    A = np.array([[0.3, -1.2, 0.0], [0.7, 0.1, -0.4], [0.2, 0.0, -0.9]],
                 dtype=complex)
    closed = ac.alpha_add_compound(A, 1.5)
    oracle = ac.alpha_add_compound_oracle(A, 1.5, 1e-5)
    assert np.abs(closed - oracle).max() < 1e-6


def test_measures():
    A = np.eye(3, dtype=complex)
    for p in (1, 2, "inf"):
        assert ac.matrix_measure(A, p) == pytest.approx(1.0)
    chain = ac.measure_chain(A, 2)
    assert chain == pytest.approx([1.0, 2.0, 3.0])

    B = np.array([[-1.0, 10.0], [0.0, -2.0]], dtype=complex)
    P = np.array([[1.0, 10.0], [0.0, 1.0]], dtype=complex)
    assert ac.matrix_measure(B, 2) > 0
    assert ac.weighted_measure(B, P, 2) < 0


def test_omega_and_dimension_bound():
    J = np.diag([1.0, 0.5, 0.25]).astype(complex)
    assert ac.omega_bound(J, 1.5) == pytest.approx(math.sqrt(0.5))
    bound = ac.douady_oesterle_check([J], 1.01)
    assert bound["conclusive"]


def test_certify_thomas():
    cert = ac.certify_system("thomas", alpha=2.5, p="1", grid=5, b=0.3)
    assert cert["certified"]
    assert cert["worst_value"] <= -0.25 + 1e-12

    refuted = ac.certify_system("thomas", alpha=2.1, p="1", grid=5, b=0.3)
    assert not refuted["certified"]


def test_minimal_alpha_for_user_matrix():
    A = np.diag([3.0, -1.0, -4.0])
    star = ac.minimal_alpha_system("lti", p=2, grid=2, tol=1e-3, matrix=A)
    assert abs(star - 2.5) <= 1e-3


def test_simulate_thomas():
    times, states = ac.simulate_system("thomas", np.array([-1.0, 1.0, 1.0]),
                                       5.0, b=0.3)
    assert times[0] == 0.0
    assert times[-1] == pytest.approx(5.0)
    assert states.shape[1] == 3
    assert np.isfinite(states).all()


def test_matrix_power_and_exp():
    A = np.array([[2.0, 1.0], [0.5, 1.5]], dtype=complex)
    half = ac.matrix_real_power(A, 0.5)
    assert np.abs(half @ half - A).max() < 1e-10
    E = ac.matrix_exp(A, 0.0)
    assert np.allclose(E, np.eye(2))
