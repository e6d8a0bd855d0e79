"""
Handles testing exact linear algebra and interpolation.
"""

import unittest

from hypothesis import given, strategies as st
from sympy import QQ

from parcontract.algebra.exactcore import (
    coefficient,
    default_nodes,
    degree,
    derive_seed,
    evaluate_polynomial,
    interpolate,
    kernel_basis,
    make_rng,
    matvec,
    qmatrix,
    random_vector,
    rank,
    rat,
    sample_line,
    schwartz_zippel_bound,
    solve,
    zero_matrix
)
from parcontract.types import InterpolationError

from .settings import QUICK_SETTINGS, STANDARD_SETTINGS

_coefficients = st.lists(st.integers(-50, 50), min_size=1, max_size=9)
_matrices = st.integers(1, 6).flatmap(
    lambda ncols: st.lists(
        st.lists(st.integers(-5, 5), min_size=ncols, max_size=ncols),
        min_size=1, max_size=6
    )
)


class ExactLinearAlgebraTest(unittest.TestCase):
    """Contains test cases for exact linear algebra."""

    def test_rat(self):
        """Rationals are reduced to lowest terms"""
        self.assertEqual(rat(2, 4), QQ(1, 2))
        self.assertEqual(rat(3), QQ(3))

    def test_rank(self):
        """Rank of dependent rows is exact"""

        self.assertEqual(rank(qmatrix([[1, 2], [2, 4]])), 1)
        self.assertEqual(rank(qmatrix([[1, 2], [3, 4]])), 2)
        self.assertEqual(rank(zero_matrix(3, 2)), 0)
        self.assertEqual(rank(qmatrix([], ncols=3)), 0)

    def test_kernel(self):
        """Kernel vectors are annihilated and have the expected count"""

        m = qmatrix([[1, 2, 3], [2, 4, 6]])
        basis = kernel_basis(m)

        self.assertEqual(len(basis), 2)
        for vector in basis:
            self.assertEqual(matvec(m, vector), [0, 0])

        self.assertEqual(len(kernel_basis(qmatrix([], ncols=2))), 2)

    def test_solve(self):
        """Square systems are solved exactly"""

        solution = solve(qmatrix([[2, 1], [1, 3]]), [3, 5])
        self.assertEqual(solution, [QQ(4, 5), QQ(7, 5)])

    @given(_matrices)
    @STANDARD_SETTINGS
    def test_rank_nullity(self, rows):
        """Rank plus kernel dimension equals the column count"""

        m = qmatrix(rows)
        self.assertEqual(rank(m) + len(kernel_basis(m)), m.shape[1])


class InterpolationTest(unittest.TestCase):
    """Contains test cases for univariate interpolation."""

    def test_nodes(self):
        """Nodes alternate in sign around zero"""
        self.assertEqual(default_nodes(4), [0, 1, -1, 2])
        self.assertEqual(default_nodes(1), [0])

    def test_quadratic(self):
        """Interpolation recovers 3x^2 - 1"""

        samples = [(x, 3 * x * x - 1) for x in (0, 1, -1)]
        self.assertEqual(interpolate(samples), [-1, 0, 3])

    def test_trim(self):
        """Trailing zeros are kept only when trimming is disabled"""

        samples = [(x, 2 * x) for x in (0, 1, 2)]
        self.assertEqual(interpolate(samples), [0, 2])
        self.assertEqual(interpolate(samples, trim=False), [0, 2, 0])
        self.assertEqual(interpolate([(0, 0), (1, 0)]), [0])

    def test_invalid_samples(self):
        """Empty samples and repeated nodes are rejected"""

        with self.assertRaises(InterpolationError):
            interpolate([])
        with self.assertRaises(InterpolationError):
            interpolate([(1, 2), (1, 3)])

    def test_degree(self):
        """Degree of the zero polynomial is -1"""

        self.assertEqual(degree([0, 0]), -1)
        self.assertEqual(degree([1, 2, 0]), 1)
        self.assertEqual(coefficient([1, 2], 5), 0)

    def test_sample_line(self):
        """Every returned value is interpolated separately"""

        table = sample_line(lambda u: [u * u, 2 * u + 1], 2)
        self.assertEqual(table, [[0, 0, 1], [1, 2, 0]])

    @given(_coefficients)
    @STANDARD_SETTINGS
    def test_interpolation_recovers_polynomial(self, coefficients):
        """Sampling a polynomial and interpolating returns its coefficients"""

        nodes = default_nodes(len(coefficients))
        samples = [(node, evaluate_polynomial(coefficients, node)) for node in nodes]

        self.assertEqual(interpolate(samples, trim=False), coefficients)


class RandomnessTest(unittest.TestCase):
    """Contains test cases for seed derivation and sampling."""

    def test_derived_seeds(self):
        """Derived seeds depend on every label"""

        self.assertEqual(derive_seed(0, 'index', 1), derive_seed(0, 'index', 1))
        self.assertNotEqual(derive_seed(0, 'index', 1), derive_seed(0, 'index', 2))
        self.assertNotEqual(derive_seed(0, 'index'), derive_seed(1, 'index'))

    @given(st.integers(0, 2**32), st.integers(1, 100))
    @QUICK_SETTINGS
    def test_random_vector(self, seed, bound):
        """Random vectors respect the bound and the support"""

        vector = random_vector(make_rng(seed, 'test'), 10, bound, support=[1, 4])

        self.assertTrue(all(abs(value) <= bound for value in vector))
        self.assertTrue(all(not value for i, value in enumerate(vector) if i not in (1, 4)))

    def test_schwartz_zippel_bound(self):
        """The failure bound is exact"""
        self.assertEqual(schwartz_zippel_bound(2, 1, 2), QQ(4, 9))
