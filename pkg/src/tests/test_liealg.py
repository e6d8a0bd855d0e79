"""
Handles testing the matrix models of classical Lie algebras and their parabolics.
"""

import unittest

from hypothesis import given, strategies as st

from parcontract.algebra.exactcore import make_rng, random_vector
from parcontract.algebra.liealg import (
    LeviBlock,
    LieType,
    ParabolicSpec,
    block_degrees,
    borel_dimension,
    borel_spec,
    build_algebra,
    build_parabolic,
    coordinates,
    enumerate_specs,
    full_spec,
    functional_coordinates,
    is_minimal_parabolic,
    levi_blocks,
    levi_dimension,
    levi_invariant_degrees,
    point_matrix,
    to_matrix,
    trace_pairing
)
from parcontract.types import ConfigurationError, Family, LeviKind

from .settings import QUICK_SETTINGS

_SMALL_TYPES = [
    LieType(Family.A, 2),
    LieType(Family.GL, 2),
    LieType(Family.B, 2),
    LieType(Family.C, 2),
    LieType(Family.D, 3)
]


def _unit(dim, index):
    vector = [0] * dim
    vector[index] = 1
    return vector


class LieTypeTest(unittest.TestCase):
    """Contains test cases for Lie types and specs."""

    def test_dimensions(self):
        """Bases have the classical dimension"""

        expected = {'sl3': 8, 'gl3': 9, 'so5': 10, 'sp4': 10, 'so6': 15}
        for t in _SMALL_TYPES:
            a = build_algebra(t)
            self.assertEqual(a.dim, expected[t.label()])
            self.assertEqual(a.dim, t.dimension)

    def test_labels(self):
        """Labels use the matrix size"""

        self.assertEqual(LieType(Family.C, 6).label(), 'sp12')
        self.assertEqual(LieType(Family.B, 8).label(), 'so17')
        self.assertEqual(LieType('gl', 2).label(), 'gl3')
        self.assertEqual(str(LieType('sp', 3)), 'C3')

    def test_invalid_types(self):
        """Unknown families and ranks are rejected"""

        with self.assertRaises(ConfigurationError):
            LieType('E', 6)
        with self.assertRaises(ConfigurationError):
            LieType(Family.D, 1)
        with self.assertRaises(ConfigurationError):
            LieType(Family.A, 0)

    def test_invalid_specs(self):
        """Specs must match the matrix size and the central block rules"""

        cases = [
            (LieType(Family.A, 2), ParabolicSpec((2, 2))),
            (LieType(Family.A, 2), ParabolicSpec((2,), 1)),
            (LieType(Family.B, 2), ParabolicSpec((1,), 2)),
            (LieType(Family.C, 2), ParabolicSpec((1,), 1)),
            (LieType(Family.D, 3), ParabolicSpec((2,), 2))
        ]
        for t, spec in cases:
            with self.assertRaises(ConfigurationError):
                build_parabolic(build_algebra(t), spec)


class AlgebraTest(unittest.TestCase):
    """Contains test cases for brackets, coordinates and the trace pairing."""

    def test_jacobi_identity(self):
        """Brackets of basis triples satisfy the Jacobi identity"""

        for t in (LieType(Family.A, 2), LieType(Family.C, 2)):
            a = build_algebra(t)
            units = [_unit(a.dim, i) for i in range(a.dim)]
            for i in range(a.dim):
                for j in range(i + 1, a.dim):
                    for k in range(j + 1, a.dim):
                        x, y, z = units[i], units[j], units[k]
                        total = [
                            sum(values) for values in zip(
                                a.bracket(a.bracket(x, y), z),
                                a.bracket(a.bracket(y, z), x),
                                a.bracket(a.bracket(z, x), y)
                            )
                        ]
                        self.assertFalse(any(total), (t, i, j, k))

    def test_antisymmetry(self):
        """Structure constants are antisymmetric"""

        a = build_algebra(LieType(Family.B, 2))
        for i, row in a.structure.items():
            for j, constants in row.items():
                self.assertEqual(a.structure[j][i], {k: -c for k, c in constants.items()})

    def test_trace_pairing(self):
        """The dual basis is dual under the trace form"""

        for t in _SMALL_TYPES:
            a = build_algebra(t)
            gram, _ = trace_pairing(a)
            self.assertEqual(gram.rank(), a.dim)

    @given(st.sampled_from(_SMALL_TYPES), st.integers(0, 2**32))
    @QUICK_SETTINGS
    def test_coordinates(self, t, seed):
        """Matrices, coordinates and functionals agree"""

        a = build_algebra(t)
        vector = random_vector(make_rng(seed, 'coordinates'), a.dim, 50)

        self.assertEqual(coordinates(a, to_matrix(a, vector)), vector)
        self.assertEqual(functional_coordinates(a, point_matrix(a, vector)), vector)


class ParabolicTest(unittest.TestCase):
    """Contains test cases for flag parabolics and Levi data."""

    def test_nilradical_dimensions(self):
        """Nilradical dimensions follow from the Levi dimension"""

        cases = [
            (LieType(Family.C, 6), ParabolicSpec((3, 2, 1), 0), 32),
            (LieType(Family.A, 2), ParabolicSpec((2, 1)), 2),
            (LieType(Family.A, 3), ParabolicSpec((2, 1, 1)), 5),
            (LieType(Family.D, 6), ParabolicSpec((4, 1, 1), 0), 24)
        ]
        for t, spec, dim_n in cases:
            p = build_parabolic(build_algebra(t), spec)
            self.assertEqual(len(p.idx_n), dim_n)
            self.assertEqual(len(p.idx_nminus), dim_n)
            self.assertEqual((t.dimension - levi_dimension(spec, t)) // 2, dim_n)

    def test_degenerate(self):
        """The full spec has an empty nilradical"""

        t = LieType(Family.B, 2)
        p = build_parabolic(build_algebra(t), full_spec(t))
        self.assertTrue(p.is_degenerate)
        self.assertEqual(len(p.idx_levi), t.dimension)

    def test_levi_degrees(self):
        """Levi invariant degrees combine the summand degrees"""

        self.assertEqual(
            levi_invariant_degrees(ParabolicSpec((3, 2, 1), 0), LieType(Family.C, 6)),
            [1, 1, 1, 2, 2, 3]
        )
        self.assertEqual(
            levi_invariant_degrees(ParabolicSpec((2,), 4), LieType(Family.C, 4)),
            [1, 2, 2, 4]
        )
        self.assertEqual(
            levi_invariant_degrees(ParabolicSpec((2, 1)), LieType(Family.A, 2)),
            [1, 2]
        )
        self.assertEqual(
            levi_invariant_degrees(ParabolicSpec((1,), 3), LieType(Family.B, 2)),
            [1, 2]
        )

    def test_levi_blocks(self):
        """Levi summands are sorted with gl blocks first"""

        blocks = levi_blocks(ParabolicSpec((1, 2), 4), LieType(Family.C, 5))
        self.assertEqual([block.label() for block in blocks], ['gl2', 'gl1', 'sp4'])
        self.assertEqual(block_degrees(LeviBlock(LeviKind.SO, 4)), [2, 2])
        self.assertEqual(block_degrees(LeviBlock(LeviKind.SO, 3)), [2])

    def test_borel_dimension(self):
        """Borel dimension of the Levi of the Borel is the rank"""

        t = LieType(Family.C, 3)
        self.assertEqual(borel_dimension(levi_blocks(borel_spec(t), t), t), 3)
        self.assertEqual(borel_dimension(levi_blocks(full_spec(t), t), t), 12)

    def test_minimal_parabolics(self):
        """Minimal parabolics have one extra root pair"""

        self.assertTrue(is_minimal_parabolic(ParabolicSpec((2, 1)), LieType(Family.A, 2)))
        self.assertTrue(is_minimal_parabolic(ParabolicSpec((1,), 3), LieType(Family.B, 2)))
        self.assertTrue(is_minimal_parabolic(ParabolicSpec((1, 1), 2), LieType(Family.C, 3)))
        self.assertFalse(is_minimal_parabolic(ParabolicSpec((1, 1), 1), LieType(Family.B, 2)))

    def test_enumerate_specs(self):
        """Every composition of the matrix size is enumerated in type A"""

        specs = list(enumerate_specs(LieType(Family.A, 2)))
        self.assertEqual(len(specs), 4)
        self.assertIn(ParabolicSpec((2, 1)), specs)

        for spec in enumerate_specs(LieType(Family.D, 3)):
            self.assertNotEqual(spec.central, 2)
