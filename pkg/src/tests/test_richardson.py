"""
Handles testing Richardson elements, Jordan types and centralisers.
"""

import unittest

from sympy import QQ

from parcontract.algebra.liealg import (
    LieType,
    ParabolicSpec,
    build_algebra,
    build_parabolic,
    full_spec,
    to_matrix
)
from parcontract.algebra.richardson import (
    central_elements_check,
    centraliser,
    certificate_rank,
    find_polarisations,
    find_richardson,
    jordan_type,
    opposite_normalized,
    subalgebra_index,
    subregular_structure
)
from parcontract.partitions import Partition
from parcontract.types import AlgebraError, CertificationError, Family


def _richardson(t, spec, seed=0):
    a = build_algebra(t)
    p = build_parabolic(a, spec)
    return a, p, find_richardson(p, seed=seed)


class RichardsonElementTest(unittest.TestCase):
    """Contains test cases for finding Richardson elements."""

    def test_special_linear(self):
        """sl3 with composition (2,1)"""

        a, p, element = _richardson(LieType(Family.A, 2), ParabolicSpec((2, 1)))

        self.assertEqual(element.certificate, len(p.idx_n))
        self.assertEqual(certificate_rank(p, element.coords), 2)
        self.assertEqual(jordan_type(element), Partition((2, 1)))
        self.assertEqual(centraliser(a, element).dim, 4)

    def test_symplectic(self):
        """sp12 with composition (3,2,1)"""

        _, p, element = _richardson(LieType(Family.C, 6), ParabolicSpec((3, 2, 1), 0))

        self.assertEqual(len(p.idx_n), 32)
        self.assertEqual(element.dim_n, 32)
        self.assertEqual(jordan_type(element), Partition((6, 4, 2)))

    def test_even_orthogonal(self):
        """so12 with composition (4,1,1)"""

        a, p, element = _richardson(LieType(Family.D, 6), ParabolicSpec((4, 1, 1), 0))

        self.assertEqual(len(p.idx_n), 24)
        self.assertEqual(jordan_type(element), Partition((5, 3, 2, 2)))
        self.assertEqual(centraliser(a, element).dim, 18)

    def test_support(self):
        """Richardson elements lie in n"""

        a, p, element = _richardson(LieType(Family.B, 2), ParabolicSpec((1,), 3))
        outside = [i for i in range(a.dim) if i not in p.idx_n]

        self.assertFalse(any(element.coords[i] for i in outside))

    def test_reproducible(self):
        """The same seed gives the same element"""

        spec = ParabolicSpec((1, 1, 1))
        _, _, first = _richardson(LieType(Family.A, 2), spec, seed=3)
        _, _, second = _richardson(LieType(Family.A, 2), spec, seed=3)

        self.assertEqual(first, second)

    def test_degenerate(self):
        """The zero element is Richardson for p = g"""

        t = LieType(Family.C, 2)
        a, _, element = _richardson(t, full_spec(t))

        self.assertEqual(element.certificate, 0)
        self.assertFalse(any(element.coords))
        self.assertEqual(jordan_type(element), Partition((1, 1, 1, 1)))
        self.assertEqual(centraliser(a, element).dim, a.dim)

    def test_trials_required(self):
        """A search needs at least one trial"""

        p = build_parabolic(build_algebra(LieType(Family.A, 2)), ParabolicSpec((2, 1)))
        with self.assertRaises(CertificationError):
            find_richardson(p, trials=0)


class JordanTypeTest(unittest.TestCase):
    """Contains test cases for Jordan types."""

    def test_zero(self):
        """The zero matrix splits into blocks of size one"""
        self.assertEqual(jordan_type([[QQ(0), QQ(0)], [QQ(0), QQ(0)]]), Partition((1, 1)))

    def test_regular(self):
        """A single Jordan block"""

        rows = [[QQ(0), QQ(1), QQ(0)], [QQ(0), QQ(0), QQ(1)], [QQ(0), QQ(0), QQ(0)]]
        self.assertEqual(jordan_type(rows), Partition((3,)))

    def test_not_nilpotent(self):
        """Non-nilpotent matrices are rejected"""

        with self.assertRaises(AlgebraError):
            jordan_type([[QQ(1), QQ(0)], [QQ(0), QQ(0)]])


class CentraliserTest(unittest.TestCase):
    """Contains test cases for centralisers and their invariants."""

    def test_index(self):
        """The centraliser of a Richardson element of sl3 has index 2"""

        a, _, element = _richardson(LieType(Family.A, 2), ParabolicSpec((2, 1)))
        c = centraliser(a, element)

        self.assertEqual(subalgebra_index(c, trials=3, seed=0), 2)
        self.assertIsNone(c.index)

    def test_subregular(self):
        """The subregular centraliser of sl3 has a one-dimensional centre"""

        a, _, element = _richardson(LieType(Family.A, 2), ParabolicSpec((2, 1)))
        structure = subregular_structure(centraliser(a, element), 2)

        self.assertTrue(structure['centre_ok'])
        self.assertEqual(structure['centre_dim'], 1)

    def test_central_elements(self):
        """e is central in its own centraliser"""

        a, _, element = _richardson(LieType(Family.C, 2), ParabolicSpec((2,), 0))
        c = centraliser(a, element)
        check = central_elements_check(a, element, c, [list(element.coords)])

        self.assertEqual(check, {'in_centraliser': True, 'central': True, 'rank': 1})

    def test_opposite_normalized(self):
        """The opposite element pairs with e to one"""

        a, p, element = _richardson(LieType(Family.C, 2), ParabolicSpec((2,), 0))
        y = to_matrix(a, opposite_normalized(p, element))
        e = element.rows
        trace = sum(y[r][k] * e[k][r] for r in range(a.size) for k in range(a.size))

        self.assertEqual(trace, 1)

    def test_polarisations(self):
        """Both compositions (1,2) and (2,1) of sl3 polarise (2,1)"""

        specs = find_polarisations(LieType(Family.A, 2), (2, 1))
        self.assertEqual(specs, [ParabolicSpec((1, 2)), ParabolicSpec((2, 1))])
