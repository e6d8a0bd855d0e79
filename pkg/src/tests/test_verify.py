"""
Handles testing the verification suites.
"""

import inspect
import json
import unittest

import parcontract
from parcontract import verify
from parcontract.algebra.liealg import LieType, ParabolicSpec
from parcontract.request import build_config
from parcontract.response import to_json
from parcontract.types import CheckStatus, ConfigurationError, Family, SuiteName, SuiteReport
from parcontract.verify import SuiteConfig

_SL3 = LieType(Family.A, 2)
_SL3_SPEC = ParabolicSpec((2, 1))
_QUICK = {'trials': 2, 'probes': 1, 'certify': 3, 'bound': 100}


def _names(report):
    return [record.name for record in report.checks]


class SuiteConfigTest(unittest.TestCase):
    """Contains test cases for suite configuration validation."""

    def test_unknown_suite(self):
        """Unknown suites are rejected"""

        with self.assertRaises(ConfigurationError):
            SuiteConfig('bogus', _SL3, _SL3_SPEC)

    def test_numeric_values(self):
        """Trial counts must be positive and seeds nonnegative"""

        with self.assertRaises(ConfigurationError):
            SuiteConfig(SuiteName.COADJOINT, _SL3, _SL3_SPEC, trials=0)
        with self.assertRaises(ConfigurationError):
            SuiteConfig(SuiteName.COADJOINT, _SL3, _SL3_SPEC, seed=-1)

    def test_algebra_required(self):
        """Algebra suites need a type and a composition"""

        with self.assertRaises(ConfigurationError):
            SuiteConfig(SuiteName.ADJOINT)
        SuiteConfig(SuiteName.COMBINATORICS)

    def test_coadjoint_restrictions(self):
        """Type D and non-admissible type B parabolics are rejected"""

        with self.assertRaises(ConfigurationError):
            SuiteConfig(SuiteName.COADJOINT, LieType(Family.D, 3), ParabolicSpec((1, 2), 0))
        with self.assertRaises(ConfigurationError):
            SuiteConfig(SuiteName.COADJOINT, LieType(Family.B, 3), ParabolicSpec((2,), 3))

        SuiteConfig(SuiteName.COADJOINT, LieType(Family.B, 2), ParabolicSpec((1,), 3))

    def test_size_limit(self):
        """Matrices beyond the suite limit are rejected"""

        with self.assertRaises(ConfigurationError):
            SuiteConfig(SuiteName.COADJOINT, LieType(Family.C, 9), ParabolicSpec((9,), 0))

    def test_subregular_restrictions(self):
        """The subregular suite needs a minimal parabolic"""

        with self.assertRaises(ConfigurationError):
            SuiteConfig(SuiteName.SUBREGULAR, LieType(Family.A, 3), ParabolicSpec((2, 2)))
        SuiteConfig(SuiteName.SUBREGULAR, LieType(Family.A, 3), ParabolicSpec((2, 1, 1)))

    def test_counterexample_fixed(self):
        """The counterexample suite is fixed to so12"""

        cfg = SuiteConfig(SuiteName.COUNTEREXAMPLE)
        self.assertEqual(cfg.lie_type, verify.COUNTEREXAMPLE_TYPE)
        self.assertEqual(cfg.spec, verify.COUNTEREXAMPLE_SPEC)

        with self.assertRaises(ConfigurationError):
            SuiteConfig(SuiteName.COUNTEREXAMPLE, _SL3, _SL3_SPEC)

    def test_anchors(self):
        """Every check of every suite has an anchor"""

        for suite, checks in verify._SUITE_CHECKS.items(): # pylint: disable=protected-access
            for check in checks:
                with self.subTest(suite=str(suite), check=check.__name__):
                    self.assertIn(check.__name__[len('check_'):], verify._ANCHORS) # pylint: disable=protected-access

    def test_asdict(self):
        """Configurations serialize to plain values"""

        data = SuiteConfig(SuiteName.COADJOINT, _SL3, _SL3_SPEC, seed=4).asdict()
        self.assertEqual(data['suite'], 'coadjoint')
        self.assertEqual(data['algebra'], 'sl3')
        self.assertEqual(data['composition'], [2, 1])
        self.assertEqual(data['seed'], 4)


class SuiteTest(unittest.IsolatedAsyncioTestCase):
    """Contains test cases for running suites."""

    async def test_coadjoint(self):
        """The coadjoint suite passes on sl3 with composition (2,1)"""

        cfg = SuiteConfig(SuiteName.COADJOINT, _SL3, _SL3_SPEC, **_QUICK)
        report = await verify.suite_coadjoint(cfg)

        assert isinstance(report, SuiteReport)
        self.assertTrue(report.passed, [record.asdict() for record in report.failures()])
        self.assertEqual(_names(report), sorted(check.__name__[len('check_'):]
                                                for check in verify.COADJOINT_CHECKS))
        self.assertIsNotNone(report.runtime_ms)

    async def test_coadjoint_symplectic(self):
        """The coadjoint suite passes on sp4 with composition (2;0)"""

        cfg = SuiteConfig(SuiteName.COADJOINT, LieType(Family.C, 2), ParabolicSpec((2,), 0), **_QUICK)
        report = await verify.run_suite(cfg, workers=2)
        self.assertTrue(report.passed, [record.asdict() for record in report.failures()])

    async def test_degenerate(self):
        """Slice checks are informational when p = g"""

        cfg = SuiteConfig(SuiteName.COADJOINT, _SL3, ParabolicSpec((3,)), **_QUICK)
        report = await verify.run_suite(cfg)
        statuses = {record.name: record.status for record in report.checks}

        self.assertTrue(report.passed)
        self.assertEqual(statuses['slice_coincidence'], CheckStatus.INFO)

    async def test_adjoint(self):
        """The adjoint suite passes on sl3 with composition (2,1)"""

        cfg = SuiteConfig(SuiteName.ADJOINT, _SL3, _SL3_SPEC, **_QUICK)
        report = await verify.suite_adjoint(cfg)
        self.assertTrue(report.passed, [record.asdict() for record in report.failures()])

    async def test_subregular(self):
        """The subregular suite passes on sl3 with composition (2,1)"""

        cfg = SuiteConfig(SuiteName.SUBREGULAR, _SL3, _SL3_SPEC, **_QUICK)
        report = await verify.suite_subregular(cfg)

        self.assertTrue(report.passed, [record.asdict() for record in report.failures()])
        self.assertIn('centre', _names(report))

    async def test_combinatorics(self):
        """The partition sweeps pass"""

        report = await verify.suite_combinatorics()
        self.assertTrue(report.passed, [record.asdict() for record in report.failures()])
        self.assertIn('known_profiles', _names(report))

    async def test_counterexample(self):
        """The counterexample suite reproduces the dependence on so12"""

        cfg = SuiteConfig(SuiteName.COUNTEREXAMPLE, trials=2, probes=1, certify=3, bound=100)
        report = await verify.suite_counterexample(cfg)
        self.assertTrue(report.passed, [record.asdict() for record in report.failures()])

    async def test_wrong_suite(self):
        """Suite functions reject configurations of another suite"""

        cfg = SuiteConfig(SuiteName.ADJOINT, _SL3, _SL3_SPEC, **_QUICK)
        with self.assertRaises(ConfigurationError):
            await verify.suite_coadjoint(cfg)

    async def test_deterministic(self):
        """Reports without timings are identical across runs and pool widths"""

        kwargs = {'lie_type': 'A', 'composition': '2,1', 'suite': 'adjoint', **_QUICK}
        cfg = build_config('verify', kwargs)

        first = await verify.run_suite(cfg.suite_config(), workers=1)
        second = await verify.run_suite(cfg.suite_config(), workers=3)
        document = to_json(first, cfg)

        self.assertEqual(document, to_json(second, cfg))
        self.assertNotIn('runtime_ms', document)
        self.assertEqual(json.loads(document)['summary']['status'], 'pass')

    async def test_coadjoint_special_linear(self):
        """The coadjoint suite passes on sl4 with composition (2,1,1)"""

        cfg = SuiteConfig(SuiteName.COADJOINT, LieType(Family.A, 3), ParabolicSpec((2, 1, 1)), **_QUICK)
        report = await verify.suite_coadjoint(cfg, workers=2)
        self.assertTrue(report.passed, [record.asdict() for record in report.failures()])

    async def test_coadjoint_odd_orthogonal(self):
        """The coadjoint suite passes on so5 with composition (1;3)"""

        cfg = SuiteConfig(SuiteName.COADJOINT, LieType(Family.B, 2), ParabolicSpec((1,), 3), **_QUICK)
        report = await verify.suite_coadjoint(cfg)
        self.assertTrue(report.passed, [record.asdict() for record in report.failures()])

    async def test_subregular_odd_orthogonal(self):
        """The subregular suite passes on so7 with composition (1,1;3)"""

        cfg = SuiteConfig(SuiteName.SUBREGULAR, LieType(Family.B, 3), ParabolicSpec((1, 1), 3), **_QUICK)
        report = await verify.suite_subregular(cfg)

        self.assertTrue(report.passed, [record.asdict() for record in report.failures()])
        self.assertIn('highest_invariance', _names(report))

    async def test_package_surface(self):
        """The package exposes the suite module next to the verification coroutine"""

        self.assertTrue(inspect.ismodule(parcontract.verify))
        self.assertTrue(inspect.iscoroutinefunction(parcontract.run_verification))

        report = await parcontract.run_verification('coadjoint', lie_type='A', composition='2,1', **_QUICK)
        self.assertTrue(report.passed, [record.asdict() for record in report.failures()])


class CheckTest(unittest.TestCase):
    """Contains test cases for individual checks."""

    def _context(self, **kwargs):
        cfg = SuiteConfig(SuiteName.COADJOINT, LieType(Family.C, 2), ParabolicSpec((2,), 0),
                          **{**_QUICK, **kwargs})
        return verify.SuiteContext(cfg).prepare()

    def test_kostant_points(self):
        """The random Kostant check samples one point per trial"""

        ctx = self._context(trials=3, probes=1)
        record = verify.check_kostant_random(ctx)

        self.assertEqual(record.status, CheckStatus.PASS)
        self.assertEqual(len(record.witness['points']), 3)

    def test_slice_coincidence_zero_offset(self):
        """A single slice coincidence trial compares at e + v itself"""

        ctx = self._context(trials=1)
        record = verify.check_slice_coincidence(ctx)

        self.assertEqual(record.status, CheckStatus.PASS)
        self.assertEqual(record.witness['points'], 1)

    def test_centraliser_index(self):
        """The centraliser index is computed once while preparing"""

        ctx = self._context()
        record = verify.check_centraliser_index(ctx)

        self.assertEqual(ctx.centraliser.index, 2)
        self.assertEqual(record.witness['index'], 2)
