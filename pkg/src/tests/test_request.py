"""
Handles testing request logic.
"""

import os
import unittest
from unittest import mock

import parcontract
from parcontract.algebra.liealg import LieType, ParabolicSpec
from parcontract.cli import build_parser
from parcontract.request import build_config, transform_params, workers
from parcontract.types import ConfigurationError, Family, OutputFormat, SuiteName


class RequestTest(unittest.TestCase):
    """Contains test cases for request logic."""

    def setUp(self):
        self.addCleanup(parcontract.set_defaults, trials=None, seed=None, workers=None)

    def test_transform(self):
        """Aliases are renamed and values coerced"""

        params = transform_params({
            'type': 'c',
            'composition': '3, 2,1',
            'central_block': '0',
            'json': 'out.json',
            'seed': None,
            'raise_check_failures': True
        })

        self.assertEqual(params, {
            'family': Family.C,
            'composition': (3, 2, 1),
            'central': 0,
            'output_path': 'out.json'
        })

    def test_invalid_params(self):
        """Unknown keys and malformed values are configuration errors"""

        for kwargs in (
            {'colour': 'red'},
            {'lie_type': 'E'},
            {'trials': 'many'},
            {'trials': True},
            {'composition': '3,x'}
        ):
            with self.assertRaises(ConfigurationError):
                transform_params(kwargs)

    def test_rank_from_composition(self):
        """The rank is derived from the composition and central block"""

        cfg = build_config('info', {'lie_type': 'C', 'composition': [3, 2, 1]})
        self.assertEqual(cfg.lie_type, LieType(Family.C, 6))
        self.assertEqual(cfg.spec, ParabolicSpec((3, 2, 1), 0))

        cfg = build_config('info', {'lie_type': 'B', 'composition': (1,), 'central': 3})
        self.assertEqual(cfg.lie_type, LieType(Family.B, 2))

        cfg = build_config('info', {'lie_type': 'A', 'composition': '2,1'})
        self.assertEqual(cfg.lie_type, LieType(Family.A, 2))

    def test_full_algebra(self):
        """A rank without a composition gives p = g"""

        cfg = build_config('info', {'lie_type': 'A', 'rank': 3})
        self.assertEqual(cfg.spec.composition, (4,))

    def test_missing_values(self):
        """Commands reject incomplete input"""

        with self.assertRaises(ConfigurationError):
            build_config('info', {'composition': '2,1'})
        with self.assertRaises(ConfigurationError):
            build_config('info', {'lie_type': 'A'})
        with self.assertRaises(ConfigurationError):
            build_config('degrees', {'lie_type': 'C'})
        with self.assertRaises(ConfigurationError):
            build_config('verify', {'lie_type': 'A', 'rank': 2})
        with self.assertRaises(ConfigurationError):
            build_config('plot', {})

    def test_inconsistent_rank(self):
        """A rank that disagrees with the composition is rejected"""

        with self.assertRaises(ConfigurationError):
            build_config('info', {'lie_type': 'A', 'rank': 4, 'composition': '2,1'})
        with self.assertRaises(ConfigurationError):
            build_config('degrees', {'lie_type': 'C', 'rank': 5, 'partition': '6,4,2'})

    def test_degrees(self):
        """The degrees command reads the rank off the partition"""

        cfg = build_config('degrees', {'lie_type': 'C', 'partition': '6,4,2'})

        self.assertEqual(cfg.lie_type, LieType(Family.C, 6))
        self.assertEqual(cfg.partition.parts, (6, 4, 2))
        self.assertIsNone(cfg.spec)

    def test_verify(self):
        """Suites without an algebra need no Lie type"""

        cfg = build_config('verify', {'suite': 'combinatorics'})
        self.assertEqual(cfg.suite, SuiteName.COMBINATORICS)
        self.assertIsNone(cfg.lie_type)

        cfg = build_config('verify', {'suite': 'counterexample'})
        self.assertEqual(cfg.suite_config().lie_type, LieType(Family.D, 6))

        cfg = build_config('verify', {'suite': 'coadjoint', 'lie_type': 'A', 'composition': '2,1'})
        self.assertEqual(cfg.suite_config().spec, ParabolicSpec((2, 1)))

        with self.assertRaises(ConfigurationError):
            build_config('info', {'lie_type': 'A', 'rank': 2}).suite_config()

    def test_output(self):
        """A JSON path selects JSON output"""

        cfg = build_config('info', {'lie_type': 'A', 'rank': 2, 'json': '-'})
        self.assertEqual(cfg.output_format, OutputFormat.JSON)
        self.assertEqual(cfg.output_path, '-')

        cfg = build_config('info', {'lie_type': 'A', 'rank': 2})
        self.assertEqual(cfg.output_format, OutputFormat.TEXT)
        self.assertNotIn('output_path', cfg.asdict())

    def test_defaults(self):
        """Defaults apply when parameters are omitted and can be restored"""

        parcontract.set_defaults(trials=5, seed=7)
        cfg = build_config('info', {'lie_type': 'A', 'rank': 2})
        self.assertEqual((cfg.trials, cfg.seed), (5, 7))

        cfg = build_config('info', {'lie_type': 'A', 'rank': 2, 'trials': 9})
        self.assertEqual(cfg.trials, 9)

        parcontract.set_defaults(trials=None)
        cfg = build_config('info', {'lie_type': 'A', 'rank': 2})
        self.assertEqual(cfg.trials, 20)

        with self.assertRaises(ConfigurationError):
            parcontract.set_defaults(trials=0)
        with self.assertRaises(ConfigurationError):
            parcontract.set_defaults(colour='red')

    def test_workers(self):
        """The pool width is read from the environment unless set"""

        with mock.patch.dict(os.environ, {'PARCONTRACT_WORKERS': '4'}):
            self.assertEqual(workers(), 4)
            self.assertEqual(build_config('info', {'lie_type': 'A', 'rank': 2}).workers, 4)

            parcontract.set_defaults(workers=2)
            self.assertEqual(workers(), 2)

        for value in ('none', '0'):
            parcontract.set_defaults(workers=None)
            with mock.patch.dict(os.environ, {'PARCONTRACT_WORKERS': value}):
                with self.assertRaises(ConfigurationError):
                    workers()

    def test_enum_spellings(self):
        """Enumerations accept values, names and aliases in any case"""

        self.assertEqual(Family.parse(' sp ', 'type'), Family.C)
        self.assertEqual(Family.get('gl'), Family.GL)
        self.assertEqual(SuiteName.get('Subreg'), SuiteName.SUBREGULAR)
        self.assertEqual(SuiteName.get('COUNTEREXAMPLE'), SuiteName.COUNTEREXAMPLE)
        self.assertIsNone(SuiteName.get('bogus'))

        with self.assertRaises(ConfigurationError) as context:
            SuiteName.parse('bogus', 'suite')
        self.assertIn('comb', context.exception.details['choices'])

    def test_alias_on_command_line(self):
        """Suite and family aliases are accepted by the parser"""

        args = build_parser().parse_args(['verify', 'comb', '--type', 'sp'])
        cfg = build_config('verify', {'suite': args.suite})

        self.assertEqual(Family.choices()[:5], ['A', 'B', 'C', 'D', 'GL'])
        self.assertEqual(Family.get(args.lie_type), Family.C)
        self.assertEqual(cfg.suite, SuiteName.COMBINATORICS)
