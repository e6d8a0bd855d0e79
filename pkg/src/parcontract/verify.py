"""
Verification suites for parabolic contractions. Every suite builds its configuration,
runs independent checks concurrently and merges the records into a ``SuiteReport``.
"""

import asyncio
import logging
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

from sympy import QQ
from sympy.utilities.iterables import partitions as integer_partitions

from . import partitions
from .algebra import constants
from .algebra.contraction import coadjoint_form, contract, index_samples, jacobi_defect
from .algebra.exactcore import (
    derive_seed,
    kernel_basis,
    make_rng,
    qmatrix,
    random_vector,
    schwartz_zippel_bound
)
from .algebra.invariants import (
    adjoint_lowered_evaluator,
    adjoint_top_degrees,
    homogeneity_check,
    highest_evaluator,
    invariance_probe,
    invariant_family,
    jacobian_rank,
    kostant_probe,
    levi_pullback,
    linear_slice_elements,
    n_minus_degrees,
    slice_degrees,
    slice_point,
    slodowy_evaluator,
    unit_directions
)
from .algebra.liealg import (
    LieType,
    ParabolicSpec,
    borel_dimension,
    borel_spec,
    build_algebra,
    build_parabolic,
    functional_coordinates,
    is_minimal_parabolic,
    levi_blocks,
    levi_invariant_degrees,
    validate_spec
)
from .algebra.richardson import (
    central_elements_check,
    centraliser,
    find_polarisations,
    find_richardson,
    jordan_type,
    opposite_normalized,
    subalgebra_index
)
from .types import CheckRecord, CheckStatus, ConfigurationError, Family, SuiteName, SuiteReport

logger = logging.getLogger(__name__)

# pylint: disable=too-many-instance-attributes,too-many-locals

COUNTEREXAMPLE_TYPE = LieType(Family.D, 6)
COUNTEREXAMPLE_SPEC = ParabolicSpec((4, 1, 1), 0)
COUNTEREXAMPLE_PARTITION = (5, 3, 2, 2)
COUNTEREXAMPLE_CENTRALISER_DIM = 18

# the triple sweep of the Jacobi identity is exhaustive up to this dimension
JACOBI_EXHAUSTIVE_DIM = 21
JACOBI_SAMPLES = 200

COMBINATORICS_C_SAMPLES = 200
COMBINATORICS_B_SAMPLES = 100
COMBINATORICS_MAX_TOTAL = 30
COMBINATORICS_A_MAX_TOTAL = 8

# (type, partition, degree multiset, bi-degrees, Levi type)
KNOWN_PROFILES = (
    ('C', (6, 4, 2), [1, 1, 1, 2, 2, 3],
     [(1, 1), (1, 3), (1, 5), (2, 6), (2, 8), (3, 9)], ['gl3', 'gl2', 'gl1']),
    ('C', (3, 3, 1, 1), [1, 2, 2, 4],
     [(1, 1), (2, 2), (2, 4), (4, 4)], ['gl2', 'sp4']),
    ('B', (5, 4, 4, 2, 2), [1, 1, 2, 2, 3, 3, 4, 5],
     None, ['gl5', 'gl3']),
    ('C', (6, 6, 5, 5, 2), [1, 1, 1, 2, 2, 2, 3, 3, 4, 4, 4, 5],
     None, ['gl5', 'gl4', 'gl1', 'sp4'])
)

_ANCHORS = {
    'adjoint_degree_sum': 'the Levi invariants have strictly smaller degrees than those of g',
    'bidegrees': 'measured bi-degrees of the highest components match the partition table',
    'borel_top_degree': 'for the Borel, deg_{n-} of the top highest component is deg F_l - 1',
    'centraliser_dim': 'dim g_e = dim g - 2 dim n and g_e lies in p',
    'centraliser_index': 'the centraliser g_e has index equal to the rank',
    'centre': 'a subregular centraliser has centre of dimension l - 1 and derived algebra of dimension at least 2',
    'closed_form_B': 'admissible slice multiplicities follow the closed form',
    'counterexample_degree_sum': 'the n- degrees of dependent highest components exceed dim n',
    'counterexample_dependence': 'the highest components are algebraically dependent',
    'counterexample_jordan_type': 'the Richardson orbit has partition (5,3,2,2) and dim g_e = 18',
    'highest_invariance': 'every highest component is invariant under the coadjoint action of q',
    'homogeneity': 'every highest component keeps the degree of its invariant',
    'index': 'the index of the contraction equals the rank',
    'jacobi': 'the contracted bracket satisfies the Jacobi identity',
    'jacobian_rank': 'the highest components are algebraically independent',
    'jordan_type': 'the Richardson element has a Richardson partition',
    'known_profiles': 'degree data of the worked examples are reproduced exactly',
    'kostant_crafted': 'the Kostant equality holds at singular and special points',
    'kostant_random': 'the Kostant equality holds at random points',
    'levi_pullback_degrees': 'the pulled-back Levi invariants have the Levi degrees',
    'levi_pullback_invariance': 'the pulled-back Levi invariants are invariant on q',
    'levi_pullback_jacobian': 'the pulled-back Levi invariants are algebraically independent',
    'linear_slice_elements': 'degree-one slice functions are independent central elements of g_e',
    'lowered_degrees': 'top p-degrees of the lowered components on q',
    'lowered_invariance': 'the lowered components are invariant on q',
    'nminus_degree_sum': 'the n- degrees of the highest components sum to dim n',
    'p_degree_pattern': 'a minimal parabolic has p-degrees (1, ..., 1, 2)',
    'p_degree_sum': 'the p-degrees of the highest components sum to dim b(l)',
    'polarisation_scan': 'the composition is a polarisation of the partition',
    'random_sweep_A': 'slice degrees match Levi degrees for every type A partition',
    'random_sweep_B': 'slice degrees match Levi degrees for random admissible partitions',
    'random_sweep_C': 'slice degrees match Levi degrees for random Richardson partitions',
    'richardson_certificate': 'the P-orbit of e is dense in n',
    'slice_coincidence': 'highest components on e + p- agree with the slice restrictions',
    'slice_degree': 'the slice restrictions have degree m - b',
    'slice_degree_sum': 'slice degrees sum to (dim g_e + ind g_e) / 2',
    'slice_degrees_match_levi': 'slice degrees equal the Levi invariant degrees',
    'slice_homogeneity': 'every slice restriction is homogeneous of its degree',
    'subregular_centraliser_dim': 'a subregular centraliser has dimension l + 2'
}


# configuration

def _is_admissible_spec(t, spec):
    return (
        t.family == Family.B
        and spec.central == 1
        and all(n % 2 for n in spec.composition)
    )

@dataclass(frozen=True)
class SuiteConfig:
    """
    The validated input of a verification suite.

    - ``suite``: The suite to run.
    - ``lie_type``: The ambient algebra; fixed for the counterexample, unused for combinatorics.
    - ``spec``: The flag parabolic.
    - ``trials``: Random points for index, Jacobian and slice checks.
    - ``seed``: The run seed every check seed is derived from.
    - ``bound``: Random coordinates are drawn from ``[-bound, bound]``.
    - ``probes``: Random points for invariance and Kostant probes.
    - ``certify``: Random points for certifying component degrees.
    """

    suite: SuiteName
    lie_type: LieType = None
    spec: ParabolicSpec = None
    trials: int = constants.TRIALS
    seed: int = constants.SEED
    bound: int = constants.BOUND
    probes: int = constants.PROBES
    certify: int = constants.CERTIFY_TRIALS

    def __post_init__(self):
        suite = SuiteName.get(self.suite)
        if suite is None:
            raise ConfigurationError(f'unknown suite {self.suite!r}')
        object.__setattr__(self, 'suite', suite)

        if suite == SuiteName.COUNTEREXAMPLE:
            self._fix(COUNTEREXAMPLE_TYPE, COUNTEREXAMPLE_SPEC)

        for name in ('trials', 'probes', 'certify', 'bound'):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ConfigurationError(f'{name} must be a positive integer', {name: value})
        if not isinstance(self.seed, int) or self.seed < 0:
            raise ConfigurationError('seed must be a nonnegative integer', {'seed': self.seed})

        if suite != SuiteName.COMBINATORICS:
            self._validate_algebra()

    def _fix(self, t, spec):
        for name, fixed in (('lie_type', t), ('spec', spec)):
            given = getattr(self, name)
            if given is not None and given != fixed:
                raise ConfigurationError(f'the counterexample suite is fixed to {t.label()} {spec}', {
                    name: str(given)
                })
            object.__setattr__(self, name, fixed)

    def _validate_algebra(self):
        t, spec = self.lie_type, self.spec
        if t is None or spec is None:
            raise ConfigurationError(f'the {self.suite} suite needs a Lie type and a composition')

        validate_spec(t, spec)
        details = {'lie_type': str(t), 'spec': str(spec), 'suite': str(self.suite)}

        if self.suite == SuiteName.COUNTEREXAMPLE:
            return
        if t.size > constants.MAX_SUITE_MATRIX_SIZE:
            raise ConfigurationError(
                f'matrices larger than {constants.MAX_SUITE_MATRIX_SIZE} are not supported by this suite',
                details)

        if self.suite == SuiteName.COADJOINT:
            if t.family == Family.D:
                raise ConfigurationError(
                    'type D is only covered by the counterexample suite', details)
            if t.family == Family.B and not (
                    _is_admissible_spec(t, spec) or is_minimal_parabolic(spec, t)):
                raise ConfigurationError(
                    'type B requires an admissible or minimal parabolic', details)

        if self.suite == SuiteName.SUBREGULAR:
            if t.rank < 2:
                raise ConfigurationError('the subregular suite requires rank at least 2', details)
            if not is_minimal_parabolic(spec, t):
                raise ConfigurationError('the subregular suite requires a minimal parabolic', details)

    def asdict(self):
        """Returns the configuration as a JSON-compatible dict."""

        return {
            'suite': self.suite.value,
            'lie_type': str(self.lie_type) if self.lie_type else None,
            'algebra': self.lie_type.label() if self.lie_type else None,
            'composition': list(self.spec.composition) if self.spec else None,
            'central': self.spec.central if self.spec else None,
            'trials': self.trials,
            'seed': self.seed,
            'bound': self.bound,
            'probes': self.probes,
            'certify': self.certify
        }


# shared state of a suite run

class SuiteContext:
    """The algebra, contraction and Richardson data shared by the checks of one run."""

    def __init__(self, cfg):
        self.cfg = cfg
        self.lie_type = cfg.lie_type
        self.algebra = build_algebra(cfg.lie_type)
        self.parabolic = build_parabolic(self.algebra, cfg.spec)
        self.contracted = contract(self.parabolic)
        self.family = invariant_family(self.algebra)
        self.rank = self.contracted.rank
        self.dim_n = len(self.parabolic.idx_n)

        self.element = None
        self.jordan = None
        self.centraliser = None
        self.b = None
        self.highest = None
        self.y = None
        self.k = None
        self.slodowy = None

    def seed_for(self, name):
        """The derived seed of a check."""
        return derive_seed(self.cfg.seed, name)

    def points(self, name, count, support=None):
        """``count`` seeded random points for a check."""

        return [
            random_vector(make_rng(self.cfg.seed, name, trial), self.algebra.dim,
                          self.cfg.bound, support)
            for trial in range(count)
        ]

    def prepare(self):
        """Finds the Richardson element and certifies every degree the checks rely on."""

        cfg, f, p = self.cfg, self.family, self.parabolic

        self.element = find_richardson(p, cfg.trials, self.seed_for('richardson'))
        self.jordan = jordan_type(self.element)
        c = centraliser(self.algebra, self.element)
        self.centraliser = replace(c, index=subalgebra_index(
            c, cfg.trials, self.seed_for('centraliser_index'), cfg.bound
        ))
        self.b = n_minus_degrees(f, p, cfg.certify, self.seed_for('bidegrees'), cfg.bound)
        self.highest = highest_evaluator(f, p, self.b)

        if not p.is_degenerate:
            rows = self.element.rows
            self.y = opposite_normalized(p, self.element, cfg.certify,
                                         self.seed_for('opposite'), cfg.bound)
            self.k = slice_degrees(f, rows, self.y, cfg.certify,
                                   self.seed_for('slice_degree'), cfg.bound)
            self.slodowy = slodowy_evaluator(f, rows, self.y, self.k)

        logger.info('prepared %s %s: e of type %s, b = %s',
                    self.lie_type.label(), cfg.spec, self.jordan, self.b)
        return self

    @property
    def p_degrees(self):
        """``m_i - b_i`` for every invariant."""
        return [m - b_i for m, b_i in zip(self.family.degrees, self.b)]

    def record(self, name, passed, witness, bound=None, info=False):
        """Builds the record of a check."""

        if info:
            status = CheckStatus.INFO
        else:
            status = CheckStatus.PASS if passed else CheckStatus.FAIL
            if not passed:
                logger.info('check %s failed: %s', name, witness)

        return CheckRecord(name, _ANCHORS[name], status, witness, self.seed_for(name), bound)

    def degenerate(self, name):
        """The record of a slice check skipped because ``e = 0``."""
        return self.record(name, True, {'reason': 'p = g, so e = 0 has no slice'}, info=True)


# coadjoint checks

def check_index(ctx):
    """The contraction has index ``l``."""

    cfg, q = ctx.cfg, ctx.contracted
    samples = index_samples(q, cfg.trials, ctx.seed_for('index'), cfg.bound)
    index = min(samples)

    return ctx.record('index', index == ctx.rank, {
        'index': index, 'rank': ctx.rank, 'dim_q': q.dim, 'samples': samples
    }, schwartz_zippel_bound(q.dim - ctx.rank, cfg.bound, cfg.trials))

def check_richardson_certificate(ctx):
    """``[p, e] = n``."""

    element = ctx.element
    return ctx.record('richardson_certificate', element.certificate == element.dim_n, {
        'certificate': element.certificate,
        'dim_n': element.dim_n,
        'attempt': element.attempt
    })

def check_jordan_type(ctx):
    """The Jordan type satisfies the predicates of its family."""

    t, jordan = ctx.lie_type, ctx.jordan
    witness = {
        'jordan_type': list(jordan),
        'is_valid_nilpotent': partitions.is_valid_nilpotent(t, jordan)
    }
    passed = witness['is_valid_nilpotent']

    if t.family == Family.C:
        witness['is_richardson_C'] = partitions.is_richardson_C(jordan)
        passed = passed and witness['is_richardson_C']
    elif t.family == Family.B and _is_admissible_spec(t, ctx.cfg.spec):
        witness['is_admissible_B'] = partitions.is_admissible_B(jordan)
        passed = passed and witness['is_admissible_B']
    elif t.family in (Family.A, Family.GL):
        composition = sorted(ctx.cfg.spec.composition, reverse=True)
        witness['sorted_composition'] = composition
        witness['dual'] = list(partitions.dual(jordan))
        passed = passed and composition == witness['dual']

    return ctx.record('jordan_type', passed, witness)

def check_centraliser_dim(ctx):
    """``dim g_e = dim g - 2 dim n`` and ``g_e`` lies in ``p``."""

    c, p = ctx.centraliser, ctx.parabolic
    expected = ctx.algebra.dim - 2 * ctx.dim_n
    inside = all(not z[i] for z in c.basis for i in p.idx_nminus)

    return ctx.record('centraliser_dim', c.dim == expected and inside, {
        'centraliser_dim': c.dim, 'expected': expected, 'inside_p': inside
    })

def _bidegree_table(ctx):
    """The combinatorial table when the partition rule covers the configuration, else None."""

    t = ctx.lie_type
    if t.family == Family.D:
        return None
    if t.family == Family.B and not partitions.is_admissible_B(ctx.jordan):
        return None

    return [list(pair) for pair in partitions.bidegree_table(t, ctx.jordan)]

def check_bidegrees(ctx):
    """Measured ``(deg_p, deg_{n_-})`` pairs against the partition table."""

    measured = [[m - b_i, b_i] for m, b_i in zip(ctx.family.degrees, ctx.b)]
    witness = {'measured': measured}
    bound = schwartz_zippel_bound(max(ctx.family.degrees), ctx.cfg.bound, ctx.cfg.certify)

    try:
        table = _bidegree_table(ctx)
    except ConfigurationError as exc:
        witness.update({'error': exc.message, **exc.details})
        return ctx.record('bidegrees', False, witness, bound)

    if table is None:
        witness['reason'] = 'no partition table covers this configuration'
        return ctx.record('bidegrees', True, witness, bound, info=True)

    witness['table'] = table
    return ctx.record('bidegrees', measured == table, witness, bound)

def check_nminus_degree_sum(ctx):
    """``sum b_i = dim n``."""

    total = sum(ctx.b)
    return ctx.record('nminus_degree_sum', total == ctx.dim_n, {
        'b': list(ctx.b), 'sum': total, 'dim_n': ctx.dim_n
    })

def check_p_degree_sum(ctx):
    """``sum (m_i - b_i) = dim b(l)``."""

    total = sum(ctx.p_degrees)
    expected = borel_dimension(levi_blocks(ctx.cfg.spec, ctx.lie_type), ctx.lie_type)

    return ctx.record('p_degree_sum', total == expected, {
        'p_degrees': ctx.p_degrees, 'sum': total, 'dim_borel_levi': expected
    })

def check_highest_invariance(ctx):
    """Every highest component is killed by the coadjoint action of ``q``."""

    cfg = ctx.cfg
    report = invariance_probe(ctx.contracted, ctx.highest, cfg.probes,
                              ctx.seed_for('highest_invariance'), 'coadjoint', cfg.bound)

    return ctx.record('highest_invariance', report.passed, {
        'points': report.points, 'nonzero': list(report.nonzero)[:10]
    }, schwartz_zippel_bound(max(ctx.family.degrees), cfg.bound, cfg.probes))

def check_homogeneity(ctx):
    """``F_i^high(c xi) = c^m F_i^high(xi)``."""

    xi, = ctx.points('homogeneity', 1)
    scales = (2, -3)
    passed = all(homogeneity_check(ctx.highest, xi, scale) for scale in scales)

    return ctx.record('homogeneity', passed, {
        'degrees': list(ctx.family.degrees), 'scales': list(scales)
    })

def check_slice_homogeneity(ctx):
    """Every slice restriction is homogeneous of degree ``k_i``."""

    if ctx.slodowy is None:
        return ctx.degenerate('slice_homogeneity')

    xi, = ctx.points('slice_homogeneity', 1)
    scales = (2, -3)
    passed = all(homogeneity_check(ctx.slodowy, xi, scale) for scale in scales)

    return ctx.record('slice_homogeneity', passed, {'k': list(ctx.k), 'scales': list(scales)})

def _jacobian_ranks(ctx, name):
    directions = unit_directions(ctx.algebra.dim)
    return [
        jacobian_rank(ctx.highest, xi, directions)
        for xi in ctx.points(name, ctx.cfg.trials)
    ]

def _jacobian_bound(ctx):
    total = sum(m - 1 for m in ctx.family.degrees)
    return schwartz_zippel_bound(max(total, 1), ctx.cfg.bound) * ctx.cfg.trials

def check_jacobian_rank(ctx):
    """The differentials of the highest components have rank ``l`` at random points."""

    ranks = _jacobian_ranks(ctx, 'jacobian_rank')
    return ctx.record('jacobian_rank', all(r == ctx.rank for r in ranks), {
        'ranks': ranks, 'rank': ctx.rank
    }, _jacobian_bound(ctx))

def _kostant_entry(ctx, label, xi):
    record = kostant_probe(ctx.contracted, ctx.highest, xi, ctx.rank)
    return {
        'point': label,
        'stab_dim': record.stab_dim,
        'jac_rank': record.jac_rank,
        'consistent': record.consistent,
        'singular': record.stab_dim > ctx.rank
    }

def check_kostant_random(ctx):
    """Kostant equality at random points."""

    entries = [
        _kostant_entry(ctx, f'random_{n}', xi)
        for n, xi in enumerate(ctx.points('kostant_random', ctx.cfg.trials))
    ]
    return ctx.record('kostant_random', all(entry['consistent'] for entry in entries), {
        'points': entries
    })

def crafted_points(ctx):
    """
    Returns labelled points where the stabilizer is expected to jump: zero,
    a point supported on ``n_-``, the point of ``e`` and slice points ``e + v``
    with ``v`` in the kernel of the coadjoint form at ``e`` restricted to ``p_-``.
    """

    a, p, q = ctx.algebra, ctx.parabolic, ctx.contracted
    points = [
        ('zero', [QQ(0)] * a.dim),
        ('nminus', ctx.points('kostant_crafted', 1, support=p.idx_nminus)[0])
    ]
    if p.is_degenerate:
        return points

    rows = ctx.element.rows
    xi_e = functional_coordinates(a, rows)
    points.append(('richardson', xi_e))

    form = coadjoint_form(q, xi_e).to_list()
    idx = p.idx_pminus
    restricted = qmatrix([[form[i][j] for j in idx] for i in idx], ncols=len(idx))
    for n, vector in enumerate(kernel_basis(restricted)[:2]):
        v = [QQ(0)] * a.dim
        for i, value in zip(idx, vector):
            v[i] = value
        points.append((f'slice_kernel_{n}', slice_point(a, rows, v)))

    return points

def check_kostant_crafted(ctx):
    """Kostant equality at the crafted points."""

    entries = [_kostant_entry(ctx, label, xi) for label, xi in crafted_points(ctx)]
    witnessed = any(entry['singular'] for entry in entries if entry['point'] != 'zero')

    witness = {'points': entries, 'singular_witnessed': witnessed}
    if not witnessed:
        witness['note'] = 'the equivalence was only exercised on its singular side at zero'

    return ctx.record('kostant_crafted', all(entry['consistent'] for entry in entries), witness)

def check_slice_coincidence(ctx):
    """
    ``F^high(e + v)`` equals the slice restriction at ``e + v + w``
    for ``v`` supported on ``p_-`` and ``w`` on ``n``. The first offset is ``w = 0``.
    """

    if ctx.slodowy is None:
        return ctx.degenerate('slice_coincidence')

    a, p, cfg = ctx.algebra, ctx.parabolic, ctx.cfg
    rows = ctx.element.rows
    shifts = ctx.points('slice_coincidence', cfg.trials, support=p.idx_pminus)
    offsets = [[QQ(0)] * a.dim]
    offsets += ctx.points('slice_coincidence_n', cfg.trials - 1, support=p.idx_n)

    mismatches = []
    for trial, (v, w) in enumerate(zip(shifts, offsets)):
        highest = ctx.highest(slice_point(a, rows, v))
        restricted = ctx.slodowy(slice_point(a, rows, [x + y for x, y in zip(v, w)]))
        if highest != restricted:
            mismatches.append({'trial': trial, 'highest': highest, 'slice': restricted})

    return ctx.record('slice_coincidence', not mismatches, {
        'points': cfg.trials, 'mismatches': mismatches[:3]
    }, schwartz_zippel_bound(max(ctx.family.degrees), cfg.bound, cfg.trials))

def check_slice_degree(ctx):
    """``k_i = m_i - b_i``."""

    if ctx.k is None:
        return ctx.degenerate('slice_degree')

    return ctx.record('slice_degree', list(ctx.k) == ctx.p_degrees, {
        'k': list(ctx.k), 'p_degrees': ctx.p_degrees
    })

def check_slice_degrees_match_levi(ctx):
    """The sorted p-degrees equal the Levi invariant degrees."""

    measured = sorted(ctx.p_degrees)
    expected = levi_invariant_degrees(ctx.cfg.spec, ctx.lie_type)

    return ctx.record('slice_degrees_match_levi', measured == expected, {
        'measured': measured, 'levi': expected
    })

def check_slice_degree_sum(ctx):
    """``sum (m_i - b_i) = (dim g_e + l) / 2``."""

    total = sum(ctx.p_degrees)
    expected = QQ(ctx.centraliser.dim + ctx.rank, 2)

    return ctx.record('slice_degree_sum', total == expected, {
        'sum': total, 'centraliser_dim': ctx.centraliser.dim, 'rank': ctx.rank
    })

def check_centraliser_index(ctx):
    """``ind g_e = l``."""

    cfg, c = ctx.cfg, ctx.centraliser

    return ctx.record('centraliser_index', c.index == ctx.rank, {
        'index': c.index, 'centraliser_dim': c.dim, 'rank': ctx.rank
    }, schwartz_zippel_bound(max(c.dim - ctx.rank, 1), cfg.bound, cfg.trials))

def check_jacobi(ctx):
    """The Jacobi identity on basis triples of ``q``."""

    dim = ctx.contracted.dim
    structure = ctx.contracted.structure_q

    if dim <= JACOBI_EXHAUSTIVE_DIM:
        triples = [(i, j, k) for i in range(dim) for j in range(i + 1, dim)
                   for k in range(j + 1, dim)]
    else:
        rng = make_rng(ctx.cfg.seed, 'jacobi')
        triples = [tuple(rng.sample(range(dim), 3)) for _ in range(JACOBI_SAMPLES)]

    defects = [list(t) for t in triples if any(jacobi_defect(structure, *t, dim))]
    return ctx.record('jacobi', not defects, {
        'triples': len(triples), 'exhaustive': dim <= JACOBI_EXHAUSTIVE_DIM,
        'defects': defects[:5]
    })

COADJOINT_CHECKS = (
    check_bidegrees,
    check_centraliser_dim,
    check_centraliser_index,
    check_highest_invariance,
    check_homogeneity,
    check_index,
    check_jacobi,
    check_jacobian_rank,
    check_jordan_type,
    check_kostant_crafted,
    check_kostant_random,
    check_nminus_degree_sum,
    check_p_degree_sum,
    check_richardson_certificate,
    check_slice_coincidence,
    check_slice_degree,
    check_slice_degree_sum,
    check_slice_degrees_match_levi,
    check_slice_homogeneity
)


# adjoint checks

def check_levi_pullback_invariance(ctx):
    """The pulled-back Levi invariants are killed by the adjoint action of ``q``."""

    cfg = ctx.cfg
    levi = levi_pullback(ctx.parabolic)
    report = invariance_probe(ctx.contracted, levi, cfg.probes,
                              ctx.seed_for('levi_pullback_invariance'), 'adjoint', cfg.bound)

    return ctx.record('levi_pullback_invariance', report.passed, {
        'degrees': levi.degrees, 'points': report.points, 'nonzero': list(report.nonzero)[:10]
    }, schwartz_zippel_bound(levi.max_degree, cfg.bound, cfg.probes))

def check_levi_pullback_degrees(ctx):
    """The pulled-back invariants have the Levi degrees."""

    measured = sorted(levi_pullback(ctx.parabolic).degrees)
    expected = levi_invariant_degrees(ctx.cfg.spec, ctx.lie_type)

    return ctx.record('levi_pullback_degrees', measured == expected, {
        'measured': measured, 'levi': expected
    })

def check_levi_pullback_jacobian(ctx):
    """The pulled-back Levi invariants are independent."""

    levi = levi_pullback(ctx.parabolic)
    directions = unit_directions(ctx.algebra.dim)
    ranks = [
        jacobian_rank(levi, x, directions)
        for x in ctx.points('levi_pullback_jacobian', ctx.cfg.probes)
    ]

    return ctx.record('levi_pullback_jacobian', all(r == ctx.rank for r in ranks), {
        'ranks': ranks, 'rank': ctx.rank
    })

def check_adjoint_degree_sum(ctx):
    """Levi degrees sum to less than the degrees of ``g`` unless ``p = g``."""

    levi = sum(levi_invariant_degrees(ctx.cfg.spec, ctx.lie_type))
    full = sum(ctx.family.degrees)
    degenerate = ctx.parabolic.is_degenerate

    return ctx.record('adjoint_degree_sum', levi == full if degenerate else levi < full, {
        'levi_sum': levi, 'invariant_sum': full, 'degenerate': degenerate
    })

def check_lowered_invariance(ctx):
    """The lowered components are invariant on ``q``."""

    cfg, f, p = ctx.cfg, ctx.family, ctx.parabolic
    tops = adjoint_top_degrees(f, p, cfg.certify, ctx.seed_for('lowered_degrees'), cfg.bound)
    lowered = adjoint_lowered_evaluator(f, p, tops)
    report = invariance_probe(ctx.contracted, lowered, cfg.probes,
                              ctx.seed_for('lowered_invariance'), 'adjoint', cfg.bound)

    return ctx.record('lowered_invariance', report.passed, {
        'tops': tops, 'points': report.points, 'nonzero': list(report.nonzero)[:10]
    }, schwartz_zippel_bound(max(f.degrees), cfg.bound, cfg.probes))

def check_lowered_degrees(ctx):
    """Diagnostic comparison of the lowered components with the Levi degrees."""

    cfg, f = ctx.cfg, ctx.family
    tops = adjoint_top_degrees(f, ctx.parabolic, cfg.certify,
                               ctx.seed_for('lowered_degrees'), cfg.bound)

    return ctx.record('lowered_degrees', True, {
        'p_degrees': tops,
        'invariant_degrees': list(f.degrees),
        'levi_degrees': levi_invariant_degrees(cfg.spec, ctx.lie_type)
    }, info=True)

ADJOINT_CHECKS = (
    check_adjoint_degree_sum,
    check_index,
    check_levi_pullback_degrees,
    check_levi_pullback_invariance,
    check_levi_pullback_jacobian,
    check_lowered_degrees,
    check_lowered_invariance
)


# subregular checks

def check_p_degree_pattern(ctx):
    """The p-degrees are ``(1, ..., 1, 2)``."""

    measured = sorted(ctx.p_degrees)
    expected = [1] * (ctx.rank - 1) + [2]

    return ctx.record('p_degree_pattern', measured == expected, {
        'measured': measured, 'expected': expected
    })

def check_subregular_centraliser_dim(ctx):
    """``dim g_e = l + 2``."""

    dim = ctx.centraliser.dim
    return ctx.record('subregular_centraliser_dim', dim == ctx.rank + 2, {
        'centraliser_dim': dim, 'rank': ctx.rank
    })

def check_centre(ctx):
    """``dim z(g_e) = l - 1`` and ``dim [g_e, g_e] >= 2``."""

    c = ctx.centraliser
    passed = c.centre_dim == ctx.rank - 1 and c.derived_dim >= 2

    return ctx.record('centre', passed, {
        'centre_dim': c.centre_dim, 'derived_dim': c.derived_dim, 'rank': ctx.rank
    })

def check_linear_slice_elements(ctx):
    """The degree-one slice functions come from independent central elements of ``g_e``."""

    if ctx.parabolic.is_degenerate:
        return ctx.degenerate('linear_slice_elements')

    elements = linear_slice_elements(ctx.family, ctx.parabolic, ctx.element.rows, ctx.b)
    result = central_elements_check(ctx.algebra, ctx.element, ctx.centraliser, elements)
    count = len(elements)
    passed = (
        count == ctx.rank - 1
        and result['in_centraliser']
        and result['central']
        and result['rank'] == count
    )

    return ctx.record('linear_slice_elements', passed, {'count': count, **result})

def check_borel_top_degree(ctx):
    """For the Borel, the top highest component has ``n_-``-degree ``deg F_l - 1``."""

    cfg, f = ctx.cfg, ctx.family
    borel = build_parabolic(ctx.algebra, borel_spec(ctx.lie_type))
    b = n_minus_degrees(f, borel, cfg.certify, ctx.seed_for('borel_top_degree'), cfg.bound)

    return ctx.record('borel_top_degree', b[-1] == f.degrees[-1] - 1, {
        'b': b, 'degree': f.degrees[-1]
    }, schwartz_zippel_bound(max(f.degrees), cfg.bound, cfg.certify))

SUBREGULAR_CHECKS = COADJOINT_CHECKS + (
    check_borel_top_degree,
    check_centre,
    check_linear_slice_elements,
    check_p_degree_pattern,
    check_subregular_centraliser_dim
)


# counterexample checks

def check_counterexample_jordan_type(ctx):
    """Jordan type ``(5,3,2,2)`` with ``dim g_e = 18``."""

    passed = (
        tuple(ctx.jordan) == COUNTEREXAMPLE_PARTITION
        and ctx.centraliser.dim == COUNTEREXAMPLE_CENTRALISER_DIM
    )
    return ctx.record('counterexample_jordan_type', passed, {
        'jordan_type': list(ctx.jordan), 'centraliser_dim': ctx.centraliser.dim
    })

def check_counterexample_dependence(ctx):
    """The highest components have Jacobian rank below ``l`` at every point."""

    ranks = _jacobian_ranks(ctx, 'counterexample_dependence')
    return ctx.record('counterexample_dependence', all(r < ctx.rank for r in ranks), {
        'ranks': ranks, 'max_rank': max(ranks), 'rank': ctx.rank
    })

def check_counterexample_degree_sum(ctx):
    """``sum b_i > dim n``."""

    total = sum(ctx.b)
    return ctx.record('counterexample_degree_sum', total > ctx.dim_n, {
        'b': list(ctx.b), 'sum': total, 'dim_n': ctx.dim_n
    })

def check_polarisation_scan(ctx):
    """The scan of flag parabolics finds the configured composition."""

    found = find_polarisations(ctx.lie_type, COUNTEREXAMPLE_PARTITION,
                               ctx.seed_for('polarisation_scan'), ctx.cfg.trials)

    return ctx.record('polarisation_scan', ctx.cfg.spec in found, {
        'polarisations': [str(spec) for spec in found]
    })

COUNTEREXAMPLE_CHECKS = (
    check_centraliser_index,
    check_counterexample_degree_sum,
    check_counterexample_dependence,
    check_counterexample_jordan_type,
    check_index,
    check_polarisation_scan
)


# combinatorics checks

class CombinatoricsContext:
    """Seeds and records for suites that need no algebra."""

    def __init__(self, cfg):
        self.cfg = cfg

    seed_for = SuiteContext.seed_for
    record = SuiteContext.record

def _profile_failures(family, partition_list):
    failures = []
    for partition in partition_list:
        try:
            if not partitions.degrees_match_levi(family, partition):
                failures.append(list(partition))
        except ConfigurationError as exc:
            failures.append({'partition': list(partition), 'error': exc.message})

    return failures

def check_known_profiles(ctx):
    """The worked examples are reproduced."""

    mismatches = []
    for family, partition, multiset, bidegrees, levi in KNOWN_PROFILES:
        profile = partitions.degree_profile(family, partition)
        measured = {
            'degree_multiset': list(profile.degree_multiset),
            'levi_type': profile.levi_type,
            'bidegrees': [tuple(pair) for pair in profile.bidegrees],
            'matches_levi': partitions.degrees_match_levi(family, partition)
        }
        expected = {
            'degree_multiset': multiset,
            'levi_type': levi,
            'bidegrees': bidegrees if bidegrees is not None else measured['bidegrees'],
            'matches_levi': True
        }
        if measured != expected:
            mismatches.append({'partition': list(partition), 'measured': measured})

    return ctx.record('known_profiles', not mismatches, {
        'profiles': len(KNOWN_PROFILES), 'mismatches': mismatches
    })

def _sweep_rng(ctx, name):
    return make_rng(ctx.cfg.seed, name)

def check_random_sweep_C(ctx):
    """Random Richardson partitions of type C."""

    rng = _sweep_rng(ctx, 'random_sweep_C')
    sample = [
        partitions.random_richardson_C(rng, COMBINATORICS_MAX_TOTAL)
        for _ in range(COMBINATORICS_C_SAMPLES)
    ]
    failures = _profile_failures(Family.C, sample)

    return ctx.record('random_sweep_C', not failures, {
        'samples': len(sample), 'failures': failures[:5]
    })

def _admissible_sample(ctx, name):
    rng = _sweep_rng(ctx, name)
    return [
        partitions.random_admissible_B(rng, COMBINATORICS_MAX_TOTAL + 1)
        for _ in range(COMBINATORICS_B_SAMPLES)
    ]

def check_random_sweep_B(ctx):
    """Random admissible partitions of type B."""

    sample = _admissible_sample(ctx, 'random_sweep_B')
    failures = _profile_failures(Family.B, sample)

    return ctx.record('random_sweep_B', not failures, {
        'samples': len(sample), 'failures': failures[:5]
    })

def check_random_sweep_A(ctx):
    """Every partition of type A and GL up to a small total."""

    sample = []
    for total in range(2, COMBINATORICS_A_MAX_TOTAL + 1):
        for multiplicities in integer_partitions(total):
            parts = sorted(Counter(multiplicities).elements(), reverse=True)
            sample.append(partitions.Partition(tuple(parts)))

    failures = _profile_failures(Family.A, sample) + _profile_failures(Family.GL, sample)
    return ctx.record('random_sweep_A', not failures, {
        'samples': len(sample), 'failures': failures[:5]
    })

def check_closed_form_B(ctx):
    """The closed-form admissible multiplicities agree with the interval rule."""

    mismatches = []
    for partition in _admissible_sample(ctx, 'closed_form_B'):
        measured = dict(Counter(partitions.e_degree_multiset(Family.B, partition)))
        if measured != partitions.admissible_multiplicities(partition):
            mismatches.append({'partition': list(partition), 'measured': measured})

    return ctx.record('closed_form_B', not mismatches, {
        'samples': COMBINATORICS_B_SAMPLES, 'mismatches': mismatches[:5]
    })

COMBINATORICS_CHECKS = (
    check_closed_form_B,
    check_known_profiles,
    check_random_sweep_A,
    check_random_sweep_B,
    check_random_sweep_C
)


# suite runner

_SUITE_CHECKS = {
    SuiteName.COADJOINT: COADJOINT_CHECKS,
    SuiteName.ADJOINT: ADJOINT_CHECKS,
    SuiteName.SUBREGULAR: SUBREGULAR_CHECKS,
    SuiteName.COUNTEREXAMPLE: COUNTEREXAMPLE_CHECKS,
    SuiteName.COMBINATORICS: COMBINATORICS_CHECKS
}

def _timed(check, ctx):
    start = time.perf_counter()
    record = check(ctx)
    record.runtime_ms = round((time.perf_counter() - start) * 1000)
    return record

def _build_context(cfg):
    if cfg.suite == SuiteName.COMBINATORICS:
        return CombinatoricsContext(cfg)

    ctx = SuiteContext(cfg)
    if cfg.suite != SuiteName.ADJOINT:
        ctx.prepare()
    return ctx

async def run_suite(cfg, workers=1):
    """
    Runs every check of a suite and returns the merged ``SuiteReport``.

    - ``cfg``: A ``SuiteConfig``.
    - ``workers``: The width of the thread pool running independent checks.
    """

    loop = asyncio.get_running_loop()
    start = time.perf_counter()

    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        ctx = await loop.run_in_executor(pool, _build_context, cfg)
        records = await asyncio.gather(*(
            loop.run_in_executor(pool, _timed, check, ctx)
            for check in _SUITE_CHECKS[cfg.suite]
        ))

    report = SuiteReport(cfg.suite, cfg.asdict(), records, cfg.seed)
    report.runtime_ms = round((time.perf_counter() - start) * 1000)

    logger.info('%s suite %s with %d checks', cfg.suite, report.status, len(records))
    return report

async def suite_coadjoint(cfg, workers=1):
    """Runs the coadjoint suite."""
    return await run_suite(_with_suite(cfg, SuiteName.COADJOINT), workers)

async def suite_adjoint(cfg, workers=1):
    """Runs the adjoint suite."""
    return await run_suite(_with_suite(cfg, SuiteName.ADJOINT), workers)

async def suite_subregular(cfg, workers=1):
    """Runs the subregular suite: every coadjoint check plus the minimal-parabolic claims."""
    return await run_suite(_with_suite(cfg, SuiteName.SUBREGULAR), workers)

async def suite_counterexample(cfg=None, workers=1):
    """Runs the counterexample suite on so12 with composition (4,1,1)."""
    return await run_suite(_with_suite(cfg, SuiteName.COUNTEREXAMPLE), workers)

async def suite_combinatorics(cfg=None, workers=1):
    """Runs the partition sweeps."""
    return await run_suite(_with_suite(cfg, SuiteName.COMBINATORICS), workers)

def _with_suite(cfg, suite):
    if cfg is None:
        return SuiteConfig(suite)
    if cfg.suite != suite:
        raise ConfigurationError(f'expected a {suite} configuration', {'suite': str(cfg.suite)})
    return cfg
