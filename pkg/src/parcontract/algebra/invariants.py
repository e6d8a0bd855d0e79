"""
Characteristic-polynomial invariants of classical algebras and the functions built from them:
bi-homogeneous components, highest components on q*, lowered components on q,
slice restrictions, Levi pullbacks, exact directional derivatives and the probes using them.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..types import AlgebraError, CertificationError, Family, LeviKind
from . import constants
from .contraction import adjoint_derivative, coadjoint_derivative, stabilizer_dim
from .exactcore import (
    default_nodes,
    degree,
    interpolate,
    make_rng,
    qmatrix,
    random_vector,
    rank,
    sample_line,
    solve
)
from .liealg import (
    central_block,
    functional_coordinates,
    point_matrix,
    row_blocks,
    to_matrix
)

logger = logging.getLogger(__name__)

# pylint: disable=too-many-arguments

_PFAFFIAN = 'pf'

_MODES = {
    Family.A: 'sl',
    Family.GL: 'gl',
    Family.C: 'sp',
    Family.B: 'so',
    Family.D: 'so'
}


# matrix helpers

def _combine(a, b, scale=1):
    """Returns ``a + scale * b`` for dense matrices."""

    if not scale:
        return [list(row) for row in a]

    return [
        [x + scale * y if y else x for x, y in zip(row_a, row_b)]
        for row_a, row_b in zip(a, b)
    ]

def charpoly(rows):
    """
    Returns ``[1, c_1, ..., c_N]`` with ``det(x Id - Y) = x^N + c_1 x^{N-1} + ... + c_N``.
    """

    size = len(rows)
    return DomainMatrix([[QQ(x) for x in row] for row in rows], (size, size), QQ).charpoly()

def _pfaffian_expansion(rows):
    """Pfaffians of the principal submatrices selected by a bitmask, memoized."""

    size = len(rows)

    @lru_cache(maxsize=None)
    def expand(mask):
        if mask == 0:
            return QQ(1)

        first = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << first)
        total = QQ(0)
        sign = 1

        for j in range(first + 1, size):
            if not rest >> j & 1:
                continue
            entry = rows[first][j]
            if entry:
                total += sign * entry * expand(rest & ~(1 << j))
            sign = -sign

        return total

    return expand

def pfaffian(rows):
    """
    Returns the Pfaffian of an antisymmetric matrix of even size,
    expanding along the lowest remaining index.
    """

    size = len(rows)
    if size % 2:
        return QQ(0)

    return _pfaffian_expansion(rows)((1 << size) - 1)

def _form_adjusted(rows):
    """Returns ``J Y`` for the anti-diagonal symmetric form ``J``."""

    size = len(rows)
    return [list(rows[size - 1 - a]) for a in range(size)]

def _matmul(a, b):
    columns = list(zip(*b))
    return [
        [sum((x * y for x, y in zip(row, column) if x and y), QQ(0)) for column in columns]
        for row in a
    ]

def _nonzero_entries(rows):
    return [(r, c, value) for r, row in enumerate(rows) for c, value in enumerate(row) if value]


# first-order expansions

class Linearization:
    """
    The differentials of every ``F_i`` at a fixed matrix ``A``.

    ``d c_k = -tr(B_{k-1} D)`` where ``B_0 = Id`` and ``B_k = A B_{k-1} + c_k Id``
    are the Faddeev-LeVerrier matrices, and the Pfaffian differential pairs ``J D``
    with the signed Pfaffian cofactors of ``J A``.
    """

    def __init__(self, sources, rows):
        self.sources = sources
        size = len(rows)
        top = max((source for source in sources if source != _PFAFFIAN), default=0)

        identity = [[QQ(int(r == c)) for c in range(size)] for r in range(size)]
        self.adjugates = [identity]
        for k in range(1, top):
            product = _matmul(rows, self.adjugates[-1])
            c_k = -sum((product[r][r] for r in range(size)), QQ(0)) / k
            for r in range(size):
                product[r][r] += c_k
            self.adjugates.append(product)

        self.cofactors = {}
        if _PFAFFIAN in sources:
            expand = _pfaffian_expansion(_form_adjusted(rows))
            full = (1 << size) - 1
            for i in range(size):
                for j in range(i + 1, size):
                    sign = -1 if (i + j) % 2 == 0 else 1
                    self.cofactors[(i, j)] = sign * expand(full & ~(1 << i) & ~(1 << j))

    def along(self, direction):
        """Returns the derivative of every ``F_i`` along the matrix ``direction``."""

        entries = _nonzero_entries(direction)
        adjusted = None
        values = []

        for source in self.sources:
            if source == _PFAFFIAN:
                if adjusted is None:
                    adjusted = _form_adjusted(direction)
                values.append(sum(
                    (value * adjusted[i][j] for (i, j), value in self.cofactors.items()
                     if value and adjusted[i][j]),
                    QQ(0)
                ))
            else:
                adjugate = self.adjugates[source - 1]
                values.append(-sum((adjugate[c][r] * value for r, c, value in entries), QQ(0)))

        return values


# invariant families

class InvariantFamily:
    """
    Basic invariants ``F_1, ..., F_l`` of a classical algebra taken from the characteristic polynomial.
    Even orthogonal algebras replace the top coefficient with the Pfaffian.
    """

    def __init__(self, algebra):
        self.algebra = algebra
        self.lie_type = algebra.lie_type
        self.mode: str = _MODES[self.lie_type.family]

        size = self.lie_type.size
        if self.mode == 'gl':
            sources = list(range(1, size + 1))
        elif self.mode == 'sl':
            sources = list(range(2, size + 1))
        elif self.lie_type.family == Family.D:
            sources = list(range(2, size - 1, 2)) + [_PFAFFIAN]
        else:
            sources = list(range(2, 2 * self.lie_type.rank + 1, 2))

        pairs = sorted(
            ((size // 2 if source == _PFAFFIAN else source), n, source)
            for n, source in enumerate(sources)
        )
        self.degrees: list = [d for d, _, _ in pairs]
        self._sources: list = [source for _, _, source in pairs]

    def __repr__(self):
        return f'InvariantFamily({self.lie_type.label()}, degrees={self.degrees})'

    def __len__(self):
        return len(self.degrees)

    @property
    def count(self):
        """The number of basic invariants."""
        return len(self.degrees)

    def evaluate_matrix(self, rows):
        """Returns every ``F_i`` at a dense matrix, sharing one characteristic polynomial."""

        coefficients = charpoly(rows)
        return [
            pfaffian(_form_adjusted(rows)) if source == _PFAFFIAN else coefficients[source]
            for source in self._sources
        ]

    def evaluate(self, xi):
        """Returns every ``F_i`` at the point of the dual space with coordinates ``xi``."""
        return self.evaluate_matrix(point_matrix(self.algebra, xi))

    def linearize_matrix(self, rows):
        """Returns the ``Linearization`` of the family at a dense matrix."""
        return Linearization(self._sources, rows)

def invariant_family(a):
    """Builds the basic invariants of an algebra."""
    return InvariantFamily(a)

def eval_invariant(f, i, xi):
    """Returns ``F_i(xi)``."""

    if not 0 <= i < f.count:
        raise AlgebraError('invariant index out of range', {'index': i, 'count': f.count})
    return f.evaluate(xi)[i]


# evaluators

class Evaluator:
    """
    A vector-valued polynomial function with known homogeneous degrees.

    - ``function``: Maps a coordinate vector to a list of values.
    - ``degrees``: The degree of every component.
    - ``label``: A name used in reports.
    - ``linearize``: Optional; maps a point to a function returning the derivatives
      of every component along a direction. Interpolation is used when omitted.
    """

    def __init__(self, function, degrees, label, linearize=None):
        self.function = function
        self.degrees: list = list(degrees)
        self.label: str = label
        self.linearize = linearize

    def __repr__(self):
        return f'Evaluator({self.label!r}, degrees={self.degrees})'

    def __len__(self):
        return len(self.degrees)

    def __call__(self, x):
        return self.function(x)

    @property
    def max_degree(self):
        """The largest component degree."""
        return max(self.degrees, default=0)

    def derivatives_at(self, xi):
        """Returns a function mapping a direction to the derivatives of every component at ``xi``."""

        if self.linearize is not None:
            return self.linearize(xi)

        def along(d):
            table = sample_line(
                lambda u: self.function([x + u * y for x, y in zip(xi, d)]),
                max(self.max_degree, 1)
            )
            return [coefficients[1] for coefficients in table]

        return along

    def select(self, indices):
        """Returns the evaluator restricted to the given components."""

        indices = list(indices)
        function = self.function
        linearize = self.linearize

        def selected(x):
            values = function(x)
            return [values[i] for i in indices]

        selected_linearize = None
        if linearize is not None:
            def selected_linearize(xi):
                along = linearize(xi)
                return lambda d: [along(d)[i] for i in indices]

        return Evaluator(
            selected,
            [self.degrees[i] for i in indices],
            f'{self.label}{indices}',
            selected_linearize
        )

def stack(*evaluators):
    """Concatenates the components of several evaluators."""

    if len(evaluators) == 1:
        return evaluators[0]

    def function(x):
        return [value for evaluator in evaluators for value in evaluator(x)]

    def linearize(xi):
        parts = [evaluator.derivatives_at(xi) for evaluator in evaluators]
        return lambda d: [value for along in parts for value in along(d)]

    return Evaluator(
        function,
        [d for evaluator in evaluators for d in evaluator.degrees],
        '+'.join(evaluator.label for evaluator in evaluators),
        linearize
    )

def invariant_evaluator(f):
    """``xi -> (F_1(xi), ..., F_l(xi))``."""

    a = f.algebra

    def linearize(xi):
        linearization = f.linearize_matrix(point_matrix(a, xi))
        return lambda d: linearization.along(point_matrix(a, d))

    return Evaluator(f.evaluate, f.degrees, 'F', linearize)

def coordinate_evaluator(index):
    """``x -> x[index]``, a linear function that is not invariant in general."""
    return Evaluator(lambda x: [x[index]], [1], f'x{index}', lambda xi: lambda d: [d[index]])


# lines through a pair of matrices

def _line_table(f, base, slope):
    """Coefficient lists of ``s -> F_i(base + s slope)``, one per invariant."""

    return sample_line(
        lambda s: f.evaluate_matrix(_combine(base, slope, s)),
        max(f.degrees)
    )

def _line_linearization(f, base, slope):
    """
    Returns a function mapping ``(d_base, d_slope)`` to the coefficient lists in ``s``
    of the derivatives of ``F_i(base + s slope)`` along ``d_base + s d_slope``.
    """

    nodes = default_nodes(max(f.degrees) + 1)
    expansions = [f.linearize_matrix(_combine(base, slope, s)) for s in nodes]

    def along(d_base, d_slope):
        columns = [
            linearization.along(_combine(d_base, d_slope, s))
            for s, linearization in zip(nodes, expansions)
        ]
        return [
            interpolate(list(zip(nodes, column)), trim=False)
            for column in zip(*columns)
        ]

    return along


# bi-homogeneous components

@dataclass(frozen=True)
class BiComponentProfile:
    """
    Values of the components of ``F_i`` at a point, split by degree in the ``n_-`` coordinates.
    ``values[j]`` is the component of bi-degree ``(m - j, j)``.
    """

    index: int
    degree: int
    values: tuple

    @property
    def n_minus_degree(self):
        """The largest ``j`` with a nonzero component, or -1 when all vanish."""
        return degree(list(self.values))

    @property
    def p_degree(self):
        """``m - b``."""
        return self.degree - self.n_minus_degree

def _split_point(a, p, xi):
    """The point matrices of the ``p`` and ``n_-`` coordinates of ``xi``."""

    return (
        point_matrix(a, p.restrict(xi, p.idx_p)),
        point_matrix(a, p.restrict(xi, p.idx_nminus))
    )

def _component_table(f, p, xi):
    """Coefficient lists of ``s -> F_i(Y_p + s Y_{n_-})``, one per invariant."""
    return _line_table(f, *_split_point(f.algebra, p, xi))

def bicomponents(f, i, p, xi):
    """
    Returns the bi-homogeneous components of ``F_i`` at ``xi``.
    """

    m = f.degrees[i]
    values = _component_table(f, p, xi)[i][:m + 1]
    return BiComponentProfile(i, m, tuple(values))

def _certify_top_degrees(table_at, count, trials, seed, label):
    if trials < 1:
        raise CertificationError('at least one trial is required', {'trials': trials})

    tops = [-1] * count
    for trial in range(trials):
        table = table_at(make_rng(seed, label, trial))
        tops = [max(top, degree(coefficients)) for top, coefficients in zip(tops, table)]

    missing = [i for i, top in enumerate(tops) if top < 0]
    if missing:
        raise CertificationError('component profile vanished at every trial', {
            'label': label, 'invariants': missing, 'trials': trials
        })

    logger.debug('%s top degrees %s', label, tops)
    return tops

def n_minus_degrees(f, p, trials=constants.CERTIFY_TRIALS, seed=constants.SEED,
                    bound=constants.BOUND):
    """
    Returns the certified ``n_-``-degree ``b_i`` of every highest component ``F_i``.
    """

    return _certify_top_degrees(
        lambda rng: _component_table(f, p, random_vector(rng, f.algebra.dim, bound)),
        f.count, trials, seed, 'bidegree'
    )

def n_minus_degree(f, i, p, trials=constants.CERTIFY_TRIALS, seed=constants.SEED):
    """Returns the certified ``b_i`` of a single invariant."""
    return n_minus_degrees(f, p, trials, seed)[i]

def highest_evaluator(f, p, b):
    """
    ``xi -> (F_1^high(xi), ..., F_l^high(xi))`` where ``F_i^high`` is the component
    of ``n_-``-degree ``b[i]``.
    """

    a = f.algebra

    def function(xi):
        table = _component_table(f, p, xi)
        return [coefficients[b_i] for coefficients, b_i in zip(table, b)]

    def linearize(xi):
        along = _line_linearization(f, *_split_point(a, p, xi))

        def derivative(d):
            table = along(*_split_point(a, p, d))
            return [coefficients[b_i] for coefficients, b_i in zip(table, b)]

        return derivative

    return Evaluator(function, f.degrees, 'F_high', linearize)

def eval_highest(f, i, p, xi, b_i):
    """Returns ``F_i^high(xi)``, the component of ``n_-``-degree ``b_i``."""
    return _component_table(f, p, xi)[i][b_i]


# components on q

def _split_vector(a, p, x):
    """The matrices of the ``n_-`` and ``p`` parts of a vector of ``q``."""

    return (
        to_matrix(a, p.restrict(x, p.idx_nminus)),
        to_matrix(a, p.restrict(x, p.idx_p))
    )

def _adjoint_table(f, p, x):
    """Coefficient lists of ``s -> F_i(X_{n_-} + s X_p)`` for a vector of ``q``."""
    return _line_table(f, *_split_vector(f.algebra, p, x))

def adjoint_top_degrees(f, p, trials=constants.CERTIFY_TRIALS, seed=constants.SEED,
                        bound=constants.BOUND):
    """
    Returns the certified top degree of every ``F_i`` in the ``p``-coordinates of ``q``.
    """

    return _certify_top_degrees(
        lambda rng: _adjoint_table(f, p, random_vector(rng, f.algebra.dim, bound)),
        f.count, trials, seed, 'adjoint'
    )

def adjoint_lowered_evaluator(f, p, tops):
    """``x -> (F_{1,low}(x), ..., F_{l,low}(x))`` on ``q``."""

    a = f.algebra

    def function(x):
        table = _adjoint_table(f, p, x)
        return [coefficients[top] for coefficients, top in zip(table, tops)]

    def linearize(x):
        along = _line_linearization(f, *_split_vector(a, p, x))

        def derivative(d):
            table = along(*_split_vector(a, p, d))
            return [coefficients[top] for coefficients, top in zip(table, tops)]

        return derivative

    return Evaluator(function, f.degrees, 'F_low', linearize)

def eval_adjoint_lowered(f, i, p, x, top):
    """Returns the component of ``F_i`` of top ``p``-degree ``top`` at ``x``."""
    return _adjoint_table(f, p, x)[i][top]


# slices

def slice_point(a, e, v):
    """Returns the coordinates of the point ``e + v`` of the dual space."""
    return functional_coordinates(a, _combine(e, to_matrix(a, v)))

def slice_evaluator(f, p, e, b):
    """
    ``v -> F_high(e + v)`` for ``v`` supported on the opposite parabolic.
    """

    a = f.algebra
    highest = highest_evaluator(f, p, b)
    degrees = [m - b_i for m, b_i in zip(f.degrees, b)]

    def linearize(v):
        along = highest.derivatives_at(slice_point(a, e, v))
        return lambda d: along(functional_coordinates(a, to_matrix(a, d)))

    return Evaluator(lambda v: highest(slice_point(a, e, v)), degrees, 'eF', linearize)

def eval_slice(f, i, p, e, v, b_i):
    """Returns ``eF_i(v) = F_i^high(e + v)``."""
    return eval_highest(f, i, p, slice_point(f.algebra, e, v), b_i)

def _slodowy_table(f, e, y, xi):
    a = f.algebra
    epsilon = functional_coordinates(a, e)
    weight = sum((y_a * xi_a for y_a, xi_a in zip(y, xi) if y_a and xi_a), QQ(0))
    projected = [xi_a - weight * eps_a for xi_a, eps_a in zip(xi, epsilon)]

    return _line_table(f, point_matrix(a, projected), point_matrix(a, epsilon))

def slice_degrees(f, e, y, trials=constants.CERTIFY_TRIALS, seed=constants.SEED,
                  bound=constants.BOUND):
    """
    Returns the certified minimal index ``k_i`` of every ``F_i`` in its expansion
    in powers of ``y``, i.e. ``m_i`` minus the top degree in the ``e`` direction.
    """

    tops = _certify_top_degrees(
        lambda rng: _slodowy_table(f, e, y, random_vector(rng, f.algebra.dim, bound)),
        f.count, trials, seed, 'slodowy'
    )
    return [m - top for m, top in zip(f.degrees, tops)]

def slodowy_evaluator(f, e, y, k):
    """
    ``xi -> (H_{k_1}(xi), ...)`` where ``H_k`` is the lowest nonzero coefficient of ``F_i``
    expanded in powers of the functional ``y``.
    """

    def function(xi):
        table = _slodowy_table(f, e, y, xi)
        return [coefficients[m - k_i] for coefficients, m, k_i in zip(table, f.degrees, k)]

    return Evaluator(function, k, 'H_k')

def slodowy_slice_eval(f, i, e, y, xi, k_i):
    """Returns ``H_{k_i}(xi)`` for invariant ``F_i``."""
    return _slodowy_table(f, e, y, xi)[i][f.degrees[i] - k_i]


# Levi invariants pulled back to q

def _submatrix(rows, indices):
    return [[rows[r][c] for c in indices] for r in indices]

def levi_pullback(p):
    """
    The basic invariants of the Levi subalgebra composed with ``q -> p -> l``.
    Each ``gl`` block contributes its characteristic coefficients, the central block its
    orthogonal or symplectic invariants; type A drops the trace of the last block.
    """

    a = p.algebra
    t = p.lie_type
    rows_of = {}
    for row, number in enumerate(row_blocks(t, p.spec)):
        rows_of.setdefault(number, []).append(row)

    plan = []
    for number, size in enumerate(p.spec.composition):
        first = 2 if t.family == Family.A and number == len(p.spec.composition) - 1 else 1
        plan.extend((rows_of[number], k) for k in range(first, size + 1))

    central = central_block(p.spec, t)
    if central is not None:
        rows = rows_of[len(p.spec.composition)]
        size = central.size
        if central.kind == LeviKind.SP or size % 2:
            plan.extend((rows, k) for k in range(2, 2 * (size // 2) + 1, 2))
        else:
            plan.extend((rows, k) for k in range(2, size - 1, 2))
            plan.append((rows, _PFAFFIAN))

    def function(x):
        matrix = to_matrix(a, p.restrict(x, p.idx_levi))
        cache = {}
        values = []
        for rows, source in plan:
            key = tuple(rows)
            if key not in cache:
                block = _submatrix(matrix, rows)
                cache[key] = (block, charpoly(block))
            block, coefficients = cache[key]
            values.append(
                pfaffian(_form_adjusted(block)) if source == _PFAFFIAN else coefficients[source]
            )
        return values

    degrees = [len(rows) // 2 if source == _PFAFFIAN else source for rows, source in plan]
    return Evaluator(function, degrees, 'levi')


# derivatives and probes

def directional_derivative(evaluator, xi, d):
    """
    Returns the derivative of every component of ``evaluator`` at ``xi`` along ``d``.
    """
    return evaluator.derivatives_at(xi)(d)

def jacobian(evaluator, xi, directions):
    """Returns the matrix of directional derivatives, one row per component."""

    along = evaluator.derivatives_at(xi)
    columns = [along(d) for d in directions]
    rows = [list(row) for row in zip(*columns)]
    return qmatrix(rows, ncols=len(directions))

def jacobian_rank(evaluators, xi, directions):
    """
    Returns the rank of the Jacobian of the stacked evaluators at ``xi`` over ``directions``.
    """

    if isinstance(evaluators, Evaluator):
        evaluators = [evaluators]

    evaluator = stack(*evaluators)
    if not len(evaluator) or not directions:
        return 0

    return rank(jacobian(evaluator, xi, directions))

def unit_directions(dim, indices=None):
    """Returns the unit coordinate vectors for ``indices`` (all by default)."""

    indices = range(dim) if indices is None else indices
    directions = []
    for i in indices:
        d = [QQ(0)] * dim
        d[i] = QQ(1)
        directions.append(d)

    return directions

@dataclass(frozen=True)
class InvarianceReport:
    """Derivatives along the infinitesimal action found nonzero at the probed points."""

    passed: bool
    points: int
    nonzero: tuple

def invariance_probe(q, evaluator, trials=constants.PROBES, seed=constants.SEED,
                     mode='coadjoint', bound=constants.BOUND):
    """
    Checks that every derivative of ``evaluator`` along the infinitesimal coadjoint
    (or adjoint) action of each basis element vanishes at ``trials`` random points.
    """

    if mode not in ('coadjoint', 'adjoint'):
        raise AlgebraError(f'unknown probe mode {mode!r}')

    action = coadjoint_derivative if mode == 'coadjoint' else adjoint_derivative
    nonzero = []

    for trial in range(trials):
        point = random_vector(make_rng(seed, 'invariance', mode, trial), q.dim, bound)
        along = evaluator.derivatives_at(point)
        for x in range(q.dim):
            direction = action(q, x, point)
            if not any(direction):
                continue
            for component, value in enumerate(along(direction)):
                if value:
                    nonzero.append({'trial': trial, 'basis': x, 'component': component})

    if nonzero:
        logger.info('%s is not invariant at %d derivatives', evaluator.label, len(nonzero))

    return InvarianceReport(not nonzero, trials, tuple(nonzero))

@dataclass(frozen=True)
class KostantRecord:
    """Stabilizer dimension and Jacobian rank at a point."""

    stab_dim: int
    jac_rank: int
    consistent: bool

def kostant_probe(q, evaluator, xi, rank_l=None):
    """
    Compares ``dim q_xi = l`` with ``rank d_xi F = l`` at a point.
    The record is consistent when both hold or both fail.
    """

    rank_l = q.rank if rank_l is None else rank_l
    stab = stabilizer_dim(q, xi)
    jac = jacobian_rank(evaluator, xi, unit_directions(q.dim))

    return KostantRecord(stab, jac, (jac == rank_l) == (stab == rank_l))

def homogeneity_check(evaluator, xi, scale):
    """Whether ``evaluator(scale * xi) = scale^m evaluator(xi)`` for every component."""

    scale = QQ(scale)
    scaled = evaluator([scale * x for x in xi])
    plain = evaluator(xi)

    return all(
        s == scale ** m * v
        for s, v, m in zip(scaled, plain, evaluator.degrees)
    )

def scaling_degrees(evaluator, xi):
    """
    Returns the degree in ``c`` of every component of ``c -> evaluator(c * xi)``.
    """

    table = sample_line(lambda c: evaluator([c * x for x in xi]), evaluator.max_degree)
    return [degree(coefficients) for coefficients in table]


# degree-one slice functions

def linear_slice_elements(f, p, e, b):
    """
    Returns, for every slice function of degree one, the element ``z`` of ``p``
    with ``eF_i(v) = tr(z v)`` for ``v`` in the opposite parabolic.
    """

    a = f.algebra
    linear = [i for i, (m, b_i) in enumerate(zip(f.degrees, b)) if m - b_i == 1]
    if not linear:
        return []

    idx_p, idx_pminus = p.idx_p, p.idx_pminus
    gram = a.gram
    system = qmatrix([[gram[j][k] for j in idx_p] for k in idx_pminus])

    evaluator = slice_evaluator(f, p, e, b).select(linear)
    columns = [evaluator(d) for d in unit_directions(a.dim, idx_pminus)]

    elements = []
    for n in range(len(linear)):
        solution = solve(system, [column[n] for column in columns])
        z = [QQ(0)] * a.dim
        for j, value in zip(idx_p, solution):
            z[j] = value
        elements.append(z)

    return elements
