"""
Richardson elements of flag parabolics, their Jordan types and centralisers.
"""

import logging
from dataclasses import dataclass, field

from sympy import QQ

from ..types import AlgebraError, CertificationError
from . import constants
from .exactcore import kernel_basis, make_rng, qmatrix, random_vector, rank, solve
from .liealg import bracket, build_algebra, build_parabolic, enumerate_specs, to_matrix

logger = logging.getLogger(__name__)

# pylint: disable=too-many-arguments,too-many-locals


@dataclass(frozen=True)
class RichardsonElement:
    """
    An element ``e`` of ``n`` whose ``P``-orbit is dense in ``n``.

    ``certificate`` is the rank of ``x -> [x, e]`` on ``p``, which equals ``dim n``.
    """

    coords: tuple
    matrix: tuple
    certificate: int
    dim_n: int
    seed: int
    attempt: int = 0

    @property
    def rows(self):
        """The matrix of ``e`` as a list of rows."""
        return [list(row) for row in self.matrix]

@dataclass
class CentraliserData:
    """
    A basis of ``g_e`` together with the structure constants it induces.
    ``structure[i][j]`` maps ``k`` to the coefficient of ``z_k`` in ``[z_i, z_j]``.
    ``index`` stays unset until a caller fills it from ``subalgebra_index``.
    """

    basis: list
    structure: dict
    centre_dim: int
    derived_dim: int
    index: int = None
    pivots: tuple = field(default_factory=tuple)

    @property
    def dim(self):
        """``dim g_e``."""
        return len(self.basis)

def _unit(dim, index):
    vector = [QQ(0)] * dim
    vector[index] = QQ(1)
    return vector

def certificate_rank(p, e):
    """Returns the rank of the map ``p -> n``, ``x -> [x, e]``."""

    a = p.algebra
    rows = [bracket(a.structure, _unit(a.dim, x), list(e)) for x in p.idx_p]
    return rank(qmatrix(rows, ncols=a.dim))

def _element(p, coords, certificate, seed, attempt):
    matrix = to_matrix(p.algebra, coords)
    return RichardsonElement(
        tuple(coords), tuple(tuple(row) for row in matrix),
        certificate, len(p.idx_n), seed, attempt
    )

def find_richardson(p, trials=constants.TRIALS, seed=constants.SEED,
                    bound=constants.RICHARDSON_BOUND):
    """
    Samples integer elements of ``n`` until one has certificate rank ``dim n``.

    - ``trials``: The number of candidates drawn before giving up.
    - ``bound``: Candidate coordinates are drawn from ``[-bound, bound]``.
    """

    if trials < 1:
        raise CertificationError('at least one trial is required', {'trials': trials})

    dim_n = len(p.idx_n)
    if p.is_degenerate:
        return _element(p, [QQ(0)] * p.algebra.dim, 0, seed, 0)

    for attempt in range(trials):
        coords = random_vector(make_rng(seed, 'richardson', attempt), p.algebra.dim,
                               bound, support=p.idx_n)
        certificate = certificate_rank(p, coords)
        if certificate == dim_n:
            logger.debug('richardson element certified at attempt %d', attempt)
            return _element(p, coords, certificate, seed, attempt)

        logger.debug('candidate %d rejected with rank %d < %d', attempt, certificate, dim_n)

    raise CertificationError('no Richardson element found', {
        'spec': str(p.spec), 'trials': trials, 'seed': seed
    })

def jordan_type(e):
    """
    Returns the Jordan type of a nilpotent matrix from the ranks of its powers.
    """

    # partitions imports liealg
    from ..partitions import Partition, dual  # pylint: disable=import-outside-toplevel

    matrix = qmatrix(e.rows if isinstance(e, RichardsonElement) else e)
    size = matrix.shape[0]

    ranks = [size]
    power = matrix
    while ranks[-1] > 0:
        if len(ranks) > size:
            raise AlgebraError('matrix is not nilpotent', {'size': size})
        ranks.append(rank(power))
        power = power * matrix

    columns = [before - after for before, after in zip(ranks, ranks[1:])]
    return dual(Partition(tuple(columns)))

def _commutator_matrix(a, e):
    """Matrix of ``x -> [x, e]``; column ``j`` holds the coordinates of ``[b_j, e]``."""

    columns = [bracket(a.structure, _unit(a.dim, j), list(e)) for j in range(a.dim)]
    return qmatrix([list(row) for row in zip(*columns)], ncols=a.dim)

def _pivot_rows(vectors, dim):
    matrix = qmatrix(vectors, ncols=dim)
    _, _, pivots = matrix.rref_den(method='FF')
    return tuple(pivots)

def _express(pivots, system, vector):
    """Coordinates of a vector of the centraliser in its basis."""
    return solve(system, [vector[r] for r in pivots])

def centraliser(a, e):
    """
    Computes ``g_e`` as the kernel of ``ad e`` with its induced structure constants,
    centre and derived subalgebra.

    - ``e``: The coordinates of ``e``, or a ``RichardsonElement``.
    """

    coords = list(e.coords) if isinstance(e, RichardsonElement) else list(e)
    basis = kernel_basis(_commutator_matrix(a, coords))
    d = len(basis)

    if not d:
        return CentraliserData([], {}, 0, 0)

    pivots = _pivot_rows(basis, a.dim)
    system = qmatrix([[z[r] for z in basis] for r in pivots])

    structure = {}
    brackets = []
    for i in range(d):
        for j in range(i + 1, d):
            value = a.bracket(basis[i], basis[j])
            if not any(value):
                continue
            brackets.append(value)
            local = _express(pivots, system, value)
            constants_ij = {k: c for k, c in enumerate(local) if c}
            structure.setdefault(i, {})[j] = constants_ij
            structure.setdefault(j, {})[i] = {k: -c for k, c in constants_ij.items()}

    stacked = []
    for i in range(d):
        for k in range(d):
            stacked.append([
                structure.get(i, {}).get(j, {}).get(k, QQ(0)) for j in range(d)
            ])

    centre_dim = d - rank(qmatrix(stacked, ncols=d))
    derived_dim = rank(qmatrix(brackets, ncols=a.dim)) if brackets else 0

    logger.debug('centraliser dim %d, centre %d, derived %d', d, centre_dim, derived_dim)
    return CentraliserData(basis, structure, centre_dim, derived_dim, pivots=pivots)

def _coadjoint_form(c, eta):
    rows = [[QQ(0)] * c.dim for _ in range(c.dim)]
    for i, row in c.structure.items():
        for j, constants_ij in row.items():
            rows[i][j] = sum((value * eta[k] for k, value in constants_ij.items()), QQ(0))

    return qmatrix(rows, ncols=c.dim)

def subalgebra_index(c, trials=constants.TRIALS, seed=constants.SEED, bound=constants.BOUND):
    """
    Returns ``dim g_e`` minus the largest rank of its coadjoint form over random points.
    """

    if trials < 1:
        raise CertificationError('at least one trial is required', {'trials': trials})
    if not c.dim:
        return 0

    best = max(
        rank(_coadjoint_form(c, random_vector(make_rng(seed, 'centraliser', trial), c.dim, bound)))
        for trial in range(trials)
    )

    return c.dim - best

def subregular_structure(c, l):
    """
    Returns the centre and derived dimensions of ``g_e`` for a subregular ``e``,
    with whether they match ``centre = l - 1`` and ``derived >= 2``.
    """

    return {
        'centre_dim': c.centre_dim,
        'derived_dim': c.derived_dim,
        'centre_ok': c.centre_dim == l - 1,
        'derived_ok': c.derived_dim >= 2
    }

def central_elements_check(a, e, c, elements):
    """
    Whether every vector of ``elements`` commutes with ``e`` and with all of ``g_e``,
    and the rank of their span.
    """

    coords = list(e.coords) if isinstance(e, RichardsonElement) else list(e)

    in_centraliser = all(not any(a.bracket(z, coords)) for z in elements)
    central = all(not any(a.bracket(z, w)) for z in elements for w in c.basis)
    span = rank(qmatrix(elements, ncols=a.dim)) if elements else 0

    return {'in_centraliser': in_centraliser, 'central': central, 'rank': span}

def opposite_normalized(p, e, trials=constants.CERTIFY_TRIALS, seed=constants.SEED,
                        bound=constants.BOUND):
    """
    Returns the coordinates of some ``y`` in ``n_-`` with ``tr(y e) = 1``.
    """

    a = p.algebra
    rows = e.rows if isinstance(e, RichardsonElement) else e

    for trial in range(trials):
        y = random_vector(make_rng(seed, 'opposite', trial), a.dim, bound, support=p.idx_nminus)
        matrix = to_matrix(a, y)
        pairing = sum(
            (matrix[r][k] * rows[k][r] for r in range(a.size) for k in range(a.size)
             if matrix[r][k] and rows[k][r]),
            QQ(0)
        )
        if pairing:
            return [value / pairing for value in y]

    raise CertificationError('could not normalise an opposite element', {
        'spec': str(p.spec), 'trials': trials
    })

def find_polarisations(t, partition, seed=constants.SEED, trials=constants.TRIALS):
    """
    Returns every flag parabolic of ``t`` whose Richardson orbit has Jordan type ``partition``.
    """

    from ..partitions import Partition  # pylint: disable=import-outside-toplevel

    target = Partition.parse(partition)
    a = build_algebra(t)

    matches = []
    for spec in enumerate_specs(t):
        element = find_richardson(build_parabolic(a, spec), trials, seed)
        if jordan_type(element) == target:
            matches.append(spec)

    logger.debug('%d polarisations of %s in %s', len(matches), target, t)
    return matches
