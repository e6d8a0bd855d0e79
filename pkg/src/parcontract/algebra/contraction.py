"""
Parabolic contractions q = p x n_-^a, the t-family of brackets, and the coadjoint form of q.
"""

import logging
from collections import defaultdict

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..types import AlgebraError
from . import constants
from .exactcore import make_rng, random_vector, rank
from .liealg import bracket

logger = logging.getLogger(__name__)


class ContractedAlgebra:
    """
    The contraction ``q = p x n_-^a`` in the ordered basis of its parent algebra.
    ``n_-`` is an abelian ideal and ``[x, y]_q = pr_-([x, y])`` for ``x`` in ``p``, ``y`` in ``n_-``.
    """

    def __init__(self, parent, structure_q):
        self.parent = parent
        self.structure_q: dict = structure_q
        self.dim: int = parent.algebra.dim

    def __repr__(self):
        return f'ContractedAlgebra({self.parent!r})'

    @property
    def algebra(self):
        """The parent algebra."""
        return self.parent.algebra

    @property
    def rank(self):
        """The rank of the parent algebra, which the index of ``q`` must equal."""
        return self.parent.lie_type.reductive_rank

    def bracket(self, x, y):
        """Returns the coordinates of ``[x, y]_q``."""
        return bracket(self.structure_q, x, y)

def contract(p):
    """
    Builds the contracted algebra of a parabolic decomposition.
    """

    structure = p.algebra.structure
    contracted = defaultdict(dict)

    for i, row in structure.items():
        i_in_p = p.in_p(i)
        for j, constants_ij in row.items():
            j_in_p = p.in_p(j)

            if i_in_p and j_in_p:
                kept = dict(constants_ij)
            elif i_in_p or j_in_p:
                kept = {k: c for k, c in constants_ij.items() if not p.in_p(k)}
            else:
                kept = {}

            if kept:
                contracted[i][j] = kept

    return ContractedAlgebra(p, dict(contracted))

def _scale_nminus(p, vector, factor):
    return [
        value if p.in_p(i) else value * factor
        for i, value in enumerate(vector)
    ]

def family_bracket(p, x, y, t):
    """
    Returns ``c_t^{-1}([c_t x, c_t y])`` where ``c_t`` fixes ``p`` and scales ``n_-`` by ``t``.
    At ``t = 1`` this is the bracket of the parent algebra.
    """

    t = QQ(t)
    if t == 0:
        raise AlgebraError('t must be nonzero; use contract for the limit')

    scaled = p.algebra.bracket(_scale_nminus(p, x, t), _scale_nminus(p, y, t))
    return _scale_nminus(p, scaled, 1 / t)

def coadjoint_form(q, xi):
    """
    Returns the antisymmetric matrix ``B(xi)[i][j] = xi([b_i, b_j]_q)``.
    """

    rows = [[QQ(0)] * q.dim for _ in range(q.dim)]
    for i, row in q.structure_q.items():
        for j, constants_ij in row.items():
            value = QQ(0)
            for k, c in constants_ij.items():
                if xi[k]:
                    value += c * xi[k]
            rows[i][j] = value

    return DomainMatrix(rows, (q.dim, q.dim), QQ)

def stabilizer_dim(q, xi):
    """Returns ``dim q_xi = dim q - rank B(xi)``."""
    return q.dim - rank(coadjoint_form(q, xi))

def random_point(dim, rng, bound=constants.BOUND):
    """Returns a random integer point with coordinates in ``[-bound, bound]``."""
    return random_vector(rng, dim, bound)

def index_samples(q, trials, seed, bound=constants.BOUND):
    """
    Returns the stabilizer dimensions at ``trials`` random points.
    Trial ``k`` uses the seed derived from ``(seed, 'index', k)``.
    """

    if trials < 1:
        raise AlgebraError('at least one trial is required', {'trials': trials})

    samples = []
    for trial in range(trials):
        xi = random_point(q.dim, make_rng(seed, 'index', trial), bound)
        samples.append(stabilizer_dim(q, xi))

    logger.debug('stabilizer dimensions %s', samples)
    return samples

def index_of(q, trials, seed, bound=constants.BOUND):
    """
    Returns the minimum stabilizer dimension over random points.
    The result bounds ``ind q`` from above and is exact with overwhelming probability.
    """

    return min(index_samples(q, trials, seed, bound))

def coadjoint_derivative(q, x, xi):
    """
    Returns the infinitesimal coadjoint action of basis element ``x`` on ``xi``,
    whose coordinate ``a`` is ``-xi([b_x, b_a]_q)``.
    """

    result = [QQ(0)] * q.dim
    for a, constants_xa in q.structure_q.get(x, {}).items():
        value = QQ(0)
        for k, c in constants_xa.items():
            if xi[k]:
                value += c * xi[k]
        result[a] = -value

    return result

def adjoint_derivative(q, x, v):
    """Returns ``[b_x, v]_q``."""

    result = [QQ(0)] * q.dim
    for j, constants_xj in q.structure_q.get(x, {}).items():
        if not v[j]:
            continue
        for k, c in constants_xj.items():
            result[k] += c * v[j]

    return result

def jacobi_defect(structure, i, j, k, dim):
    """
    Returns the coordinates of ``[[b_i, b_j], b_k] + [[b_j, b_k], b_i] + [[b_k, b_i], b_j]``.
    """

    def unit(index):
        vector = [QQ(0)] * dim
        vector[index] = QQ(1)
        return vector

    total = [QQ(0)] * dim
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        term = bracket(structure, bracket(structure, unit(a), unit(b)), unit(c))
        total = [s + t for s, t in zip(total, term)]

    return total
