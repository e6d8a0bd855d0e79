"""
Exact rational linear algebra and univariate interpolation.
"""

import hashlib
import random
from itertools import count

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..types import InterpolationError


def rat(value, denominator=1):
    """Returns ``value / denominator`` as an exact rational in lowest terms."""
    return QQ(value, denominator)

def qmatrix(rows, ncols=None):
    """
    Builds a dense matrix over the rationals from a list of rows.

    - ``rows``: A list of equal-length lists of integers or rationals.
    - ``ncols``: The column count, required when ``rows`` is empty.
    """

    rows = [[QQ(entry) for entry in row] for row in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0

    return DomainMatrix(rows, (len(rows), ncols), QQ)

def zero_matrix(nrows, ncols):
    """Returns the zero matrix of the given shape."""
    return DomainMatrix.zeros((nrows, ncols), QQ).to_dense()

def rank(m):
    """
    Returns the exact rank of ``m`` over the rationals,
    computed by fraction-free Gauss-Jordan elimination.
    """

    if 0 in m.shape:
        return 0

    _, _, pivots = m.rref_den(method='FF')
    return len(pivots)

def kernel_basis(m):
    """
    Returns a basis of the right kernel of ``m`` as a list of rational vectors.
    The basis has exactly ``cols - rank(m)`` elements.
    """

    nrows, ncols = m.shape
    if ncols == 0:
        return []
    if nrows == 0:
        return [
            [QQ(1) if i == j else QQ(0) for i in range(ncols)]
            for j in range(ncols)
        ]

    return m.nullspace().to_list()

def solve(m, rhs):
    """
    Returns the unique solution ``x`` of ``m x = rhs`` for square invertible ``m``.
    """

    column = DomainMatrix([[QQ(v)] for v in rhs], (len(rhs), 1), QQ)
    return [row[0] for row in m.lu_solve(column).to_list()]

def matvec(m, vector):
    """Returns the product of ``m`` with a rational vector."""
    return [
        sum((entry * v for entry, v in zip(row, vector) if entry and v), QQ(0))
        for row in m.to_list()
    ]


# interpolation

def default_nodes(size):
    """
    Returns the nodes 0, 1, -1, 2, -2, ... truncated to ``size`` entries.
    """

    nodes = [QQ(0)]
    for k in count(1):
        if len(nodes) >= size:
            break
        nodes.append(QQ(k))
        nodes.append(QQ(-k))

    return nodes[:size]

def interpolate(samples, trim=True):
    """
    Returns the coefficients, constant term first, of the unique polynomial of
    degree below ``len(samples)`` passing through every ``(node, value)`` sample.

    - ``samples``: A list of ``(node, value)`` pairs with distinct nodes.
    - ``trim``: Whether trailing zero coefficients are removed.
    A zero polynomial is returned as ``[0]`` when trimmed.
    """

    if not samples:
        raise InterpolationError('at least one sample is required')

    nodes = [QQ(node) for node, _ in samples]
    if len(set(nodes)) != len(nodes):
        raise InterpolationError('interpolation nodes must be distinct', {
            'nodes': [str(node) for node in nodes]
        })

    # Newton divided differences
    table = [QQ(value) for _, value in samples]
    size = len(nodes)
    for level in range(1, size):
        for i in range(size - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (nodes[i] - nodes[i - level])

    # Horner expansion of the Newton form into monomial coefficients
    coefficients = [table[-1]]
    for i in range(size - 2, -1, -1):
        shifted = [QQ(0)] + coefficients
        for j, c in enumerate(coefficients):
            shifted[j] -= nodes[i] * c
        shifted[0] += table[i]
        coefficients = shifted

    if trim:
        while len(coefficients) > 1 and coefficients[-1] == 0:
            coefficients.pop()

    return coefficients

def coefficient(coefficients, power):
    """Returns the coefficient of ``power`` in a coefficient list, or zero past its end."""
    return coefficients[power] if power < len(coefficients) else QQ(0)

def evaluate_polynomial(coefficients, point):
    """Evaluates a coefficient list (constant term first) at ``point``."""

    result = QQ(0)
    for c in reversed(coefficients):
        result = result * point + c

    return result

def degree(coefficients):
    """Returns the degree of a coefficient list, or -1 for the zero polynomial."""

    for power in range(len(coefficients) - 1, -1, -1):
        if coefficients[power] != 0:
            return power

    return -1

def sample_line(function, degree_bound):
    """
    Interpolates ``u -> function(u)`` where ``function`` returns a list of values,
    each a polynomial in ``u`` of degree at most ``degree_bound``.
    Returns one untrimmed coefficient list per returned value.
    """

    nodes = default_nodes(degree_bound + 1)
    values = [function(node) for node in nodes]

    return [
        interpolate(list(zip(nodes, column)), trim=False)
        for column in zip(*values)
    ]


# randomness

def derive_seed(seed, *labels):
    """
    Derives a per-check seed from a run seed and a sequence of labels.
    The derived seed is the first 8 bytes of SHA-256 over ``"seed:label:..."``.
    """

    key = ':'.join(map(str, (seed, *labels)))
    return int.from_bytes(hashlib.sha256(key.encode('utf-8')).digest()[:8], 'big')

def make_rng(seed, *labels):
    """Returns a ``random.Random`` seeded with ``derive_seed(seed, *labels)``."""
    return random.Random(derive_seed(seed, *labels))

def random_vector(rng, size, bound, support=None):
    """
    Returns a vector of integer rationals uniform in ``[-bound, bound]``.
    Entries outside ``support`` are zero when a support is given.
    """

    if support is None:
        return [QQ(rng.randint(-bound, bound)) for _ in range(size)]

    vector = [QQ(0)] * size
    for i in sorted(support):
        vector[i] = QQ(rng.randint(-bound, bound))

    return vector

def schwartz_zippel_bound(total_degree, bound, trials=1):
    """
    Returns the Schwartz-Zippel failure bound ``(deg / (2B+1)) ** trials``
    as an exact rational.
    """

    return QQ(total_degree, 2 * bound + 1) ** trials
