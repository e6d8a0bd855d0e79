"""
Matrix models of the classical Lie algebras and their flag parabolics.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..types import AlgebraError, ConfigurationError, Family, LeviKind

logger = logging.getLogger(__name__)

# pylint: disable=too-many-instance-attributes

_UPPER, _CARTAN, _LOWER = 'upper', 'cartan', 'lower'
_N, _LEVI, _NMINUS = 'n', 'levi', 'nminus'


# types

@dataclass(frozen=True)
class LieType:
    """
    A classical family with its rank.

    ``GL`` with rank ``l`` denotes ``gl_{l+1}``, so every family of rank ``l``
    with the same matrix size is directly comparable.
    """

    family: Family
    rank: int

    def __post_init__(self):
        family = Family.get(self.family)
        if family is None:
            raise ConfigurationError(f'unknown Lie type {self.family!r}')
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ConfigurationError('rank must be a positive integer', {'rank': self.rank})
        if family == Family.D and self.rank < 2:
            raise ConfigurationError('type D requires rank at least 2', {'rank': self.rank})

        object.__setattr__(self, 'family', family)

    @property
    def size(self):
        """The size of the defining matrices."""

        if self.family in (Family.A, Family.GL):
            return self.rank + 1
        if self.family == Family.B:
            return 2 * self.rank + 1
        return 2 * self.rank

    @property
    def reductive_rank(self):
        """The rank of the algebra, which is also its index."""
        return self.rank + 1 if self.family == Family.GL else self.rank

    @property
    def dimension(self):
        """The classical dimension formula."""

        l = self.rank
        return {
            Family.A: l * l + 2 * l,
            Family.B: l * (2 * l + 1),
            Family.C: l * (2 * l + 1),
            Family.D: l * (2 * l - 1),
            Family.GL: (l + 1) ** 2
        }[self.family]

    @property
    def has_form(self):
        """Whether the algebra is defined by an invariant bilinear form."""
        return self.family in (Family.B, Family.C, Family.D)

    def invariant_degrees(self):
        """Returns the degrees of the basic invariants, in increasing order."""

        l = self.rank
        if self.family == Family.A:
            return list(range(2, l + 2))
        if self.family == Family.GL:
            return list(range(1, l + 2))
        if self.family in (Family.B, Family.C):
            return list(range(2, 2 * l + 1, 2))
        return sorted(list(range(2, 2 * l - 1, 2)) + [l])

    def label(self):
        """Returns the matrix label, such as ``sp12`` or ``so17``."""

        prefix = {
            Family.A: 'sl', Family.B: 'so', Family.C: 'sp', Family.D: 'so', Family.GL: 'gl'
        }[self.family]
        return f'{prefix}{self.size}'

    def __str__(self):
        return f'{self.family.value}{self.rank}'

@dataclass(frozen=True)
class ParabolicSpec:
    """
    A flag composition ``n_1, ..., n_t`` together with the size ``m_0`` of the central block.
    The central block is only meaningful for types B, C and D.
    """

    composition: tuple
    central: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'composition', tuple(int(n) for n in self.composition))
        object.__setattr__(self, 'central', int(self.central))

    def __str__(self):
        parts = ','.join(map(str, self.composition))
        return f'({parts};{self.central})'

@dataclass(frozen=True)
class LeviBlock:
    """A simple or general-linear summand of a Levi subalgebra."""

    kind: LeviKind
    size: int

    def __post_init__(self):
        object.__setattr__(self, 'kind', LeviKind.get(self.kind))

    @property
    def dimension(self):
        """Dimension of the summand."""

        if self.kind == LeviKind.GL:
            return self.size ** 2
        if self.kind == LeviKind.SP:
            r = self.size // 2
            return r * (2 * r + 1)
        return self.size * (self.size - 1) // 2

    @property
    def borel_dimension(self):
        """Dimension of a Borel subalgebra of the summand."""

        if self.kind == LeviKind.GL:
            return self.size * (self.size + 1) // 2

        r = self.size // 2
        if self.kind == LeviKind.SO and self.size % 2 == 0:
            return r * r
        return r * r + r

    def label(self):
        """Returns the label, such as ``gl3`` or ``sp4``."""
        return f'{self.kind.value}{self.size}'

    def __str__(self):
        return self.label()

@dataclass(frozen=True)
class BasisElement:
    """A basis matrix stored sparsely, with the functional reading its coordinate."""

    matrix: dict
    kind: str
    position: tuple
    readout: dict = field(default_factory=dict)


# matrix helpers

def sparse_product(a, b):
    """Returns the product of two sparse matrices given as ``{(row, col): value}`` dicts."""

    rows_b = defaultdict(list)
    for (r, c), value in b.items():
        rows_b[r].append((c, value))

    result = defaultdict(lambda: QQ(0))
    for (r, k), x in a.items():
        for c, y in rows_b.get(k, ()):
            result[(r, c)] += x * y

    return {pos: value for pos, value in result.items() if value != 0}

def sparse_commutator(a, b):
    """Returns ``ab - ba`` for sparse matrices."""

    result = defaultdict(lambda: QQ(0))
    for pos, value in sparse_product(a, b).items():
        result[pos] += value
    for pos, value in sparse_product(b, a).items():
        result[pos] -= value

    return {pos: value for pos, value in result.items() if value != 0}

def dense_matrix(sparse, size):
    """Expands a sparse matrix into a list of rows."""

    rows = [[QQ(0)] * size for _ in range(size)]
    for (r, c), value in sparse.items():
        rows[r][c] = QQ(value)

    return rows

def bracket(structure, x, y):
    """
    Returns the coordinates of ``[x, y]`` for coordinate vectors ``x`` and ``y``,
    using a sparse structure tensor ``structure[i][j] = {k: c(i, j, k)}``.
    """

    result = [QQ(0)] * len(x)
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, constants in structure.get(i, {}).items():
            yj = y[j]
            if not yj:
                continue
            scale = xi * yj
            for k, c in constants.items():
                result[k] += scale * c

    return result


# algebra models

def _form_signs(t):
    size = t.size
    if t.family == Family.C:
        return [1 if a < size // 2 else -1 for a in range(size)]
    return [1] * size

def _orthosymplectic_elements(t):
    size = t.size
    eps = _form_signs(t)
    mirror = lambda a: size - 1 - a  # pylint: disable=unnecessary-lambda-assignment

    upper = []
    for u in range(size):
        for v in range(u + 1, size):
            partner = (mirror(v), mirror(u))
            if partner < (u, v):
                continue

            sign = -eps[mirror(u)] * eps[mirror(v)]
            if partner == (u, v):
                if sign == -1:
                    continue
                matrix = {(u, v): QQ(1)}
            else:
                matrix = {(u, v): QQ(1), partner: QQ(sign)}

            upper.append(BasisElement(matrix, _UPPER, (u, v), {(u, v): QQ(1)}))

    cartan = [
        BasisElement(
            {(a, a): QQ(1), (mirror(a), mirror(a)): QQ(-1)},
            _CARTAN, (a, a), {(a, a): QQ(1)}
        )
        for a in range(size // 2)
    ]

    return upper, cartan

def _linear_elements(t):
    size = t.size
    upper = [
        BasisElement({(u, v): QQ(1)}, _UPPER, (u, v), {(u, v): QQ(1)})
        for u in range(size) for v in range(u + 1, size)
    ]

    if t.family == Family.GL:
        cartan = [
            BasisElement({(a, a): QQ(1)}, _CARTAN, (a, a), {(a, a): QQ(1)})
            for a in range(size)
        ]
    else:
        cartan = [
            BasisElement(
                {(a, a): QQ(1), (a + 1, a + 1): QQ(-1)},
                _CARTAN, (a, a), {(k, k): QQ(1) for k in range(a + 1)}
            )
            for a in range(size - 1)
        ]

    return upper, cartan

def _transpose(element):
    matrix = {(c, r): value for (r, c), value in element.matrix.items()}
    r, c = element.position
    return BasisElement(matrix, _LOWER, (c, r), {(c, r): QQ(1)})

class AlgebraBasis:
    """
    A classical Lie algebra realised by matrices, with an ordered basis
    (strictly upper, diagonal, strictly lower) and sparse structure constants.
    """

    def __init__(self, lie_type, elements):
        self.lie_type: LieType = lie_type
        self.size: int = lie_type.size
        self.elements: tuple = tuple(elements)
        self.dim: int = len(self.elements)
        self.gram_form = None

        if lie_type.has_form:
            eps = _form_signs(lie_type)
            self.gram_form = {
                (a, self.size - 1 - a): QQ(eps[a]) for a in range(self.size)
            }

        self._readout_index = defaultdict(list)
        for i, element in enumerate(self.elements):
            for pos, coef in element.readout.items():
                self._readout_index[pos].append((i, coef))

        self.structure = self._structure_constants()

    def _structure_constants(self):
        structure = defaultdict(dict)
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                commutator = sparse_commutator(self.elements[i].matrix, self.elements[j].matrix)
                if not commutator:
                    continue

                coords = self.sparse_coordinates(commutator)
                constants = {k: c for k, c in enumerate(coords) if c != 0}
                if constants:
                    structure[i][j] = constants
                    structure[j][i] = {k: -c for k, c in constants.items()}

        return dict(structure)

    def __repr__(self):
        return f'AlgebraBasis({self.lie_type.label()}, dim={self.dim})'

    def kinds(self):
        """Returns the triangular kind of every basis element."""
        return [element.kind for element in self.elements]

    def sparse_coordinates(self, matrix):
        """Returns basis coordinates of a sparse matrix lying in the algebra."""

        coords = [QQ(0)] * self.dim
        for pos, value in matrix.items():
            for i, coef in self._readout_index.get(pos, ()):
                coords[i] += coef * value

        return coords

    def bracket(self, x, y):
        """Returns the coordinates of ``[x, y]`` in the algebra."""
        return bracket(self.structure, x, y)

    @cached_property
    def gram(self):
        """The Gram matrix ``T(i, j) = tr(b_i b_j)`` as a dense list of rows."""

        rows = [[QQ(0)] * self.dim for _ in range(self.dim)]
        for i, a in enumerate(self.elements):
            for j, b in enumerate(self.elements):
                total = QQ(0)
                for (r, c), value in a.matrix.items():
                    other = b.matrix.get((c, r))
                    if other:
                        total += value * other
                rows[i][j] = total

        return rows

    @cached_property
    def dual_elements(self):
        """Sparse matrices ``b^a`` with ``tr(b_i b^a) = delta``."""

        gram = DomainMatrix(self.gram, (self.dim, self.dim), QQ)
        try:
            inverse = gram.inv().to_list()
        except Exception as exc:  # pylint: disable=broad-except
            raise AlgebraError('the trace form is degenerate', {
                'lie_type': str(self.lie_type)
            }) from exc

        duals = []
        for a in range(self.dim):
            matrix = defaultdict(lambda: QQ(0))
            for k in range(self.dim):
                weight = inverse[k][a]
                if not weight:
                    continue
                for pos, value in self.elements[k].matrix.items():
                    matrix[pos] += weight * value
            duals.append({pos: value for pos, value in matrix.items() if value != 0})

        return duals

def build_algebra(t):
    """
    Builds the matrix model of a classical Lie algebra.
    Bilinear forms are anti-diagonal so the standard Borel is upper triangular.
    """

    if not isinstance(t, LieType):
        raise ConfigurationError('expected a LieType', {'lie_type': repr(t)})

    if t.has_form:
        upper, cartan = _orthosymplectic_elements(t)
    else:
        upper, cartan = _linear_elements(t)

    elements = upper + cartan + [_transpose(element) for element in upper]
    algebra = AlgebraBasis(t, elements)

    if algebra.dim != t.dimension:
        raise AlgebraError('basis size does not match the classical dimension', {
            'lie_type': str(t), 'dim': algebra.dim, 'expected': t.dimension
        })

    logger.debug('built %s with dim %d', t.label(), algebra.dim)
    return algebra


# duality and coordinates

def trace_pairing(a):
    """
    Returns the Gram matrix of the trace form and the dual basis.
    The dual basis elements satisfy ``tr(b_i b^a) = delta``.
    """

    return DomainMatrix(a.gram, (a.dim, a.dim), QQ), a.dual_elements

def coordinates(a, matrix):
    """Returns the basis coordinates of a dense matrix lying in the algebra."""

    sparse = {
        (r, c): QQ(value)
        for r, row in enumerate(matrix)
        for c, value in enumerate(row)
        if value
    }
    return a.sparse_coordinates(sparse)

def to_matrix(a, vector):
    """Returns the dense matrix ``sum_a vector[a] b_a``."""

    rows = [[QQ(0)] * a.size for _ in range(a.size)]
    for coef, element in zip(vector, a.elements):
        if not coef:
            continue
        for (r, c), value in element.matrix.items():
            rows[r][c] += coef * value

    return rows

def point_matrix(a, xi):
    """
    Returns the matrix ``Y`` with ``tr(Y b_a) = xi[a]`` for every basis index,
    identifying a point of the dual space with a matrix.
    """

    rows = [[QQ(0)] * a.size for _ in range(a.size)]
    for coef, dual in zip(xi, a.dual_elements):
        if not coef:
            continue
        for (r, c), value in dual.items():
            rows[r][c] += coef * value

    return rows

def functional_coordinates(a, matrix):
    """Returns ``xi[a] = tr(matrix b_a)`` for a dense matrix."""

    return [
        sum((value * QQ(matrix[c][r]) for (r, c), value in element.matrix.items()), QQ(0))
        for element in a.elements
    ]


# parabolics

def borel_spec(t):
    """Returns the spec of the standard Borel subalgebra."""

    if t.family in (Family.A, Family.GL):
        return ParabolicSpec((1,) * t.size, 0)
    return ParabolicSpec((1,) * t.rank, 1 if t.family == Family.B else 0)

def full_spec(t):
    """Returns the spec of the degenerate parabolic ``p = g``."""

    if t.family in (Family.A, Family.GL):
        return ParabolicSpec((t.size,), 0)
    return ParabolicSpec((), t.size)

def validate_spec(t, s):
    """
    Raises ``ConfigurationError`` unless ``s`` describes a flag parabolic of ``t``.
    """

    details = {'lie_type': str(t), 'composition': list(s.composition), 'central': s.central}

    if any(n < 1 for n in s.composition):
        raise ConfigurationError('composition parts must be positive', details)
    if s.central < 0:
        raise ConfigurationError('central block size must be nonnegative', details)

    total = sum(s.composition)
    if t.family in (Family.A, Family.GL):
        if s.central != 0:
            raise ConfigurationError('type A has no central block', details)
        if total != t.size:
            raise ConfigurationError(f'composition must sum to {t.size}', details)
        return

    if 2 * total + s.central != t.size:
        raise ConfigurationError(
            f'twice the composition plus the central block must equal {t.size}', details)
    if t.family == Family.B and s.central % 2 != 1:
        raise ConfigurationError('type B requires an odd central block', details)
    if t.family in (Family.C, Family.D) and s.central % 2 != 0:
        raise ConfigurationError('the central block must be even', details)
    if t.family == Family.D and s.central == 2:
        raise ConfigurationError('type D does not allow a central block of size 2', details)

def row_blocks(t, s):
    """Returns the block number of every matrix row."""

    sizes = list(s.composition)
    if t.family not in (Family.A, Family.GL):
        sizes = sizes + ([s.central] if s.central else []) + sizes[::-1]

    blocks = []
    for number, block_size in enumerate(sizes):
        blocks.extend([number] * block_size)

    return blocks

class ParabolicDecomposition:
    """
    The partition of a basis into ``n``, the Levi part and ``n_-`` for a flag parabolic.
    """

    def __init__(self, algebra, spec, blocks):
        self.algebra: AlgebraBasis = algebra
        self.spec: ParabolicSpec = spec
        self.blocks: tuple = tuple(blocks)

        parts = []
        for element in algebra.elements:
            r, c = element.position
            if element.kind == _CARTAN or blocks[r] == blocks[c]:
                parts.append(_LEVI)
            elif blocks[r] < blocks[c]:
                parts.append(_N)
            else:
                parts.append(_NMINUS)

        self.parts: tuple = tuple(parts)
        self.idx_n = tuple(i for i, part in enumerate(parts) if part == _N)
        self.idx_levi = tuple(i for i, part in enumerate(parts) if part == _LEVI)
        self.idx_nminus = tuple(i for i, part in enumerate(parts) if part == _NMINUS)

    def __repr__(self):
        return (
            f'ParabolicDecomposition({self.algebra.lie_type.label()}, {self.spec}, '
            f'n={len(self.idx_n)}, levi={len(self.idx_levi)})'
        )

    @property
    def lie_type(self):
        """The Lie type of the ambient algebra."""
        return self.algebra.lie_type

    @property
    def idx_p(self):
        """Indices of the parabolic ``p = n + levi``."""
        return tuple(sorted(self.idx_n + self.idx_levi))

    @property
    def idx_pminus(self):
        """Indices of the opposite parabolic ``levi + n_-``."""
        return tuple(sorted(self.idx_levi + self.idx_nminus))

    @property
    def is_degenerate(self):
        """Whether ``p`` is the whole algebra."""
        return not self.idx_n

    def in_p(self, i):
        """Whether basis index ``i`` lies in ``p``."""
        return self.parts[i] != _NMINUS

    def restrict(self, vector, indices):
        """Returns a copy of ``vector`` with entries outside ``indices`` set to zero."""

        keep = set(indices)
        return [value if i in keep else QQ(0) for i, value in enumerate(vector)]

    def levi_blocks(self):
        """Returns the Levi summands of this parabolic."""
        return levi_blocks(self.spec, self.lie_type)

def build_parabolic(a, s):
    """
    Builds the decomposition ``g = n + levi + n_-`` for a flag parabolic.
    Entries above the block diagonal form ``n``.
    """

    validate_spec(a.lie_type, s)
    decomposition = ParabolicDecomposition(a, s, row_blocks(a.lie_type, s))

    if len(decomposition.idx_n) != len(decomposition.idx_nminus):
        raise AlgebraError('n and n_- have different dimensions', {'spec': str(s)})

    return decomposition


# Levi data

def central_block(s, t):
    m = s.central
    if t.family == Family.C and m >= 2:
        return LeviBlock(LeviKind.SP, m)
    if t.family in (Family.B, Family.D) and m >= 3:
        return LeviBlock(LeviKind.SO, m)
    return None

def sort_blocks(blocks):
    """Sorts Levi summands canonically: gl blocks by decreasing size, then sp and so."""

    order = {LeviKind.GL: 0, LeviKind.SP: 1, LeviKind.SO: 2}
    return sorted(blocks, key=lambda block: (order[block.kind], -block.size))

def levi_blocks(s, t):
    """Returns the Levi summands of the parabolic described by ``s``."""

    blocks = [LeviBlock(LeviKind.GL, n) for n in s.composition]
    central = central_block(s, t)
    if central is not None:
        blocks.append(central)

    return sort_blocks(blocks)

def block_degrees(block):
    """Returns the degrees of the basic invariants of a single Levi summand."""

    size = block.size
    if block.kind == LeviKind.GL:
        return list(range(1, size + 1))

    r = size // 2
    if block.kind == LeviKind.SP or size % 2 == 1:
        return list(range(2, 2 * r + 1, 2))
    if r == 1:
        return [1]
    return list(range(2, 2 * r - 1, 2)) + [r]

def degrees_of_blocks(blocks, t):
    """
    Returns the sorted multiset of invariant degrees of a Levi given by its summands.
    For type A one degree-1 entry is removed.
    """

    degrees = sorted(d for block in blocks for d in block_degrees(block))
    if t.family == Family.A and 1 in degrees:
        degrees.remove(1)

    return degrees

def levi_invariant_degrees(s, t):
    """Returns the sorted multiset of degrees of basic invariants of the Levi of ``s``."""
    return degrees_of_blocks(levi_blocks(s, t), t)

def levi_dimension(s, t):
    """Returns the dimension of the Levi subalgebra of ``s``."""

    dimension = sum(block.dimension for block in levi_blocks(s, t))
    return dimension - 1 if t.family == Family.A else dimension

def borel_dimension(blocks, t):
    """Returns the dimension of a Borel subalgebra of the Levi with the given summands."""

    dimension = sum(block.borel_dimension for block in blocks)
    return dimension - 1 if t.family == Family.A else dimension

def is_minimal_parabolic(s, t):
    """Whether ``s`` is a minimal non-Borel parabolic, i.e. ``dim levi = rank + 2``."""
    return levi_dimension(s, t) == t.reductive_rank + 2

def _compositions(total):
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield (first,) + rest

def enumerate_specs(t):
    """Yields every flag parabolic spec of ``t``."""

    if t.family in (Family.A, Family.GL):
        for composition in _compositions(t.size):
            yield ParabolicSpec(composition, 0)
        return

    parity = 1 if t.family == Family.B else 0
    for central in range(parity, t.size + 1, 2):
        if t.family == Family.D and central == 2:
            continue
        for composition in _compositions((t.size - central) // 2):
            yield ParabolicSpec(composition, central)
