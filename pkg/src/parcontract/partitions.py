"""
Partition combinatorics of Richardson nilpotent orbits: validity and Richardson predicates,
dual partitions, Levi types, slice-function degrees and bi-degree tables.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import accumulate

from sympy.combinatorics.partitions import IntegerPartition, random_integer_partition

from .algebra.liealg import (
    LeviBlock,
    LieType,
    borel_dimension,
    degrees_of_blocks,
    sort_blocks
)
from .types import ConfigurationError, Family, LeviKind, isiterable

logger = logging.getLogger(__name__)


# types

@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(sorted((int(part) for part in self.parts), reverse=True))
        if not parts or parts[-1] < 1:
            raise ConfigurationError('a partition needs at least one part, all positive', {
                'parts': list(parts)
            })

        object.__setattr__(self, 'parts', parts)

    @classmethod
    def parse(cls, value):
        """
        Builds a partition from an iterable of integers or a string such as ``"6,4,2"``.
        """

        if isinstance(value, Partition):
            return value

        if isinstance(value, str):
            try:
                value = [int(part) for part in value.replace(' ', '').split(',') if part]
            except ValueError as exc:
                raise ConfigurationError(f'invalid partition {value!r}') from exc
        elif not isiterable(value):
            raise ConfigurationError(f'invalid partition {value!r}')

        return cls(tuple(value))

    @property
    def total(self):
        """The integer being partitioned."""
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return '(' + ','.join(map(str, self.parts)) + ')'

@dataclass(frozen=True)
class RichardsonProfile:
    """
    The degree combinatorics attached to a Richardson partition.
    ``bidegrees`` lists ``(deg_p, deg_{n_-})`` pairs in increasing invariant degree.
    """

    lie_type: LieType
    partition: Partition
    dual: Partition
    modified: Partition
    levi: tuple
    degree_multiset: tuple
    bidegrees: tuple
    invariant_degrees: tuple
    removed_trace_degree: int = None

    @property
    def levi_type(self):
        """The Levi summand labels."""
        return [block.label() for block in self.levi]

    def sums(self):
        """
        Returns the degree sums together with the dimensions they must match.
        """

        dim_levi = sum(block.dimension for block in self.levi)
        if self.lie_type.family == Family.A:
            dim_levi -= 1

        return {
            'degree_multiset': sum(self.degree_multiset),
            'nminus_degrees': sum(second for _, second in self.bidegrees),
            'invariant_degrees': sum(self.invariant_degrees),
            'dim_n': (self.lie_type.dimension - dim_levi) // 2,
            'dim_borel_levi': borel_dimension(self.levi, self.lie_type)
        }

    def asraw(self):
        """Returns the profile as a raw dict for ``DegreeReport``."""

        return {
            'lie_type': str(self.lie_type),
            'partition': list(self.partition),
            'dual': list(self.dual),
            'modified': list(self.modified) if self.modified is not None else None,
            'levi_type': self.levi_type,
            'degree_multiset': list(self.degree_multiset),
            'bidegrees': [list(pair) for pair in self.bidegrees],
            'invariant_degrees': list(self.invariant_degrees),
            'removed_trace_degree': self.removed_trace_degree,
            'sums': self.sums(),
            'matches_levi': degrees_match_levi(self.lie_type, self.partition)
        }


# helpers

def rank_from_partition(family, partition):
    """
    Returns the rank of the classical algebra whose defining matrices have size ``|partition|``.
    ``GL`` of rank ``l`` is ``gl_{l+1}``.
    """

    family = Family.get(family)
    total = Partition.parse(partition).total

    if family in (Family.A, Family.GL):
        if total < 2:
            raise ConfigurationError('type A needs matrices of size at least 2', {'total': total})
        return total - 1
    if family == Family.B:
        if total % 2 != 1 or total < 3:
            raise ConfigurationError('type B needs an odd total of at least 3', {'total': total})
        return (total - 1) // 2
    if family in (Family.C, Family.D):
        if total % 2 != 0:
            raise ConfigurationError(f'type {family} needs an even total', {'total': total})
        return total // 2

    raise ConfigurationError(f'unknown Lie type {family!r}')

def _resolve(t, partition):
    partition = Partition.parse(partition)

    if isinstance(t, LieType):
        if partition.total != t.size:
            raise ConfigurationError(f'partition must sum to {t.size}', {
                'lie_type': str(t), 'partition': list(partition)
            })
        return t, partition

    family = Family.get(t)
    if family is None:
        raise ConfigurationError(f'unknown Lie type {t!r}')

    return LieType(family, rank_from_partition(family, partition)), partition

def _odd_length(partition):
    return max((j + 1 for j, part in enumerate(partition) if part % 2), default=0)

def _require(predicate, t, partition, name):
    if not predicate:
        raise ConfigurationError(f'{partition} fails {name} for type {t.family}', {
            'lie_type': str(t), 'partition': list(partition), 'predicate': name
        })

def _require_supported(t, partition):
    if t.family == Family.D:
        raise ConfigurationError('type D Richardson combinatorics are not supported', {
            'lie_type': str(t), 'partition': list(partition)
        })

    _require(is_valid_nilpotent(t, partition), t, partition, 'is_valid_nilpotent')
    if t.family == Family.C:
        _require(is_richardson_C(partition), t, partition, 'is_richardson_C')
    if t.family == Family.B:
        _require(is_admissible_B(partition), t, partition, 'is_admissible_B')


# operations

def dual(partition):
    """
    Returns the dual partition, whose ``i``-th part counts the parts ``>= i``.
    """

    partition = Partition.parse(partition)
    return Partition(tuple(IntegerPartition(list(partition)).conjugate))

def is_valid_nilpotent(t, partition):
    """
    Whether ``partition`` labels a nilpotent orbit of ``t``.

    - ``t``: A ``LieType``, or a family whose rank is read off the partition.
    - ``partition``: A partition of the matrix size.
    """

    t, partition = _resolve(t, partition)
    multiplicities = Counter(partition)

    if t.family == Family.C:
        return all(count % 2 == 0 for part, count in multiplicities.items() if part % 2)
    if t.family in (Family.B, Family.D):
        return all(count % 2 == 0 for part, count in multiplicities.items() if part % 2 == 0)

    return True

def is_richardson_C(partition):
    """
    Whether a symplectic partition is Richardson.
    With ``r`` the last position of an odd part, ``r`` is even, the pairs
    ``(l_{2j-1}, l_{2j})`` up to ``r`` share parity, and even neighbours
    ``l_{2j}, l_{2j+1}`` below ``r`` differ by at least 2.
    """

    parts = Partition.parse(partition).parts
    r = _odd_length(parts)
    if r % 2:
        return False

    for j in range(1, r // 2 + 1):
        if parts[2 * j - 2] % 2 != parts[2 * j - 1] % 2:
            return False

    for j in range(1, r // 2):
        upper, lower = parts[2 * j - 1], parts[2 * j]
        if upper % 2 == 0 and lower % 2 == 0 and upper < lower + 2:
            return False

    return True

def is_admissible_B(partition):
    """Whether the first part is odd and all other parts are even."""

    parts = Partition.parse(partition).parts
    return parts[0] % 2 == 1 and all(part % 2 == 0 for part in parts[1:])

def modified_partition_C(partition):
    """
    Shifts every even pair ``(l_{2j-1}, l_{2j})`` with ``2j <= r`` to ``(l_{2j-1} + 1, l_{2j} - 1)``.
    """

    parts = list(Partition.parse(partition).parts)
    if not is_richardson_C(parts):
        raise ConfigurationError(f'{Partition(tuple(parts))} is not a Richardson partition', {
            'partition': parts, 'predicate': 'is_richardson_C'
        })

    for j in range(1, _odd_length(parts) // 2 + 1):
        if parts[2 * j - 2] % 2 == 0:
            parts[2 * j - 2] += 1
            parts[2 * j - 1] -= 1

    return Partition(tuple(parts))

def _levi_summands_C(partition):
    modified = modified_partition_C(partition)
    r = _odd_length(modified)

    blocks = []
    for value, count in Counter(dual(modified)).items():
        if r and value == r:
            if count % 2 == 0:
                raise ConfigurationError('the row pairing leaves no symplectic block', {
                    'partition': list(partition), 'modified': list(modified)
                })
            blocks.extend([LeviBlock(LeviKind.GL, value)] * ((count - 1) // 2))
            blocks.append(LeviBlock(LeviKind.SP, r))
        else:
            blocks.extend([LeviBlock(LeviKind.GL, value)] * (count // 2))

    return blocks

def _levi_summands_B(partition):
    blocks = []
    for value, count in Counter(dual(partition)).items():
        if value == 1:
            blocks.extend([LeviBlock(LeviKind.GL, 1)] * (count // 2))
        elif count % 2 == 0:
            blocks.extend([LeviBlock(LeviKind.GL, value)] * (count // 2))
        else:
            raise ConfigurationError('unpaired column in an admissible partition', {
                'partition': list(partition), 'column': value
            })

    return blocks

def levi_summands(t, partition):
    """
    Returns the Levi summands of a parabolic having ``partition`` as Richardson orbit,
    sorted canonically.
    """

    t, partition = _resolve(t, partition)
    _require_supported(t, partition)

    if t.family == Family.C:
        blocks = _levi_summands_C(partition)
    elif t.family == Family.B:
        blocks = _levi_summands_B(partition)
    else:
        blocks = [LeviBlock(LeviKind.GL, value) for value in dual(partition)]

    return sort_blocks(blocks)

def levi_type(t, partition):
    """Returns the labels of the Levi summands, such as ``['gl3', 'gl2', 'gl1']``."""
    return [block.label() for block in levi_summands(t, partition)]

def _interval_index(degree, partial_sums):
    for i, bound in enumerate(partial_sums):
        if degree <= bound:
            return i + 1

    raise ConfigurationError('invariant degree exceeds the partition total', {
        'degree': degree, 'total': partial_sums[-1]
    })

def _slice_degrees(t, partition):
    partial_sums = list(accumulate(partition))
    return [
        (degree, _interval_index(degree, partial_sums))
        for degree in t.invariant_degrees()
    ]

def e_degree_multiset(t, partition):
    """
    Returns the sorted degrees of the slice restrictions of the basic invariants.
    Invariant ``F_j`` restricts to degree ``i`` when ``l_1 + ... + l_{i-1} < deg F_j <= l_1 + ... + l_i``.
    """

    t, partition = _resolve(t, partition)
    _require_supported(t, partition)

    return sorted(index for _, index in _slice_degrees(t, partition))

def bidegree_table(t, partition):
    """
    Returns the pairs ``(deg_p, deg_{n_-})`` of the highest components,
    in increasing invariant degree.
    """

    t, partition = _resolve(t, partition)
    _require_supported(t, partition)

    return [(index, degree - index) for degree, index in _slice_degrees(t, partition)]

def admissible_multiplicities(partition):
    """
    Returns ``{i: #{j : deg eF_j = i}}`` for an admissible type-B partition in closed form:
    ``[l_1 / 2]`` for ``i = 1`` and ``l_i / 2`` for ``i > 1``.
    """

    parts = Partition.parse(partition).parts
    if not is_admissible_B(parts):
        raise ConfigurationError(f'{Partition(parts)} is not admissible', {
            'partition': list(parts), 'predicate': 'is_admissible_B'
        })

    counts = {1: parts[0] // 2}
    for i, part in enumerate(parts[1:], start=2):
        counts[i] = part // 2

    return {i: count for i, count in counts.items() if count}

def degrees_match_levi(t, partition):
    """
    Whether the slice degrees equal the Levi invariant degrees and both degree sums hold:
    the ``n_-`` degrees sum to ``dim n`` and the slice degrees sum to ``dim b(l)``.
    """

    profile = degree_profile(t, partition)
    sums = profile.sums()

    matches = (
        list(profile.degree_multiset) == degrees_of_blocks(profile.levi, profile.lie_type)
        and sums['nminus_degrees'] == sums['dim_n']
        and sums['degree_multiset'] == sums['dim_borel_levi']
    )

    logger.debug('%s %s matches Levi degrees: %s', profile.lie_type, profile.partition, matches)
    return matches

def degree_profile(t, partition):
    """
    Builds the full ``RichardsonProfile`` of a partition.
    """

    t, partition = _resolve(t, partition)
    _require_supported(t, partition)

    return RichardsonProfile(
        lie_type=t,
        partition=partition,
        dual=dual(partition),
        modified=modified_partition_C(partition) if t.family == Family.C else None,
        levi=tuple(levi_summands(t, partition)),
        degree_multiset=tuple(e_degree_multiset(t, partition)),
        bidegrees=tuple(bidegree_table(t, partition)),
        invariant_degrees=tuple(t.invariant_degrees()),
        removed_trace_degree=1 if t.family == Family.A else None
    )


# random sweeps

def random_partition(total, rng):
    """Returns a random partition of ``total`` drawn with a seeded generator."""
    return Partition(tuple(random_integer_partition(total, seed=rng.getrandbits(32))))

def random_richardson_C(rng, max_total=30, attempts=1000):
    """
    Returns a random Richardson partition of an even total at most ``max_total``
    by rejection sampling.
    """

    for _ in range(attempts):
        total = 2 * rng.randint(1, max_total // 2)
        partition = random_partition(total, rng)
        if is_valid_nilpotent(Family.C, partition) and is_richardson_C(partition):
            return partition

    raise ConfigurationError('no Richardson partition found', {
        'max_total': max_total, 'attempts': attempts
    })

def random_admissible_B(rng, max_total=31):
    """
    Returns a random admissible partition ``(l_1, 2a_1, 2a_1, 2a_2, 2a_2, ...)``
    with ``l_1`` odd and total at most ``max_total``.
    """

    first = 2 * rng.randint(1, (max_total - 1) // 2) + 1
    remaining = max_total - first

    pairs = []
    while remaining >= 4 and first >= 3 and rng.random() < 0.7:
        size = 2 * rng.randint(1, min(remaining // 4, (first - 1) // 2))
        pairs.extend([size, size])
        remaining -= 2 * size

    return Partition((first, *pairs))
