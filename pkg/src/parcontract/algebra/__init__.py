"""
Exact constructions of classical Lie algebras, their parabolic contractions and invariants.
"""

from .contraction import (
    ContractedAlgebra,
    adjoint_derivative,
    coadjoint_derivative,
    coadjoint_form,
    contract,
    family_bracket,
    index_of,
    stabilizer_dim
)
from .invariants import (
    BiComponentProfile,
    Evaluator,
    InvariantFamily,
    bicomponents,
    directional_derivative,
    eval_adjoint_lowered,
    eval_highest,
    eval_invariant,
    eval_slice,
    invariance_probe,
    jacobian_rank,
    kostant_probe,
    levi_pullback,
    n_minus_degree,
    slodowy_slice_eval
)
from .liealg import (
    AlgebraBasis,
    LeviBlock,
    LieType,
    ParabolicDecomposition,
    ParabolicSpec,
    build_algebra,
    build_parabolic,
    trace_pairing
)
from .richardson import (
    CentraliserData,
    RichardsonElement,
    centraliser,
    find_richardson,
    jordan_type,
    subalgebra_index,
    subregular_structure
)

__all__ = [
    'adjoint_derivative',
    'bicomponents',
    'build_algebra',
    'build_parabolic',
    'centraliser',
    'coadjoint_derivative',
    'coadjoint_form',
    'contract',
    'directional_derivative',
    'eval_adjoint_lowered',
    'eval_highest',
    'eval_invariant',
    'eval_slice',
    'family_bracket',
    'find_richardson',
    'index_of',
    'invariance_probe',
    'jacobian_rank',
    'jordan_type',
    'kostant_probe',
    'levi_pullback',
    'n_minus_degree',
    'slodowy_slice_eval',
    'stabilizer_dim',
    'subalgebra_index',
    'subregular_structure',
    'trace_pairing',
    'AlgebraBasis',
    'BiComponentProfile',
    'CentraliserData',
    'ContractedAlgebra',
    'Evaluator',
    'InvariantFamily',
    'LeviBlock',
    'LieType',
    'ParabolicDecomposition',
    'ParabolicSpec',
    'RichardsonElement'
]
