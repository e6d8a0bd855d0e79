"""
Contains potential usage examples of the library.
"""

import asyncio
import sys

import parcontract
from parcontract.algebra import build_algebra, build_parabolic, find_richardson, jordan_type
from parcontract.algebra.richardson import find_polarisations


def _display_degrees(report):
    print(f'{report.lie_type} {tuple(report.partition)}: Levi type {" + ".join(report.levi_type)}')
    for degree, (p_degree, n_degree) in zip(report.invariant_degrees, report.bidegrees):
        print(f'   deg F = {degree:2d}  ->  ({p_degree}, {n_degree})')

def _display_suite(report):
    print(f'{report.suite}: {report.status}')
    for record in report.checks:
        print(f'   {record.status.value:4s}  {record.name}')

# Example 1
async def symplectic_degrees():
    """
    Computes the bi-degrees of the highest components for the Richardson partition (6,4,2) of sp12.
    """

    report = await parcontract.degrees(lie_type='C', partition='6,4,2')
    _display_degrees(report)

# Example 2
async def modified_partition():
    """
    Shows the modified partition and the symplectic Levi summand of (6,6,5,5,2).
    """

    report = await parcontract.degrees(lie_type='C', partition=[6, 6, 5, 5, 2])
    print(f'modified: {tuple(report.modified)}')
    print(f'degree multiset: {report.degree_multiset}')
    print(f'matches Levi degrees: {report.matches_levi}')

# Example 3
async def contraction_info():
    """
    Describes the contraction of sp12 along the parabolic with composition (3,2,1).
    """

    report = await parcontract.info(lie_type='C', composition=[3, 2, 1], trials=5)
    for name, value in report.dimensions.items():
        print(f'dim {name} = {value}')
    print(f'Richardson orbit {tuple(report.jordan_type)}, index of q = {report.index}')

# Example 4
async def richardson_element():
    """
    Finds a Richardson element of sl4 for the composition (2,1,1) and its Jordan type.
    """

    t = parcontract.LieType('A', 3)
    p = build_parabolic(build_algebra(t), parcontract.ParabolicSpec((2, 1, 1)))
    element = find_richardson(p, seed=1)

    print(f'certificate rank {element.certificate} of dim n = {element.dim_n}')
    print(f'Jordan type {jordan_type(element)}')

# Example 5
async def polarisations():
    """
    Lists the parabolics of sl4 whose Richardson orbit has partition (2,2).
    """

    for spec in find_polarisations(parcontract.LieType('A', 3), (2, 2)):
        print(f'   composition {spec.composition}')

# Example 6
async def coadjoint_suite():
    """
    Runs the coadjoint suite on sp4 with composition (2), raising on failed checks.
    """

    report = await parcontract.run_verification(
        'coadjoint', lie_type='C', composition=[2], trials=3, raise_check_failures=True
    )
    _display_suite(report)

# Example 7
async def counterexample_suite():
    """
    Runs the counterexample suite on so12, where the highest components are dependent.
    """

    report = await parcontract.run_verification('counterexample', trials=2, probes=1)
    _display_suite(report)


_EXAMPLE_FUNCS = [
    symplectic_degrees,
    modified_partition,
    contraction_info,
    richardson_element,
    polarisations,
    coadjoint_suite,
    counterexample_suite
]

async def _run_examples():
    pad = '═' * 39
    pad_line = '═' * 90

    for idx, example_func in enumerate(_EXAMPLE_FUNCS):
        print(f'{pad} Example {idx+1:02d} {pad}')
        print(example_func.__doc__)

        await example_func()
        print()

    print(pad_line)


if __name__ == '__main__':
    try:
        asyncio.run(_run_examples())
    except parcontract.ParContractException as exc:
        sys.exit(exc.message)
