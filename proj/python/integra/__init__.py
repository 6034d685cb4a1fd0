"""Exact spectra of recursively constructed trees and certified integral
trees of every odd diameter >= 5.

Everything arrives from the compiled core; all integers are exact
(arbitrary precision) end to end.
"""

from ._core import (  # noqa: F401
    BudgetError,
    Certificate,
    FactoredSpectrum,
    FamilyInstance,
    IntPoly,
    RootedTree,
    SpectrumReport,
    attach,
    build_c,
    build_t,
    certify,
    charpoly_c_factored,
    charpoly_c_root_deleted,
    charpoly_join,
    charpoly_t_factored,
    count_squares_between,
    delete_root,
    diameter,
    distinct_eigenvalues,
    exact_div,
    f_of_c,
    family_4k1,
    family_4k3,
    instance_for_diameter,
    integer_root_split,
    is_perfect_square,
    oracle_charpoly,
    pell_solutions,
    pick_squares,
    psi_even,
    psi_odd,
    root_height,
    serialize,
    spectrum_report,
    valid_a_values,
    vertex_count_c,
    vertex_count_t,
)

__version__ = "1.0.0"
