"""Exact Hermitian spectra, splitting fields and algebraic degrees of
mixed Cayley graphs over finite abelian groups."""

from ._core import (
    ConnectionSet,
    CycInt,
    Group,
    InternalError,
    ParseError,
    ValidationError,
    __version__,
    algebraic_degree,
    atom,
    atom_mod4,
    char_poly,
    combinatorial_stabilizer,
    connection_set_from_json,
    cyclotomic_polynomial,
    eigenvalue,
    enumerate_integral_sets,
    euler_phi,
    g4_subset,
    galois_apply,
    galois_fixing_stabilizer,
    is_integral,
    is_integral_characterized,
    lift_unit,
    numeric_spectrum,
    orbit,
    order_of,
    root_power,
    run_verify,
    split_connection_set,
    splitting_field_report,
    spectrum,
    undirected_stabilizer,
    units,
)

__all__ = [
    "ConnectionSet",
    "CycInt",
    "Group",
    "InternalError",
    "ParseError",
    "ValidationError",
    "algebraic_degree",
    "atom",
    "atom_mod4",
    "char_poly",
    "combinatorial_stabilizer",
    "connection_set_from_json",
    "cyclotomic_polynomial",
    "eigenvalue",
    "enumerate_integral_sets",
    "euler_phi",
    "g4_subset",
    "galois_apply",
    "galois_fixing_stabilizer",
    "is_integral",
    "is_integral_characterized",
    "lift_unit",
    "numeric_spectrum",
    "orbit",
    "order_of",
    "root_power",
    "run_verify",
    "split_connection_set",
    "splitting_field_report",
    "spectrum",
    "undirected_stabilizer",
    "units",
]
