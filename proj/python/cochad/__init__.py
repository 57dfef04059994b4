"""Cocyclic Hadamard matrices over Z_t x Z_2^2 and D_4t."""

from ._cochad import (  # noqa: F401
    GroupTable,
    BasisDescriptor,
    ResourceLimitError,
    GroupParseError,
    make_group,
    load_custom_group,
    family_basis,
    j_index,
    is_hadamard,
    row_sum_test,
    is_cocycle,
    diagram_of,
    cocycle_space_dim,
    enumerate_hadamard_cocycles,
    search,
    verify_support,
    emit_ideal,
    eval_generators,
)

__version__ = "0.1.0"
