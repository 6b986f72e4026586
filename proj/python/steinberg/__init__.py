"""Exact Eulerian polynomials of Weyl groups and Steinberg torus face counts.

Thin wrapper over the C++ extension.  All coefficients are Python ints of
arbitrary size; polynomials are coefficient lists indexed by the power of t,
and flag polynomials are dicts keyed by tuples of color indices.
"""

from steinberg._core import (
    count_real_roots,
    eulerian,
    eulerian_from_egf,
    flag_eulerian,
    gamma_vector,
    is_real_rooted,
    is_symmetric,
    is_unimodal,
    table1,
    torus,
    weyl_order,
)

__all__ = [
    "count_real_roots",
    "eulerian",
    "eulerian_from_egf",
    "flag_eulerian",
    "gamma_vector",
    "is_real_rooted",
    "is_symmetric",
    "is_unimodal",
    "table1",
    "torus",
    "weyl_order",
]

__version__ = "1.0.0"
