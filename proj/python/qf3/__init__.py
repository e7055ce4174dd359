"""Divisor sums over the three-squares quadratic form."""

from qf3._qf3 import (
    bessel,
    check_lemma,
    constants,
    euler_gamma,
    gauss_sum,
    s1_euler,
    s3,
    singular_integral,
    t_sum,
    table,
    voronoi_check,
    zeta,
)

__all__ = [
    "bessel",
    "check_lemma",
    "constants",
    "euler_gamma",
    "gauss_sum",
    "s1_euler",
    "s3",
    "singular_integral",
    "t_sum",
    "table",
    "voronoi_check",
    "zeta",
]
