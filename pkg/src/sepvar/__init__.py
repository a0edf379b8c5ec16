"""Separation of variables for polynomials on k vectors in C^n under O(n).

The package computes, for each diagram sigma, the resolution of the
irreducible module L(sigma#), Hilbert series of the kernel of the
multiplication map I (x) H -> P, explicit kernel generators, and a
brute-force oracle that checks all of these by exact linear algebra.
"""

from .ew import lambda_prime, level_of_reduction, resolution
from .generators import basis_of_F, build_M, generator, minor, verify_generator
from .hilbert import RationalSeries, hs_I, hs_kernel, hs_L, weyl_dim_gl
from .partitions import Partition, Weight, in_sigma0, sigma_sharp
from .polyalg import MPoly, phi, weight_of

__version__ = "0.1.0"

__all__ = [
    "Partition",
    "Weight",
    "sigma_sharp",
    "in_sigma0",
    "resolution",
    "lambda_prime",
    "level_of_reduction",
    "RationalSeries",
    "hs_I",
    "hs_L",
    "hs_kernel",
    "weyl_dim_gl",
    "MPoly",
    "phi",
    "weight_of",
    "build_M",
    "minor",
    "generator",
    "verify_generator",
    "basis_of_F",
]
