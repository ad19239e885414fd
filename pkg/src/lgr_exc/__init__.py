"""Exact Borel-Bott-Weil, K-class and staircase computations on LGr(n, 2n)."""

from .bbw import CohomCell, coh_gr_relative, coh_igr, coh_lgr, coh_lgr_bundle, dotted_sort_A, dotted_sort_C
from .certificate import Certificate
from .diagrams import (
    enumerate_block,
    includes,
    lambda_prime,
    negate,
    staircase_truncations,
    transpose,
    twist,
)
from .kclass import KClass, euler_pairing, euler_pairing_equivariant, gram_matrix, kclass_E, kclass_F, rank, twist_kclass
from .schur import VirtualModule, dim_gl, dim_sp, fundamental_sp, lr_coeff, skew, tensor_gl, tensor_sp_stable
from .staircase import StairComplex, build_staircase, euler_class, splice, verify_exactness_probe

__version__ = "0.1.0"
