"""
SCKit Duality Package

Finite function tables, brute-force (dual) fat-shattering dimension,
binary-matrix variation, balanced Gray codes, explicit shattered families
and greedy packings.
"""

from .families import bv_shattered_family, dual_bv_table, lipschitz_shattered_family
from .function_table import FunctionTable, family_table
from .gray_code import BinaryMatrix, balanced_gray_code, enumeration_matrix, matrix_variation
from .packing import packing_number_greedy
from .shattering import (
    ShatteringCertificate,
    fat_shattering_dim,
    is_t_shattered,
    largest_shattered_set,
    offset_candidates,
)

__all__ = [
    "BinaryMatrix",
    "FunctionTable",
    "ShatteringCertificate",
    "balanced_gray_code",
    "bv_shattered_family",
    "dual_bv_table",
    "enumeration_matrix",
    "family_table",
    "fat_shattering_dim",
    "is_t_shattered",
    "largest_shattered_set",
    "lipschitz_shattered_family",
    "matrix_variation",
    "offset_candidates",
    "packing_number_greedy",
]
