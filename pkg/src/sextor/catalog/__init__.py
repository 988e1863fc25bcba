"""Classification tables as queryable constants."""

from .phi_sets import (
    PHI1, PHI_Q2, PHI_Q3, PHI_INF6, PHI_STAR6, PHI_INF6_Q, PHI_STAR6_BY_G,
    in_phi_star6, phi_star6_by_G,
)
from .two_primary import two_primary_allowed
from .cm_torsion import cm_phi
from .images import table5_rows, ImageRow
from .isogeny_levels import ISOGENY_LEVELS, INFINITE_LEVELS, CM_ONLY_LEVELS
from . import sporadic

__all__ = [
    "PHI1", "PHI_Q2", "PHI_Q3", "PHI_INF6", "PHI_STAR6", "PHI_INF6_Q", "PHI_STAR6_BY_G",
    "in_phi_star6", "phi_star6_by_G", "two_primary_allowed", "cm_phi", "table5_rows",
    "ImageRow", "ISOGENY_LEVELS", "INFINITE_LEVELS", "CM_ONLY_LEVELS", "sporadic",
]
