"""Synthetic graphs (two-block SBM, R-MAT) and SBM expectation oracles."""

from .rmat import DENSITY_REGIMES, RmatParams, gen_rmat
from .sbm import SbmParams, gen_sbm
from .theory import (
    EdgeClass,
    SbmExpectation,
    TectonicVerdict,
    sbm_expected_scores,
    tectonic_infeasibility_check,
    tw_expected_gap,
)

__all__ = [
    "SbmParams",
    "gen_sbm",
    "RmatParams",
    "DENSITY_REGIMES",
    "gen_rmat",
    "EdgeClass",
    "SbmExpectation",
    "TectonicVerdict",
    "sbm_expected_scores",
    "tw_expected_gap",
    "tectonic_infeasibility_check",
]
