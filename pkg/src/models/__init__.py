"""
Pydantic models for validated quantum data and search records
"""
from .measurement import (
    BasisQuadruple,
    JointDistribution,
    MubPair,
    ProbabilityVector,
    ProjectiveBasis,
)
from .report import WITNESS_CAVEAT, CqcReport, GapVerdict, WitnessResult
from .search import (
    DimSummary,
    SampleRecord,
    SearchConfig,
    SearchMode,
    SearchSummary,
    WernerSweepRecord,
)
from .state import (
    BoundaryFamily,
    BoundaryMixtureSpec,
    DensityMatrix,
    StateDocument,
    WernerParams,
)

__all__ = [
    "DensityMatrix",
    "StateDocument",
    "WernerParams",
    "BoundaryFamily",
    "BoundaryMixtureSpec",
    "ProjectiveBasis",
    "MubPair",
    "BasisQuadruple",
    "JointDistribution",
    "ProbabilityVector",
    "WITNESS_CAVEAT",
    "GapVerdict",
    "WitnessResult",
    "CqcReport",
    "SearchMode",
    "SearchConfig",
    "SampleRecord",
    "WernerSweepRecord",
    "DimSummary",
    "SearchSummary",
]
