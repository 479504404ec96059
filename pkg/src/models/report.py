"""
CQC report models
"""
from enum import Enum
from typing import Any, Dict

from pydantic import BaseModel, ConfigDict, model_validator

from src.errors import InternalConsistencyError

WITNESS_CAVEAT = "conditional on the CQC conjecture"


class GapVerdict(str, Enum):
    """Classification of qmi - mi_sum"""
    SATISFIED = "satisfied"
    NOISE_NEGATIVE = "noise-negative"
    COUNTEREXAMPLE = "counterexample"


class WitnessResult(BaseModel):
    """Witness decision plus signed distance to its threshold (bits)"""
    model_config = ConfigDict(frozen=True)

    detected: bool
    margin: float

    def __bool__(self) -> bool:
        return self.detected


class CqcReport(BaseModel):
    """All scalars of one (state, basis quadruple) evaluation, in bits"""
    model_config = ConfigDict(frozen=True)

    dim_a: int
    dim_b: int
    basis_label: str

    # correlations
    mi_qq: float
    mi_rr: float
    mi_sum: float
    qmi: float
    gap: float
    verdict: GapVerdict

    # entropies
    h_qa: float
    h_ra: float
    h_qb: float
    h_rb: float
    s_a: float
    s_b: float
    s_ab: float
    cond_a_given_b: float
    cond_b_given_a: float

    # uncertainty relations
    residual_a: float
    residual_b: float
    berta_bound_a: float
    berta_bound_b: float

    # one-time-pad bounds
    eve_bound: float
    eve_bound_b: float
    eve_bound_tight: float
    epsilon: float
    key_rate_lower_a: float
    key_rate_lower_b: float
    key_rate_lower: float

    # witnesses
    entangled_witness: bool
    entangled_margin: float
    berta_entangled_witness: bool
    steering_witness: bool
    steering_margin: float
    steering_feasible: bool
    witness_caveat: str = WITNESS_CAVEAT

    @model_validator(mode="after")
    def validate_identities(self) -> "CqcReport":
        if abs(self.mi_sum - (self.mi_qq + self.mi_rr)) > 1e-12:
            raise InternalConsistencyError("mi_sum != mi_qq + mi_rr")
        if abs(self.gap - (self.qmi - self.mi_sum)) > 1e-12:
            raise InternalConsistencyError("gap != qmi - mi_sum")
        return self

    def as_row(self) -> Dict[str, Any]:
        """Flat mapping in field order, enums as their values."""
        return self.model_dump(mode="json")


__all__ = [
    "WITNESS_CAVEAT",
    "GapVerdict",
    "WitnessResult",
    "CqcReport",
]
