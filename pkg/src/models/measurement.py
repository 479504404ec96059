"""
Measurement models
"""
from typing import Any, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.errors import DimensionMismatch, InvalidDistribution, MubViolation, ParamOutOfRange

UNITARY_TOL = 1e-10
MUB_TOL = 1e-9
PROBABILITY_CLIP = 1e-12
NORMALIZATION_TOL = 1e-9


def _read_only(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class ProjectiveBasis(BaseModel):
    """
    Orthonormal eigenbasis of a non-degenerate observable.

    Column k of `vectors` is the k-th outcome's eigenvector. Eigenvalue
    labels are not stored; every information quantity depends on outcome
    probabilities only.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    vectors: np.ndarray
    label: str = "custom"

    @field_validator("vectors", mode="before")
    @classmethod
    def validate_unitary(cls, v: Any) -> np.ndarray:
        u = np.array(v, dtype=np.complex128)
        if u.ndim != 2 or u.shape[0] != u.shape[1] or u.shape[0] < 1:
            raise ParamOutOfRange(f"basis matrix must be square and non-empty, got {u.shape}")
        deviation = float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))))
        if deviation > UNITARY_TOL:
            raise ParamOutOfRange(f"basis is not orthonormal: ||V^dagger V - I||_max = {deviation:.3e}")
        return _read_only(u)

    @property
    def dim(self) -> int:
        return self.vectors.shape[0]


def overlap_deviation(a: ProjectiveBasis, b: ProjectiveBasis) -> float:
    """max_ij | |<a_i|b_j>|^2 - 1/dim |"""
    if a.dim != b.dim:
        raise DimensionMismatch(f"bases of dimension {a.dim} and {b.dim}")
    overlaps = np.abs(a.vectors.conj().T @ b.vectors) ** 2
    return float(np.max(np.abs(overlaps - 1.0 / a.dim)))


class MubPair(BaseModel):
    """Two bases of the same space whose cross overlaps are all 1/dim"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    q: ProjectiveBasis
    r: ProjectiveBasis

    @model_validator(mode="after")
    def validate_unbiased(self) -> "MubPair":
        deviation = overlap_deviation(self.q, self.r)
        if deviation > MUB_TOL:
            raise MubViolation(
                f"{self.q.label}/{self.r.label} overlap deviation {deviation:.3e} exceeds {MUB_TOL:.0e}"
            )
        return self

    @property
    def dim(self) -> int:
        return self.q.dim


class BasisQuadruple(BaseModel):
    """
    Q and R bases for party A (dim M) and party B (dim N).

    The unbiasedness of (qa, ra) and (qb, rb) is checked by `check_unbiased`
    rather than at construction: the pure-state theorem is exercised with
    arbitrary, biased quadruples.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    qa: ProjectiveBasis
    ra: ProjectiveBasis
    qb: ProjectiveBasis
    rb: ProjectiveBasis
    label: str = "custom"

    @model_validator(mode="after")
    def validate_dims(self) -> "BasisQuadruple":
        if self.qa.dim != self.ra.dim:
            raise DimensionMismatch(f"party A bases have dims {self.qa.dim} and {self.ra.dim}")
        if self.qb.dim != self.rb.dim:
            raise DimensionMismatch(f"party B bases have dims {self.qb.dim} and {self.rb.dim}")
        return self

    @property
    def dim_a(self) -> int:
        return self.qa.dim

    @property
    def dim_b(self) -> int:
        return self.qb.dim

    def is_unbiased(self, tol: float = MUB_TOL) -> bool:
        return (
            overlap_deviation(self.qa, self.ra) <= tol
            and overlap_deviation(self.qb, self.rb) <= tol
        )

    def check_unbiased(self, tol: float = MUB_TOL) -> None:
        for party, q, r in (("A", self.qa, self.ra), ("B", self.qb, self.rb)):
            deviation = overlap_deviation(q, r)
            if deviation > tol:
                raise MubViolation(
                    f"party {party} bases {q.label}/{r.label} deviate by {deviation:.3e}",
                    context={"quadruple": self.label},
                )


class JointDistribution(BaseModel):
    """
    rows x cols table of joint outcome probabilities.

    Entries in [-1e-12, 0) are clipped to zero and the table renormalized;
    anything more negative, or a total off by more than 1e-9, is rejected.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    p: np.ndarray

    @field_validator("p", mode="before")
    @classmethod
    def validate_table(cls, v: Any) -> np.ndarray:
        table = np.array(v, dtype=np.float64)
        if table.ndim != 2 or table.size == 0:
            raise InvalidDistribution(f"joint distribution must be a 2-D table, got shape {table.shape}")
        if not np.all(np.isfinite(table)):
            raise InvalidDistribution("joint distribution has non-finite entries")
        if table.min() < -PROBABILITY_CLIP:
            raise InvalidDistribution(f"negative probability {table.min():.3e}")
        table = np.where(table < 0.0, 0.0, table)
        total = table.sum()
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise InvalidDistribution(f"probabilities sum to {total:.12f}")
        return _read_only(table / total)

    @property
    def rows(self) -> int:
        return self.p.shape[0]

    @property
    def cols(self) -> int:
        return self.p.shape[1]

    def row_marginal(self) -> np.ndarray:
        return self.p.sum(axis=1)

    def col_marginal(self) -> np.ndarray:
        return self.p.sum(axis=0)


class ProbabilityVector(BaseModel):
    """Probability vector over single-party outcomes"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    p: np.ndarray
    label: Optional[str] = Field(default=None)

    @field_validator("p", mode="before")
    @classmethod
    def validate_vector(cls, v: Any) -> np.ndarray:
        vec = np.array(v, dtype=np.float64).reshape(-1)
        if vec.size == 0 or not np.all(np.isfinite(vec)):
            raise InvalidDistribution("probability vector must be non-empty and finite")
        if vec.min() < -PROBABILITY_CLIP:
            raise InvalidDistribution(f"negative probability {vec.min():.3e}")
        vec = np.where(vec < 0.0, 0.0, vec)
        total = vec.sum()
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise InvalidDistribution(f"probabilities sum to {total:.12f}")
        return _read_only(vec / total)


__all__ = [
    "UNITARY_TOL",
    "MUB_TOL",
    "ProjectiveBasis",
    "MubPair",
    "BasisQuadruple",
    "JointDistribution",
    "ProbabilityVector",
    "overlap_deviation",
]
