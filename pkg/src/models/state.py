"""
State models
"""
from enum import Enum
from typing import Any, List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.errors import NotAState, ParamOutOfRange, StateFileError
from src.linalg.core import ComplexMatrix, eigvalsh, hermitian_deviation, hermitian_part

STATE_TOL = 1e-9


class DensityMatrix(BaseModel):
    """
    Trace-one positive semidefinite operator on C^dim_a (x) C^dim_b.

    Construction validates the state and stores the Hermitian part of the
    input as a read-only array; invalid input raises NotAState.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    matrix: np.ndarray
    dim_a: int = Field(ge=1)
    dim_b: int = Field(ge=1)

    @field_validator("matrix", mode="before")
    @classmethod
    def coerce_matrix(cls, v: Any) -> np.ndarray:
        try:
            m = np.array(v, dtype=np.complex128)
        except (TypeError, ValueError) as e:
            raise NotAState(f"matrix is not numeric: {e}") from e
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise NotAState(f"density matrix must be square, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise NotAState("density matrix has non-finite entries")

        deviation = hermitian_deviation(m)
        if deviation > STATE_TOL:
            raise NotAState(f"not Hermitian: ||rho - rho^dagger||_max = {deviation:.3e}")

        stored = hermitian_part(m)
        stored.setflags(write=False)
        return stored

    @model_validator(mode="after")
    def validate_state(self) -> "DensityMatrix":
        side = self.dim_a * self.dim_b
        m = self.matrix
        if m.shape != (side, side):
            raise NotAState(f"matrix side {m.shape[0]} != dim_a*dim_b = {side}")

        tr = np.trace(m).real
        if abs(tr - 1.0) > STATE_TOL:
            raise NotAState(f"trace {tr:.12f} differs from 1")

        lowest = float(eigvalsh(m)[0])
        if lowest < -STATE_TOL:
            raise NotAState(f"negative eigenvalue {lowest:.3e}")
        return self

    @property
    def side(self) -> int:
        return self.dim_a * self.dim_b

    def purity(self) -> float:
        return float(np.real(np.trace(self.matrix @ self.matrix)))

    def spectrum(self) -> np.ndarray:
        return eigvalsh(self.matrix)

    def to_document(self) -> "StateDocument":
        flat = self.matrix.reshape(-1)
        return StateDocument(
            dim_a=self.dim_a,
            dim_b=self.dim_b,
            entries=[(float(z.real), float(z.imag)) for z in flat],
        )


class StateDocument(BaseModel):
    """On-disk density matrix: entries as [re, im] pairs in row-major joint order"""
    model_config = ConfigDict(extra="forbid")

    dim_a: int
    dim_b: int
    entries: List[Tuple[float, float]]

    @model_validator(mode="after")
    def validate_shape(self) -> "StateDocument":
        if self.dim_a < 1 or self.dim_b < 1:
            raise StateFileError(f"dimensions must be positive, got {self.dim_a}x{self.dim_b}")
        expected = (self.dim_a * self.dim_b) ** 2
        if len(self.entries) != expected:
            raise StateFileError(
                f"{self.dim_a}x{self.dim_b} state needs {expected} entries, got {len(self.entries)}"
            )
        return self

    def to_density_matrix(self) -> DensityMatrix:
        side = self.dim_a * self.dim_b
        values = np.array([complex(re, im) for re, im in self.entries], dtype=np.complex128)
        return DensityMatrix(matrix=values.reshape(side, side), dim_a=self.dim_a, dim_b=self.dim_b)


class WernerParams(BaseModel):
    """Asymmetric Werner parameters: mixing weight p and asymmetry eta"""
    model_config = ConfigDict(frozen=True)

    p: float
    eta: float

    @model_validator(mode="after")
    def validate_unit_interval(self) -> "WernerParams":
        for name in ("p", "eta"):
            value = getattr(self, name)
            if not (0.0 <= value <= 1.0):
                raise ParamOutOfRange(f"{name}={value} outside [0, 1]")
        return self


class BoundaryFamily(str, Enum):
    """Mixture families known to saturate the CQC relation"""
    BELL_WITH_MCM = "bell-with-mcm"
    MCM_WITH_MM = "mcm-with-mm"


class BoundaryMixtureSpec(BaseModel):
    """lambda * first + (1 - lambda) * second for the named family at local dimension n"""
    family: BoundaryFamily
    lam: float = Field(alias="lambda")
    n: int

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    @model_validator(mode="after")
    def validate_ranges(self) -> "BoundaryMixtureSpec":
        if not (0.0 <= self.lam <= 1.0):
            raise ParamOutOfRange(f"lambda={self.lam} outside [0, 1]")
        if self.n < 2:
            raise ParamOutOfRange(f"local dimension n={self.n} must be at least 2")
        return self


__all__ = [
    "STATE_TOL",
    "ComplexMatrix",
    "DensityMatrix",
    "StateDocument",
    "WernerParams",
    "BoundaryFamily",
    "BoundaryMixtureSpec",
]
