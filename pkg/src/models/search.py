"""
Search harness models
"""
from enum import Enum
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.config import settings
from src.errors import ConfigInvalid, InternalConsistencyError

SEED_LIMIT = 2**64


class SearchMode(str, Enum):
    """Experiment families"""
    UNIFORM = "uniform"
    BOUNDARY_PERTURB = "boundary-perturb"
    PURE_STATES = "pure-states"


class SearchConfig(BaseModel):
    """
    Complete, immutable description of a search run.

    Records are a pure function of this object; the worker count only
    changes throughput.
    """
    model_config = ConfigDict(frozen=True)

    dims: List[Tuple[int, int]]
    samples_per_dim: Optional[int] = None  # None: desk-scale default per dimension
    master_seed: int = Field(default_factory=lambda: settings.master_seed)
    mode: SearchMode = SearchMode.UNIFORM
    epsilon_range: Tuple[float, float] = Field(
        default_factory=lambda: (settings.epsilon_low, settings.epsilon_high)
    )
    lambda_grid: int = Field(default_factory=lambda: settings.lambda_grid)
    workers: int = Field(default_factory=lambda: settings.workers)
    chunk_size: int = Field(default_factory=lambda: settings.chunk_size)
    dump_dir: Optional[Path] = Field(default_factory=lambda: settings.dump_dir)

    @field_validator("dims")
    @classmethod
    def validate_dims(cls, v: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
        if not v:
            raise ConfigInvalid("at least one dimension pair is required")
        for dim_a, dim_b in v:
            if dim_a < 2 or dim_b < 2:
                raise ConfigInvalid(f"dimension pair {dim_a}x{dim_b} is below 2x2")
        if len(set(v)) != len(v):
            repeated = sorted({f"{a}x{b}" for a, b in v if v.count((a, b)) > 1})
            raise ConfigInvalid(f"dimension pairs listed more than once: {', '.join(repeated)}")
        return v

    @model_validator(mode="after")
    def validate_ranges(self) -> "SearchConfig":
        if self.samples_per_dim is not None and self.samples_per_dim < 1:
            raise ConfigInvalid(f"samples_per_dim={self.samples_per_dim} must be at least 1")
        low, high = self.epsilon_range
        if not (0 < low < high):
            raise ConfigInvalid(f"epsilon range ({low}, {high}) must satisfy 0 < low < high")
        if self.lambda_grid < 2:
            raise ConfigInvalid(f"lambda_grid={self.lambda_grid} must be at least 2")
        if self.workers < 1 or self.chunk_size < 1:
            raise ConfigInvalid("workers and chunk_size must be at least 1")
        if not (0 <= self.master_seed < SEED_LIMIT):
            raise ConfigInvalid(f"master_seed {self.master_seed} is not a 64-bit unsigned integer")
        return self

    def samples_for(self, dim_a: int, dim_b: int) -> int:
        if self.samples_per_dim is not None:
            return self.samples_per_dim
        return settings.samples_for(dim_a, dim_b)


class SampleRecord(BaseModel):
    """One evaluated sample: scatter coordinates plus diagnostics"""
    model_config = ConfigDict(frozen=True)

    dim_a: int
    dim_b: int
    index: int
    family: str
    mi_sum: float
    qmi: float
    gap: float
    residual_a: Optional[float] = None
    residual_b: Optional[float] = None
    epsilon: Optional[float] = None
    lam: Optional[float] = None
    entangled_witness: bool = False
    witness_sound: bool = True
    steering_witness: bool = False

    @model_validator(mode="after")
    def validate_gap(self) -> "SampleRecord":
        if abs(self.gap - (self.qmi - self.mi_sum)) > 1e-12:
            raise InternalConsistencyError(f"record {self.index}: gap != qmi - mi_sum")
        return self

    @property
    def dim_key(self) -> str:
        return f"{self.dim_a}x{self.dim_b}"


class WernerSweepRecord(SampleRecord):
    """Sweep row for the asymmetric Werner family"""
    eta: float
    berta_bound: float


class DimSummary(BaseModel):
    """Aggregate over the records of one dimension pair; merge is associative"""
    dim_a: int
    dim_b: int
    samples: int = 0
    min_gap: float = float("inf")
    max_qmi: float = float("-inf")
    counterexamples: int = 0
    noise_negatives: int = 0
    violations: int = 0
    residual_sum: float = 0.0
    residual_count: int = 0
    min_residual_a: float = float("inf")
    min_residual_b: float = float("inf")
    witness_positive: int = 0
    witness_unsound: int = 0

    @property
    def dim_key(self) -> str:
        return f"{self.dim_a}x{self.dim_b}"

    @property
    def mean_residual_a(self) -> Optional[float]:
        if self.residual_count == 0:
            return None
        return self.residual_sum / self.residual_count

    def add(
        self,
        record: SampleRecord,
        violation_threshold: float,
        pure_threshold: Optional[float] = None,
    ) -> None:
        self.samples += 1
        self.min_gap = min(self.min_gap, record.gap)
        self.max_qmi = max(self.max_qmi, record.qmi)
        if record.gap < violation_threshold:
            self.counterexamples += 1
        elif record.gap < 0.0:
            self.noise_negatives += 1
        if pure_threshold is not None and record.gap < pure_threshold:
            self.violations += 1
        if record.residual_a is not None:
            self.residual_sum += record.residual_a
            self.residual_count += 1
            self.min_residual_a = min(self.min_residual_a, record.residual_a)
        if record.residual_b is not None:
            self.min_residual_b = min(self.min_residual_b, record.residual_b)
        if record.entangled_witness:
            self.witness_positive += 1
            if not record.witness_sound:
                self.witness_unsound += 1

    def merge(self, other: "DimSummary") -> "DimSummary":
        return DimSummary(
            dim_a=self.dim_a,
            dim_b=self.dim_b,
            samples=self.samples + other.samples,
            min_gap=min(self.min_gap, other.min_gap),
            max_qmi=max(self.max_qmi, other.max_qmi),
            counterexamples=self.counterexamples + other.counterexamples,
            noise_negatives=self.noise_negatives + other.noise_negatives,
            violations=self.violations + other.violations,
            residual_sum=self.residual_sum + other.residual_sum,
            residual_count=self.residual_count + other.residual_count,
            min_residual_a=min(self.min_residual_a, other.min_residual_a),
            min_residual_b=min(self.min_residual_b, other.min_residual_b),
            witness_positive=self.witness_positive + other.witness_positive,
            witness_unsound=self.witness_unsound + other.witness_unsound,
        )


class SearchSummary(BaseModel):
    """Run-level summary; per_dim preserves configuration order"""
    mode: SearchMode
    master_seed: int
    basis_label: str
    sampling_measure: str
    per_dim: Dict[str, DimSummary] = Field(default_factory=dict)
    wall_clock_seconds: float = 0.0

    @property
    def counterexamples(self) -> int:
        return sum(d.counterexamples for d in self.per_dim.values())

    @property
    def violations(self) -> int:
        return sum(d.violations for d in self.per_dim.values())

    @property
    def min_gap(self) -> float:
        return min((d.min_gap for d in self.per_dim.values()), default=float("inf"))

    def merge_dim(self, partial: DimSummary) -> None:
        existing = self.per_dim.get(partial.dim_key)
        self.per_dim[partial.dim_key] = existing.merge(partial) if existing else partial


__all__ = [
    "SearchMode",
    "SearchConfig",
    "SampleRecord",
    "WernerSweepRecord",
    "DimSummary",
    "SearchSummary",
]
