"""
Counterexample dumps.

A candidate is written as one JSON document holding the state (same layout
as a state file), the four basis matrices as [re, im] pairs, the gap and the
stream coordinates needed to regenerate it.
"""
from pathlib import Path
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel

from src.errors import OutputError
from src.models.measurement import BasisQuadruple
from src.models.state import DensityMatrix, StateDocument
from src.utils.structured_logging import get_logger

logger = get_logger(__name__)

ComplexEntries = List[Tuple[float, float]]


def _entries(matrix: np.ndarray) -> ComplexEntries:
    return [(float(z.real), float(z.imag)) for z in np.asarray(matrix).reshape(-1)]


class CandidateDump(BaseModel):
    """Everything needed to re-verify a candidate independently"""
    kind: str
    gap: float
    qmi: float
    mi_sum: float
    master_seed: int
    dim_index: int
    sample_index: int
    family: str
    epsilon: Optional[float] = None
    lam: Optional[float] = None
    basis_label: str
    state: StateDocument
    qa: ComplexEntries
    ra: ComplexEntries
    qb: ComplexEntries
    rb: ComplexEntries


def dump_path(dump_dir: Path, kind: str, dim_a: int, dim_b: int, index: int) -> Path:
    return Path(dump_dir) / f"{kind}_{dim_a}x{dim_b}_{index}.json"


def write_dump(
    dump_dir: Path,
    kind: str,
    rho: DensityMatrix,
    bases: BasisQuadruple,
    *,
    gap: float,
    qmi: float,
    mi_sum: float,
    master_seed: int,
    dim_index: int,
    sample_index: int,
    family: str,
    epsilon: Optional[float] = None,
    lam: Optional[float] = None,
) -> Path:
    """
    Write a candidate dump and return its path.

    Raises:
        OutputError: the dump directory cannot be created or written
    """
    document = CandidateDump(
        kind=kind,
        gap=gap,
        qmi=qmi,
        mi_sum=mi_sum,
        master_seed=master_seed,
        dim_index=dim_index,
        sample_index=sample_index,
        family=family,
        epsilon=epsilon,
        lam=lam,
        basis_label=bases.label,
        state=rho.to_document(),
        qa=_entries(bases.qa.vectors),
        ra=_entries(bases.ra.vectors),
        qb=_entries(bases.qb.vectors),
        rb=_entries(bases.rb.vectors),
    )
    path = dump_path(dump_dir, kind, rho.dim_a, rho.dim_b, sample_index)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(document.model_dump_json(indent=2) + "\n", encoding="utf-8")
    except OSError as e:
        raise OutputError(f"cannot write dump {path}: {e}") from e

    logger.debug(f"Dumped {kind} candidate to {path}")
    return path


def read_dump(path: Path) -> CandidateDump:
    return CandidateDump.model_validate_json(Path(path).read_text(encoding="utf-8"))


__all__ = ["CandidateDump", "dump_path", "write_dump", "read_dump"]
