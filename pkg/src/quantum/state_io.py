"""
Density-matrix documents on disk.

A state file is a JSON object with keys dim_a, dim_b and entries, the
latter a list of [re, im] pairs in row-major joint-index order.
"""
import json
import logging
from pathlib import Path
from typing import Union

from pydantic import ValidationError

from src.errors import OutputError, StateFileError
from src.models.state import DensityMatrix, StateDocument

logger = logging.getLogger(__name__)


def parse_state(text: str) -> DensityMatrix:
    """
    Parse and validate a state document.

    Raises:
        StateFileError: malformed JSON or wrong shape
        NotAState: well-formed but not a density matrix within tolerance
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise StateFileError(f"not valid JSON: {e}") from e

    try:
        document = StateDocument.model_validate(raw)
    except ValidationError as e:
        raise StateFileError(f"unexpected structure: {e.error_count()} validation error(s)",
                             context={"errors": e.errors(include_url=False)}) from e

    return document.to_density_matrix()


def read_state_file(path: Union[str, Path]) -> DensityMatrix:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise StateFileError(f"cannot read {path}: {e}") from e
    rho = parse_state(text)
    logger.debug(f"Loaded {rho.dim_a}x{rho.dim_b} state from {path}")
    return rho


def dump_state(rho: DensityMatrix) -> str:
    return rho.to_document().model_dump_json()


def write_state_file(rho: DensityMatrix, path: Union[str, Path]) -> Path:
    path = Path(path)
    try:
        path.write_text(dump_state(rho) + "\n", encoding="utf-8")
    except OSError as e:
        raise OutputError(f"cannot write {path}: {e}") from e
    return path
