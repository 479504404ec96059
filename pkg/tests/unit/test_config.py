"""
Unit tests for environment-driven settings
"""
import pytest
from pydantic import ValidationError

from src.config import Settings


pytestmark = pytest.mark.unit


def _settings(**values):
    return Settings(_env_file=None, **values)


class TestSettings:
    """Defaults and validation"""

    def test_defaults(self):
        s = _settings()
        assert s.chunk_size == 500
        assert s.violation_threshold == -1e-7
        assert s.pure_violation_threshold == -1e-9
        assert (s.epsilon_low, s.epsilon_high) == (1e-3, 1.0)
        assert s.lambda_grid == 101

    def test_env_prefix(self, monkeypatch):
        monkeypatch.setenv("CQC_CHUNK_SIZE", "64")
        monkeypatch.setenv("CQC_LOG_FORMAT", " JSON ")
        s = _settings()
        assert s.chunk_size == 64
        assert s.log_format == "json"

    @pytest.mark.parametrize(
        "values",
        [
            {"log_format": "xml"},
            {"workers": 0},
            {"chunk_size": 0},
            {"lambda_grid": 1},
            {"epsilon_low": 0.0},
            {"epsilon_low": 0.5, "epsilon_high": 0.1},
            {"violation_threshold": 1e-7},
        ],
    )
    def test_invalid(self, values):
        with pytest.raises(ValidationError):
            _settings(**values)

    def test_production_requires_dump_dir(self, tmp_path):
        with pytest.raises(ValidationError, match="CQC_DUMP_DIR"):
            _settings(environment="production")
        assert _settings(environment="production", dump_dir=tmp_path).dump_dir == tmp_path

    def test_samples_for(self):
        s = _settings(small_dim_samples=7, large_dim_samples=3)
        assert s.samples_for(3, 3) == 7
        assert s.samples_for(2, 4) == 3
        assert s.samples_for(2, 5) == 3
        assert _settings(small_side_max=4, small_dim_samples=7).samples_for(2, 4) == 7
