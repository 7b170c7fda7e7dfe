from __future__ import annotations

import json

import pytest

from pydantic import ValidationError

from jetflow.config import CONFIG_FILE, DEFAULTS, JetflowConfig, resolve_config


class TestJetflowConfig:
    """Test the JetflowConfig model."""

    def test_defaults(self):
        assert DEFAULTS.default_cap == 16
        assert DEFAULTS.numeric_dps == 30
        assert DEFAULTS.acceptance_tolerance == 1e-9
        assert DEFAULTS.ptx_tolerance == 1e-12

    def test_save_and_load(self, tmp_path):
        config = JetflowConfig(default_cap=8, parallel_workers=2)
        path = config.save(tmp_path / "nested" / CONFIG_FILE)

        assert path.exists()
        assert JetflowConfig.load(path) == config

    def test_load_missing(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            JetflowConfig.load(tmp_path / CONFIG_FILE)

    def test_precision_floor(self):
        with pytest.raises(ValidationError):
            JetflowConfig(numeric_dps=10)

    def test_partial_file(self, tmp_path):
        path = tmp_path / CONFIG_FILE
        path.write_text(json.dumps({"branch_search_radius": 2}))

        config = JetflowConfig.load(path)
        assert config.branch_search_radius == 2
        assert config.default_cap == 16


class TestResolveConfig:
    """Test the resolve_config lookup order."""

    def test_explicit_path(self, tmp_path):
        path = JetflowConfig(default_cap=3).save(tmp_path / "a.json")
        assert resolve_config(path).default_cap == 3

    def test_current_directory(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        JetflowConfig(default_cap=4).save(tmp_path / CONFIG_FILE)
        assert resolve_config().default_cap == 4

    def test_fallback(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        assert resolve_config() == JetflowConfig()
