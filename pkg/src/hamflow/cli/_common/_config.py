# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
from __future__ import annotations

import hashlib
import json
import re
from pathlib import Path
from typing import Any, Literal, Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ... import __version__
from ..._errors import HamflowError
from ...landscape import EPS_STATIONARY

_KEY_VALUE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(.*)$")


class UsageError(HamflowError):
    """The command line or the run configuration is invalid."""


class RunConfig(BaseModel):
    """Every tunable of a run. All fields except `threads` feed the config hash."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    min_orbit_len: int = Field(default=8, ge=1)
    max_orbit_len: Optional[int] = Field(default=None, ge=2)
    eps_stationary: float = Field(default=EPS_STATIONARY, gt=0)
    smoothing_sigma: float = Field(default=0.0, ge=0)
    direction_mode: Literal["wrapped", "raw"] = "wrapped"
    rounds: int = Field(default=20, ge=1)
    haar_target_count: int = Field(default=27000, ge=1)
    threads: int = Field(default=1, ge=1)
    seed: int = Field(default=0, ge=0)
    scale_factor: float = Field(default=1.25, gt=1)
    window_stride: int = Field(default=4, ge=1)
    nms_iou: float = Field(default=0.3, gt=0, le=1)
    normalize_windows: bool = False
    negative_patches: int = Field(default=0, ge=0)

    def config_hash(self) -> str:
        """First 16 hex digits of SHA-256 over the sorted JSON of every field but `threads`."""
        payload = json.dumps(self.model_dump(exclude={"threads"}), sort_keys=True)
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]

    def with_overrides(self, **overrides: Any) -> RunConfig:
        """
        Raises:
            UsageError if an override is out of range
        """
        updates = {key: value for key, value in overrides.items() if value is not None}
        return _validate({**self.model_dump(), **updates}, "command line")

    def bank_options(self) -> dict[str, Any]:
        """Keyword arguments for building a streamline feature bank."""
        return {
            "min_orbit_len": self.min_orbit_len,
            "max_orbit_len": self.max_orbit_len,
            "eps_stationary": self.eps_stationary,
            "smoothing_sigma": self.smoothing_sigma,
            "direction_mode": self.direction_mode,
        }


def _validate(values: dict[str, Any], source: str) -> RunConfig:
    try:
        return RunConfig.model_validate(values)
    except ValidationError as exc:
        problems = "; ".join(
            f"{'.'.join(str(part) for part in error['loc'])}: {error['msg']}"
            for error in exc.errors()
        )
        raise UsageError(f"Invalid configuration from {source}: {problems}")


def _parse_key_value_lines(text: str, path: Path) -> dict[str, Any]:
    values: dict[str, Any] = {}
    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        match = _KEY_VALUE.match(line)
        if not match:
            raise UsageError(
                f"Config file '{path}' line {number}: expected 'key = value', got '{raw_line}'."
            )
        key, raw_value = match[1], match[2].strip()
        try:
            values[key] = json.loads(raw_value)
        except json.JSONDecodeError:
            values[key] = raw_value.strip("'\"")
    return values


def read_config_file(path: Union[str, Path]) -> dict[str, Any]:
    """
    Reads a JSON (.json), YAML (.yaml / .yml) or `key = value` config file.

    Raises:
        UsageError if the file is missing or malformed
    """
    path = Path(path).expanduser()
    if not path.is_file():
        raise UsageError(f"Config file '{path}' does not exist.")
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"Could not open config file '{path}': {exc}")
    try:
        if path.suffix.lower() == ".json":
            values = json.loads(text)
        elif path.suffix.lower() in (".yaml", ".yml"):
            values = yaml.safe_load(text) or {}
        else:
            values = _parse_key_value_lines(text, path)
    except (yaml.YAMLError, json.JSONDecodeError) as exc:
        raise UsageError(f"Config file '{path}' is formatted incorrectly: {exc}")
    if not isinstance(values, dict):
        raise UsageError(f"Config file '{path}' must contain a mapping of settings.")
    return values


def load_run_config(path: Optional[Union[str, Path]] = None, **overrides: Any) -> RunConfig:
    """
    Defaults, then the config file, then non-None overrides from the command line.

    Raises:
        UsageError on an unreadable file or out-of-range values
    """
    values = read_config_file(path) if path is not None else {}
    config = _validate(values, f"'{path}'" if path is not None else "defaults")
    return config.with_overrides(**overrides)


def artifact_metadata(config: RunConfig) -> dict[str, Any]:
    return {"tool_version": __version__, "config_hash": config.config_hash()}


def artifact_comment(config: RunConfig) -> str:
    """Provenance line for CSV and SVG artifacts."""
    return f"hamflow {__version__} config={config.config_hash()}"
