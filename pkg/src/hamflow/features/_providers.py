# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Union

import numpy as np

from ..haar_baseline import HAAR_PROVIDER, HaarBank
from ..landscape import ScalarField
from .._errors import DataError
from ._bank import HAMILTONIAN_PROVIDER, FeatureBank
from ._matrix import FeatureProvider

COMPOSITE_PROVIDER = "composite"


@dataclass(frozen=True, eq=False)
class CompositeBank:
    """Columns of several providers over the same window, concatenated in order."""

    providers: tuple[FeatureProvider, ...]

    def __post_init__(self) -> None:
        providers = tuple(self.providers)
        if not providers:
            raise DataError("A composite bank needs at least one provider.")
        lattices = {provider.lattice for provider in providers}
        if len(lattices) != 1:
            raise DataError(f"Composite providers disagree on the window size: {lattices}.")
        object.__setattr__(self, "providers", providers)

    @property
    def lattice(self) -> tuple[int, int]:
        return self.providers[0].lattice

    @property
    def column_ids(self) -> tuple[str, ...]:
        return tuple(cid for provider in self.providers for cid in provider.column_ids)

    @property
    def column_kinds(self) -> tuple[str, ...]:
        return tuple(kind for provider in self.providers for kind in provider.column_kinds)

    @property
    def column_costs(self) -> tuple[int, ...]:
        return tuple(cost for provider in self.providers for cost in provider.column_costs)

    def evaluate(self, img: ScalarField, index: Optional[int] = None) -> np.ndarray:
        return np.concatenate([provider.evaluate(img, index) for provider in self.providers])

    def to_dict(self) -> dict[str, Any]:
        return {
            "type": COMPOSITE_PROVIDER,
            "providers": [provider.to_dict() for provider in self.providers],
        }


def provider_from_dict(data: dict[str, Any]) -> FeatureProvider:
    """
    Raises:
        DataError on an unknown or malformed provider document
    """
    if not isinstance(data, dict):
        raise DataError("A feature bank document must be a JSON object.")
    kind = data.get("type", HAMILTONIAN_PROVIDER)
    if kind == HAMILTONIAN_PROVIDER:
        return FeatureBank.from_dict(data)
    if kind == HAAR_PROVIDER:
        return HaarBank.from_dict(data)
    if kind == COMPOSITE_PROVIDER:
        return CompositeBank(tuple(provider_from_dict(item) for item in data.get("providers", [])))
    raise DataError(f"Unknown feature bank type '{kind}'.")


def write_bank_json(
    provider: FeatureProvider, path: Union[str, Path], metadata: Optional[dict[str, Any]] = None
) -> None:
    document = dict(metadata or {})
    document.update(provider.to_dict())
    Path(path).write_text(json.dumps(document, indent=1), encoding="utf-8")


def read_bank_json(path: Union[str, Path]) -> FeatureProvider:
    """
    Raises:
        DataError if the file is missing or not a feature bank
    """
    try:
        document = json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise DataError(f"Feature bank file '{path}' does not exist.")
    except (OSError, json.JSONDecodeError) as exc:
        raise DataError(f"Cannot read feature bank '{path}': {exc}")
    # Raises: DataError
    return provider_from_dict(document)
