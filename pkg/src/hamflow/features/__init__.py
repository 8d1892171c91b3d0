# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from ._bank import HAMILTONIAN_PROVIDER, FeatureBank, build_feature_bank, count_templates
from ._matrix import FeatureMatrix, FeatureProvider, feature_matrix
from ._providers import (
    COMPOSITE_PROVIDER,
    CompositeBank,
    provider_from_dict,
    read_bank_json,
    write_bank_json,
)
from ._templates import (
    DirectionMode,
    FeatureKind,
    FeatureTemplate,
    ImageDynamics,
    check_lattice,
    eval_conley,
    eval_density,
    eval_direction,
    eval_poincare,
)

__all__ = [
    "COMPOSITE_PROVIDER",
    "HAMILTONIAN_PROVIDER",
    "CompositeBank",
    "DirectionMode",
    "FeatureBank",
    "FeatureKind",
    "FeatureMatrix",
    "FeatureProvider",
    "FeatureTemplate",
    "ImageDynamics",
    "build_feature_bank",
    "check_lattice",
    "count_templates",
    "eval_conley",
    "eval_density",
    "eval_direction",
    "eval_poincare",
    "feature_matrix",
    "provider_from_dict",
    "read_bank_json",
    "write_bank_json",
]
