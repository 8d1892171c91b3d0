# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from ._canonical import build_canonical
from ._manifest import (
    MANIFEST_COLUMNS,
    Label,
    Manifest,
    ManifestEntry,
    Split,
    load_images,
    load_manifest,
)
from ._patches import PatchSampler, read_patch_cache, sample_patches, write_patch_cache

__all__ = [
    "MANIFEST_COLUMNS",
    "Label",
    "Manifest",
    "ManifestEntry",
    "PatchSampler",
    "Split",
    "build_canonical",
    "load_images",
    "load_manifest",
    "read_patch_cache",
    "sample_patches",
    "write_patch_cache",
]
