# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.

from argparse import ArgumentParser, Namespace
from dataclasses import dataclass
from pathlib import Path

from .._common import (
    HamflowCliResult,
    artifact_metadata,
    print_cli_result,
    run_config_from_args,
    write_json,
)
from ...dataset import Label, Split, build_canonical, load_manifest
from ...landscape import save_field_cache, save_png


@dataclass
class CanonResult(HamflowCliResult):
    """
    Where the canonical image was written and what it was built from.
    """

    width: int
    height: int
    images: int
    canonical: str
    preview: str
    metadata: str

    def __str__(self) -> str:
        return f"""
--- Canonical image ---

{self.message}

Size: {self.width}x{self.height}
Averaged images: {self.images}
Canonical: {self.canonical}
Preview: {self.preview}
"""


def add_canon_arguments(canon_parser: ArgumentParser) -> None:
    canon_parser.add_argument(
        "--out",
        type=Path,
        required=True,
        metavar="PATH",
        help="Where to write the canonical image cache; a PNG preview and a .meta.json "
        "sidecar are written next to it.",
    )
    canon_parser.add_argument(
        "--split",
        choices=[split.value for split in Split],
        default=Split.TRAIN.value,
        help="Which split of the manifest to average.",
    )
    canon_parser.add_argument(
        "--label",
        choices=[label.value for label in Label],
        default=Label.FACE.value,
        help="Which label of the manifest to average.",
    )


@print_cli_result
def do_canon(args: Namespace) -> HamflowCliResult:
    """
    Builds the canonical image: the pointwise mean of the selected manifest entries.
    """
    # Raises: UsageError
    config = run_config_from_args(args)
    # Raises: DataError
    manifest = load_manifest(args.manifest)
    split, label = Split(args.split), Label(args.label)
    # Raises: DataError
    canonical = build_canonical(manifest, split=split, label=label, threads=config.threads)

    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    preview = out.with_suffix(".png")
    metadata = out.with_suffix(".meta.json")
    save_field_cache(canonical, out)
    save_png(canonical, preview)
    images = len(manifest.select(label=label, split=split))
    write_json(
        metadata,
        {
            **artifact_metadata(config),
            "width": canonical.width,
            "height": canonical.height,
            "images": images,
            "split": split.value,
            "label": label.value,
        },
    )
    return CanonResult(
        status="success",
        message=f"Averaged {images} {label.value} images from the {split.value} split.",
        width=canonical.width,
        height=canonical.height,
        images=images,
        canonical=str(out),
        preview=str(preview),
        metadata=str(metadata),
    )
