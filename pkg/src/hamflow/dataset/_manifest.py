# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
from __future__ import annotations

import csv
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Optional, Sequence, TypeVar, Union

from ..landscape import ScalarField, load_scalar_field
from .._errors import DataError

MANIFEST_COLUMNS = ("path", "label", "split")

TokenT = TypeVar("TokenT", bound=Enum)


class Label(str, Enum):
    FACE = "face"
    NONFACE = "nonface"

    @property
    def target(self) -> int:
        return 1 if self is Label.FACE else 0


class Split(str, Enum):
    TRAIN = "train"
    TEST = "test"


@dataclass(frozen=True)
class ManifestEntry:
    path: Path
    label: Label
    split: Split


@dataclass(frozen=True)
class Manifest:
    entries: tuple[ManifestEntry, ...]
    source: Optional[Path] = None

    def __post_init__(self) -> None:
        seen: set[Path] = set()
        for entry in self.entries:
            if entry.path in seen:
                raise DataError(f"Manifest lists '{entry.path}' more than once.")
            seen.add(entry.path)

    def __len__(self) -> int:
        return len(self.entries)

    def select(
        self, label: Optional[Label] = None, split: Optional[Split] = None
    ) -> list[ManifestEntry]:
        return [
            entry
            for entry in self.entries
            if (label is None or entry.label is label) and (split is None or entry.split is split)
        ]


def _parse_token(enum_type: type[TokenT], token: str, row: int, column: str) -> TokenT:
    try:
        return enum_type(token.strip().lower())
    except ValueError:
        choices = ", ".join(member.value for member in enum_type)
        raise DataError(f"Manifest row {row}: unknown {column} '{token}' (expected {choices}).")


def load_manifest(path: Union[str, Path]) -> Manifest:
    """
    Reads a CSV manifest with the header path,label,split. Relative image paths are resolved
    against the manifest's directory; blank lines and lines starting with '#' are skipped.
    Rows are numbered from 1, the header excluded.

    Raises:
        DataError if the file is missing or malformed, a label or split is unknown, or a
        path appears twice
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise DataError(f"Manifest '{path}' does not exist.")
    except OSError as exc:
        raise DataError(f"Cannot read manifest '{path}': {exc}")
    lines = [line for line in text.splitlines() if line.strip() and not line.startswith("#")]
    reader = csv.DictReader(lines)
    header = tuple(name.strip() for name in (reader.fieldnames or ()))
    if not set(MANIFEST_COLUMNS) <= set(header):
        raise DataError(
            f"Manifest '{path}' must have the header {','.join(MANIFEST_COLUMNS)}, got "
            f"{','.join(header) or 'nothing'}."
        )
    reader.fieldnames = list(header)
    base = path.parent
    entries = []
    seen: dict[Path, int] = {}
    for row_number, row in enumerate(reader, start=1):
        raw_path = (row.get("path") or "").strip()
        if not raw_path:
            raise DataError(f"Manifest row {row_number}: empty path.")
        image_path = Path(raw_path)
        if not image_path.is_absolute():
            image_path = base / image_path
        label = _parse_token(Label, row.get("label") or "", row_number, "label")
        split = _parse_token(Split, row.get("split") or "", row_number, "split")
        if image_path in seen:
            raise DataError(
                f"Manifest row {row_number}: duplicate path '{raw_path}' "
                f"(first listed in row {seen[image_path]})."
            )
        seen[image_path] = row_number
        entries.append(ManifestEntry(image_path, label, split))
    return Manifest(tuple(entries), source=path)


def load_images(entries: Sequence[ManifestEntry], threads: int = 1) -> list[ScalarField]:
    """
    Loads the entries' images in order, `threads` files at a time.

    Raises:
        DataError if any image is missing or unreadable
    """
    paths = [entry.path for entry in entries]
    if threads > 1 and len(paths) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(load_scalar_field, paths))
    return [load_scalar_field(image_path) for image_path in paths]
