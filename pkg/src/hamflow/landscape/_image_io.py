# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
from __future__ import annotations

import io
import struct
from pathlib import Path
from typing import Union

import numpy as np
import png

from ._fields import ScalarField
from .._errors import DataError

FIELD_CACHE_MAGIC = b"HAMFIELD"
_FIELD_CACHE_HEADER = struct.Struct("<8sII")
_PNG_SIGNATURE = b"\x89PNG\r\n\x1a\n"

PathLike = Union[str, Path]


def _read_bytes(path: Path) -> bytes:
    if not path.exists():
        raise DataError(f"'{str(path)}' does not exist.")
    if not path.is_file():
        raise DataError(f"'{str(path)}' is not a file.")
    try:
        return path.read_bytes()
    except OSError as exc:
        raise DataError(f"Could not open file '{str(path)}': {str(exc)}")


def _read_pnm_header(data: bytes) -> tuple[bytes, int, int, int, int]:
    """
    Parses "magic width height maxval" with '#' comments, returning those four values and the
    offset of the first raster byte.
    """
    tokens: list[bytes] = []
    pos = 0
    while len(tokens) < 4:
        while pos < len(data) and data[pos : pos + 1].isspace():
            pos += 1
        if pos >= len(data):
            raise DataError("Unsupported or corrupt image format: truncated PGM header.")
        if data[pos : pos + 1] == b"#":
            while pos < len(data) and data[pos : pos + 1] not in (b"\n", b"\r"):
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace() and data[pos : pos + 1] != b"#":
            pos += 1
        tokens.append(data[start:pos])
    # a comment may follow maxval; the line end closing it is then the delimiter
    if data[pos : pos + 1] == b"#":
        while pos < len(data) and data[pos : pos + 1] not in (b"\n", b"\r"):
            pos += 1
    if not data[pos : pos + 1].isspace():
        raise DataError("Unsupported or corrupt image format: no whitespace after PGM maxval.")
    # exactly one whitespace byte separates the header from a binary raster
    pos += 1
    magic = tokens[0]
    try:
        width, height, maxval = (int(token) for token in tokens[1:])
    except ValueError:
        raise DataError("Unsupported or corrupt image format: non-numeric PGM header.")
    if not 0 < maxval < 65536:
        raise DataError(f"Unsupported or corrupt image format: PGM maxval {maxval}.")
    return magic, width, height, maxval, pos


def _decode_pgm(data: bytes) -> np.ndarray:
    magic, width, height, maxval, offset = _read_pnm_header(data)
    count = width * height
    if magic == b"P5":
        dtype = np.dtype(">u2") if maxval > 255 else np.dtype("u1")
        # a CRLF line end counts as one delimiter only when the raster size says so
        size = count * dtype.itemsize
        if data[offset - 1 : offset + 1] == b"\r\n" and len(data) - offset == size + 1:
            offset += 1
        raster = data[offset : offset + size]
        if width <= 0 or height <= 0 or len(raster) < size:
            raise DataError("Unsupported or corrupt image format: truncated PGM raster.")
        pixels = np.frombuffer(raster, dtype=dtype).astype(np.float64)
    elif magic == b"P2":
        try:
            tokens = data[offset:].split()
            pixels = np.array([int(token) for token in tokens], dtype=np.float64)
        except ValueError:
            raise DataError("Unsupported or corrupt image format: non-numeric PGM raster.")
        if width <= 0 or height <= 0 or pixels.size < count:
            raise DataError("Unsupported or corrupt image format: truncated PGM raster.")
        pixels = pixels[:count]
    else:
        raise DataError(f"Unsupported or corrupt image format: PNM magic {magic!r}.")
    return pixels.reshape(height, width) * (255.0 / maxval)


def _decode_png(data: bytes) -> np.ndarray:
    try:
        width, height, rows, info = png.Reader(bytes=data).asDirect()
        pixels = np.vstack([np.asarray(row, dtype=np.float64) for row in rows])
    except (png.Error, ValueError) as exc:
        raise DataError(f"Unsupported or corrupt image format: {str(exc)}")
    if not info.get("greyscale", False):
        raise DataError("Unsupported image format: only greyscale PNG images are supported.")
    planes = info.get("planes", 1)
    if planes > 1:
        # grey + alpha; the alpha plane is dropped
        pixels = pixels[:, ::planes]
    return pixels.reshape(height, width) * (255.0 / (2 ** info["bitdepth"] - 1))


def _decode_field_cache(data: bytes) -> np.ndarray:
    if len(data) < _FIELD_CACHE_HEADER.size:
        raise DataError("Unsupported or corrupt image format: truncated field cache.")
    _, width, height = _FIELD_CACHE_HEADER.unpack_from(data)
    raster = data[_FIELD_CACHE_HEADER.size :]
    if len(raster) != width * height * 8:
        raise DataError("Unsupported or corrupt image format: field cache size mismatch.")
    return np.frombuffer(raster, dtype="<f8").astype(np.float64).reshape(height, width)


def load_scalar_field(path: PathLike) -> ScalarField:
    """
    Load a binary/ASCII PGM, an 8-bit greyscale PNG, or a cached field as a ScalarField
    with intensities mapped to [0, 255].

    Raises:
        DataError if the file is unreadable, of an unsupported format, or degenerate
    """
    path = Path(path)
    # Raises: DataError
    data = _read_bytes(path)
    if data.startswith(FIELD_CACHE_MAGIC):
        values = _decode_field_cache(data)
    elif data.startswith(_PNG_SIGNATURE):
        values = _decode_png(data)
    elif data[:2] in (b"P5", b"P2"):
        values = _decode_pgm(data)
    else:
        raise DataError(f"Unsupported or corrupt image format: '{str(path)}'.")
    # Raises: DataError
    return ScalarField(values)


def save_field_cache(field: ScalarField, path: PathLike) -> None:
    """Little-endian flat binary: 8-byte magic, u32 width, u32 height, f64 values row-major."""
    header = _FIELD_CACHE_HEADER.pack(FIELD_CACHE_MAGIC, field.width, field.height)
    Path(path).write_bytes(header + field.values.astype("<f8").tobytes(order="C"))


def _to_bytes_raster(field: ScalarField, rescale: bool) -> np.ndarray:
    values = field.values
    if rescale:
        low, high = float(values.min()), float(values.max())
        values = (values - low) * (255.0 / (high - low)) if high > low else values * 0.0
    return np.clip(np.rint(values), 0, 255).astype(np.uint8)


def save_pgm(field: ScalarField, path: PathLike) -> None:
    raster = _to_bytes_raster(field, rescale=False)
    header = f"P5\n{field.width} {field.height}\n255\n".encode("ascii")
    Path(path).write_bytes(header + raster.tobytes())


def encode_png(field: ScalarField, rescale: bool = False) -> bytes:
    """8-bit greyscale PNG bytes of the field, optionally stretched to the full range."""
    raster = _to_bytes_raster(field, rescale)
    buffer = io.BytesIO()
    writer = png.Writer(width=field.width, height=field.height, greyscale=True, bitdepth=8)
    writer.write(buffer, raster.tolist())
    return buffer.getvalue()


def save_png(field: ScalarField, path: PathLike, rescale: bool = False) -> None:
    Path(path).write_bytes(encode_png(field, rescale))
