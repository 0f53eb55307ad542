"""
Binary field snapshots.

Layout (little-endian): magic b"NLSF", u8 version, u8 d, u32 N, then N^d
complex values as (re, im) float64 pairs of the physical samples, row-major.
"""

import logging
import os
import struct
from pathlib import Path

import numpy as np

from .field import Field
from .grid import make_grid

logger = logging.getLogger(__name__)

MAGIC = b"NLSF"
VERSION = 1
_HEADER = struct.Struct("<4sBBI")


def encode_snapshot(field: Field) -> bytes:
    grid = field.grid
    header = _HEADER.pack(MAGIC, VERSION, grid.dim, grid.n_per_axis)
    body = field.to_physical().values.astype("<c16").tobytes(order="C")
    return header + body


def decode_snapshot(data: bytes) -> Field:
    if len(data) < _HEADER.size:
        raise ValueError("Snapshot is shorter than its header")
    magic, version, dim, n = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise ValueError(f"Not a field snapshot (magic {magic!r})")
    if version != VERSION:
        raise ValueError(f"Unsupported snapshot version {version}")
    grid = make_grid(dim, n)
    expected = _HEADER.size + 16 * grid.total_points
    if len(data) != expected:
        raise ValueError(f"Snapshot has {len(data)} bytes, expected {expected}")
    values = np.frombuffer(data, dtype="<c16", offset=_HEADER.size).astype(np.complex128)
    return Field.from_physical(grid, values.reshape(grid.shape))


def write_snapshot(path: Path | str, field: Field) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    # readers never see a partially written file
    partial = path.with_name(f".{path.name}.{os.getpid()}.tmp")
    partial.write_bytes(encode_snapshot(field))
    partial.replace(path)
    logger.info("Wrote snapshot %s (d=%d, N=%d)", path, field.grid.dim, field.grid.n_per_axis)
    return path


def read_snapshot(path: Path | str) -> Field:
    path = Path(path)
    field = decode_snapshot(path.read_bytes())
    logger.debug("Read snapshot %s", path)
    return field
