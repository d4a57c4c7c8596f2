"""Vector-set container and file I/O.

Two on-disk formats are supported:

* CSV — an optional leading ``#`` comment line, then one row of
  comma-separated decimal floats per point.  No id column.
* OPDR-VEC v1 binary — a 32-byte little-endian header (magic ``OPDR``,
  u32 version = 1, u64 count, u64 dim, u8 dtype tag, 7 zero bytes)
  followed by the row-major payload.

All data is held as float64 internally; float32 payloads are widened on
load.  Row order in the file defines point identity.
"""

from __future__ import annotations

import os
import struct
import tempfile
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    EmptyFile,
    InconsistentRowWidth,
    IoWrite,
    MalformedHeader,
    NonFiniteValue,
)

MAGIC = b"OPDR"
VERSION = 1
_HEADER = struct.Struct("<4sIQQB7x")  # magic, version, count, dim, dtype tag

DTYPE_FLOAT32 = 0
DTYPE_FLOAT64 = 1


@dataclass(frozen=True)
class VectorSet:
    """An ordered, immutable collection of points with stable integer ids.

    ``data`` is an m x d float64 array; ``ids`` defaults to 0..m-1 and is
    preserved by every operation that does not add or remove points.
    """

    data: np.ndarray
    ids: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        data = np.asarray(self.data, dtype=np.float64)
        if data.ndim != 2:
            raise ValueError(f"expected a 2-D array, got shape {data.shape}")
        if data.shape[0] < 1 or data.shape[1] < 1:
            raise ValueError(f"need at least one point and one dimension, got {data.shape}")
        if not np.all(np.isfinite(data)):
            bad = int(np.argwhere(~np.isfinite(data).all(axis=1))[0, 0])
            raise NonFiniteValue(f"non-finite value in row {bad}")
        data = data.copy()
        data.setflags(write=False)
        object.__setattr__(self, "data", data)

        ids = self.ids
        if ids is None:
            ids = np.arange(data.shape[0], dtype=np.int64)
        else:
            ids = np.asarray(ids, dtype=np.int64)
            if ids.shape != (data.shape[0],):
                raise ValueError("ids must have one entry per row")
            if np.any(ids < 0):
                raise ValueError("ids must be non-negative")
            if len(np.unique(ids)) != len(ids):
                raise ValueError("ids must be unique")
        ids = ids.copy()
        ids.setflags(write=False)
        object.__setattr__(self, "ids", ids)

    @property
    def count(self) -> int:
        return self.data.shape[0]

    @property
    def dim(self) -> int:
        return self.data.shape[1]


def _load_csv(path) -> VectorSet:
    rows = []
    width = None
    with open(path, "r", encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            if lineno == 1 and line.startswith("#"):
                continue
            fields = line.split(",")
            if width is None:
                width = len(fields)
            elif len(fields) != width:
                raise InconsistentRowWidth(
                    f"row {lineno} has {len(fields)} columns, expected {width}"
                )
            try:
                values = [float(x) for x in fields]
            except ValueError as exc:
                raise InconsistentRowWidth(f"row {lineno}: {exc}") from exc
            if not all(np.isfinite(values)):
                raise NonFiniteValue(f"non-finite value in row {lineno}")
            rows.append(values)
    if not rows:
        raise EmptyFile(f"{path}: no data rows")
    return VectorSet(np.asarray(rows, dtype=np.float64))


def _load_binary(path) -> VectorSet:
    with open(path, "rb") as f:
        header = f.read(_HEADER.size)
        if len(header) < _HEADER.size:
            raise MalformedHeader(f"{path}: header truncated at byte {len(header)}")
        magic, version, count, dim, tag = _HEADER.unpack(header)
        if magic != MAGIC:
            raise MalformedHeader(f"{path}: bad magic {magic!r} at byte 0")
        if version != VERSION:
            raise MalformedHeader(f"{path}: unsupported version {version} at byte 4")
        if tag == DTYPE_FLOAT32:
            dtype = np.dtype("<f4")
        elif tag == DTYPE_FLOAT64:
            dtype = np.dtype("<f8")
        else:
            raise MalformedHeader(f"{path}: unknown dtype tag {tag} at byte 24")
        if count < 1 or dim < 1:
            raise EmptyFile(f"{path}: header declares count={count}, dim={dim}")
        expected = count * dim * dtype.itemsize
        payload = f.read(expected)
        if len(payload) != expected:
            raise MalformedHeader(
                f"{path}: payload truncated at byte {_HEADER.size + len(payload)}"
            )
    data = np.frombuffer(payload, dtype=dtype).reshape(count, dim).astype(np.float64)
    if not np.all(np.isfinite(data)):
        bad = int(np.argwhere(~np.isfinite(data).all(axis=1))[0, 0])
        raise NonFiniteValue(f"{path}: non-finite value in row {bad}")
    return VectorSet(data)


def load_vectors(path, format: str) -> VectorSet:
    """Load a vector set from ``path`` in the given format (csv|binary)."""
    if format == "csv":
        return _load_csv(path)
    if format == "binary":
        return _load_binary(path)
    raise ValueError(f"unknown format {format!r}")


def _atomic_write(path, write_fn, mode: str):
    """Write via a temp file in the target directory, rename on success."""
    directory = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".opdr-tmp-")
    except OSError as exc:
        raise IoWrite(f"{path}: {exc}") from exc
    try:
        with os.fdopen(fd, mode) as f:
            write_fn(f)
        os.replace(tmp, path)
    except OSError as exc:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise IoWrite(f"{path}: {exc}") from exc


def save_vectors(vs: VectorSet, path, format: str) -> None:
    """Write ``vs`` to ``path``; binary float64 round-trips bit-exactly."""
    if format == "csv":

        def write_csv(f):
            for row in vs.data:
                f.write(",".join(f"{v:.17g}" for v in row) + "\n")

        _atomic_write(path, write_csv, "w")
    elif format == "binary":

        def write_bin(f):
            f.write(_HEADER.pack(MAGIC, VERSION, vs.count, vs.dim, DTYPE_FLOAT64))
            f.write(np.ascontiguousarray(vs.data, dtype="<f8").tobytes())

        _atomic_write(path, write_bin, "wb")
    else:
        raise ValueError(f"unknown format {format!r}")


def sniff_format(path) -> str:
    """Return "binary" if the file starts with the OPDR magic, else "csv"."""
    with open(path, "rb") as f:
        return "binary" if f.read(4) == MAGIC else "csv"
