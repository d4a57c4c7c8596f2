"""Batch extraction: SourceItems -> OPDR-VEC file + sidecar manifest.

Rows are emitted in input order; the sidecar manifest (``<out>.manifest.json``)
maps row index to item id and pins the encoder identity so every
downstream accuracy number can be traced to exact weights.
"""

from __future__ import annotations

import json
from typing import Sequence

import numpy as np

from .errors import DimMismatch
from .items import SourceItem
from .vecfile import write_vec


def extract(items: Sequence[SourceItem], encoder, out) -> int:
    """Encode every item into ``out`` (OPDR-VEC v1); returns rows written."""
    dim = encoder.expected_dim
    vectors = np.empty((len(items), dim), dtype=np.float64)
    for row, item in enumerate(items):
        vec = np.asarray(encoder.encode(item), dtype=np.float64)
        if vec.shape != (dim,):
            raise DimMismatch(
                f"item {item.id!r}: encoder emitted shape {vec.shape}, expected ({dim},)"
            )
        vectors[row] = vec
    write_vec(out, vectors)
    manifest = {
        "model": encoder.model_id,
        "revision": getattr(encoder, "revision", "unknown"),
        "pooling": getattr(encoder, "pooling", None),
        "dim": dim,
        "rows": [{"index": i, "id": item.id} for i, item in enumerate(items)],
    }
    with open(f"{out}.manifest.json", "w") as f:
        json.dump(manifest, f, indent=2)
    return len(items)
