"""Source items and the items-manifest JSON schema.

The manifest is a JSON list of objects: ``[{"id": ..., "text": ...,
"images": [...]}]``.  Each item needs at least one modality.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import BadManifest


@dataclass(frozen=True)
class SourceItem:
    id: str
    text: str | None = None
    images: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.text is None and not self.images:
            raise ValueError(f"item {self.id!r} has neither text nor images")


def load_manifest(path) -> list[SourceItem]:
    """Parse an items manifest; empty lists are allowed."""
    try:
        with open(path) as f:
            raw = json.load(f)
    except (OSError, json.JSONDecodeError) as exc:
        raise BadManifest(f"{path}: {exc}") from exc
    if not isinstance(raw, list):
        raise BadManifest(f"{path}: top-level value must be a list")
    items = []
    for i, entry in enumerate(raw):
        if not isinstance(entry, dict) or "id" not in entry:
            raise BadManifest(f"{path}: entry {i} must be an object with an 'id'")
        try:
            items.append(
                SourceItem(
                    id=str(entry["id"]),
                    text=entry.get("text"),
                    images=tuple(entry.get("images", [])),
                )
            )
        except ValueError as exc:
            raise BadManifest(f"{path}: entry {i}: {exc}") from exc
    return items


def text_from_hdf5(path) -> str:
    """Concatenate every dataset's name and contents into one string.

    Convenience for building manifests from hierarchical data files;
    requires h5py.
    """
    import h5py

    parts = []

    def visit(name, node):
        if isinstance(node, h5py.Dataset):
            parts.append(f"{name} {node[()]}")

    with h5py.File(path, "r") as f:
        f.visititems(visit)
    return " ".join(parts)
