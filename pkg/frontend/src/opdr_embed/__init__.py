"""Embedding-extraction frontend producing OPDR-VEC vector files."""

from .encoders import ImageEncoder, JointEncoder, TextEncoder, make_encoder
from .errors import (
    BadManifest,
    DimMismatch,
    EmbedError,
    ModelLoadFailure,
    UnreadableSource,
)
from .extract import extract
from .items import SourceItem, load_manifest, text_from_hdf5
from .vecfile import write_vec

__version__ = "0.1.0"
