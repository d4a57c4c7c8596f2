"""Encoder backends: text (768), image (768), and joint text+image (1024).

Every encoder exposes ``expected_dim``, a pinned identity (``model_id``
and ``revision``) for the output manifest, and ``encode(item)`` mapping
one SourceItem to a float64 vector.  Inference is single-threaded and
sampling-free, so output is deterministic for fixed weights.

The heavyweight backends import torch/transformers lazily; environments
without model access get a ModelLoadFailure at construction time.
"""

from __future__ import annotations

import numpy as np

from .errors import ModelLoadFailure, UnreadableSource
from .items import SourceItem

TEXT_MODEL = "bert-base-uncased"
IMAGE_MODEL = "google/vit-base-patch16-224-in21k"
JOINT_MODEL = "openai/clip-vit-base-patch32"


def _load_rgb(path, item_id):
    from PIL import Image, UnidentifiedImageError

    try:
        with Image.open(path) as img:
            return img.convert("RGB").copy()
    except (OSError, UnidentifiedImageError) as exc:
        raise UnreadableSource(f"item {item_id!r}: cannot decode image {path}: {exc}")


def _require_text(item: SourceItem) -> str:
    if item.text is None:
        raise UnreadableSource(f"item {item.id!r} has no text for a text encoder")
    return item.text


def _require_images(item: SourceItem):
    if not item.images:
        raise UnreadableSource(f"item {item.id!r} has no images for an image encoder")
    return [_load_rgb(p, item.id) for p in item.images]


def _revision_of(model) -> str:
    return getattr(model.config, "_commit_hash", None) or "unknown"


class _TransformersBase:
    def __init__(self, loader):
        try:
            import torch

            torch.set_num_threads(1)
            self._torch = torch
            loader()
        except ModelLoadFailure:
            raise
        except Exception as exc:
            raise ModelLoadFailure(f"{self.model_id}: {exc}") from exc

    def _no_grad(self):
        return self._torch.no_grad()


class TextEncoder(_TransformersBase):
    """BERT sentence embeddings, CLS token or masked mean pooling."""

    expected_dim = 768

    def __init__(self, pooling: str = "cls", model_id: str = TEXT_MODEL):
        if pooling not in ("cls", "mean"):
            raise ValueError(f"unknown pooling {pooling!r}")
        self.pooling = pooling
        self.model_id = model_id

        def load():
            from transformers import AutoModel, AutoTokenizer

            self._tokenizer = AutoTokenizer.from_pretrained(model_id)
            self._model = AutoModel.from_pretrained(model_id).eval()
            self.revision = _revision_of(self._model)

        super().__init__(load)

    def encode(self, item: SourceItem) -> np.ndarray:
        text = _require_text(item)
        enc = self._tokenizer(text, return_tensors="pt", truncation=True, max_length=512)
        with self._no_grad():
            hidden = self._model(**enc).last_hidden_state
        if self.pooling == "cls":
            vec = hidden[0, 0]
        else:
            mask = enc["attention_mask"][0].unsqueeze(-1)
            vec = (hidden[0] * mask).sum(0) / mask.sum()
        return vec.numpy().astype(np.float64)


class ImageEncoder(_TransformersBase):
    """ViT CLS embeddings; multiple images per item are mean-pooled."""

    expected_dim = 768

    def __init__(self, model_id: str = IMAGE_MODEL):
        self.model_id = model_id

        def load():
            from transformers import AutoImageProcessor, AutoModel

            self._processor = AutoImageProcessor.from_pretrained(model_id)
            self._model = AutoModel.from_pretrained(model_id).eval()
            self.revision = _revision_of(self._model)

        super().__init__(load)

    def encode(self, item: SourceItem) -> np.ndarray:
        images = _require_images(item)
        enc = self._processor(images=images, return_tensors="pt")
        with self._no_grad():
            hidden = self._model(**enc).last_hidden_state
        return hidden[:, 0].mean(0).numpy().astype(np.float64)


class JointEncoder(_TransformersBase):
    """CLIP 512-dim text and 512-dim image features, concatenated to 1024."""

    expected_dim = 1024

    def __init__(self, model_id: str = JOINT_MODEL):
        self.model_id = model_id

        def load():
            from transformers import AutoProcessor, CLIPModel

            self._processor = AutoProcessor.from_pretrained(model_id)
            self._model = CLIPModel.from_pretrained(model_id).eval()
            self.revision = _revision_of(self._model)

        super().__init__(load)

    def encode(self, item: SourceItem) -> np.ndarray:
        text = _require_text(item)
        images = _require_images(item)
        enc_t = self._processor(text=[text], return_tensors="pt",
                                padding=True, truncation=True)
        enc_i = self._processor(images=images, return_tensors="pt")
        with self._no_grad():
            tvec = self._model.get_text_features(**enc_t)[0]
            ivec = self._model.get_image_features(**enc_i).mean(0)
        return np.concatenate(
            [tvec.numpy(), ivec.numpy()]
        ).astype(np.float64)


def make_encoder(model: str, pooling: str = "cls"):
    """Build the encoder for a CLI model name: text, image, or joint."""
    if model == "text":
        return TextEncoder(pooling=pooling)
    if model == "image":
        return ImageEncoder()
    if model == "joint":
        return JointEncoder()
    raise ValueError(f"unknown model {model!r}")
