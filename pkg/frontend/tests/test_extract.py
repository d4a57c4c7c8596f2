"""Extraction pipeline with injected deterministic encoders.

Real pretrained weights are not fetchable in every environment, so
these tests drive the pipeline with stub encoders of the contractual
widths (768 text/image, 1024 joint) and verify the output against the
analysis package's loader — the vector file is the only contract
between the two packages.
"""

import json
import os
import zlib

import numpy as np
import pytest

import opdr
from opdr_embed import DimMismatch, SourceItem, UnreadableSource, extract
from opdr_embed.encoders import ImageEncoder, _load_rgb, _require_images, _require_text


class StubEncoder:
    """Deterministic id-seeded vectors of a fixed width."""

    def __init__(self, dim, model_id="stub", pooling=None):
        self.expected_dim = dim
        self.model_id = model_id
        self.revision = "stub-rev-0"
        self.pooling = pooling

    def encode(self, item):
        rng = np.random.default_rng(zlib.crc32(item.id.encode()))
        return rng.normal(size=self.expected_dim)


class WrongWidthEncoder(StubEncoder):
    def encode(self, item):
        return np.zeros(self.expected_dim + 1)


ITEMS = [SourceItem(id=f"item-{i}", text=f"text {i}") for i in range(3)]


class TestExtract:
    def test_rows_match_input_order(self, tmp_path):
        out = tmp_path / "v.vec"
        written = extract(ITEMS, StubEncoder(768), out)
        assert written == 3
        vs = opdr.load_vectors(out, "binary")
        assert vs.count == 3 and vs.dim == 768
        for row, item in enumerate(ITEMS):
            expected = StubEncoder(768).encode(item)
            assert np.array_equal(vs.data[row], expected)

    def test_joint_width_contract(self, tmp_path):
        out = tmp_path / "v.vec"
        extract(ITEMS, StubEncoder(1024, model_id="stub-joint"), out)
        vs = opdr.load_vectors(out, "binary")
        assert vs.dim == 1024

    def test_sidecar_manifest(self, tmp_path):
        out = tmp_path / "v.vec"
        extract(ITEMS, StubEncoder(768, pooling="cls"), out)
        manifest = json.loads((tmp_path / "v.vec.manifest.json").read_text())
        assert manifest["model"] == "stub"
        assert manifest["revision"] == "stub-rev-0"
        assert manifest["pooling"] == "cls"
        assert manifest["dim"] == 768
        assert manifest["rows"] == [
            {"index": i, "id": f"item-{i}"} for i in range(3)
        ]

    def test_zero_items_valid_empty_file(self, tmp_path):
        out = tmp_path / "empty.vec"
        assert extract([], StubEncoder(768), out) == 0
        blob = out.read_bytes()
        assert blob[:4] == b"OPDR"
        assert int.from_bytes(blob[8:16], "little") == 0
        assert int.from_bytes(blob[16:24], "little") == 768
        assert len(blob) == 32

    def test_dim_mismatch(self, tmp_path):
        with pytest.raises(DimMismatch, match="item-0"):
            extract(ITEMS, WrongWidthEncoder(768), tmp_path / "v.vec")

    def test_deterministic(self, tmp_path):
        a, b = tmp_path / "a.vec", tmp_path / "b.vec"
        extract(ITEMS, StubEncoder(768), a)
        extract(ITEMS, StubEncoder(768), b)
        assert a.read_bytes() == b.read_bytes()


class TestModalityChecks:
    def test_text_required(self):
        with pytest.raises(UnreadableSource):
            _require_text(SourceItem(id="x", images=("a.png",)))

    def test_images_required(self):
        with pytest.raises(UnreadableSource):
            _require_images(SourceItem(id="x", text="hi"))

    def test_image_decode_and_rgb(self, tmp_path):
        from PIL import Image

        p = tmp_path / "gray.png"
        Image.new("L", (4, 4), color=128).save(p)
        img = _load_rgb(p, "x")
        assert img.mode == "RGB"

    def test_corrupt_image(self, tmp_path):
        p = tmp_path / "bad.png"
        p.write_bytes(b"not an image")
        with pytest.raises(UnreadableSource, match="bad.png"):
            _load_rgb(p, "x")


@pytest.mark.skipif(
    not os.environ.get("OPDR_EMBED_REAL_MODELS"),
    reason="set OPDR_EMBED_REAL_MODELS=1 to download pretrained weights",
)
class TestRealModels:
    def test_joint_encoder_shape(self, tmp_path):
        from PIL import Image

        from opdr_embed import make_encoder

        img = tmp_path / "a.png"
        Image.new("RGB", (32, 32), color=(10, 20, 30)).save(img)
        items = [SourceItem(id="a", text="a test item", images=(str(img),))]
        out = tmp_path / "joint.vec"
        extract(items, make_encoder("joint"), out)
        vs = opdr.load_vectors(out, "binary")
        assert vs.count == 1 and vs.dim == 1024
