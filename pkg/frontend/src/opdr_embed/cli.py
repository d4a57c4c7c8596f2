"""opdr-embed: encode an items manifest into an OPDR-VEC vector file."""

from __future__ import annotations

import argparse
import sys

from .encoders import make_encoder
from .errors import EmbedError
from .extract import extract
from .items import load_manifest


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="opdr-embed",
        description="Encode multimodal items into an OPDR-VEC vector file",
    )
    parser.add_argument("--model", choices=["text", "image", "joint"], required=True,
                        help="text/image encoders emit 768 dims, joint emits 1024")
    parser.add_argument("--manifest", required=True,
                        help='items JSON: [{"id":..., "text":..., "images":[...]}]')
    parser.add_argument("--out", required=True, help="output OPDR-VEC file")
    parser.add_argument("--pooling", choices=["cls", "mean"], default="cls",
                        help="text token pooling (default: cls)")
    args = parser.parse_args(argv)

    try:
        items = load_manifest(args.manifest)
        encoder = make_encoder(args.model, pooling=args.pooling)
        written = extract(items, encoder, args.out)
    except (EmbedError, OSError) as exc:
        print(f"opdr-embed: error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {written} vectors to {args.out}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
