"""Writer for the OPDR-VEC v1 binary format.

32-byte little-endian header: magic ``OPDR``, u32 version = 1, u64
count, u64 dim, u8 dtype tag (1 = float64), 7 zero bytes; then the
row-major float64 payload.  This mirrors the format the analysis
package reads; the file is the only contract between the two.
"""

import struct

import numpy as np

MAGIC = b"OPDR"
VERSION = 1
_HEADER = struct.Struct("<4sIQQB7x")
DTYPE_FLOAT64 = 1


def write_vec(path, data: np.ndarray) -> None:
    """Write an m x d float64 matrix (m may be 0) as OPDR-VEC v1."""
    data = np.ascontiguousarray(data, dtype="<f8")
    count, dim = data.shape
    with open(path, "wb") as f:
        f.write(_HEADER.pack(MAGIC, VERSION, count, dim, DTYPE_FLOAT64))
        f.write(data.tobytes())
