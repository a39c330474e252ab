"""
Binary serialization of compression sets.

All integers and floats are little-endian. See FORMAT.md for the layout.
The CRC32 trailer covers every preceding byte and is checked before
anything else is parsed.
"""

import struct
import zlib
from typing import Tuple

import numpy as np

from sckit.sckit_core.domain import TaskKind
from sckit.sckit_core.exceptions import DecodeError, InvalidArgumentError, SCKitError

from .scheme import FORMAT_VERSION, CompressionSet, SchemeMeta
from .side_info import SideInfo

MAGIC = b"MCSC"

_HEADER = struct.Struct("<4sHBdd")  # magic, version, task, eta, gamma
_U16 = struct.Struct("<H")
_U32 = struct.Struct("<I")
_COUNTS = struct.Struct("<IIH")  # n, k, dim


def _record_dtype(dim: int) -> np.dtype:
    return np.dtype([("index", "<u4"), ("coords", "<f8", (dim,)), ("label", "<f8")])


def serialize(cs: CompressionSet) -> bytes:
    """
    Encode a compression set as bytes.

    Raises:
        InvalidArgumentError: If a field does not fit the format
    """
    if cs.n_groups < 1 or any(len(g) == 0 for g in cs.groups):
        raise InvalidArgumentError("cannot serialize a compression set with empty groups")
    erm_id = cs.meta.erm_id.encode("utf-8")
    if len(erm_id) > 0xFFFF:
        raise InvalidArgumentError("ERM identifier is too long")
    if cs.dim > 0xFFFF or cs.k > 0xFFFFFFFF or cs.indices[-1] > 0xFFFFFFFF:
        raise InvalidArgumentError("compression set is too large for the format")

    records = np.zeros(cs.k, dtype=_record_dtype(cs.dim))
    records["index"] = cs.indices
    records["coords"] = cs.points
    records["label"] = cs.labels

    parts = [
        _HEADER.pack(MAGIC, cs.meta.version, cs.meta.task.code, cs.meta.eta, cs.meta.gamma),
        _U16.pack(len(erm_id)),
        erm_id,
        _COUNTS.pack(cs.n_groups, cs.k, cs.dim),
        records.tobytes(),
        _U32.pack(cs.side_info.bit_length),
        cs.side_info.to_bytes(),
    ]
    body = b"".join(parts)
    return body + _U32.pack(zlib.crc32(body))


class _Reader:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def take(self, size: int) -> bytes:
        if size < 0 or self.pos + size > len(self.data):
            raise DecodeError("unexpected end of data")
        chunk = self.data[self.pos : self.pos + size]
        self.pos += size
        return chunk

    def unpack(self, fmt: struct.Struct) -> Tuple:
        return fmt.unpack(self.take(fmt.size))


def deserialize(data: bytes) -> CompressionSet:
    """
    Decode bytes produced by ``serialize``.

    Raises:
        DecodeError: On a checksum mismatch, truncation, unsupported version
            or any inconsistency in the decoded fields
    """
    data = bytes(data)
    if len(data) < _HEADER.size + _U32.size:
        raise DecodeError("data too short for a compression set")
    body, (crc,) = data[:-4], _U32.unpack(data[-4:])
    if zlib.crc32(body) != crc:
        raise DecodeError("checksum mismatch")

    reader = _Reader(body)
    magic, version, task_code, eta, gamma = reader.unpack(_HEADER)
    if magic != MAGIC:
        raise DecodeError(f"bad magic {magic!r}")
    if version != FORMAT_VERSION:
        raise DecodeError(f"unsupported format version {version}")
    try:
        task = TaskKind.from_code(task_code)
    except ValueError as e:
        raise DecodeError(str(e)) from e

    (id_len,) = reader.unpack(_U16)
    try:
        erm_id = reader.take(id_len).decode("utf-8")
    except UnicodeDecodeError as e:
        raise DecodeError("ERM identifier is not valid UTF-8") from e

    n, k, dim = reader.unpack(_COUNTS)
    if k == 0 or dim == 0:
        raise DecodeError("compression set has no examples")
    dtype = _record_dtype(dim)
    records = np.frombuffer(reader.take(k * dtype.itemsize), dtype=dtype)

    (bit_length,) = reader.unpack(_U32)
    side = SideInfo.from_bytes(reader.take((bit_length + 7) // 8), bit_length)
    if reader.pos != len(body):
        raise DecodeError(f"{len(body) - reader.pos} trailing bytes")

    indices = records["index"].astype(np.int64)
    points = np.array(records["coords"], dtype=np.float64).reshape(k, dim)
    labels = np.array(records["label"], dtype=np.float64)
    _check_records(indices, points, labels)

    try:
        return CompressionSet(
            indices=indices,
            points=points,
            labels=labels,
            side_info=side,
            n_groups=n,
            meta=SchemeMeta(eta=eta, gamma=gamma, task=task, erm_id=erm_id, version=version),
        )
    except DecodeError:
        raise
    except SCKitError as e:
        raise DecodeError(f"inconsistent compression set: {e}") from e


def _check_records(indices: np.ndarray, points: np.ndarray, labels: np.ndarray) -> None:
    if np.any(np.diff(indices) < 0):
        raise DecodeError("stored examples are not sorted by sample index")
    if not (np.all(np.isfinite(points)) and np.all(np.isfinite(labels))):
        raise DecodeError("stored examples contain non-finite values")
    repeat = np.flatnonzero(np.diff(indices) == 0)
    if repeat.size and (
        np.any(points[repeat] != points[repeat + 1]) or np.any(labels[repeat] != labels[repeat + 1])
    ):
        raise DecodeError("repeated sample index with different examples")


def save_compression_set(cs: CompressionSet, path) -> None:
    """Write a compression set to a file."""
    with open(path, "wb") as f:
        f.write(serialize(cs))


def load_compression_set(path) -> CompressionSet:
    """Read a compression set written by ``save_compression_set``."""
    with open(path, "rb") as f:
        return deserialize(f.read())
