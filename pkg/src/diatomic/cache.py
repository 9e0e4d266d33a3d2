"""Persisted memo tables for ``--cache``.

Layout: magic ``DIAT``, a u16 format version, a u32 table count, then per
table a u16-prefixed UTF-8 name, a u32 entry count and the entries, each a
u16 byte length followed by a big-endian two's-complement integer.  Integers
are unbounded, so every entry carries its own length.
"""
from __future__ import annotations

import os
import struct
from pathlib import Path

MAGIC = b"DIAT"
VERSION = 1


class CacheError(ValueError):
    pass


def _int_bytes(v: int) -> bytes:
    return v.to_bytes((v.bit_length() + 8) // 8 or 1, "big", signed=True)


def dump_tables(tables: dict[str, list[int]]) -> bytes:
    out = [MAGIC, struct.pack(">HI", VERSION, len(tables))]
    for name, values in tables.items():
        raw = name.encode()
        out.append(struct.pack(">H", len(raw)) + raw + struct.pack(">I", len(values)))
        for v in values:
            b = _int_bytes(int(v))
            out.append(struct.pack(">H", len(b)) + b)
    return b"".join(out)


def load_tables(data: bytes) -> dict[str, list[int]]:
    if data[:4] != MAGIC:
        raise CacheError("not a diatomic cache file")
    version, count = struct.unpack_from(">HI", data, 4)
    if version != VERSION:
        raise CacheError(f"cache version {version}, expected {VERSION}")
    pos = 10
    tables = {}
    try:
        for _ in range(count):
            (nlen,) = struct.unpack_from(">H", data, pos)
            name = data[pos + 2: pos + 2 + nlen].decode()
            pos += 2 + nlen
            (n,) = struct.unpack_from(">I", data, pos)
            pos += 4
            values = []
            for _ in range(n):
                (blen,) = struct.unpack_from(">H", data, pos)
                chunk = data[pos + 2: pos + 2 + blen]
                if len(chunk) != blen:
                    raise CacheError("truncated cache file")
                values.append(int.from_bytes(chunk, "big", signed=True))
                pos += 2 + blen
            tables[name] = values
    except struct.error as exc:
        raise CacheError("truncated cache file") from exc
    return tables


class TableCache:
    """Prefix tables keyed by name, read once and written back on ``save``."""

    def __init__(self, path):
        self.path = Path(path)
        self.tables: dict[str, list[int]] = {}
        self.dirty = False
        if self.path.exists():
            self.tables = load_tables(self.path.read_bytes())

    def prefix(self, name: str, size: int, compute) -> list[int]:
        """Entries 0 .. size-1 of table ``name``, extending it with compute(size) if short."""
        have = self.tables.get(name, [])
        if len(have) < size:
            have = [int(v) for v in compute(size)]
            self.tables[name] = have
            self.dirty = True
        return have[:size]

    def save(self) -> None:
        if not self.dirty:
            return
        tmp = self.path.with_suffix(self.path.suffix + ".tmp")
        tmp.write_bytes(dump_tables(self.tables))
        os.replace(tmp, self.path)
        self.dirty = False
