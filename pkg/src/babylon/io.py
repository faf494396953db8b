"""Edge-cache persistence, CSV/JSON payload writers and run manifests."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
import os
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .graph import BabylonGraph, ResourceGuardError, DEFAULT_BUILD_CEILING

__all__ = [
    "CACHE_ENV",
    "EDGE_CACHE_MAGIC",
    "CacheFormatError",
    "write_edge_cache",
    "read_edge_cache",
    "default_cache_path",
    "csv_payload",
    "json_payload",
    "fmt_real",
    "RunManifest",
    "sha256_bytes",
    "sha256_file",
    "emit",
]

CACHE_ENV = "BABYLON_CACHE_DIR"
EDGE_CACHE_MAGIC = "babylon-edges v1"


class CacheFormatError(ValueError):
    pass


def fmt_real(x: float) -> str:
    return f"{x:.12g}"


def sha256_bytes(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def sha256_file(path: str | os.PathLike) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(1 << 20), b""):
            h.update(block)
    return h.hexdigest()


def default_cache_path(n: int) -> Path | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    return Path(root) / f"edges-{n}.txt"


def write_edge_cache(g: BabylonGraph, path: str | os.PathLike) -> None:
    """Header ``babylon-edges v1 n=<n>``, then ``a b c`` per edge in sorted order."""
    a, b = g.edge_a, g.edge_b
    sq = a * a + b * b
    c = np.sqrt(sq.astype(np.float64)).round().astype(np.int64)
    off = np.nonzero(c * c != sq)[0]
    if len(off):
        c[off] = [math.isqrt(int(v)) for v in sq[off]]
    body = np.column_stack([a, b, c])
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w", encoding="ascii", newline="\n") as fh:
        fh.write(f"{EDGE_CACHE_MAGIC} n={g.n}\n")
        if len(body):
            np.savetxt(fh, body, fmt="%d", delimiter=" ")
    os.replace(tmp, path)


def read_edge_cache(path: str | os.PathLike, *, ceiling: int = DEFAULT_BUILD_CEILING) -> BabylonGraph:
    with open(path, encoding="ascii") as fh:
        header = fh.readline().strip()
        prefix = EDGE_CACHE_MAGIC + " n="
        if not header.startswith(prefix):
            raise CacheFormatError(f"{path}: bad header {header!r}")
        try:
            n = int(header[len(prefix):])
        except ValueError:
            raise CacheFormatError(f"{path}: bad vertex count in header {header!r}") from None
        if n > ceiling:
            raise ResourceGuardError("build-ceiling", n, ceiling)
        body = fh.read()
    if body.strip():
        rows = np.loadtxt(io.StringIO(body), dtype=np.int64, ndmin=2)
    else:
        rows = np.zeros((0, 3), dtype=np.int64)
    if rows.shape[1] != 3:
        raise CacheFormatError(f"{path}: expected 3 columns, got {rows.shape[1]}")
    a, b, c = rows[:, 0], rows[:, 1], rows[:, 2]
    if np.any(a < 1) or np.any(a >= b) or np.any(b > n):
        raise CacheFormatError(f"{path}: edge outside 1 <= a < b <= {n}")
    if np.any(a * a + b * b != c * c):
        raise CacheFormatError(f"{path}: row with a^2 + b^2 != c^2")
    if len(a) > 1 and np.any(np.lexsort((b, a)) != np.arange(len(a))):
        raise CacheFormatError(f"{path}: edges not sorted by (a, b)")
    return BabylonGraph._assemble(n, a.copy(), b.copy(), babylonian=True)


def csv_payload(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt_real(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def json_payload(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


@dataclass
class RunManifest:
    command: list[str]
    parameters: dict
    version: str = __version__
    input_digests: dict = field(default_factory=dict)
    seconds: float = 0.0
    result_digest: str = ""
    started: float = field(default_factory=time.perf_counter, repr=False)

    def finish(self, deterministic_payload: str) -> "RunManifest":
        self.seconds = round(time.perf_counter() - self.started, 6)
        self.result_digest = sha256_bytes(deterministic_payload.encode())
        return self

    def to_dict(self) -> dict:
        out = asdict(self)
        out.pop("started")
        return out

    def write(self, path: str | os.PathLike) -> None:
        Path(path).write_text(json_payload(self.to_dict()))


def emit(payload: str, out: str | None) -> None:
    """Write ``payload`` to ``out`` or stdout."""
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(payload)
    else:
        sys.stdout.write(payload)
