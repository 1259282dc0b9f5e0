"""Cache persistence for integral tables.

Text format, one file per table. Floats are stored as C99 hex literals
so the round trip is bit-exact; the payload carries a SHA-256 checksum
and the header pins the format version and the evaluator configuration
digest, so a loader can never silently mix tables built under different
rules.
"""

import hashlib
import os

import numpy as np

from .errors import (CorruptTableError, DigestMismatchError,
                     TableFormatError, VersionMismatchError)
from .quadrature import IntegralTable
from .zeta import RSConfig

FORMAT_VERSION = 1

_MAGIC = "# jacobsladder-table"


def config_digest(cfg):
    """Stable hex digest of an evaluator configuration."""
    blob = (f"jlt{FORMAT_VERSION}|K={cfg.correction_terms}"
            f"|mh={float(cfg.min_height).hex()}"
            f"|od={cfg.oracle_digits}")
    return hashlib.sha256(blob.encode()).hexdigest()


def save_table(table, path):
    """Write a table; the round trip through load_table is bit-exact."""
    rows = []
    for t, v in zip(table.grid, table.values):
        rows.append(f"{float(t).hex()},{float(v).hex()}\n")
    payload = "".join(rows).encode()
    digest = hashlib.sha256(payload).hexdigest()

    header = (
        f"{_MAGIC} v{FORMAT_VERSION}\n"
        f"# cfg_digest: {config_digest(table.cfg)}\n"
        f"# cfg: correction_terms={table.cfg.correction_terms} "
        f"min_height={float(table.cfg.min_height).hex()} "
        f"oracle_digits={table.cfg.oracle_digits}\n"
        f"# spacing: {float(table.spacing).hex()}\n"
        f"# quad_tol: {float(table.quad_tol).hex()}\n"
        f"# count: {len(table.grid)}\n"
        f"# payload_sha256: {digest}\n"
    )
    tmp = f"{path}.tmp.{os.getpid()}"
    with open(tmp, "w") as fh:
        fh.write(header)
        fh.write(payload.decode())
    os.replace(tmp, path)


def _header_field(lines, key):
    prefix = f"# {key}: "
    for ln in lines:
        if ln.startswith(prefix):
            return ln[len(prefix):].strip()
    raise TableFormatError(f"missing header field {key!r}")


def load_table(path, expected_cfg=None):
    """Read a table written by save_table, verifying every invariant.

    If expected_cfg is given, the file's configuration digest must match
    it (DigestMismatchError otherwise).
    """
    with open(path) as fh:
        text = fh.read()
    lines = text.splitlines()
    if not lines or not lines[0].startswith(_MAGIC):
        raise TableFormatError(f"{path}: not a jacobsladder table file")
    version = lines[0][len(_MAGIC):].strip()
    if version != f"v{FORMAT_VERSION}":
        raise VersionMismatchError(
            f"{path}: format {version!r}, this build reads v{FORMAT_VERSION}")

    head = [ln for ln in lines if ln.startswith("#")]
    body = [ln for ln in lines if ln and not ln.startswith("#")]

    cfg_line = _header_field(head, "cfg")
    fields = dict(part.split("=", 1) for part in cfg_line.split())
    try:
        cfg = RSConfig(
            correction_terms=int(fields["correction_terms"]),
            min_height=float.fromhex(fields["min_height"]),
            oracle_digits=int(fields["oracle_digits"]),
        )
    except (KeyError, ValueError) as exc:
        raise TableFormatError(f"{path}: bad cfg header: {exc}") from exc

    stored_digest = _header_field(head, "cfg_digest")
    if stored_digest != config_digest(cfg):
        raise CorruptTableError(f"{path}: cfg digest does not match cfg header")
    if expected_cfg is not None and stored_digest != config_digest(expected_cfg):
        raise DigestMismatchError(
            f"{path}: table was built with a different evaluator configuration")

    spacing = float.fromhex(_header_field(head, "spacing"))
    quad_tol = float.fromhex(_header_field(head, "quad_tol"))
    count = int(_header_field(head, "count"))
    payload_digest = _header_field(head, "payload_sha256")

    payload = "".join(f"{ln}\n" for ln in body).encode()
    if hashlib.sha256(payload).hexdigest() != payload_digest:
        raise CorruptTableError(f"{path}: payload checksum mismatch")
    if len(body) != count:
        raise CorruptTableError(f"{path}: row count {len(body)} != header {count}")

    grid = np.empty(count)
    values = np.empty(count)
    try:
        for i, ln in enumerate(body):
            a, b = ln.split(",")
            grid[i] = float.fromhex(a)
            values[i] = float.fromhex(b)
    except ValueError as exc:
        raise CorruptTableError(f"{path}: bad row {i}: {exc}") from exc

    grid.setflags(write=False)
    values.setflags(write=False)
    try:
        return IntegralTable(grid=grid, values=values, spacing=spacing,
                             cfg=cfg, quad_tol=quad_tol)
    except Exception as exc:
        raise CorruptTableError(f"{path}: invalid table content: {exc}") from exc
