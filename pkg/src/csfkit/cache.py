"""Text persistence for character tables.

Layout::

    CHARTABLE v1 n=<n> count=<p(n)>
    <lambda>\t<mu>\t<value>        one line per pair, lambda-major enumeration order

Partitions use the ``"9,9,2"`` text form. A loaded table is checked against
column orthogonality before it is trusted, so an edited or truncated file is
rejected rather than silently used.
"""

from __future__ import annotations

import logging
import os
import tempfile
from math import factorial
from pathlib import Path

from csfkit.partitions import Partition, partitions_of
from csfkit.symfunc import CharacterTable, centralizer_order

log = logging.getLogger(__name__)

HEADER = "CHARTABLE v1 n={n} count={count}"


class CacheError(ValueError):
    """Cache file is missing, malformed, or fails validation."""


def default_cache_path(n: int) -> Path:
    root = os.environ.get("CSF_CACHE_DIR") or Path.home() / ".cache" / "csfkit"
    return Path(root) / f"chartable_n{n}.txt"


def write_table(table: CharacterTable, path: Path) -> None:
    """Atomically write ``table`` to ``path`` (temp file + rename)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=path.name + ".", suffix=".tmp", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="ascii", newline="\n") as fh:
            fh.write(HEADER.format(n=table.n, count=len(table.partitions)) + "\n")
            for lam, mu, val in table.entries():
                fh.write(f"{lam.text()}\t{mu.text()}\t{val}\n")
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def validate_table(table: CharacterTable) -> None:
    """Raise CacheError unless every column has norm z_mu and is orthogonal to the degree column."""
    n = table.n
    ident = table.column((1,) * n)
    for mu in table.partitions:
        col = table.column(mu)
        if sum(v * v for v in col.values()) != centralizer_order(mu):
            raise CacheError(f"column {mu.text()!r} has the wrong norm")
        inner = sum(v * ident.get(lam, 0) for lam, v in col.items())
        if inner != (factorial(n) if mu == (1,) * n else 0):
            raise CacheError(f"column {mu.text()!r} is not orthogonal to the identity column")
    if n and any(table[((n,), mu)] != 1 for mu in table.partitions):
        raise CacheError("trivial character row is wrong")


def read_table(path: Path, n: int) -> CharacterTable:
    path = Path(path)
    parts = partitions_of(n)
    expected = HEADER.format(n=n, count=len(parts))
    try:
        fh = open(path, encoding="ascii")
    except OSError as exc:
        raise CacheError(f"cannot open cache {path}: {exc.strerror}") from None
    columns: dict[Partition, dict[Partition, int]] = {mu: {} for mu in parts}
    seen = 0
    with fh:
        try:
            header = fh.readline().rstrip("\n")
            if header != expected:
                raise CacheError(f"bad header {header!r}, expected {expected!r}")
            by_text = {p.text(): p for p in parts}
            for lineno, line in enumerate(fh, start=2):
                fields = line.rstrip("\n").split("\t")
                if len(fields) != 3:
                    raise CacheError(f"line {lineno}: expected 3 tab-separated fields")
                lam, mu = by_text.get(fields[0]), by_text.get(fields[1])
                if lam is None or mu is None:
                    raise CacheError(f"line {lineno}: not a canonical partition of {n}")
                if lam in columns[mu]:
                    raise CacheError(f"line {lineno}: duplicate entry")
                columns[mu][lam] = int(fields[2])
                seen += 1
        except (ValueError, UnicodeDecodeError) as exc:
            if isinstance(exc, CacheError):
                raise
            raise CacheError(f"malformed cache {path}: {exc}") from exc
    if seen != len(parts) ** 2:
        raise CacheError(f"cache has {seen} entries, expected {len(parts) ** 2}")
    table = CharacterTable(n, {mu: {lam: v for lam, v in col.items() if v} for mu, col in columns.items()})
    validate_table(table)
    return table


def load_or_build(n: int, path: Path | None = None) -> tuple[CharacterTable, bool]:
    """Return ``(table, rebuilt)``; rebuilds and rewrites the cache when it is absent or invalid."""
    path = Path(path) if path else default_cache_path(n)
    try:
        table = read_table(path, n)
        log.info("loaded character table n=%d from %s", n, path)
        return table, False
    except CacheError as exc:
        log.info("rebuilding character table n=%d: %s", n, exc)
    table = CharacterTable(n).build()
    try:
        write_table(table, path)
    except OSError as exc:
        log.warning("could not write cache %s: %s", path, exc)
    return table, True
