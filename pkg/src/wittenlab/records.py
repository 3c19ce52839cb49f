"""Line-oriented records shared by CLI output and cache files.

A record is one line of tab-separated fields: kind, key fields, value,
provenance. Cache files start with the header line ``wittenlab-cache v1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .combinatorics import format_rational, parse_rational
from .psi import CorrelatorCache, CorrelatorKey, default_cache

__all__ = [
    "CACHE_HEADER",
    "KINDS",
    "CacheFormatError",
    "TableRecord",
    "psi_record",
    "write_cache",
    "read_cache",
    "export_cache",
    "import_cache",
    "cache_roundtrip",
]

CACHE_HEADER = "wittenlab-cache v1"
KINDS = {"psi": 2, "hurwitz": 4, "hodge": 3, "series": 2, "check": 3}
PROVENANCES = ("computed", "cached")


class CacheFormatError(ValueError):
    def __init__(self, message: str, lineno: int | None = None, path: str | None = None):
        where = ""
        if path is not None:
            where += f"{path}:"
        if lineno is not None:
            where += f"{lineno}: "
        elif where:
            where += " "
        super().__init__(where + message)
        self.lineno = lineno


@dataclass(frozen=True)
class TableRecord:
    kind: str
    key: tuple[str, ...]
    value: str
    provenance: str = "computed"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown record kind {self.kind!r}")
        if len(self.key) != KINDS[self.kind]:
            raise ValueError(f"{self.kind} records take {KINDS[self.kind]} key fields, got {len(self.key)}")
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        fields = (self.kind, *self.key, self.value, self.provenance)
        if any("\t" in f or "\n" in f for f in fields):
            raise ValueError("record fields may not contain tabs or newlines")

    @classmethod
    def exact(cls, kind: str, key: Iterable[str], value: Fraction, provenance: str = "computed") -> "TableRecord":
        return cls(kind, tuple(key), format_rational(value), provenance)

    @property
    def rational(self) -> Fraction:
        return parse_rational(self.value)

    def to_line(self) -> str:
        return "\t".join((self.kind, *self.key, self.value, self.provenance))

    @classmethod
    def from_line(cls, line: str, lineno: int | None = None) -> "TableRecord":
        fields = line.rstrip("\n").split("\t")
        if len(fields) < 3:
            raise CacheFormatError(f"expected tab-separated fields, got {line.strip()!r}", lineno)
        kind, *key, value, provenance = fields
        try:
            record = cls(kind, tuple(key), value, provenance)
            if kind != "check":
                record.rational
        except (ValueError, ZeroDivisionError) as exc:
            raise CacheFormatError(str(exc), lineno) from None
        return record


def _exponents_field(ks) -> str:
    return ",".join(map(str, ks)) or "-"


def _parse_exponents(text: str) -> tuple[int, ...]:
    return () if text == "-" else tuple(int(t) for t in text.split(","))


def psi_record(genus: int, exponents, value: Fraction, provenance: str = "computed") -> TableRecord:
    return TableRecord.exact("psi", (str(genus), _exponents_field(exponents)), value, provenance)


def write_cache(path, records: Iterable[TableRecord]) -> int:
    path = Path(path)
    lines = [CACHE_HEADER] + [r.to_line() for r in records]
    try:
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write cache {path}: {exc.strerror}") from exc
    return len(lines) - 1


def read_cache(path) -> list[TableRecord]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot read cache {path}: {exc.strerror}") from exc
    lines = text.splitlines()
    if not lines or lines[0] != CACHE_HEADER:
        raise CacheFormatError(f"missing header {CACHE_HEADER!r}", 1, str(path))
    records = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            records.append(TableRecord.from_line(line, lineno))
        except CacheFormatError as exc:
            raise CacheFormatError(str(exc).split(": ", 1)[-1], lineno, str(path)) from None
    return records


def export_cache(path, cache: CorrelatorCache | None = None, extra: Iterable[TableRecord] = ()) -> int:
    """Write every psi correlator held by ``cache`` plus ``extra`` records."""
    cache = default_cache if cache is None else cache
    records = [psi_record(key.genus, key.exponents, value) for key, value in sorted(cache.items(), key=_psi_order)]
    return write_cache(path, records + list(extra))


def _psi_order(item):
    key, _ = item
    return key.genus, len(key.exponents), key.exponents


def import_cache(path, cache: CorrelatorCache | None = None) -> list[TableRecord]:
    """Read a cache file and load its psi records into ``cache``; returns all records."""
    cache = default_cache if cache is None else cache
    records = read_cache(path)
    for rec in records:
        if rec.kind == "psi":
            try:
                key = CorrelatorKey.of(int(rec.key[0]), _parse_exponents(rec.key[1]))
            except ValueError as exc:
                raise CacheFormatError(f"bad psi key {rec.key}: {exc}", path=str(path)) from None
            cache.load(key, rec.rational)
    return records


def cache_roundtrip(path, cache: CorrelatorCache | None = None) -> bool:
    """Export, re-import into a fresh cache and compare every value exactly."""
    cache = default_cache if cache is None else cache
    export_cache(path, cache)
    fresh = CorrelatorCache()
    import_cache(path, fresh)
    return dict(cache.items()) == dict(fresh.items())
