"""OEIS b-file reading and comparison against a local series.

A b-file is plain text with one "index value" pair per line; blank lines and
lines starting with '#' are ignored.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Mapping, Sequence


class BFileError(ValueError):
    """Malformed b-file or an impossible comparison."""


def read_bfile(path: str | os.PathLike[str]) -> dict[int, int]:
    """Parse a b-file into an index -> value map.

    Problems are reported with the offending line number.
    """
    entries: dict[int, int] = {}
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            parts = stripped.split()
            if len(parts) != 2:
                raise BFileError(f"{path}: line {lineno}: expected 'index value', got {line!r}")
            try:
                index, value = int(parts[0]), int(parts[1])
            except ValueError:
                raise BFileError(
                    f"{path}: line {lineno}: expected integers, got {line!r}"
                ) from None
            if index in entries:
                raise BFileError(f"{path}: line {lineno}: duplicate index {index}")
            entries[index] = value
    return entries


@dataclass(frozen=True)
class SeriesDiff:
    """Result of comparing b-file entries with series coefficients over the
    overlapping index range [lo, hi]."""

    lo: int
    hi: int
    mismatch_index: int | None = None
    local_value: int | None = None
    bfile_value: int | None = None

    @property
    def matches(self) -> bool:
        return self.mismatch_index is None


def diff_series(entries: Mapping[int, int], coeffs: Sequence[int]) -> SeriesDiff:
    """Compare over the overlap of the b-file's index range with 0..len-1.

    Raises BFileError when there is nothing to compare.
    """
    if not entries:
        raise BFileError("b-file has no entries")
    lo = max(min(entries), 0)
    hi = min(max(entries), len(coeffs) - 1)
    if lo > hi:
        raise BFileError("no overlapping range between the b-file and the series")
    for index in range(lo, hi + 1):
        if index not in entries:
            raise BFileError(f"b-file is missing index {index} inside [{lo},{hi}]")
        if entries[index] != coeffs[index]:
            return SeriesDiff(lo, hi, index, coeffs[index], entries[index])
    return SeriesDiff(lo, hi)
