"""Tabulated signatures and ranks for the nine countable cases with n <= 12.

Ranks are data only; nothing in the package computes them.  The table is a
JSON resource shipped with the package; set ``QUADCUBICS_FIXTURES`` (or
pass ``path``) to load a different file, e.g. in tests.
"""

import json
import os
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import List, NamedTuple, Optional, Tuple

from .errors import DomainError
from .localization import DegreeProfile

ENV_VAR = "QUADCUBICS_FIXTURES"


class TableRow(NamedTuple):
    n: int
    degrees: Tuple[int, ...]
    signature: int
    rank: int

    @property
    def profile(self) -> DegreeProfile:
        return DegreeProfile(self.n, self.degrees)


def _read_text(path):
    if path:
        return Path(path).read_text(encoding="utf-8")
    return resources.files("quadcubics").joinpath("data/table.json").read_text(encoding="utf-8")


def _parse(text) -> List[TableRow]:
    rows = []
    for raw in json.loads(text):
        try:
            row = TableRow(
                int(raw["n"]),
                tuple(sorted(int(m) for m in raw["degrees"])),
                int(raw["signature"]),
                int(raw["rank"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed fixture row {raw!r}: {exc}") from exc
        if (row.rank - row.signature) % 2:
            raise DomainError(f"fixture row {row.n}, {row.degrees}: rank and signature differ in parity")
        rows.append(row)
    return rows


@lru_cache(maxsize=None)
def _cached(path):
    return tuple(_parse(_read_text(path)))


def load(path: Optional[str] = None) -> List[TableRow]:
    if path is None:
        path = os.environ.get(ENV_VAR) or None
    return list(_cached(path))


def lookup(profile: DegreeProfile, path: Optional[str] = None) -> Optional[TableRow]:
    for row in load(path):
        if row.n == profile.n and row.degrees == profile.degrees:
            return row
    return None
