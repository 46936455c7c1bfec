"""OEIS b-file reading, writing and comparison.

A b-file is plain text with one ``index value`` pair per line and optional
``#`` comment lines.  Values are parsed as Python ints since record values
quickly outgrow 64 bits.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import BFileFormatError, BFileParseError

_LINE = re.compile(r"[ \t]*(-?\d+)[ \t]+(-?\d+)[ \t]*")

# sequences the package can produce, by A-number
KNOWN = {
    "A074206": "K",
    "A067824": "kappa0",
    "A000005": "tau_2",
    "A007425": "tau_3",
    "A007426": "tau_4",
    "A032741": "upsilon_2",
    "A343879": "upsilon_3",
}


@dataclass(frozen=True)
class Sequence:
    offset: int = 1
    values: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    @property
    def terms(self) -> list[tuple[int, int]]:
        return [(self.offset + i, v) for i, v in enumerate(self.values)]

    @property
    def last_index(self) -> int:
        return self.offset + len(self.values) - 1

    def __len__(self):
        return len(self.values)

    def __getitem__(self, index):
        return self.values[index - self.offset]


def parse_bfile(text: str) -> Sequence:
    offset = None
    values = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        m = _LINE.fullmatch(line)
        if m is None:
            raise BFileParseError(lineno, line)
        idx, val = int(m.group(1)), int(m.group(2))
        if offset is None:
            offset = idx
        expected = offset + len(values)
        if idx != expected:
            raise BFileFormatError(lineno, expected, idx)
        values.append(val)
    return Sequence(1 if offset is None else offset, tuple(values))


def write_bfile(s: Sequence) -> str:
    return "".join(f"{i} {v}\n" for i, v in s.terms)


@dataclass(frozen=True)
class DiffReport:
    overlap: tuple[int, int] | None
    first_mismatch: tuple[int, int, int] | None
    only_left: int
    only_right: int

    @property
    def match(self) -> bool:
        return self.first_mismatch is None

    def lines(self) -> list[str]:
        rng = "none" if self.overlap is None else f"{self.overlap[0]}..{self.overlap[1]}"
        out = [f"overlap {rng}"]
        if self.first_mismatch is None:
            out.append("first_mismatch none")
        else:
            i, a, b = self.first_mismatch
            out.append(f"first_mismatch {i} {a} {b}")
        out.append(f"only_left {self.only_left}")
        out.append(f"only_right {self.only_right}")
        out.append("MATCH" if self.match else "DIFFER")
        return out


def compare(a: Sequence, b: Sequence) -> DiffReport:
    """Element-wise comparison on the overlapping index range.

    Terms outside the overlap are only counted, never treated as mismatches.
    """
    if not a.values or not b.values:
        return DiffReport(None, None, len(a), len(b))
    lo = max(a.offset, b.offset)
    hi = min(a.last_index, b.last_index)
    if lo > hi:
        return DiffReport(None, None, len(a), len(b))
    first = None
    for i in range(lo, hi + 1):
        if a[i] != b[i]:
            first = (i, a[i], b[i])
            break
    span = hi - lo + 1
    return DiffReport((lo, hi), first, len(a) - span, len(b) - span)
