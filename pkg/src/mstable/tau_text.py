"""Tau-notation parsing and formatting, table generation, result cache.

Grammar for tau words: terms ``t<index>`` with an optional ``^<exponent>``
(default 1), separated by whitespace or ``*``; repeated indices accumulate.
Parse errors carry the byte offset of the offending character.

Cache files are UTF-8 text, one record per line in the form

    M;D1,D2,...,Dn;NUM/DEN

with the exponents canonical (sorted non-increasing) and the value
reduced.  Lines starting with ``#`` are comments; blank lines are
ignored.  The loader validates every invariant and reports the first bad
line by number.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Sequence

from .core import IntersectionSymbol, TauWord, symbol_to_tau
from .recursion import MemoTable, compute

__all__ = [
    "TauParseError",
    "CacheFormatError",
    "parse_tau_word",
    "format_tau_word",
    "canonical_exponent_vectors",
    "CacheRecord",
    "save_cache",
    "load_cache",
    "format_table",
]


class TauParseError(ValueError):
    """Malformed tau word; ``offset`` is the byte position of the error."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"parse error at offset {offset}: {message}")
        self.offset = offset


class CacheFormatError(ValueError):
    """Malformed cache file; ``line`` is the 1-based offending line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_tau_word(text: str) -> TauWord:
    """Parse ``"t0^3 t4"``-style notation into a :class:`TauWord`."""
    counts: dict[int, int] = {}
    i = 0
    length = len(text)

    def scan_uint(start: int, what: str) -> tuple[int, int]:
        j = start
        while j < length and text[j].isdigit():
            j += 1
        if j == start:
            raise TauParseError(f"expected {what}", start)
        return int(text[start:j]), j

    while True:
        while i < length and text[i].isspace():
            i += 1
        if i >= length:
            break
        if text[i] != "t":
            raise TauParseError("expected 't'", i)
        index, i = scan_uint(i + 1, "tau index")
        mult = 1
        if i < length and text[i] == "^":
            mult, i = scan_uint(i + 1, "exponent")
            if mult < 1:
                raise TauParseError("exponent must be positive", i - 1)
        counts[index] = counts.get(index, 0) + mult
        if i < length and not (text[i].isspace() or text[i] == "*"):
            raise TauParseError("expected separator", i)
        if i < length and text[i] == "*":
            i += 1
    if not counts:
        raise TauParseError("empty input", 0)
    return TauWord.from_counts(counts)


def format_tau_word(word: TauWord) -> str:
    """Canonical rendering: ascending indices, ``^`` only for multiplicity > 1."""
    return " ".join(
        f"t{index}" if mult == 1 else f"t{index}^{mult}"
        for index, mult in word.counts
    )


def canonical_exponent_vectors(n: int) -> Iterator[tuple[int, ...]]:
    """All canonical exponent vectors of an n-point top symbol.

    These are the partitions of n padded with zeros to length n, emitted
    in descending lexicographic order, which is the cell order of the
    reference table.
    """
    if n < 1:
        return

    def parts(total: int, bound: int) -> Iterator[tuple[int, ...]]:
        if total == 0:
            yield ()
            return
        for first in range(min(total, bound), 0, -1):
            for rest in parts(total - first, first):
                yield (first,) + rest

    for p in parts(n, n):
        yield p + (0,) * (n - len(p))


@dataclass(frozen=True, slots=True)
class CacheRecord:
    """One cached value: level, canonical exponents, exact value."""

    m: int
    exponents: tuple[int, ...]
    value: Fraction

    def __post_init__(self) -> None:
        IntersectionSymbol(self.m, self.exponents)  # reuse symbol validation

    @property
    def symbol(self) -> IntersectionSymbol:
        return IntersectionSymbol(self.m, self.exponents)


def save_cache(records: Iterable[CacheRecord], path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("# mstable result cache: m;d1,...,dn;num/den\n")
        for record in records:
            exps = ",".join(str(d) for d in record.exponents)
            handle.write(
                f"{record.m};{exps};{record.value.numerator}/{record.value.denominator}\n"
            )


def load_cache(path: str) -> list[CacheRecord]:
    records: list[CacheRecord] = []
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split(";")
            if len(fields) != 3:
                raise CacheFormatError("expected 3 ';'-separated fields", lineno)
            m_text, exp_text, value_text = fields
            try:
                m = int(m_text)
                exponents = tuple(int(p) for p in exp_text.split(","))
            except ValueError:
                raise CacheFormatError("malformed integer field", lineno) from None
            num_den = value_text.split("/")
            if len(num_den) != 2:
                raise CacheFormatError("value must be NUM/DEN", lineno)
            try:
                num, den = int(num_den[0]), int(num_den[1])
            except ValueError:
                raise CacheFormatError("malformed value field", lineno) from None
            if den < 1:
                raise CacheFormatError("denominator must be >= 1", lineno)
            if gcd(abs(num), den) != 1:
                raise CacheFormatError("value not in lowest terms", lineno)
            if any(a < b for a, b in zip(exponents, exponents[1:])):
                raise CacheFormatError("exponents not canonical", lineno)
            try:
                record = CacheRecord(m, exponents, Fraction(num, den))
            except ValueError as exc:
                raise CacheFormatError(str(exc), lineno) from None
            records.append(record)
    return records


def _format_value(value: Fraction, scale24: bool) -> str:
    # str(Fraction) prints integers without a denominator and never rounds.
    return str(value * 24 if scale24 else value)


def _row_groups(max_n: int) -> list[tuple[str, tuple[int, ...]]]:
    groups: list[tuple[str, tuple[int, ...]]] = [("0/1", (0, 1))]
    groups.extend((str(m), (m,)) for m in range(2, max_n))
    return groups


def _cell_entries(
    levels: Sequence[int], n: int, memo: MemoTable, scale24: bool
) -> list[tuple[str, str]]:
    valid = [m for m in levels if n > m]
    entries: list[tuple[str, str]] = []
    for vector in canonical_exponent_vectors(n):
        values = [compute(IntersectionSymbol(m, vector), memo=memo) for m in valid]
        if any(v != values[0] for v in values[1:]):
            raise ValueError(f"merged levels disagree on {vector}: {values}")
        word = format_tau_word(symbol_to_tau(IntersectionSymbol(valid[0], vector)))
        entries.append((word, _format_value(values[0], scale24)))
    return entries


def format_table(
    max_n: int,
    scale24: bool = False,
    fmt: str = "tsv",
    memo: MemoTable | None = None,
) -> str:
    """Render every value with m < n <= max_n, grouped by level.

    Levels 0 and 1 coincide and are printed as one merged group labelled
    ``0/1``; both are still computed and compared.  Cells list every
    canonical tau word of the column in descending lexicographic exponent
    order.  With ``scale24`` the printed values are multiplied by 24,
    which makes every entry of the built-in reference range an integer.
    """
    if max_n < 1:
        raise ValueError("invalid argument: max_n must be >= 1")
    if fmt not in ("tsv", "pretty"):
        raise ValueError("invalid argument: format must be 'tsv' or 'pretty'")
    if memo is None:
        memo = MemoTable()
    lines: list[str] = []
    if fmt == "tsv":
        lines.append("m\tn\tword\tvalue")
    first_group = True
    for label, levels in _row_groups(max_n):
        start_n = min(levels) + 1
        if fmt == "pretty":
            if not first_group:
                lines.append("")
            lines.append(f"[m={label}]")
        first_group = False
        for n in range(start_n, max_n + 1):
            entries = _cell_entries(levels, n, memo, scale24)
            if fmt == "tsv":
                lines.extend(
                    f"{label}\t{n}\t{word}\t{value}" for word, value in entries
                )
            else:
                lines.append(f"n={n}")
                width = max(len(word) for word, _ in entries)
                lines.extend(
                    f"  {word.ljust(width)} = {value}" for word, value in entries
                )
    return "\n".join(lines) + "\n"
