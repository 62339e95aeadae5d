"""Line-oriented document formats: matroid inputs and oracle tables.

Both formats are UTF-8 text with LF endings, '#' comment lines, and explicit
field names; every value is an integer or an exact rational "num/denom".

Matroid document, matrix flavour:

    kind matrix
    name three-points          # optional
    q 2
    rows 2 3
    row 1 0 1
    row 0 1 1

Matroid document, bases flavour (trusted is optional and skips exchange
validation for ground sets above the validation limit):

    kind bases
    size 4
    rank 2
    basis 0 1
    basis 0 2

Oracle table: one search result per line. Witnesses are comma-separated
integer-encoded column vectors (see kdep.linalg for the encoding).

    maxsize q=2 r=2 k=0 d=0/1 value=3 witness=1,2,3 provenance=brute-force
    mindep q=2 r=2 k=0 s=4 value=1/6 witness=1,1,2,3 provenance=brute-force
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DocumentError
from .field import make_field
from .linalg import GfMatrix
from .matroid import Matroid, from_bases, from_matrix

TABLE_HEADER = "# kdep oracle table"


def _tokens(line: str):
    return [(m.group(0), m.start() + 1) for m in re.finditer(r"\S+", line)]


def _int(text: str, lineno: int, col: int, what: str) -> int:
    try:
        return int(text, 10)
    except ValueError:
        raise DocumentError(lineno, col, f"{what}: expected an integer, got {text!r}") from None


def _fraction(text: str, lineno: int, col: int, what: str) -> Fraction:
    m = re.fullmatch(r"(-?\d+)(?:/(\d+))?", text)
    if not m or (m.group(2) is not None and int(m.group(2)) == 0):
        raise DocumentError(lineno, col, f"{what}: expected num/denom, got {text!r}")
    return Fraction(int(m.group(1)), int(m.group(2) or 1))


@dataclass
class MatroidDocument:
    kind: str
    name: str | None = None
    q: int | None = None
    grid: tuple[tuple[int, ...], ...] | None = None
    size: int | None = None
    rank: int | None = None
    bases: tuple[frozenset, ...] | None = None
    trusted: bool = False

    @classmethod
    def parse(cls, text: str) -> "MatroidDocument":
        kind = None
        name = None
        q = None
        shape = None
        grid_rows: list[tuple[int, ...]] = []
        size = None
        rank_ = None
        bases: list[frozenset] = []
        trusted = False
        scalars_seen: set[str] = set()
        lineno = 0
        for lineno, line in enumerate(text.splitlines(), start=1):
            toks = _tokens(line)
            if not toks or toks[0][0].startswith("#"):
                continue
            key, kcol = toks[0]
            args = toks[1:]
            if kind is None and key != "kind":
                raise DocumentError(lineno, kcol, "document must start with 'kind matrix' or 'kind bases'")
            if key in ("kind", "name", "q", "rows", "size", "rank", "trusted"):
                if key in scalars_seen:
                    raise DocumentError(lineno, kcol, f"duplicate key {key!r}")
                scalars_seen.add(key)
            if key == "kind":
                if len(args) != 1 or args[0][0] not in ("matrix", "bases"):
                    raise DocumentError(lineno, kcol, "kind must be 'matrix' or 'bases'")
                kind = args[0][0]
            elif key == "name":
                if not args:
                    raise DocumentError(lineno, kcol, "name needs a value")
                name = line.split(None, 1)[1].strip()
            elif key == "q":
                _need_kind(kind, "matrix", key, lineno, kcol)
                _need_args(args, 1, key, lineno, kcol)
                q = _int(args[0][0], lineno, args[0][1], "q")
            elif key == "rows":
                _need_kind(kind, "matrix", key, lineno, kcol)
                _need_args(args, 2, key, lineno, kcol)
                shape = (
                    _int(args[0][0], lineno, args[0][1], "row count"),
                    _int(args[1][0], lineno, args[1][1], "column count"),
                )
            elif key == "row":
                _need_kind(kind, "matrix", key, lineno, kcol)
                if shape is None:
                    raise DocumentError(lineno, kcol, "'row' before 'rows'")
                if len(args) != shape[1]:
                    raise DocumentError(lineno, kcol, f"expected {shape[1]} entries, got {len(args)}")
                entries = []
                for tok, col in args:
                    x = _int(tok, lineno, col, "matrix entry")
                    if q is not None and not 0 <= x < q:
                        raise DocumentError(lineno, col, f"entry {x} outside [0, {q})")
                    entries.append(x)
                grid_rows.append(tuple(entries))
            elif key == "size":
                _need_kind(kind, "bases", key, lineno, kcol)
                _need_args(args, 1, key, lineno, kcol)
                size = _int(args[0][0], lineno, args[0][1], "size")
            elif key == "rank":
                _need_kind(kind, "bases", key, lineno, kcol)
                _need_args(args, 1, key, lineno, kcol)
                rank_ = _int(args[0][0], lineno, args[0][1], "rank")
            elif key == "trusted":
                _need_kind(kind, "bases", key, lineno, kcol)
                _need_args(args, 1, key, lineno, kcol)
                trusted = _int(args[0][0], lineno, args[0][1], "trusted") != 0
            elif key == "basis":
                _need_kind(kind, "bases", key, lineno, kcol)
                elems = []
                for tok, col in args:
                    i = _int(tok, lineno, col, "basis element")
                    if size is not None and not 0 <= i < size:
                        raise DocumentError(lineno, col, f"element {i} outside [0, {size})")
                    elems.append(i)
                bases.append(frozenset(elems))
            else:
                raise DocumentError(lineno, kcol, f"unknown key {key!r}")
        end = lineno + 1
        if kind is None:
            raise DocumentError(1, 1, "empty document")
        if kind == "matrix":
            if q is None:
                raise DocumentError(end, 1, "missing 'q'")
            if shape is None:
                raise DocumentError(end, 1, "missing 'rows'")
            if len(grid_rows) != shape[0]:
                raise DocumentError(end, 1, f"expected {shape[0]} 'row' lines, got {len(grid_rows)}")
            return cls(kind="matrix", name=name, q=q, grid=tuple(grid_rows))
        if size is None:
            raise DocumentError(end, 1, "missing 'size'")
        if rank_ is None:
            raise DocumentError(end, 1, "missing 'rank'")
        if not bases:
            raise DocumentError(end, 1, "at least one 'basis' line is required")
        return cls(kind="bases", name=name, size=size, rank=rank_, bases=tuple(bases), trusted=trusted)

    @classmethod
    def parse_path(cls, path) -> "MatroidDocument":
        with open(path, encoding="utf-8") as fh:
            return cls.parse(fh.read())

    @classmethod
    def for_matrix(cls, matrix: GfMatrix, name: str | None = None) -> "MatroidDocument":
        return cls(kind="matrix", name=name, q=matrix.field.q, grid=matrix.rows())

    def to_text(self) -> str:
        lines = [f"kind {self.kind}"]
        if self.name:
            lines.append(f"name {self.name}")
        if self.kind == "matrix":
            lines.append(f"q {self.q}")
            nrows = len(self.grid)
            ncols = len(self.grid[0]) if self.grid else 0
            lines.append(f"rows {nrows} {ncols}")
            for row in self.grid:
                lines.append("row " + " ".join(str(x) for x in row))
        else:
            lines.append(f"size {self.size}")
            lines.append(f"rank {self.rank}")
            if self.trusted:
                lines.append("trusted 1")
            for b in sorted(self.bases, key=sorted):
                lines.append("basis " + " ".join(str(i) for i in sorted(b)))
        return "\n".join(lines) + "\n"

    def to_matroid(self) -> Matroid:
        if self.kind == "matrix":
            field = make_field(self.q)
            return from_matrix(GfMatrix.from_rows(field, self.grid))
        return from_bases(self.size, self.rank, self.bases, trusted=self.trusted)


@dataclass(frozen=True)
class TableRow:
    """One oracle search result.

    kind "maxsize": value is the largest s with a full-rank matrix whose
    k-dependence is at most d. kind "mindep": value is the smallest
    k-dependence over full-rank r x s matrices.
    """

    kind: str
    q: int
    r: int
    k: int
    d: Fraction | None
    s: int | None
    value: Fraction
    witness: tuple[int, ...]
    provenance: str

    def to_line(self) -> str:
        parts = [self.kind, f"q={self.q}", f"r={self.r}", f"k={self.k}"]
        if self.kind == "maxsize":
            parts.append(f"d={self.d.numerator}/{self.d.denominator}")
            parts.append(f"value={self.value.numerator}")
        else:
            parts.append(f"s={self.s}")
            parts.append(f"value={self.value.numerator}/{self.value.denominator}")
        parts.append("witness=" + ",".join(str(c) for c in self.witness))
        parts.append(f"provenance={self.provenance}")
        return " ".join(parts)


class OracleTable:
    """A loadable, appendable collection of TableRows with bound lookups."""

    def __init__(self, rows=()):
        self.rows: list[TableRow] = list(rows)

    @classmethod
    def parse(cls, text: str) -> "OracleTable":
        rows = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            toks = _tokens(line)
            if not toks or toks[0][0].startswith("#"):
                continue
            kind, kcol = toks[0]
            if kind not in ("maxsize", "mindep"):
                raise DocumentError(lineno, kcol, f"unknown row kind {kind!r}")
            fields = {}
            for tok, col in toks[1:]:
                if "=" not in tok:
                    raise DocumentError(lineno, col, f"expected key=value, got {tok!r}")
                key, _, val = tok.partition("=")
                if key in fields:
                    raise DocumentError(lineno, col, f"duplicate field {key!r}")
                fields[key] = (val, col)
            required = {"q", "r", "k", "value", "witness", "provenance"}
            required.add("d" if kind == "maxsize" else "s")
            missing = required - fields.keys()
            if missing:
                raise DocumentError(lineno, kcol, f"missing fields: {', '.join(sorted(missing))}")
            q = _int(fields["q"][0], lineno, fields["q"][1], "q")
            r = _int(fields["r"][0], lineno, fields["r"][1], "r")
            k = _int(fields["k"][0], lineno, fields["k"][1], "k")
            witness_text, wcol = fields["witness"]
            witness = tuple(
                _int(part, lineno, wcol, "witness code")
                for part in witness_text.split(",")
                if part != ""
            )
            if kind == "maxsize":
                d = _fraction(fields["d"][0], lineno, fields["d"][1], "d")
                value = Fraction(_int(fields["value"][0], lineno, fields["value"][1], "value"))
                row = TableRow(kind, q, r, k, d, None, value, witness, fields["provenance"][0])
            else:
                s = _int(fields["s"][0], lineno, fields["s"][1], "s")
                value = _fraction(fields["value"][0], lineno, fields["value"][1], "value")
                row = TableRow(kind, q, r, k, None, s, value, witness, fields["provenance"][0])
            rows.append(row)
        return cls(rows)

    @classmethod
    def parse_path(cls, path) -> "OracleTable":
        with open(path, encoding="utf-8") as fh:
            return cls.parse(fh.read())

    def to_text(self) -> str:
        lines = [TABLE_HEADER]
        lines.extend(row.to_line() for row in self.rows)
        return "\n".join(lines) + "\n"

    def best_size_bound(self, q: int, r: int, k: int, d: Fraction) -> TableRow | None:
        """Tightest sound size bound: maxsize rows at dependence allowance >= d."""
        rows = [
            row
            for row in self.rows
            if row.kind == "maxsize" and (row.q, row.r, row.k) == (q, r, k) and row.d >= d
        ]
        return min(rows, key=lambda row: row.value) if rows else None

    def best_dependence_bound(self, q: int, r: int, k: int, s: int) -> TableRow | None:
        """Tightest sound dependence floor: mindep rows at size <= s."""
        rows = [
            row
            for row in self.rows
            if row.kind == "mindep" and (row.q, row.r, row.k) == (q, r, k) and row.s <= s
        ]
        return max(rows, key=lambda row: row.value) if rows else None


def _need_kind(kind, expected, key, lineno, col):
    if kind != expected:
        raise DocumentError(lineno, col, f"key {key!r} is only valid for kind {expected!r}")


def _need_args(args, n, key, lineno, col):
    if len(args) != n:
        raise DocumentError(lineno, col, f"key {key!r} expects {n} value(s), got {len(args)}")
