"""Matrices over F_q and the vector enumerations the rest of the package uses.

A column vector (v_0, ..., v_{r-1}) is encoded as the integer
sum(v_i * q^(r-1-i)): row 0 is the most significant digit, so integer order
on encodings equals lexicographic order on coordinate tuples. Projective
points are represented by the scaling with first nonzero coordinate 1 and
enumerated in that same order.
"""

from __future__ import annotations

from itertools import product

from . import kernel
from .errors import EnumerationOverflowError
from .field import Field

DEFAULT_ENUM_LIMIT = 1_000_000


class GfMatrix:
    """Immutable r x s matrix over a Field, stored column-major as bytes."""

    __slots__ = ("field", "nrows", "ncols", "data", "_sel_all")

    def __init__(self, field: Field, nrows: int, columns):
        if nrows < 1:
            raise ValueError("a matrix needs at least one row")
        cols = [tuple(c) for c in columns]
        q = field.q
        for c in cols:
            if len(c) != nrows:
                raise ValueError(f"column {c} does not have {nrows} entries")
            for x in c:
                if not 0 <= x < q:
                    raise ValueError(f"entry {x} outside [0, {q})")
        self.field = field
        self.nrows = nrows
        self.ncols = len(cols)
        self.data = bytes(x for c in cols for x in c)
        self._sel_all = bytes(range(self.ncols))

    @classmethod
    def from_rows(cls, field: Field, rows) -> "GfMatrix":
        rows = [tuple(r) for r in rows]
        if not rows:
            raise ValueError("a matrix needs at least one row")
        return cls(field, len(rows), list(zip(*rows)) if rows[0] else [])

    @classmethod
    def from_codes(cls, field: Field, nrows: int, codes) -> "GfMatrix":
        return cls(field, nrows, [decode_vector(field.q, nrows, c) for c in codes])

    def column(self, j: int) -> tuple[int, ...]:
        if not 0 <= j < self.ncols:
            raise IndexError(f"column {j} out of range")
        return tuple(self.data[j * self.nrows : (j + 1) * self.nrows])

    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.column(j) for j in range(self.ncols))

    def column_codes(self) -> tuple[int, ...]:
        return tuple(encode_vector(self.field.q, self.column(j)) for j in range(self.ncols))

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(f"entry ({i}, {j}) out of range")
        return self.data[j * self.nrows + i]

    def rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(self.data[j * self.nrows + i] for j in range(self.ncols))
            for i in range(self.nrows)
        )

    def __eq__(self, other):
        return (
            isinstance(other, GfMatrix)
            and other.field == self.field
            and other.nrows == self.nrows
            and other.data == self.data
        )

    def __hash__(self):
        return hash((self.field.q, self.nrows, self.data))

    def __repr__(self):
        return f"GfMatrix(q={self.field.q}, {self.nrows}x{self.ncols})"


def rank(matrix: GfMatrix, cols=None) -> int:
    """Rank of the matrix, or of the listed column subset."""
    f = matrix.field
    if cols is None:
        sel = matrix._sel_all
    else:
        sel = bytes(_checked_indices(matrix, cols))
    return kernel.rank(
        matrix.data, matrix.nrows, sel, f.q, f.add_table, f.mul_table, f.neg_table, f.inv_table
    )


def is_independent(matrix: GfMatrix, cols) -> bool:
    """True when the selected columns are linearly independent.

    The empty selection is independent. Repeated indices in `cols` denote a
    multiset and are dependent for any repeated column.
    """
    idx = _checked_indices(matrix, cols)
    if not idx:
        return True
    return rank(matrix, idx) == len(idx)


def _checked_indices(matrix: GfMatrix, cols) -> list[int]:
    idx = list(cols)
    for j in idx:
        if not 0 <= j < matrix.ncols:
            raise IndexError(f"column index {j} out of range [0, {matrix.ncols})")
    return idx


def encode_vector(q: int, vec) -> int:
    code = 0
    for x in vec:
        code = code * q + x
    return code


def decode_vector(q: int, r: int, code: int) -> tuple[int, ...]:
    if not 0 <= code < q**r:
        raise ValueError(f"vector code {code} outside [0, {q**r})")
    out = []
    for _ in range(r):
        out.append(code % q)
        code //= q
    return tuple(reversed(out))


def enumerate_nonzero_vectors(field: Field, r: int, limit: int = DEFAULT_ENUM_LIMIT):
    """All q^r - 1 nonzero vectors of F_q^r in lexicographic order."""
    q = field.q
    if q**r > limit:
        raise EnumerationOverflowError(f"{q}^{r} vectors exceed the limit {limit}")
    return [v for v in product(range(q), repeat=r) if any(v)]


def enumerate_projective_points(field: Field, r: int, limit: int = DEFAULT_ENUM_LIMIT):
    """Canonical projective representatives, first nonzero coordinate 1.

    Exactly (q^r - 1)/(q - 1) vectors, lexicographic order, no two of which
    are scalar multiples of each other.
    """
    pts = []
    for v in enumerate_nonzero_vectors(field, r, limit):
        lead = next(x for x in v if x)
        if lead == 1:
            pts.append(v)
    return pts
