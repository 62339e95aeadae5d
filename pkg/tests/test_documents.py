from fractions import Fraction

import pytest

from kdep.documents import TABLE_HEADER, MatroidDocument, OracleTable, TableRow
from kdep.errors import DocumentError
from kdep.field import make_field
from kdep.linalg import GfMatrix

MATRIX_DOC = """\
kind matrix
name three-points
q 2
rows 2 3
row 1 0 1
row 0 1 1
"""

BASES_DOC = """\
kind bases
size 4
rank 2
basis 0 1
basis 0 2
basis 0 3
basis 1 2
basis 1 3
basis 2 3
"""


def test_parse_matrix_document():
    doc = MatroidDocument.parse(MATRIX_DOC)
    assert doc.kind == "matrix"
    assert doc.name == "three-points"
    assert doc.q == 2
    assert doc.grid == ((1, 0, 1), (0, 1, 1))
    m = doc.to_matroid()
    assert m.kind == "matrix" and m.rank == 2 and m.size == 3


def test_parse_bases_document():
    doc = MatroidDocument.parse(BASES_DOC)
    assert doc.kind == "bases"
    assert doc.size == 4 and doc.rank == 2
    assert len(doc.bases) == 6
    assert not doc.trusted
    m = doc.to_matroid()
    assert m.kind == "bases"
    assert m.is_independent([1, 3])


def test_matrix_document_roundtrip():
    doc = MatroidDocument.parse(MATRIX_DOC)
    assert MatroidDocument.parse(doc.to_text()) == doc
    f = make_field(3)
    mat = GfMatrix.from_rows(f, [[1, 2], [0, 1]])
    doc2 = MatroidDocument.for_matrix(mat, name="demo")
    again = MatroidDocument.parse(doc2.to_text())
    assert again.grid == mat.rows()
    assert again.name == "demo"


def test_bases_document_roundtrip_sorts():
    doc = MatroidDocument.parse(BASES_DOC)
    text = doc.to_text()
    assert text.index("basis 0 1") < text.index("basis 2 3")
    assert MatroidDocument.parse(text) == doc


def test_comments_and_blank_lines_ignored():
    text = "# leading comment\n\nkind matrix\nq 2\nrows 1 1\n# mid comment\nrow 1\n"
    doc = MatroidDocument.parse(text)
    assert doc.grid == ((1,),)


@pytest.mark.parametrize(
    "text,line,fragment",
    [
        ("", 1, "empty document"),
        ("q 2\nkind matrix\n", 1, "must start with"),
        ("kind widget\n", 1, "kind must be"),
        ("kind matrix\nkind matrix\n", 2, "duplicate key"),
        ("kind matrix\nq 2\nrow 1\n", 3, "'row' before 'rows'"),
        ("kind matrix\nq 2\nrows 1 2\nrow 1\n", 4, "expected 2 entries"),
        ("kind matrix\nq 2\nrows 1 1\nrow 5\n", 4, "outside [0, 2)"),
        ("kind matrix\nq 2\nrows 1 1\nrow x\n", 4, "expected an integer"),
        ("kind matrix\nrows 1 1\nrow 1\n", 4, "missing 'q'"),
        ("kind matrix\nq 2\n", 3, "missing 'rows'"),
        ("kind matrix\nq 2\nrows 2 1\nrow 1\n", 5, "expected 2 'row' lines"),
        ("kind bases\nsize 3\nrank 1\nbasis 7\n", 4, "outside [0, 3)"),
        ("kind bases\nsize 3\nrank 1\n", 4, "at least one 'basis'"),
        ("kind bases\nrank 1\nbasis 0\n", 4, "missing 'size'"),
        ("kind matrix\nsize 3\n", 2, "only valid for kind 'bases'"),
        ("kind bases\nq 2\n", 2, "only valid for kind 'matrix'"),
        ("kind matrix\nwidgets 3\n", 2, "unknown key"),
    ],
)
def test_document_errors_carry_positions(text, line, fragment):
    with pytest.raises(DocumentError) as exc:
        MatroidDocument.parse(text)
    assert exc.value.line == line
    assert fragment in str(exc.value)


def test_document_error_message_format():
    with pytest.raises(DocumentError) as exc:
        MatroidDocument.parse("kind matrix\nq x\n")
    assert str(exc.value).startswith("line 2, column 3: ")


def test_trusted_flag_skips_validation():
    lines = ["kind bases", "size 20", "rank 2", "trusted 1"]
    lines += [f"basis {i} {j}" for i in range(20) for j in range(i + 1, 20)]
    doc = MatroidDocument.parse("\n".join(lines) + "\n")
    assert doc.trusted
    assert doc.to_matroid().size == 20


TABLE_TEXT = """\
# kdep oracle table
maxsize q=2 r=2 k=0 d=0/1 value=3 witness=1,2,3 provenance=brute-force
mindep q=2 r=2 k=0 s=4 value=1/6 witness=1,1,2,3 provenance=brute-force
mindep q=2 r=2 k=0 s=5 value=1/5 witness=1,1,2,2,3 provenance=brute-force
"""


def test_parse_oracle_table():
    table = OracleTable.parse(TABLE_TEXT)
    assert len(table.rows) == 3
    first = table.rows[0]
    assert first.kind == "maxsize"
    assert first.d == 0 and first.value == 3
    assert first.witness == (1, 2, 3)
    assert first.provenance == "brute-force"
    second = table.rows[1]
    assert second.kind == "mindep"
    assert second.s == 4 and second.value == Fraction(1, 6)


def test_table_roundtrip():
    table = OracleTable.parse(TABLE_TEXT)
    text = table.to_text()
    assert text.startswith(TABLE_HEADER + "\n")
    assert OracleTable.parse(text).rows == table.rows
    for row, line in zip(table.rows, TABLE_TEXT.splitlines()[1:]):
        assert row.to_line() == line


def test_table_lookups():
    table = OracleTable.parse(TABLE_TEXT)
    row = table.best_size_bound(2, 2, 0, Fraction(0))
    assert row is not None and row.value == 3
    # an allowance below the query dependence is not sound to use
    assert table.best_size_bound(2, 2, 0, Fraction(1, 6)) is None
    assert table.best_size_bound(3, 2, 0, Fraction(0)) is None
    row = table.best_dependence_bound(2, 2, 0, 5)
    assert row is not None and row.value == Fraction(1, 5)  # largest floor wins
    row = table.best_dependence_bound(2, 2, 0, 4)
    assert row is not None and row.value == Fraction(1, 6)
    assert table.best_dependence_bound(2, 2, 0, 3) is None


@pytest.mark.parametrize(
    "line,fragment",
    [
        ("oops q=2 r=2 k=0 d=0 value=1 witness= provenance=x", "unknown row kind"),
        ("maxsize q=2 r=2 k=0 value=1 witness= provenance=x", "missing fields: d"),
        ("mindep q=2 r=2 k=0 s=4 witness= provenance=x", "missing fields: value"),
        ("maxsize q=2 r=2 k=0 d=0 value=1 stray witness= provenance=x", "expected key=value"),
        ("maxsize q=2 q=3 r=2 k=0 d=0 value=1 witness= provenance=x", "duplicate field"),
        ("maxsize q=two r=2 k=0 d=0 value=1 witness= provenance=x", "expected an integer"),
        ("mindep q=2 r=2 k=0 s=4 value=1/0 witness= provenance=x", "expected num/denom"),
        ("maxsize q=2 r=2 k=0 d=0 value=1 witness=1,zap provenance=x", "witness code"),
    ],
)
def test_table_errors(line, fragment):
    with pytest.raises(DocumentError) as exc:
        OracleTable.parse(line)
    assert fragment in str(exc.value)
    assert exc.value.line == 1
