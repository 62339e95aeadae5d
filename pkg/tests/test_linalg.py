import pytest

from kdep.errors import EnumerationOverflowError
from kdep.field import make_field
from kdep.linalg import (
    GfMatrix,
    decode_vector,
    encode_vector,
    enumerate_nonzero_vectors,
    enumerate_projective_points,
    is_independent,
    rank,
)


def test_matrix_layouts_agree():
    f = make_field(3)
    m = GfMatrix.from_rows(f, [[1, 0, 2], [0, 1, 1]])
    assert m.nrows == 2 and m.ncols == 3
    assert m.columns() == ((1, 0), (0, 1), (2, 1))
    assert m.rows() == ((1, 0, 2), (0, 1, 1))
    assert m.entry(0, 2) == 2 and m.entry(1, 2) == 1
    assert m == GfMatrix(f, 2, [(1, 0), (0, 1), (2, 1)])
    assert m == GfMatrix.from_codes(f, 2, m.column_codes())


def test_matrix_validation():
    f = make_field(2)
    with pytest.raises(ValueError):
        GfMatrix(f, 2, [(0, 2)])
    with pytest.raises(ValueError):
        GfMatrix(f, 2, [(0, 1, 0)])
    with pytest.raises(ValueError):
        GfMatrix(f, 0, [])
    m = GfMatrix(f, 2, [(1, 0)])
    with pytest.raises(IndexError):
        m.column(1)
    with pytest.raises(IndexError):
        m.entry(2, 0)


def test_rank_and_independence():
    f = make_field(2)
    m = GfMatrix.from_rows(f, [[1, 0, 1, 0], [0, 1, 1, 0], [0, 0, 0, 0]])
    assert rank(m) == 2
    assert rank(m, [0, 1]) == 2
    assert rank(m, [3]) == 0
    assert rank(m, []) == 0
    assert is_independent(m, [])
    assert is_independent(m, [0, 1])
    assert not is_independent(m, [0, 1, 2])
    assert not is_independent(m, [3])
    assert not is_independent(m, [0, 0])  # multiset: repeats are dependent
    with pytest.raises(IndexError):
        rank(m, [4])


def test_vector_codes_roundtrip_and_order():
    q, r = 3, 3
    codes = range(q**r)
    vecs = [decode_vector(q, r, c) for c in codes]
    assert vecs == sorted(vecs)  # integer order == lex order on tuples
    for c, v in zip(codes, vecs):
        assert encode_vector(q, v) == c
    assert encode_vector(q, (1, 0, 2)) == 9 + 2
    with pytest.raises(ValueError):
        decode_vector(q, r, q**r)
    with pytest.raises(ValueError):
        decode_vector(q, r, -1)


@pytest.mark.parametrize("q,r", [(2, 2), (2, 4), (3, 2), (3, 3), (4, 2), (5, 2), (9, 2)])
def test_enumerations(q, r):
    f = make_field(q)
    nonzero = enumerate_nonzero_vectors(f, r)
    assert len(nonzero) == q**r - 1
    assert nonzero == sorted(nonzero)
    points = enumerate_projective_points(f, r)
    assert len(points) == (q**r - 1) // (q - 1)
    assert points == sorted(points)
    for v in points:
        assert next(x for x in v if x) == 1
    # no two points are proportional
    seen = set()
    for v in points:
        for lam in range(1, q):
            scaled = tuple(f.mul(lam, x) for x in v)
            assert scaled not in seen
        seen.add(v)


def test_enumeration_limit():
    f = make_field(5)
    with pytest.raises(EnumerationOverflowError):
        enumerate_nonzero_vectors(f, 9, limit=10**6)
    with pytest.raises(EnumerationOverflowError):
        enumerate_projective_points(f, 9, limit=10**6)
