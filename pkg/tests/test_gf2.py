import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isscodes.gf2 import BitMatrix, BitVector, block_diag, from_blocks, perm_matrix


def mat(rows):
    return BitMatrix.from_rows(rows)


@st.composite
def matrices(draw, max_rows=6, max_cols=8, rows=None, cols=None):
    r = rows if rows is not None else draw(st.integers(1, max_rows))
    c = cols if cols is not None else draw(st.integers(1, max_cols))
    data = draw(st.lists(st.integers(0, (1 << c) - 1), min_size=r, max_size=r))
    return BitMatrix(r, c, tuple(data))


def test_identity_and_add():
    i2 = BitMatrix.identity(2)
    assert i2 + i2 == BitMatrix.zeros(2, 2)
    a = mat([[1, 0], [1, 1]])
    assert a + BitMatrix.zeros(2, 2) == a


def test_matmul_known():
    a = mat([[1, 1], [0, 1]])
    assert a @ a == BitMatrix.identity(2)
    b = mat([[1, 0, 1], [0, 1, 1]])
    assert (a @ b) == mat([[1, 1, 0], [0, 1, 1]])


def test_mul_vector_matches_matmul():
    a = mat([[1, 0, 1], [0, 1, 1]])
    v = BitVector(3, 0b101)
    got = a.mul_vector(v)
    assert got.length == 2
    assert [got.get(i) for i in range(2)] == [0, 1]


@given(matrices(), matrices())
@settings(max_examples=100)
def test_transpose_of_product(a, b):
    if a.cols != b.rows:
        b = BitMatrix(a.cols, b.cols, tuple(
            b.data[i % b.rows] for i in range(a.cols)))
    assert (a @ b).transpose() == b.transpose() @ a.transpose()


@given(matrices(max_rows=3, max_cols=3), matrices(max_rows=3, max_cols=3))
@settings(max_examples=60)
def test_kron_mixed_product(a, b):
    # (A (x) B)(A' (x) B') == AA' (x) BB' with square factors
    a2 = BitMatrix(a.cols, a.rows, tuple(a.transpose().data))
    b2 = BitMatrix(b.cols, b.rows, tuple(b.transpose().data))
    left = a.kron(b) @ a2.kron(b2)
    right = (a @ a2).kron(b @ b2)
    assert left == right


def test_kron_lexicographic_order():
    a = mat([[1, 0], [0, 1]])
    b = mat([[1, 1]])
    k = a.kron(b)
    # first factor indexes the most significant coordinate
    assert k == mat([[1, 1, 0, 0], [0, 0, 1, 1]])


@given(matrices())
@settings(max_examples=100)
def test_rref_rank_kernel(a):
    reduced, pivots = a.rref()
    assert len(pivots) == a.rank()
    ker = a.kernel_basis()
    assert ker.rows == a.cols - a.rank()
    if ker.rows:
        assert (a @ ker.transpose()).is_zero()


@given(matrices())
@settings(max_examples=60)
def test_row_space_contains_rows(a):
    for i in range(a.rows):
        assert a.row_space_contains(BitVector(a.cols, a.data[i]))


def test_invert_round_trip():
    a = mat([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    assert a @ a.invert() == BitMatrix.identity(3)
    assert a.inv_transpose() == a.invert().transpose()


def test_invert_singular_raises():
    with pytest.raises(ValueError):
        mat([[1, 1], [1, 1]]).invert()


@given(matrices())
@settings(max_examples=60)
def test_text_round_trip(a):
    assert BitMatrix.from_text(a.to_text()) == a


def test_perm_matrix_selects_rows():
    a = mat([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    p = perm_matrix([2, 0, 1])
    got = p @ a
    assert [got.data[i] for i in range(3)] == [a.data[2], a.data[0], a.data[1]]


def test_block_helpers():
    a = mat([[1]])
    b = mat([[1, 1]])
    d = block_diag([a, b])
    assert d == mat([[1, 0, 0], [0, 1, 1]])
    g = from_blocks([[a, BitMatrix.zeros(1, 2)], [BitMatrix.zeros(1, 1), b]])
    assert g == d


def test_vstack_and_submatrix():
    a = mat([[1, 0], [0, 1]])
    s = BitMatrix.vstack([a, a])
    assert s.rows == 4
    assert s.submatrix(2, 4, 0, 2) == a


def test_row_weights():
    assert mat([[1, 1, 0], [0, 0, 0], [1, 1, 1]]).row_weights() == [2, 0, 3]
