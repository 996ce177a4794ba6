import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from williamson.errors import MatrixFormatError
from williamson.matrixio import parse_matrix, read_matrix, read_symmetric, write_matrix


def test_identity_file(tmp_path):
    p = tmp_path / "i.txt"
    p.write_text("2 2\n1 0\n0 1\n")
    np.testing.assert_array_equal(read_matrix(p), np.eye(2))


def test_comments_and_blank_lines():
    m = parse_matrix("# header comment\n2 2\n\n1 2\n  # inside\n3 4\n")
    np.testing.assert_array_equal(m, [[1, 2], [3, 4]])


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("2 2\n1 0 5\n0 1\n", 2, 5),
        ("2 2\n1 0\n0\n", 3, 2),
        ("2 2\n1 x\n0 1\n", 2, 3),
        ("2 2\n1 nan\n0 1\n", 2, 3),
        ("2 2\n1 inf\n0 1\n", 2, 3),
        ("2\n1 0\n", 1, 1),
        ("2 2\n1 0\n", 3, 1),
        ("1 1\n1\n2\n", 3, 1),
        ("", 1, 1),
    ],
)
def test_parse_errors(text, line, column):
    with pytest.raises(MatrixFormatError) as exc:
        parse_matrix(text)
    assert (exc.value.line, exc.value.column) == (line, column)
    assert str(exc.value).startswith(f"line {line}, column {column}: ")


def test_read_symmetric_reports_asymmetry(tmp_path):
    p = tmp_path / "a.txt"
    p.write_text("2 2\n1 2\n2.5 1\n")
    a, asym = read_symmetric(p)
    assert asym == 0.5
    np.testing.assert_array_equal(a, [[1, 2.25], [2.25, 1]])
    p.write_text("1 2\n1 2\n")
    with pytest.raises(MatrixFormatError):
        read_symmetric(p)


@settings(max_examples=100, deadline=None)
@given(arrays(np.float64, st.tuples(st.integers(1, 5), st.integers(1, 5)),
              elements=st.floats(allow_nan=False, allow_infinity=False)))
def test_round_trip_bit_exact(tmp_path_factory, m):
    p = tmp_path_factory.mktemp("rt") / "m.txt"
    write_matrix(p, m)
    back = read_matrix(p)
    assert back.shape == m.shape
    assert back.tobytes() == m.tobytes()
