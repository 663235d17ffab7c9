import random
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from arrpoin import rank, rref, solve_in_span
from arrpoin.linalg import to_integer_row


def test_rank_identity():
    assert rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3


def test_rank_zero_matrix():
    assert rank([[0, 0], [0, 0], [0, 0]]) == 0
    assert rank([]) == 0


def test_rank_dependent_rows():
    # third row is the difference of the first two
    assert rank([[1, 1, 0], [0, 1, 1], [1, 0, -1]]) == 2


def test_rank_with_fractions():
    rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(1)]]
    assert rank(rows) == 2
    assert rank([rows[0], [Fraction(1), Fraction(2, 3)]]) == 1


def test_rank_equals_rank_of_transpose_random():
    rng = random.Random(7)
    for _ in range(25):
        nr = rng.randint(1, 5)
        nc = rng.randint(1, 5)
        m = [[rng.randint(-4, 4) for _ in range(nc)] for _ in range(nr)]
        mt = [[m[i][j] for i in range(nr)] for j in range(nc)]
        assert rank(m) == rank(mt)


def test_rref_is_canonical():
    rows, pivots = rref([[2, 4, 2], [1, 2, 3]])
    assert pivots == (0, 2)
    assert rows == ((Fraction(1), Fraction(2), Fraction(0)),
                    (Fraction(0), Fraction(0), Fraction(1)))
    again, _ = rref(rows)
    assert again == rows
    # row order of the input must not matter
    swapped, _ = rref([[1, 2, 3], [2, 4, 2]])
    assert swapped == rows


def test_rref_empty_and_zero():
    assert rref([]) == ((), ())
    assert rref([[0, 0]]) == ((), ())


def test_solve_first_basis_row():
    basis = [[1, 2, 0], [0, 1, 1]]
    assert solve_in_span([1, 2, 0], basis) == [1, 0]


def test_solve_zero_target():
    basis = [[1, 2, 0], [0, 1, 1]]
    assert solve_in_span([0, 0, 0], basis) == [0, 0]
    assert solve_in_span([0, 0], []) == []


def test_solve_not_in_span():
    assert solve_in_span([0, 1], [[1, 0]]) is None
    assert solve_in_span([1, 1], []) is None


def test_solve_redundant_rows_get_zero():
    # distinguished solution: free variables (late dependent rows) pinned to 0
    basis = [[1, 0], [0, 1], [1, 1]]
    assert solve_in_span([2, 3], basis) == [2, 3, 0]


def test_solve_fractional_coefficients():
    basis = [[2, 0], [0, 3]]
    assert solve_in_span([1, 1], basis) == [Fraction(1, 2), Fraction(1, 3)]


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3),
                min_size=1, max_size=4),
       st.lists(st.integers(-3, 3), min_size=1, max_size=4))
def test_solve_round_trip(rows, coeffs):
    coeffs = coeffs[:len(rows)] + [0] * max(0, len(rows) - len(coeffs))
    target = [sum(c * r[i] for c, r in zip(coeffs, rows)) for i in range(3)]
    sol = solve_in_span(target, rows)
    assert sol is not None
    for i in range(3):
        assert sum(s * r[i] for s, r in zip(sol, rows)) == target[i]


def test_to_integer_row():
    assert to_integer_row([Fraction(1, 2), Fraction(1, 3)]) == [3, 2]
    assert to_integer_row([2, 4, 6]) == [1, 2, 3]
    assert to_integer_row([0, 0]) == [0, 0]
    assert to_integer_row([Fraction(-1, 2), Fraction(1)]) == [-1, 2]
