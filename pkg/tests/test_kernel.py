"""Cross-checks between the pure-Python kernel and the compiled twin."""

import random

import pytest

from arrpoin import _rowred_py

try:
    from arrpoin import _rowred
except ImportError:
    _rowred = None


def _random_matrix(rng, nrows, ncols, span=6):
    return [[rng.randint(-span, span) for _ in range(ncols)]
            for _ in range(nrows)]


def test_make_primitive():
    row = [0, -6, 9, -3]
    lead = _rowred_py.make_primitive(row)
    assert lead == 1
    assert row == [0, 2, -3, 1]
    assert _rowred_py.make_primitive([0, 0]) == -1
    row = [5]
    assert _rowred_py.make_primitive(row) == 0
    assert row == [1]


def test_row_basis_rank_and_contains():
    basis = _rowred_py.RowBasis(3)
    assert basis.add([1, 1, 0])
    assert basis.add([0, 1, 1])
    assert not basis.add([1, 0, -1])
    assert basis.rank == 2
    assert basis.contains([2, 2, 0])
    assert not basis.contains([0, 0, 1])


def test_row_length_checked():
    basis = _rowred_py.RowBasis(3)
    with pytest.raises(ValueError):
        basis.add([1, 2])


def test_stored_rows_are_primitive_sorted_by_pivot():
    basis = _rowred_py.RowBasis(4)
    basis.add([0, 0, 4, 8])
    basis.add([3, 0, 0, 3])
    basis.add([0, -2, 0, 0])
    assert basis.pivots == [0, 1, 2]
    for row, piv in zip(basis.rows, basis.pivots):
        assert row[piv] > 0
        assert all(v == 0 for v in row[:piv])


@pytest.mark.skipif(_rowred is None, reason="compiled kernel not built")
def test_backends_agree_on_random_input():
    rng = random.Random(20240811)
    for trial in range(40):
        nrows = rng.randint(1, 8)
        ncols = rng.randint(1, 8)
        rows = _random_matrix(rng, nrows, ncols)
        py = _rowred_py.RowBasis(ncols)
        cy = _rowred.RowBasis(ncols)
        for row in rows:
            assert py.add(list(row)) == cy.add(list(row))
        assert py.rank == cy.rank
        assert py.pivots == list(cy.pivots)
        assert py.rows == list(cy.rows)
        probe = [rng.randint(-6, 6) for _ in range(ncols)]
        assert py.reduce(list(probe)) == list(cy.reduce(list(probe)))


@pytest.mark.skipif(_rowred is None, reason="compiled kernel not built")
def test_backends_agree_on_big_entries():
    rng = random.Random(5)
    rows = [[rng.randint(-10**12, 10**12) for _ in range(6)] for _ in range(8)]
    py = _rowred_py.RowBasis(6)
    cy = _rowred.RowBasis(6)
    for row in rows:
        assert py.add(list(row)) == cy.add(list(row))
    assert py.rows == list(cy.rows)


def test_kernel_selection_env(monkeypatch):
    import importlib

    import arrpoin.kernel as kernel
    monkeypatch.setenv("ARRPOIN_PURE", "1")
    mod = importlib.reload(kernel)
    assert mod.BACKEND == "python"
    monkeypatch.delenv("ARRPOIN_PURE")
    mod = importlib.reload(kernel)
    assert mod.BACKEND in ("python", "cython")
