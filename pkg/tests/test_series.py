import random
from math import comb

from arrpoin import (SeriesGrid, UniPoly, bigraded_series, build_arrangement,
                     compute_lattice, cumulative_series, flat_term_grid,
                     poincare_from_exponents, poincare_polynomial,
                     reciprocal_dims_by_flat, reciprocal_dims_total,
                     series_from_exponents, try_factor_exponents)
from arrpoin import boolean_arrangement, braid_arrangement
from conftest import corpus, random_arrangement


def lattice_of(arr):
    return compute_lattice(arr)


def test_poincare_braid3():
    lat = lattice_of(braid_arrangement(3))
    poly = poincare_polynomial(lat)
    assert poly == UniPoly([1, 3, 2])
    assert poly == poincare_from_exponents((0, 1, 2))


def test_poincare_empty_and_boolean():
    assert poincare_polynomial(lattice_of(build_arrangement([], 3))) == UniPoly([1])
    assert poincare_polynomial(lattice_of(boolean_arrangement(2))) == UniPoly([1, 2, 1])


def test_poincare_constant_term_is_one():
    for name, arr in corpus():
        assert poincare_polynomial(lattice_of(arr)).coefficient(0) == 1, name


def test_braid3_grid_golden():
    grid = bigraded_series(lattice_of(braid_arrangement(3)), 4, 4)
    # entries by total degree: 1; 3s+3t; 6s^2+6st+5t^2; 10s^3+9s^2t+8st^2+7t^3;
    # 15s^4+12s^3t+11s^2t^2+10st^3+9t^4
    assert grid.entry(0, 0) == 1
    assert (grid.entry(1, 0), grid.entry(0, 1)) == (3, 3)
    assert (grid.entry(2, 0), grid.entry(1, 1), grid.entry(0, 2)) == (6, 6, 5)
    assert (grid.entry(3, 0), grid.entry(2, 1),
            grid.entry(1, 2), grid.entry(0, 3)) == (10, 9, 8, 7)
    assert (grid.entry(4, 0), grid.entry(3, 1), grid.entry(2, 2),
            grid.entry(1, 3), grid.entry(0, 4)) == (15, 12, 11, 10, 9)


def test_braid3_closed_form():
    grid = bigraded_series(lattice_of(braid_arrangement(3)), 8, 8)
    for p in range(9):
        for q in range(9):
            expected = comb(p + 2, 2) if q == 0 else 3 * p + 2 * q + 1
            assert grid.entry(p, q) == expected


def test_single_hyperplane_grid():
    grid = bigraded_series(lattice_of(build_arrangement([[1]], 1)), 5, 5)
    for p in range(6):
        for q in range(6):
            assert grid.entry(p, q) == (1 if p == 0 or q == 0 else 0)


def test_constant_term_always_one():
    for name, arr in corpus():
        grid = bigraded_series(lattice_of(arr), 2, 2)
        assert grid.entry(0, 0) == 1, name


def test_cumulative_braid3():
    lat = lattice_of(braid_arrangement(3))
    cum = cumulative_series(lat, 4, 4)
    assert cum.entry(1, 2) == 26  # 1+3+3+6+5+8
    assert cum.entry(0, 0) == 1


def test_cumulative_single_hyperplane():
    cum = cumulative_series(lattice_of(build_arrangement([[1, -1]], 2)), 5, 5)
    for p in range(6):
        for q in range(6):
            # graded grid is (a+1) on the q=0 row and 1 elsewhere
            assert cum.entry(p, q) == (p + 1) * (p + 2) // 2 + (p + 1) * q
    one_var = cumulative_series(lattice_of(build_arrangement([[1]], 1)), 5, 5)
    for p in range(6):
        for q in range(6):
            assert one_var.entry(p, q) == p + q + 1


def test_cumulative_equals_partial_sums():
    for name, arr in corpus():
        lat = lattice_of(arr)
        grid = bigraded_series(lat, 5, 5)
        assert cumulative_series(lat, 5, 5) == grid.partial_sums(), name


def test_series_from_exponents_braid():
    lat = lattice_of(braid_arrangement(3))
    assert series_from_exponents((0, 1, 2), 6, 6) == bigraded_series(lat, 6, 6)


def test_series_from_exponents_trivial_cases():
    grid = series_from_exponents((0, 0), 4, 4)
    for p in range(5):
        for q in range(5):
            assert grid.entry(p, q) == (comb(p + 1, 1) if q == 0 else 0)
    one = series_from_exponents((1,), 4, 4)
    expected = bigraded_series(lattice_of(build_arrangement([[1]], 1)), 4, 4)
    assert one == expected


def test_exponent_consistency_when_polynomial_factors():
    for name, arr in corpus():
        lat = lattice_of(arr)
        exps = try_factor_exponents(poincare_polynomial(lat), arr.ell)
        if exps is None:
            continue
        assert series_from_exponents(exps, 4, 4) == bigraded_series(lat, 4, 4), name


def test_poincare_from_exponents():
    assert poincare_from_exponents((0, 1, 2)) == UniPoly([1, 3, 2])
    assert poincare_from_exponents((0, 0, 0)) == UniPoly([1])
    assert poincare_from_exponents((1, 1)) == UniPoly([1, 2, 1])


def test_try_factor_exponents():
    assert try_factor_exponents(UniPoly([1, 3, 2]), 3) == (0, 1, 2)
    assert try_factor_exponents(UniPoly([1]), 2) == (0, 0)
    assert try_factor_exponents(UniPoly([1, 1, 1]), 2) is None
    assert try_factor_exponents(UniPoly([1, 4, 3]), 2) == (1, 3)
    assert try_factor_exponents(UniPoly([1, 2, 1]), 2) == (1, 1)
    assert try_factor_exponents(UniPoly([1, 6, 11, 6]), 4) == (0, 1, 2, 3)
    # degree above ell cannot factor into ell terms
    assert try_factor_exponents(UniPoly([1, 2, 1]), 1) is None
    # nonunit constant term violates the precondition
    assert try_factor_exponents(UniPoly([2, 1]), 2) is None


def test_reciprocal_rows_braid3():
    lat = lattice_of(braid_arrangement(3))
    rows = reciprocal_dims_by_flat(lat, 4)
    center = rows[4]
    assert center.codim == 2
    assert center.dims[2] == 2
    assert center.dims[:2] == (0, 0)  # q < codim vanishes
    for i in (1, 2, 3):
        assert rows[i].dims[1] == 1
    assert rows[0].dims == (1, 0, 0, 0, 0)
    assert reciprocal_dims_total(lat, 4) == [1, 3, 5, 7, 9]


def test_reciprocal_total_trivial():
    assert reciprocal_dims_total(lattice_of(build_arrangement([], 2)), 3) == [1, 0, 0, 0]
    single = reciprocal_dims_total(lattice_of(build_arrangement([[1]], 1)), 4)
    assert single == [1, 1, 1, 1, 1]


def test_specialization_t0_row():
    for name, arr in corpus():
        grid = bigraded_series(lattice_of(arr), 6, 6)
        for p in range(7):
            assert grid.entry(p, 0) == comb(p + arr.ell - 1, arr.ell - 1), name


def test_specialization_s0_column():
    for name, arr in corpus():
        lat = lattice_of(arr)
        grid = bigraded_series(lat, 6, 6)
        assert grid.row(0) == reciprocal_dims_total(lat, 6), name


def test_flat_sum_equals_total():
    for name, arr in corpus():
        lat = lattice_of(arr)
        rows = reciprocal_dims_by_flat(lat, 5)
        total = reciprocal_dims_total(lat, 5)
        for q in range(6):
            assert sum(r.dims[q] for r in rows) == total[q], name


def test_nonnegativity():
    rng = random.Random(3)
    arrangements = [arr for _, arr in corpus()]
    arrangements += [random_arrangement(rng) for _ in range(10)]
    for arr in arrangements:
        grid = bigraded_series(lattice_of(arr), 5, 5)
        assert all(v >= 0 for row in grid.coeffs for v in row)


def test_flat_term_reduction_order_independent():
    lat = lattice_of(braid_arrangement(4))
    max_p = max_q = 5
    terms = [flat_term_grid(lat.ell, f.codim, mu, max_p, max_q)
             for f, mu in zip(lat.flats, lat.mu)]
    sequential = [[0] * (max_q + 1) for _ in range(max_p + 1)]
    for term in terms:
        for p in range(max_p + 1):
            for q in range(max_q + 1):
                sequential[p][q] += term[p][q]
    rng = random.Random(9)
    shuffled = list(terms)
    rng.shuffle(shuffled)
    reordered = [[0] * (max_q + 1) for _ in range(max_p + 1)]
    for term in shuffled:
        for p in range(max_p + 1):
            for q in range(max_q + 1):
                reordered[p][q] += term[p][q]
    assert sequential == reordered
    assert SeriesGrid(max_p, max_q, sequential) == bigraded_series(lat, max_p, max_q)
