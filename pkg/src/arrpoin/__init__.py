"""Exact bigraded dimension series for the algebra of rational functions
regular off a central hyperplane arrangement.

The closed formulas are driven by the intersection lattice and its Möbius
function; a brute-force oracle recomputes every dimension as the rank of an
exact integer matrix, so the two routes verify each other coefficient by
coefficient.
"""

__version__ = "0.1.0"

from .arrangement import (Arrangement, LinearForm, boolean_arrangement,
                          braid_arrangement, build_arrangement, family)
from .errors import (ArrpoinError, BasisNotIndependentError, ExprError,
                     FactorOverDeltaError, InputError, NotInCellError,
                     ProportionalPairError, ZeroFormError)
from .exprs import factor_over_forms, parse_poly, poly_div_exact
from .kernel import BACKEND as KERNEL_BACKEND
from .lattice import (Flat, IntersectionLattice, compute_lattice, flat_leq,
                      lattice_keys_by_enumeration)
from .linalg import rank, rref, solve_in_span
from .oracle import (DimTable, FiltrationOracle, FlatDimRow,
                     FractionGenerator)
from .polynomials import (Poly, SeriesGrid, UniPoly, binomial_series_coeffs,
                          homogeneous_dim, monomials_of_degree,
                          monomials_upto)
from .series import (FlatSeriesRow, bigraded_series, cumulative_series,
                     flat_term_grid, poincare_from_exponents,
                     poincare_polynomial, reciprocal_dims_by_flat,
                     reciprocal_dims_total, series_from_exponents,
                     try_factor_exponents)
