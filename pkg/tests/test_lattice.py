import random
from fractions import Fraction

from arrpoin import (boolean_arrangement, braid_arrangement,
                     build_arrangement, compute_lattice, flat_leq,
                     lattice_keys_by_enumeration, rref)
from conftest import corpus, random_arrangement


def test_braid3_lattice():
    lat = compute_lattice(braid_arrangement(3))
    assert len(lat) == 5
    assert [f.codim for f in lat.flats] == [0, 1, 1, 1, 2]
    assert lat.mu == (1, -1, -1, -1, 2)


def test_single_hyperplane():
    lat = compute_lattice(build_arrangement([[1, -1]], 2))
    assert len(lat) == 2
    assert lat.mu == (1, -1)


def test_boolean2_lattice():
    lat = compute_lattice(boolean_arrangement(2))
    assert len(lat) == 4
    assert [f.codim for f in lat.flats] == [0, 1, 1, 2]
    assert lat.mu == (1, -1, -1, 1)


def test_empty_arrangement_lattice():
    lat = compute_lattice(build_arrangement([], 3))
    assert len(lat) == 1
    assert lat.flats[0].rref == ()
    assert lat.flats[0].dim == 3
    assert lat.mu == (1,)


def test_generic_four_lines():
    lat = compute_lattice(
        build_arrangement([[1, 0], [0, 1], [1, -1], [1, 1]], 2))
    assert len(lat) == 6
    assert [f.codim for f in lat.flats] == [0, 1, 1, 1, 1, 2]
    assert lat.mu == (1, -1, -1, -1, -1, 3)


def test_flat_order():
    lat = compute_lattice(braid_arrangement(3))
    ambient = lat.flats[0]
    center = lat.flats[4]
    for flat in lat.flats:
        assert flat_leq(ambient, flat)
    # two distinct hyperplanes are incomparable
    assert not flat_leq(lat.flats[1], lat.flats[2])
    assert not flat_leq(lat.flats[2], lat.flats[1])
    # every hyperplane sits below the center line
    for i in (1, 2, 3):
        assert flat_leq(lat.flats[i], center)
        assert not flat_leq(center, lat.flats[i])
    assert lat.leq(1, 4) and not lat.leq(4, 1)


def test_moebius_sum_rule_on_corpus():
    for name, arr in corpus():
        lat = compute_lattice(arr)
        for j in range(1, len(lat)):
            assert sum(lat.mu[i] for i in lat.below(j)) == 0, name
        assert all(mu != 0 for mu in lat.mu), name


def test_closure_matches_subset_enumeration_on_corpus():
    for name, arr in corpus():
        lat = compute_lattice(arr)
        assert {f.rref for f in lat.flats} == lattice_keys_by_enumeration(arr), name


def test_closure_matches_subset_enumeration_random():
    rng = random.Random(11)
    for _ in range(10):
        arr = random_arrangement(rng)
        lat = compute_lattice(arr)
        assert {f.rref for f in lat.flats} == lattice_keys_by_enumeration(arr)


def test_witness_soundness():
    # every flat is re-derivable from the subset recorded during closure
    for name, arr in corpus():
        lat = compute_lattice(arr)
        for flat, witness in zip(lat.flats, lat.witnesses):
            rows = [arr.forms[i].coeffs for i in witness]
            assert rref(rows)[0] == flat.rref, name


def test_deterministic_indexing():
    arr = braid_arrangement(4)
    a = compute_lattice(arr)
    b = compute_lattice(arr)
    assert [f.rref for f in a.flats] == [f.rref for f in b.flats]
    assert a.mu == b.mu
    assert a.witnesses == b.witnesses


def test_braid4_lattice_shape():
    lat = compute_lattice(braid_arrangement(4))
    by_codim = {}
    for f in lat.flats:
        by_codim[f.codim] = by_codim.get(f.codim, 0) + 1
    assert by_codim == {0: 1, 1: 6, 2: 7, 3: 1}
    assert sum(lat.mu) == 0


def test_flat_canonical_rref():
    lat = compute_lattice(braid_arrangement(3))
    center = lat.flats[4]
    assert center.rref == (
        (Fraction(1), Fraction(0), Fraction(-1)),
        (Fraction(0), Fraction(1), Fraction(-1)),
    )
    assert center.dim == 1
