import random

import pytest

from arrpoin import (FiltrationOracle, LinearForm, boolean_arrangement,
                     braid_arrangement, build_arrangement, compute_lattice)


def corpus():
    """The standing test corpus of small arrangements."""
    return [
        ("braid-2", braid_arrangement(2)),
        ("braid-3", braid_arrangement(3)),
        ("boolean-1", boolean_arrangement(1)),
        ("boolean-2", boolean_arrangement(2)),
        ("boolean-3", boolean_arrangement(3)),
        ("generic-4-lines",
         build_arrangement([[1, 0], [0, 1], [1, -1], [1, 1]], 2)),
    ]


@pytest.fixture(scope="session")
def corpus_oracles():
    """One shared oracle per corpus arrangement (ranks are memoized)."""
    return {name: FiltrationOracle(arr) for name, arr in corpus()}


@pytest.fixture(scope="session")
def braid3_oracle(corpus_oracles):
    return corpus_oracles["braid-3"]


def random_arrangement(rng: random.Random, ell=3, max_forms=6):
    """Random small-coefficient arrangement with 1..max_forms distinct forms."""
    n = rng.randint(1, max_forms)
    chosen = {}
    attempts = 0
    while len(chosen) < n and attempts < 300:
        attempts += 1
        vec = [rng.randint(-2, 2) for _ in range(ell)]
        if not any(vec):
            continue
        form = LinearForm.from_vector(vec)
        chosen.setdefault(form.coeffs, tuple(vec))
    return build_arrangement(list(chosen.values()), ell)
