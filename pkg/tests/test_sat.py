import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from inducedsub.sat import CnfFormula, exhaustive_formulas, random_formula, solve_sat


def brute(f):
    for bits in itertools.product((False, True), repeat=f.num_vars):
        if f.satisfied_by(dict(enumerate(bits, 1))):
            return True
    return False


@given(st.integers(1, 5), st.integers(0, 12), st.randoms(use_true_random=False))
@settings(max_examples=200, deadline=None)
def test_dpll_matches_brute_force(n, m, rnd):
    f = random_formula(n, m, rnd)
    a = solve_sat(f)
    assert (a is not None) == brute(f)
    if a is not None:
        assert f.satisfied_by(a) and set(a) == set(range(1, n + 1))


def test_exhaustive_family():
    fam = exhaustive_formulas(2, 2)
    assert len(fam) == len(set(fam)) == 216
    assert all({abs(l) for c in f.clauses for l in c} == set(range(1, f.num_vars + 1)) for f in fam)
    unsat = [f for f in fam if solve_sat(f) is None]
    assert unsat == [CnfFormula(1, ((1, 1, 1), (-1, -1, -1)))]


def test_formula_validation():
    with pytest.raises(ValueError):
        CnfFormula(1, ((1, 2, 1),))
    with pytest.raises(ValueError):
        CnfFormula(2, ((1, 2),))
    with pytest.raises(ValueError):
        CnfFormula(2, ((1, 0, 2),))


def test_random_formula_is_seeded():
    assert random_formula(3, 4, random.Random(9)) == random_formula(3, 4, random.Random(9))
