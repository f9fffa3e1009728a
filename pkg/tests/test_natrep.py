import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sympmember import (
    GroupParams,
    Matrix,
    random_element,
    rewrite_natural,
    sl2_rewrite,
    slp_eval,
    standard_generators,
    two_squares,
)
from sympmember.errors import DetNotOne, DimensionMismatch, NotSymplectic
from sympmember.natrep import ell_slp

from conftest import FIELD_QS, GRID, field_for, params_for


def mat_eval(slp, params):
    ident = Matrix.identity(params.field, params.dim)
    return slp_eval(slp, list(standard_generators(params)),
                    lambda a, b: a @ b, lambda a: a.inv(), lambda: ident)


@pytest.mark.parametrize("q", FIELD_QS)
def test_two_squares_total(q):
    F = field_for(q)
    assert two_squares(F, 0) == ()
    for mu in range(1, q):
        exps = two_squares(F, mu)
        assert 1 <= len(exps) <= 2
        total = 0
        for a in exps:
            total = F.add(total, F.omega_pow(2 * a))
        assert total == mu
        assert (len(exps) == 1) == (F.sqrt(mu) is not None)


@pytest.mark.parametrize("q", [3, 9, 25])
def test_ell_slp(q):
    params = params_for(2, q)
    F = params.field
    for mu in range(q):
        want = Matrix.identity(F, 4).entries.tolist()
        want[0][3] = mu
        assert mat_eval(ell_slp(F, mu), params) == Matrix.from_entries(F, want)


def test_sl2_exhaustive_gf3():
    params = params_for(1, 3)
    F = params.field
    seen = 0
    for a in range(3):
        for b in range(3):
            for c in range(3):
                for d in range(3):
                    if F.sub(F.mul(a, d), F.mul(b, c)) != 1:
                        continue
                    m = Matrix.from_entries(F, [[a, b], [c, d]])
                    assert mat_eval(sl2_rewrite(m), params) == m
                    seen += 1
    assert seen == 24


def test_sl2_random_gf9():
    params = params_for(1, 9)
    gens = standard_generators(params)
    for seed in range(500):
        m, _ = random_element(params, gens, 30, seed)
        assert mat_eval(sl2_rewrite(m), params) == m


def test_sl2_errors():
    F = field_for(5)
    with pytest.raises(DetNotOne):
        sl2_rewrite(Matrix.from_entries(F, [[2, 0], [0, 1]]))
    with pytest.raises(DimensionMismatch):
        sl2_rewrite(Matrix.identity(F, 4))


@pytest.mark.parametrize("n,q", GRID)
def test_rewrite_natural_round_trip(n, q):
    params = params_for(n, q)
    gens = standard_generators(params)
    for seed in range(10):
        m, _ = random_element(params, gens, 50, seed)
        assert mat_eval(rewrite_natural(m, params), params) == m


def test_rewrite_natural_center_and_gens():
    params = params_for(3, 7)
    F = params.field
    for m in list(standard_generators(params)) + [Matrix.scalar(F, 6, F.neg(1))]:
        assert mat_eval(rewrite_natural(m, params), params) == m


def test_rewrite_natural_rejects():
    params = params_for(2, 5)
    F = params.field
    with pytest.raises(NotSymplectic):
        rewrite_natural(Matrix.scalar(F, 4, 2), params)
    with pytest.raises(DimensionMismatch):
        rewrite_natural(Matrix.identity(F, 6), params)


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(1, 4), q=st.sampled_from([3, 5, 9, 27]))
def test_rewrite_natural_property(seed, n, q):
    params = GroupParams(n, field_for(q))
    m, _ = random_element(params, standard_generators(params), 40, seed)
    assert mat_eval(rewrite_natural(m, params), params) == m
