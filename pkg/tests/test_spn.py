import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sympmember import GroupParams, Matrix, field_make, is_symplectic, random_element
from sympmember import standard_generators
from sympmember.errors import DimensionMismatch, FormatError, MixedFields, Singular
from sympmember.spn import format_matrix, form_matrix, parse_matrices, parse_matrix

from conftest import GRID, params_for, ref_matmul


def closure(gens):
    seen = {gens[0].inv() @ gens[0]}
    frontier = list(seen)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a @ g
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return seen


def random_matrix(F, d, rng):
    return Matrix.from_entries(F, [[rng.randrange(F.q) for _ in range(d)] for _ in range(d)])


@pytest.mark.parametrize("q", [3, 9, 25])
def test_matmul_matches_schoolbook(q):
    params = params_for(2, q)
    rng = random.Random(q)
    for _ in range(20):
        a = random_matrix(params.field, 4, rng)
        b = random_matrix(params.field, 4, rng)
        assert a @ b == ref_matmul(a, b)


@pytest.mark.parametrize("q", [5, 9, 27])
def test_inverse(q):
    F = params_for(1, q).field
    rng = random.Random(1)
    done = 0
    while done < 20:
        a = random_matrix(F, 3, rng)
        try:
            ai = a.inv()
        except Singular:
            continue
        assert (a @ ai).is_identity() and (ai @ a).is_identity()
        done += 1
    with pytest.raises(Singular):
        Matrix.from_entries(F, [[1, 1], [1, 1]]).inv()


def test_group_orders_from_generators():
    # |Sp(2,3)| = 24, |Sp(4,3)| = 51840
    assert len(closure(list(standard_generators(params_for(1, 3))))) == 24
    assert len(closure(list(standard_generators(params_for(2, 3))))) == 51840


def test_form_matrix_pairs():
    J = form_matrix(3, field_make(5))
    # <e_i, f_i> = 1 with f_i at position 2n+1-i
    for i in range(3):
        assert J[i, 5 - i] == 1
        assert J[5 - i, i] == -1


@pytest.mark.parametrize("n,q", GRID)
def test_random_elements_are_symplectic(n, q):
    params = params_for(n, q)
    gens = standard_generators(params)
    for seed in range(3):
        m, slp = random_element(params, gens, 30, seed)
        assert is_symplectic(m, params)
        again, _ = random_element(params, gens, 30, seed)
        assert again == m


def test_random_element_slp_replays():
    from sympmember import slp_eval

    params = params_for(3, 5)
    gens = list(standard_generators(params))
    m, slp = random_element(params, gens, 50, 7)
    ident = Matrix.identity(params.field, params.dim)
    assert slp_eval(slp, gens, lambda a, b: a @ b, lambda a: a.inv(), lambda: ident) == m


@pytest.mark.parametrize("n,q", [(1, 3), (2, 9), (3, 27)])
def test_format_round_trip(n, q):
    params = params_for(n, q)
    m, _ = random_element(params, standard_generators(params), 20, 0)
    text = format_matrix(m, params)
    back, p2 = parse_matrix(text)
    assert back == m and p2 == params
    assert format_matrix(back, p2) == text


def test_parse_matrices_with_labels():
    params = params_for(2, 3)
    gens = standard_generators(params)
    text = "".join(f"# g{i}\n" + format_matrix(g, params) for i, g in enumerate(gens))
    assert [m for m, _ in parse_matrices(text)] == list(gens)


@pytest.mark.parametrize("bad", [
    "",
    "SPN n=1\n1 0\n0 1\n",
    "SPN n=1 p=3 k=1 mod=0,1\n1 0\n",
    "SPN n=1 p=3 k=1 mod=0,1\n1 0\n0 3\n",
    "SPN n=1 p=3 k=1 mod=0,1\n1 0 0\n0 1\n",
    "SPN n=1 p=3 k=1 mod=0,1\n1 a\n0 1\n",
    "SPN n=0 p=3 k=1 mod=0,1\n",
])
def test_parse_errors(bad):
    with pytest.raises(FormatError):
        parse_matrix(bad)


def test_mixing_errors():
    a = Matrix.identity(field_make(3), 2)
    with pytest.raises(MixedFields):
        a @ Matrix.identity(field_make(5), 2)
    with pytest.raises(DimensionMismatch):
        a @ Matrix.identity(field_make(3), 4)
    with pytest.raises(DimensionMismatch):
        is_symplectic(a, GroupParams(2, field_make(3)))


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(1, 3), q=st.sampled_from([3, 5, 9]))
def test_products_and_inverses_stay_symplectic(seed, n, q):
    params = params_for(n, q)
    gens = standard_generators(params)
    a, _ = random_element(params, gens, 10, seed)
    b, _ = random_element(params, gens, 10, seed + 1)
    assert is_symplectic(a @ b.inv(), params)
