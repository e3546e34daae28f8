from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import caratheodory_in_hull
from vgit_pairs.errors import InputError, ParseError
from vgit_pairs.exact import (
    LinearSystem,
    affine_dimension,
    in_convex_hull,
    in_relative_interior,
    parse_rational,
    rank,
    solve_unique,
)


def test_solve_full_rank():
    assert solve_unique(LinearSystem([[1, 1], [1, -1]], [0, 2])) == (1, -1)


def test_solve_underdetermined():
    assert solve_unique(LinearSystem([[1, 1], [2, 2]], [0, 0])) is None


def test_solve_inconsistent_after_substitution():
    # 2g0 - g1 - g2 = 0 with g0 = 1, g2 = -1 - g1:  0 * g1 = -3
    a = (2, -1, -1)
    row = [a[1] - a[2]]
    rhs = [a[2] - a[0]]
    assert row == [0] and rhs == [-3]
    assert solve_unique(LinearSystem([row], rhs)) is None


def test_solve_overdetermined_consistent():
    assert solve_unique(LinearSystem([[1, 0], [0, 1], [1, 1]], [1, 2, 3])) == (1, 2)


def test_linear_system_validation():
    with pytest.raises(InputError):
        LinearSystem([], [])
    with pytest.raises(InputError):
        LinearSystem([[1, 2], [1]], [0, 0])


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda k: st.tuples(
    st.lists(st.lists(st.integers(-5, 5), min_size=k, max_size=k), min_size=k, max_size=k + 2),
    st.lists(st.integers(-5, 5), min_size=k + 2, max_size=k + 2),
)))
def test_solution_substitutes_back(data):
    rows, rhs = data
    rhs = rhs[: len(rows)]
    sol = solve_unique(LinearSystem(rows, rhs))
    if sol is not None:
        for r, b in zip(rows, rhs):
            assert sum(F(a) * x for a, x in zip(r, sol)) == b
        assert rank(rows) == len(rows[0])


def test_hull_midpoint():
    assert in_convex_hull((1, 1), [(0, 0), (2, 2)])


def test_hull_single_generator():
    assert not in_convex_hull((F(3, 2), F(3, 2)), [(1, 2)])


def test_hull_symmetric():
    assert in_convex_hull((0, 0), [(1, 0), (-1, 0), (0, 1), (0, -1)])


def test_hull_dimension_mismatch():
    with pytest.raises(InputError):
        in_convex_hull((0, 0), [(1, 0, 0)])
    with pytest.raises(InputError):
        in_convex_hull((0, 0), [])


vectors = st.integers(1, 4).flatmap(
    lambda dim: st.tuples(
        st.lists(st.integers(-3, 3), min_size=dim, max_size=dim),
        st.lists(st.lists(st.integers(-3, 3), min_size=dim, max_size=dim), min_size=1, max_size=6),
    )
)


@settings(max_examples=150, deadline=None)
@given(vectors)
def test_hull_matches_caratheodory(data):
    point, gens = data
    assert in_convex_hull(point, gens) == caratheodory_in_hull(point, gens)


@settings(max_examples=80, deadline=None)
@given(vectors, st.lists(st.integers(0, 3), min_size=6, max_size=6))
def test_hull_contains_convex_combinations(data, weights):
    _, gens = data
    w = weights[: len(gens)]
    if sum(w) == 0:
        w = [1] + w[1:]
    total = sum(w)
    point = [sum(F(wi, total) * g[i] for wi, g in zip(w, gens)) for i in range(len(gens[0]))]
    assert in_convex_hull(point, gens)
    assert caratheodory_in_hull(point, gens)


def test_relint_segment_in_its_line():
    assert in_relative_interior((1, 1), [(0, 0), (2, 2)], 1)


def test_relint_flat_polytope():
    assert not in_relative_interior((1, 1), [(0, 0), (2, 2)], 2)


def test_relint_endpoint():
    assert not in_relative_interior((2, 2), [(0, 0), (2, 2)], 1)


def test_relint_triangle():
    tri = [(0, 0), (3, 0), (0, 3)]
    assert in_relative_interior((1, 1), tri, 2)
    assert not in_relative_interior((0, 1), tri, 2)
    assert not in_relative_interior((5, 5), tri, 2)


def test_relint_dual_route():
    tri = [(0, 0), (3, 0), (0, 3)]
    # outward facet normals negated: functionals whose minimum is attained on a facet
    family = [(1, 0), (0, 1), (-1, -1)]
    assert in_relative_interior((1, 1), tri, 2, family)
    assert not in_relative_interior((0, 1), tri, 2, family)


def test_relint_hull_too_big():
    with pytest.raises(InputError):
        in_relative_interior((0, 0), [(0, 0), (1, 0), (0, 1)], 1)


@settings(max_examples=100, deadline=None)
@given(vectors)
def test_relint_implies_hull(data):
    point, gens = data
    dim = affine_dimension(gens)
    if in_relative_interior(point, gens, dim):
        assert in_convex_hull(point, gens)


def test_affine_dimension():
    assert affine_dimension([(1, 1)]) == 0
    assert affine_dimension([(0, 0), (2, 2), (1, 1)]) == 1
    assert affine_dimension([(0, 0, 0), (1, 0, 0), (0, 1, 0)]) == 2


@pytest.mark.parametrize("text,value", [("3/4", F(3, 4)), ("-2", F(-2)), (" 6/8 ", F(3, 4)), ("0", F(0))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["0.5", "1/0", "a", "1/2/3", ""])
def test_parse_rational_rejects(text):
    with pytest.raises(ParseError):
        parse_rational(text)
