import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gendem.polytope import (
    certify_vertex,
    convex_hull,
    dilation_sample,
    ii_box,
    in_Delta,
    in_S,
    in_S_im,
    lattice_points,
    psi_eval,
    verify,
)
from gendem.rootsys import RootSystemError, parse_type

import oracles

A2 = parse_type("A2")
A1 = parse_type("A1")
C2 = parse_type("C2")


def test_psi_a2_single_inequality():
    for a in itertools.product(range(4), repeat=3):
        for m1 in range(3):
            rep = psi_eval(A2, (1, 2, 1), (m1, 1), a)
            assert rep.verdict_S == (a[1] - a[2] + m1 >= 0)


def test_psi_zero_point():
    rep = psi_eval(C2, (1, 2, 1, 2), (1, 2, 0, 1), (0, 0, 0, 0))
    assert rep.verdict_S and rep.verdict_Delta
    assert all(v >= 0 for v in rep.psi.values())


def test_psi_report_levels():
    rep = psi_eval(A2, (1, 2, 1), (1, 1), (0, 0, 2))
    assert set(rep.a_levels) == {1, 2, 3}
    assert rep.a_levels[3] == (0, 0, 2)
    assert rep.psi[(3, 1)] == -1
    assert rep.verdict_ii is None
    js = rep.to_json()
    assert js["verdict_S"] is False
    assert [3, 1, "-1/1"] in js["psi"]


def test_in_S_examples():
    assert in_S(A2, (1, 2, 1), (1, 1), (0, 0, 1))
    assert not in_S(A2, (1, 2, 1), (1, 1), (0, 0, 2))
    assert in_S(A2, (1,), (), (5,))


def test_in_S_im_and_delta():
    assert not in_S_im(A2, (1, 2, 1), (1, 1, 1), 1, (1, 0, 1))
    assert in_S_im(A2, (1, 2, 1), (1, 1, 1), 1, (0, 0, 0))
    assert in_Delta(A1, (1, 1, 1), (1, 1, 1), (0, 1, Fraction(1, 2)))
    assert not in_Delta(A2, (1, 2, 1), (1, 1, 1), (0, 1, 2))
    assert not in_Delta(A2, (1, 2, 1), (1, 1, 1), (-1, 0, 0))


def test_dimension_errors():
    with pytest.raises(RootSystemError):
        psi_eval(A2, (1, 2, 1), (1, 1), (0, 0))
    with pytest.raises(RootSystemError):
        psi_eval(A2, (1, 2, 1), (1,), (0, 0, 0))


def test_lattice_points_examples():
    assert lattice_points(A2, (1, 2, 1), (1, 1, 1)) == sorted(oracles.A2_121_OMEGA)
    pts = lattice_points(C2, (1, 2, 1, 2), (1, 1, 1, 1))
    assert pts == sorted(oracles.C2_1212_OMEGA)
    assert (6, 2, 0, 0) in pts and (4, 3, 3, 1) in pts
    a1 = lattice_points(A1, (1, 1, 1), (1, 1, 1))
    brute = [a for a in itertools.product(range(4), repeat=3)
             if a[2] <= 1 and a[1] <= min(1, 2 - 2 * a[2]) and a[0] <= 3 - 2 * a[1] - 2 * a[2]]
    assert a1 == sorted(brute) and len(a1) == 8


@pytest.mark.parametrize("name", ["C2 (1,2,1,2)", "C2 (2,1,2,1)", "A1 (1,1,1)"])
def test_specialization_at_ones_on_half_grid(name):
    t, word, _, _ = oracles.SYSTEMS[name]
    cd = parse_type(t)
    m = (1,) * len(word)
    # a half-integer grid covering the bounding box
    for k in itertools.product(range(0, 15), repeat=len(word)) if len(word) == 3 else \
            itertools.product(range(0, 15), range(0, 9), range(0, 7), range(0, 3)):
        a = tuple(Fraction(x, 2) for x in k)
        assert in_Delta(cd, word, m, a) == oracles.ONES[name](a), a


@settings(max_examples=200, deadline=None)
@given(
    name=st.sampled_from(sorted(oracles.SYSTEMS)),
    data=st.data(),
)
def test_homogeneity(name, data):
    t, word, _, _ = oracles.SYSTEMS[name]
    cd = parse_type(t)
    r = len(word)
    m = data.draw(st.lists(st.integers(0, 3), min_size=r - 1, max_size=r - 1))
    a = data.draw(st.lists(st.integers(0, 6), min_size=r, max_size=r))
    s = Fraction(data.draw(st.integers(1, 7)), data.draw(st.integers(1, 7)))
    assert in_S(cd, word, m, a) == in_S(cd, word, [s * x for x in m], [s * x for x in a])


@pytest.mark.parametrize("name", sorted(oracles.SYSTEMS))
def test_S_on_plain_box(name):
    # membership in S is claimed on all of Z_{>=0}, not just inside the (ii) bounds
    t, word, _, _ = oracles.SYSTEMS[name]
    cd = parse_type(t)
    r = len(word)
    top = 3 if r <= 4 else 2
    for m in itertools.product(range(2), repeat=r - 1):
        for a in itertools.product(range(top + 1), repeat=r):
            assert in_S(cd, word, m, a) == oracles.printed_S(name, m + (0,), a), (m, a)


def test_hull_triangle():
    h = convex_hull([(0, 0), (1, 0), (0, 1)])
    assert h.dim == 2 and len(h.facets) == 3 and len(h.vertices) == 3


def test_hull_square_with_interior_and_duplicates():
    pts = [(0, 0), (2, 0), (0, 2), (2, 2), (1, 1), (1, 0), (2, 2)]
    h = convex_hull(pts)
    assert sorted(h.vertices) == [(0, 0), (0, 2), (2, 0), (2, 2)]
    assert len(h.facets) == 4


def test_hull_collinear():
    h = convex_hull([(0, 0, 0), (1, 1, 1), (Fraction(1, 2),) * 3, (3, 3, 3)])
    assert h.dim == 1
    assert sorted(h.vertices) == [(0, 0, 0), (3, 3, 3)]
    assert len(h.equations) == 2
    for p in [(0, 0, 0), (1, 1, 1)]:
        assert h.contains(p)
    assert not h.contains((1, 1, 0))


def test_hull_single_point_and_errors():
    h = convex_hull([(1, 2)])
    assert h.dim == 0 and h.vertices == [(1, 2)]
    with pytest.raises(ValueError):
        convex_hull([])
    with pytest.raises(ValueError):
        convex_hull([tuple(range(9))])


def test_hull_cube_and_cross_polytope():
    cube = list(itertools.product((0, 1), repeat=4))
    h = convex_hull(cube)
    assert len(h.facets) == 8 and len(h.vertices) == 16
    cross = []
    for k in range(4):
        for s in (1, -1):
            v = [0] * 4
            v[k] = s
            cross.append(tuple(v))
    h = convex_hull(cross + [(0, 0, 0, 0)])
    assert len(h.facets) == 16 and len(h.vertices) == 8


def test_hull_planar_in_space():
    pts = [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1), (Fraction(1, 2), Fraction(1, 2), 1)]
    h = convex_hull(pts)
    assert h.dim == 2 and len(h.vertices) == 4 and len(h.facets) == 4
    assert h.equations == [((0, 0, 1), Fraction(1))]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(*[st.integers(-4, 4)] * 3), min_size=1, max_size=25))
def test_hull_properties(points):
    h = convex_hull(points)
    for p in points:
        assert h.contains(p)
    for n, o in h.facets:
        tight = [p for p in points if sum(x * y for x, y in zip(n, p)) == o]
        assert len(tight) >= h.dim  # every facet is supported by the input
    for v in h.vertices:
        assert tuple(Fraction(x) for x in v) in {tuple(Fraction(x) for x in p) for p in points}


def test_a1_vertex():
    sample = dilation_sample(A1, (1, 1, 1), (1, 1, 1), 2)
    h = convex_hull(sample)
    assert (0, 1, Fraction(1, 2)) in h.vertices
    assert (3, 0, 0) in h.vertices
    assert certify_vertex(A1, (1, 1, 1), (1, 1, 1), (0, 1, Fraction(1, 2)))
    for v in h.vertices:
        assert certify_vertex(A1, (1, 1, 1), (1, 1, 1), v)
    # the interior-ish point of an edge is not a vertex
    assert not certify_vertex(A1, (1, 1, 1), (1, 1, 1), (0, Fraction(1, 2), 0))


def test_ii_box_contains_lattice_points():
    box = set(ii_box(C2, (1, 2, 1, 2), (1, 1, 1, 1)))
    assert set(lattice_points(C2, (1, 2, 1, 2), (1, 1, 1, 1))) <= box


@pytest.mark.parametrize(
    "name,word,m,depth",
    [("A2", (1, 2, 1), (1, 1, 1), 2), ("A1", (1, 1, 1), (1, 1, 1), 2), ("A2", (1, 2, 1, 2), (1, 1, 1, 1), 1),
     ("C2", (2, 1, 2, 1), (1, 0, 1, 1), 2), ("G2", (2, 1, 2), (1, 1, 1), 2)],
)
def test_verify_passes(name, word, m, depth):
    rep = verify(parse_type(name), word, m, depth)
    assert rep.passed, rep.to_json()
    assert all(c.checked > 0 for c in rep.checks if c.name != "b_semigroup" or depth >= 2)
