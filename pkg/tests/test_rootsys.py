import pytest

from gendem.rootsys import (
    RootSystemError,
    cartan_from_matrix,
    cartan_from_type,
    is_reduced,
    pairing,
    parse_type,
    positive_roots,
    rootsystem_from_json,
    simple_reflection,
    simple_root,
    weyl_dim,
)


def test_orientations():
    assert parse_type("C2").cartan == ((2, -2), (-1, 2))
    assert parse_type("C2").sym == (1, 2)
    assert parse_type("G2").cartan == ((2, -3), (-1, 2))
    assert parse_type("G2").sym == (1, 3)
    assert parse_type("B2").cartan == ((2, -1), (-2, 2))


@pytest.mark.parametrize(
    "name,n_pos",
    [("A1", 1), ("A2", 3), ("A3", 6), ("B2", 4), ("B3", 9), ("C3", 9), ("D4", 12),
     ("G2", 6), ("F4", 24), ("E6", 36)],
)
def test_positive_root_counts(name, n_pos):
    assert len(positive_roots(parse_type(name))) == n_pos


@pytest.mark.parametrize(
    "name,lam,dim",
    [("A2", (1, 0), 3), ("A2", (1, 1), 8), ("C2", (0, 1), 5), ("C2", (1, 0), 4),
     ("G2", (1, 0), 7), ("G2", (0, 1), 14), ("B3", (0, 0, 1), 8), ("F4", (0, 0, 0, 1), 26),
     ("E6", (1, 0, 0, 0, 0, 0), 27)],
)
def test_weyl_dim(name, lam, dim):
    assert weyl_dim(parse_type(name), lam) == dim


def test_weyl_dim_rejects_non_dominant():
    with pytest.raises(RootSystemError):
        weyl_dim(parse_type("A2"), (-1, 1))


def test_reflection_and_roots():
    cd = parse_type("A2")
    assert simple_root(cd, 1) == (2, -1)
    assert simple_reflection(cd, 1, (1, 0)) == (-1, 1)
    assert pairing(cd, (3, 4), 2) == 4


@pytest.mark.parametrize(
    "name,word,ok",
    [("A2", (1, 2, 1), True), ("A2", (1, 2, 1, 2), False), ("A1", (1, 1), False),
     ("C2", (1, 2, 1, 2), True), ("G2", (1, 2, 1, 2, 1, 2), True), ("G2", (1, 2, 1, 2, 1, 2, 1), False)],
)
def test_is_reduced(name, word, ok):
    assert is_reduced(parse_type(name), word) is ok


def test_matrix_validation():
    with pytest.raises(RootSystemError):
        cartan_from_matrix([[2, -1], [0, 2]])
    with pytest.raises(RootSystemError):
        cartan_from_matrix([[2, -2], [-2, 2]])  # affine, not finite
    with pytest.raises(RootSystemError):
        cartan_from_type("A", 0)
    with pytest.raises(RootSystemError):
        parse_type("X2")


def test_json_roundtrip():
    cd = rootsystem_from_json({"cartan": [[2, -3], [-1, 2]]})
    assert cd.sym == (1, 3)
    assert rootsystem_from_json({"type": "G", "rank": 2}).cartan == cd.cartan
