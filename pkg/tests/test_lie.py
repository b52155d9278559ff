"""Lie algebra and representation validation."""

import pytest

from duflo import catalog
from duflo.lie import (
    AntisymmetryViolation,
    BracketMismatch,
    JacobiViolation,
    LieAlgebra,
    Representation,
    adjoint_rep,
    algebra_from_json,
)
from duflo.linalg import Matrix


def test_abelian_valid():
    alg = catalog.abelian(2)
    assert alg.dim == 2
    assert all(c == 0 for p in alg.constants for r in p for c in r)


def test_sl2_valid_and_brackets():
    alg = catalog.sl2()
    # [e, f] = h
    assert alg.bracket(0, 1) == (0, 0, 1)
    # [h, e] = 2e
    assert alg.bracket(2, 0) == (2, 0, 0)


def test_antisymmetry_violation():
    # [x, y] = x but [y, x] = x as well
    c = [[[0, 0], [1, 0]], [[1, 0], [0, 0]]]
    with pytest.raises(AntisymmetryViolation) as exc:
        LieAlgebra(c)
    assert exc.value.pair == (0, 1)


def test_jacobi_violation_names_triple():
    # [x,y] = z, [y,z] = x, [z,x] = x: cyclic sum is [[z,x],y] = z != 0
    c = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    c[0][1][2] = 1
    c[1][0][2] = -1
    c[1][2][0] = 1
    c[2][1][0] = -1
    c[2][0][0] = 1
    c[0][2][0] = -1
    with pytest.raises(JacobiViolation) as exc:
        LieAlgebra(c)
    assert exc.value.triple == (0, 1, 2)


def test_sl2_standard_rep_valid():
    rep = catalog.representations(catalog.sl2())["standard"]
    assert rep.dimV == 2
    assert rep.matrices[2] == Matrix([[1, 0], [0, -1]])


def test_swapped_rep_rejected():
    alg = catalog.sl2()
    e = [[0, 1], [0, 0]]
    f = [[0, 0], [1, 0]]
    h = [[1, 0], [0, -1]]
    with pytest.raises(BracketMismatch) as exc:
        Representation(alg, [f, e, h])  # e and f exchanged
    assert exc.value.pair == (0, 1)


def test_zero_rep_of_abelian_valid():
    alg = catalog.abelian(2)
    rep = catalog.representations(alg)["zero"]
    assert all(m.is_zero() for m in rep.matrices)


def test_adjoint_abelian_is_zero():
    rep = adjoint_rep(catalog.abelian(3))
    assert all(m.is_zero() for m in rep.matrices)


def test_adjoint_sl2_ad_h_diagonal():
    rep = adjoint_rep(catalog.sl2())
    assert rep.matrices[2] == Matrix([[2, 0, 0], [0, -2, 0], [0, 0, 0]])


def test_adjoint_center_acts_by_zero():
    rep = adjoint_rep(catalog.heisenberg3())
    assert rep.matrices[2].is_zero()


def test_adjoint_passes_validation_for_all_catalog_algebras():
    for name in catalog.algebra_names():
        adjoint_rep(catalog.load_algebra(name))  # constructor validates


def test_algebra_from_json():
    obj = {
        "dim": 3,
        "labels": ["x", "y", "z"],
        "brackets": [{"i": 0, "j": 1, "coeffs": ["0", "0", "1"]}],
    }
    alg = algebra_from_json(obj)
    assert alg.bracket(0, 1) == (0, 0, 1)
    assert alg.bracket(1, 0) == (0, 0, -1)


def test_algebra_from_json_rejects_duplicates():
    obj = {
        "dim": 2,
        "brackets": [
            {"i": 0, "j": 1, "coeffs": ["0", "0"]},
            {"i": 1, "j": 0, "coeffs": ["0", "0"]},
        ],
    }
    with pytest.raises(ValueError):
        algebra_from_json(obj)


def test_catalog_rep_dimensions_within_cap():
    for name in ["abelian2", "heisenberg3", "sl2", "gl2"]:
        alg = catalog.load_algebra(name)
        for rep in catalog.representations(alg).values():
            assert rep.dimV <= 5
