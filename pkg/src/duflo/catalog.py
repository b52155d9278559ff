"""Built-in algebras and representations used by the verification suites.

Catalog algebras: abelian(n) (names "abelian2", "abelian3", ...),
heisenberg3, sl2, gl2.  Every algebra also exposes its adjoint
representation; the named ones below are small faithful favorites.
"""

import json
import os

from .lie import LieAlgebra, Representation, adjoint_rep, algebra_from_json


def _zero_constants(n):
    return [[[0] * n for _ in range(n)] for _ in range(n)]


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(
        _zero_constants(n),
        labels=[f"x{i+1}" for i in range(n)],
        name=f"abelian{n}",
    )


def heisenberg3() -> LieAlgebra:
    # [x, y] = z, z central
    c = _zero_constants(3)
    c[0][1][2] = 1
    c[1][0][2] = -1
    return LieAlgebra(c, labels=["x", "y", "z"], name="heisenberg3")


def sl2() -> LieAlgebra:
    # basis (e, f, h): [h,e] = 2e, [h,f] = -2f, [e,f] = h
    c = _zero_constants(3)
    c[2][0][0] = 2
    c[0][2][0] = -2
    c[2][1][1] = -2
    c[1][2][1] = 2
    c[0][1][2] = 1
    c[1][0][2] = -1
    return LieAlgebra(c, labels=["e", "f", "h"], name="sl2")


def gl2() -> LieAlgebra:
    # basis (E11, E12, E21, E22): [E_ab, E_cd] = d_bc E_ad - d_da E_cb
    idx = {(1, 1): 0, (1, 2): 1, (2, 1): 2, (2, 2): 3}
    c = _zero_constants(4)
    for (a, b), i in idx.items():
        for (cc, d), j in idx.items():
            if b == cc:
                c[i][j][idx[(a, d)]] += 1
            if d == a:
                c[i][j][idx[(cc, b)]] -= 1
    return LieAlgebra(c, labels=["E11", "E12", "E21", "E22"], name="gl2")


def _sl2_standard(alg):
    return Representation(
        alg,
        [
            [[0, 1], [0, 0]],  # e
            [[0, 0], [1, 0]],  # f
            [[1, 0], [0, -1]],  # h
        ],
        name="standard",
    )


def _sl2_sym3(alg):
    # action on cubic monomials x^(3-k) y^k, k = 0..3
    e = [[0] * 4 for _ in range(4)]
    f = [[0] * 4 for _ in range(4)]
    h = [[0] * 4 for _ in range(4)]
    for k in range(4):
        h[k][k] = 3 - 2 * k
        if k > 0:
            e[k - 1][k] = k  # e = x d/dy
        if k < 3:
            f[k + 1][k] = 3 - k  # f = y d/dx
    return Representation(alg, [e, f, h], name="sym3")


def _heisenberg_standard(alg):
    return Representation(
        alg,
        [
            [[0, 1, 0], [0, 0, 0], [0, 0, 0]],  # x
            [[0, 0, 0], [0, 0, 1], [0, 0, 0]],  # y
            [[0, 0, 1], [0, 0, 0], [0, 0, 0]],  # z
        ],
        name="standard",
    )


def _gl2_standard(alg):
    units = {
        0: [[1, 0], [0, 0]],
        1: [[0, 1], [0, 0]],
        2: [[0, 0], [1, 0]],
        3: [[0, 0], [0, 1]],
    }
    return Representation(alg, [units[i] for i in range(4)], name="standard")


def _abelian_zero(alg, dimV=2):
    z = [[0] * dimV for _ in range(dimV)]
    return Representation(alg, [z] * alg.dim, name="zero")


def _abelian_diag(alg):
    n = alg.dim
    mats = []
    for i in range(n):
        m = [[0] * n for _ in range(n)]
        m[i][i] = 1
        mats.append(m)
    return Representation(alg, mats, name="diag")


def algebra_names() -> list[str]:
    return ["abelian2", "abelian3", "heisenberg3", "sl2", "gl2"]


def load_algebra(spec: str) -> LieAlgebra:
    """Resolve a catalog name, 'abelianN', or a path to a JSON definition."""
    if spec.startswith("abelian"):
        tail = spec[len("abelian"):]
        if tail.isdigit() and int(tail) >= 1:
            return abelian(int(tail))
    if spec == "heisenberg3":
        return heisenberg3()
    if spec == "sl2":
        return sl2()
    if spec == "gl2":
        return gl2()
    if spec.endswith(".json") or os.path.sep in spec or os.path.exists(spec):
        with open(spec, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
        return algebra_from_json(obj, name=os.path.basename(spec))
    raise KeyError(f"unknown algebra {spec!r}; try one of {algebra_names()} or a JSON file")


def representations(alg: LieAlgebra) -> dict[str, Representation]:
    """All named representations of a catalog algebra (plus the adjoint)."""
    reps: dict[str, Representation] = {}
    if alg.name.startswith("abelian"):
        reps["zero"] = _abelian_zero(alg)
        reps["diag"] = _abelian_diag(alg)
    elif alg.name == "heisenberg3":
        reps["standard"] = _heisenberg_standard(alg)
    elif alg.name == "sl2":
        reps["standard"] = _sl2_standard(alg)
        reps["sym3"] = _sl2_sym3(alg)
    elif alg.name == "gl2":
        reps["standard"] = _gl2_standard(alg)
    reps["adjoint"] = adjoint_rep(alg)
    return reps


def load_representation(alg: LieAlgebra, name: str) -> Representation:
    reps = representations(alg)
    try:
        return reps[name]
    except KeyError:
        raise KeyError(
            f"algebra {alg.name or alg.dim} has no representation {name!r}; "
            f"available: {sorted(reps)}"
        )
