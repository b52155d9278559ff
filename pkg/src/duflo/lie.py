"""Finite-dimensional Lie algebras from structure constants, with eager
axiom validation, plus representations given by explicit matrices.

Constructors certify antisymmetry, the Jacobi identity, and the bracket
relation of representations before any object escapes, so downstream
diagram checks never run on invalid data.
"""

from fractions import Fraction
from typing import Sequence

from .linalg import Matrix, Q, parse_rational


class AntisymmetryViolation(Exception):
    def __init__(self, i: int, j: int):
        self.pair = (i, j)
        super().__init__(
            f"structure constants violate [x_{i},x_{j}] = -[x_{j},x_{i}]"
        )


class JacobiViolation(Exception):
    def __init__(self, triple: tuple[int, int, int], defect):
        self.triple = triple
        self.defect = defect
        i, j, k = triple
        super().__init__(
            f"Jacobi identity fails on basis triple ({i},{j},{k}); "
            f"cyclic sum has coefficients {defect}"
        )


class BracketMismatch(Exception):
    def __init__(self, i: int, j: int, expected: Matrix, got: Matrix):
        self.pair = (i, j)
        self.expected = expected
        self.got = got
        super().__init__(
            f"representation violates the bracket on pair ({i},{j}): "
            f"rho([x_{i},x_{j}]) = {expected!r} but [rho(x_{i}),rho(x_{j})] = {got!r}"
        )


class LieAlgebra:
    """A Lie algebra over Q presented by structure constants.

    constants[i][j][k] is the coefficient of x_k in [x_i, x_j].
    """

    __slots__ = ("dim", "labels", "constants", "name")

    def __init__(self, constants, labels: Sequence[str] | None = None, name: str = ""):
        c = tuple(
            tuple(tuple(parse_rational(x) for x in row) for row in plane)
            for plane in constants
        )
        n = len(c)
        for plane in c:
            if len(plane) != n or any(len(row) != n for row in plane):
                raise ValueError("structure constants must be indexed over dim^3")
        self.dim = n
        self.constants = c
        self.labels = tuple(labels) if labels else tuple(f"x{i+1}" for i in range(n))
        self.name = name
        if len(self.labels) != n:
            raise ValueError("label count does not match dimension")
        self._check_antisymmetry()
        self._check_jacobi()

    def _check_antisymmetry(self):
        c = self.constants
        for i in range(self.dim):
            for j in range(i, self.dim):
                for k in range(self.dim):
                    if c[i][j][k] != -c[j][i][k]:
                        raise AntisymmetryViolation(i, j)

    def _check_jacobi(self):
        c = self.constants
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    defect = []
                    ok = True
                    for l in range(n):
                        s = Q(0)
                        for m in range(n):
                            s += c[i][j][m] * c[m][k][l]
                            s += c[j][k][m] * c[m][i][l]
                            s += c[k][i][m] * c[m][j][l]
                        defect.append(s)
                        if s != 0:
                            ok = False
                    if not ok:
                        raise JacobiViolation((i, j, k), [str(x) for x in defect])

    def bracket(self, i: int, j: int) -> tuple[Fraction, ...]:
        """Coefficient vector of [x_i, x_j]."""
        return self.constants[i][j]

    def __eq__(self, other):
        return isinstance(other, LieAlgebra) and self.constants == other.constants

    def __hash__(self):
        return hash(self.constants)

    def __repr__(self):
        return f"LieAlgebra({self.name or 'dim ' + str(self.dim)})"


class Representation:
    """A Lie algebra acting on Q^dimV by one matrix per basis element."""

    __slots__ = ("algebra", "dimV", "matrices", "name")

    def __init__(self, algebra: LieAlgebra, matrices: Sequence, name: str = ""):
        mats = tuple(m if isinstance(m, Matrix) else Matrix(m) for m in matrices)
        if len(mats) != algebra.dim:
            raise ValueError("need one action matrix per basis element")
        dv = mats[0].rows if mats else 0
        for m in mats:
            if m.shape != (dv, dv):
                raise ValueError("action matrices must be square of a common size")
        self.algebra = algebra
        self.dimV = dv
        self.matrices = mats
        self.name = name
        self._check_brackets()

    def _check_brackets(self):
        n = self.algebra.dim
        for i in range(n):
            for j in range(i + 1, n):
                lhs = self._action_of_bracket(i, j)
                rhs = self.matrices[i].commutator(self.matrices[j])
                if lhs != rhs:
                    raise BracketMismatch(i, j, lhs, rhs)

    def _action_of_bracket(self, i: int, j: int) -> Matrix:
        acc = Matrix.zeros(self.dimV, self.dimV)
        for k, c in enumerate(self.algebra.bracket(i, j)):
            if c != 0:
                acc = acc + self.matrices[k].scale(c)
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, Representation)
            and self.algebra == other.algebra
            and self.matrices == other.matrices
        )

    def __hash__(self):
        return hash((self.algebra, self.matrices))

    def __repr__(self):
        tag = self.name or f"dimV={self.dimV}"
        return f"Representation({self.algebra!r}, {tag})"


def make_lie_algebra(constants, labels=None, name: str = "") -> LieAlgebra:
    return LieAlgebra(constants, labels=labels, name=name)


def make_representation(alg: LieAlgebra, matrices, name: str = "") -> Representation:
    return Representation(alg, matrices, name=name)


def adjoint_rep(alg: LieAlgebra) -> Representation:
    """ad(x_i) on the algebra itself: entry (k, j) is the x_k-coefficient
    of [x_i, x_j].  Validation of the result is equivalent to Jacobi."""
    n = alg.dim
    mats = []
    for i in range(n):
        mats.append(
            Matrix([[alg.constants[i][j][k] for j in range(n)] for k in range(n)])
        )
    return Representation(alg, mats, name="adjoint")


def algebra_from_json(obj, name: str = "") -> LieAlgebra:
    """Build an algebra from the JSON schema

        {"dim": n, "labels": [...],
         "brackets": [{"i": i, "j": j, "coeffs": ["p/q", ...]}]}

    Indices are 0-based.  Each unordered pair may appear once; the opposite
    order is filled in by antisymmetry.  Omitted brackets are zero.
    """
    if not isinstance(obj, dict):
        raise ValueError("algebra definition must be a JSON object")
    try:
        n = int(obj["dim"])
    except (KeyError, TypeError, ValueError):
        raise ValueError("algebra definition needs an integer 'dim'")
    labels = obj.get("labels")
    c = [[[Q(0)] * n for _ in range(n)] for _ in range(n)]
    seen = set()
    for ent in obj.get("brackets", []):
        try:
            i, j = int(ent["i"]), int(ent["j"])
            coeffs = [parse_rational(x) for x in ent["coeffs"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed bracket entry {ent!r}: {exc}")
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"bracket indices ({i},{j}) out of range for dim {n}")
        if len(coeffs) != n:
            raise ValueError(f"bracket ({i},{j}) needs {n} coefficients")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise ValueError(f"duplicate bracket entry for pair {key}")
        seen.add(key)
        c[i][j] = coeffs
        c[j][i] = [-x for x in coeffs]
    return LieAlgebra(c, labels=labels, name=name)
