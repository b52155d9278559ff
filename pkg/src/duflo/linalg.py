"""Exact rational dense linear algebra.

Scalars are fractions.Fraction (arbitrary precision, always in lowest
terms, positive denominator), matrices are immutable tuples of tuples.
Products and row reduction run through duflo.kernels so the compiled
backend is used when available.
"""

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .kernels import matmul_pairs, rref_int

Q = Fraction


class ShapeMismatch(Exception):
    """Raised when two matrices have incompatible shapes."""

    def __init__(self, op: str, a_shape: tuple, b_shape: tuple):
        self.op = op
        self.a_shape = a_shape
        self.b_shape = b_shape
        super().__init__(f"{op}: incompatible shapes {a_shape} and {b_shape}")


def parse_rational(value) -> Fraction:
    """Accept ints, Fractions, and 'p/q' strings (the JSON coefficient form)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational literal: {value!r}")


def format_rational(value: Fraction) -> str:
    return str(value)


class Matrix:
    """Immutable dense matrix over the rationals."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable]):
        rows = tuple(tuple(parse_rational(x) for x in row) for row in entries)
        self.entries = rows
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != self.cols:
                raise ValueError("ragged rows in matrix literal")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def stack(cls, mats: Sequence["Matrix"]) -> "Matrix":
        """Vertical concatenation."""
        cols = mats[0].cols
        for m in mats:
            if m.cols != cols:
                raise ShapeMismatch("stack", (mats[0].rows, cols), (m.rows, m.cols))
        return cls([row for m in mats for row in m.entries])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"Matrix[{self.rows}x{self.cols}: {body}]"

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ShapeMismatch("add", self.shape, other.shape)
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ShapeMismatch("sub", self.shape, other.shape)
        return Matrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self.entries])

    def scale(self, c) -> "Matrix":
        c = parse_rational(c)
        return Matrix([[c * a for a in row] for row in self.entries])

    def __rmul__(self, c) -> "Matrix":
        return self.scale(c)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def transpose(self) -> "Matrix":
        return Matrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def apply(self, vec: Sequence) -> list[Fraction]:
        """Matrix-vector product."""
        if len(vec) != self.cols:
            raise ShapeMismatch("apply", self.shape, (len(vec), 1))
        vec = [parse_rational(x) for x in vec]
        return [sum((a * x for a, x in zip(row, vec)), Q(0)) for row in self.entries]

    def commutator(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other) - mat_mul(other, self)

    def to_int_rows(self) -> list[list[int]]:
        """Clear denominators row by row (preserves the row space and kernel)."""
        out = []
        for row in self.entries:
            lcm = 1
            for x in row:
                d = x.denominator
                lcm = lcm // gcd(lcm, d) * d
            out.append([int(x * lcm) for x in row])
        return out

    def rref(self) -> tuple[list[int], list[list[int]]]:
        """Canonical integer RREF (pivot columns, primitive pivot rows)."""
        return rref_int(self.to_int_rows(), self.rows, self.cols)

    def rank(self) -> int:
        return len(self.rref()[0])

    def kernel(self) -> list[list[Fraction]]:
        return kernel(self)

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.entries]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Exact matrix product through the selected kernel backend."""
    if a.cols != b.rows:
        raise ShapeMismatch("mat_mul", a.shape, b.shape)
    anum = [x.numerator for row in a.entries for x in row]
    aden = [x.denominator for row in a.entries for x in row]
    bnum = [x.numerator for row in b.entries for x in row]
    bden = [x.denominator for row in b.entries for x in row]
    cnum, cden = matmul_pairs(anum, aden, bnum, bden, a.rows, a.cols, b.cols)
    m = b.cols
    return Matrix(
        [
            [Fraction(cnum[i * m + j], cden[i * m + j]) for j in range(m)]
            for i in range(a.rows)
        ]
    )


def kernel(m: Matrix) -> list[list[Fraction]]:
    """Basis of the right nullspace {v : m v = 0}.

    Deterministic: computed from the canonical RREF, one basis vector per
    free column in ascending column order.  The zero matrix returns the
    standard basis, a full-rank square matrix returns [].
    """
    piv_cols, red = m.rref()
    piv_set = set(piv_cols)
    basis = []
    for f in range(m.cols):
        if f in piv_set:
            continue
        v = [Q(0)] * m.cols
        v[f] = Q(1)
        for r, p in enumerate(piv_cols):
            v[p] = Fraction(-red[r][f], red[r][p])
        basis.append(v)
    return basis
