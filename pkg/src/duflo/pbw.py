"""Symmetrization diagram over a Lie algebra, evaluated in End(V).

Elements of the tensor algebra are finite rational combinations of words in
basis indices; symmetric elements are combinations of sorted monomials.
Two maps send a word to an operator on a representation V:

  * theta composes action matrices, so the word (i1, ..., ik) becomes the
    product rho(x_{i1}) ... rho(x_{ik}) (rightmost letter acts first);
  * phi contracts the iterated coaction V -> V (x) g*^(x)k against the
    word, with the innermost (first applied) coaction factor paired with
    the last letter.

Both conventions together make phi and theta agree on every word, which is
exactly the adjunction bookkeeping the diagram check exercises.  The
enveloping algebra is never materialized: everything is compared inside
End(V), and the symmetrization map carries the 1/n! permutation sum.

phi is deliberately written with raw index loops rather than the matrix
backend so the two diagram paths share no arithmetic code.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .lie import LieAlgebra, Representation
from .linalg import Matrix, Q, parse_rational

Word = tuple[int, ...]
SymMonomial = tuple[int, ...]  # sorted ascending


class DegreeOverflow(Exception):
    def __init__(self, length: int, max_degree: int):
        super().__init__(f"word of length {length} exceeds declared max degree {max_degree}")


class TensorElement:
    """Finite map from words to rational coefficients, zeros dropped."""

    __slots__ = ("terms", "max_degree")

    def __init__(self, terms=None, max_degree: int | None = None):
        tidy: dict[Word, Fraction] = {}
        for w, c in (terms or {}).items():
            c = parse_rational(c)
            if c == 0:
                continue
            w = tuple(int(i) for i in w)
            if max_degree is not None and len(w) > max_degree:
                raise DegreeOverflow(len(w), max_degree)
            tidy[w] = tidy.get(w, Q(0)) + c
        self.terms = {w: c for w, c in tidy.items() if c != 0}
        self.max_degree = max_degree

    @classmethod
    def word(cls, w, coeff=1) -> "TensorElement":
        return cls({tuple(w): coeff})

    def __add__(self, other: "TensorElement") -> "TensorElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Q(0)) + c
        return TensorElement(out)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + other.scale(-1)

    def scale(self, c) -> "TensorElement":
        c = parse_rational(c)
        return TensorElement({w: c * v for w, v in self.terms.items()})

    def __rmul__(self, c) -> "TensorElement":
        return self.scale(c)

    def __eq__(self, other):
        return isinstance(other, TensorElement) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def swap_letters(self, pos: int) -> "TensorElement":
        """Transpose letters pos and pos+1 in every word (symmetry probe)."""
        out = {}
        for w, c in self.terms.items():
            if len(w) > pos + 1:
                w = w[:pos] + (w[pos + 1], w[pos]) + w[pos + 2:]
            out[w] = out.get(w, Q(0)) + c
        return TensorElement(out)

    def __repr__(self):
        if not self.terms:
            return "TensorElement(0)"
        parts = [f"{c}*{w}" for w, c in sorted(self.terms.items())]
        return "TensorElement(" + " + ".join(parts) + ")"


class SymElement:
    """Finite map from sorted monomials to rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        tidy: dict[SymMonomial, Fraction] = {}
        for m, c in (terms or {}).items():
            c = parse_rational(c)
            if c == 0:
                continue
            m = tuple(sorted(int(i) for i in m))
            tidy[m] = tidy.get(m, Q(0)) + c
        self.terms = {m: c for m, c in tidy.items() if c != 0}

    @classmethod
    def monomial(cls, m, coeff=1) -> "SymElement":
        return cls({tuple(m): coeff})

    def __add__(self, other: "SymElement") -> "SymElement":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Q(0)) + c
        return SymElement(out)

    def __sub__(self, other: "SymElement") -> "SymElement":
        return self + other.scale(-1)

    def scale(self, c) -> "SymElement":
        c = parse_rational(c)
        return SymElement({m: c * v for m, v in self.terms.items()})

    def __rmul__(self, c) -> "SymElement":
        return self.scale(c)

    def __mul__(self, other: "SymElement") -> "SymElement":
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                out[m] = out.get(m, Q(0)) + c1 * c2
        return SymElement(out)

    def __eq__(self, other):
        return isinstance(other, SymElement) and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def describe(self, alg: LieAlgebra) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            mono = "*".join(alg.labels[i] for i in m) or "1"
            parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        if not self.terms:
            return "SymElement(0)"
        parts = [f"{c}*{m}" for m, c in sorted(self.terms.items())]
        return "SymElement(" + " + ".join(parts) + ")"


def symmetrize(s) -> TensorElement:
    """The 1/n! full permutation sum, monomial by monomial.

    Accepts a monomial tuple or a SymElement.  Repeated letters are summed
    with multiplicity, exactly as the n! permutation terms dictate.
    """
    if isinstance(s, tuple):
        s = SymElement.monomial(s)
    out: dict[Word, Fraction] = {}
    for m, coeff in s.terms.items():
        n = len(m)
        if n == 0:
            out[()] = out.get((), Q(0)) + coeff
            continue
        share = coeff / factorial(n)
        for perm in itertools.permutations(m):
            out[perm] = out.get(perm, Q(0)) + share
    return TensorElement(out)


class LambdaMap:
    """The representation reshaped as a coaction V -> V (x) g*.

    data[out][in][g] is the matrix entry of rho(x_g); contracting the
    g*-slot with x_i reproduces rho(x_i) by construction, and
    adjunction_check re-derives the reshape from the bilinear action map.
    """

    __slots__ = ("rep", "data")

    def __init__(self, rep: Representation):
        dv, n = rep.dimV, rep.algebra.dim
        self.rep = rep
        self.data = tuple(
            tuple(
                tuple(rep.matrices[g][o, i] for g in range(n)) for i in range(dv)
            )
            for o in range(dv)
        )

    def contract_letter(self, g: int) -> Matrix:
        return Matrix([[row[g] for row in plane] for plane in self.data])


def theta(rep: Representation, t: TensorElement) -> Matrix:
    """Word-to-operator map through composition of action matrices."""
    acc = Matrix.zeros(rep.dimV, rep.dimV)
    ident = Matrix.identity(rep.dimV)
    for w, c in t.terms.items():
        m = ident
        for letter in w:
            m = m @ rep.matrices[letter]
        acc = acc + m.scale(c)
    return acc


@lru_cache(maxsize=None)
def _iterated_coaction(rep: Representation, k: int):
    """k-fold coaction tensor: dict word -> dimV x dimV entry table.

    Built by repeatedly applying the coaction to the V-slot with plain
    index sums (no matrix backend).  Slot order is arranged so that the
    entry at word w is the operator phi assigns to w.
    """
    dv, n = rep.dimV, rep.algebra.dim
    lam = LambdaMap(rep).data
    if k == 0:
        return {(): tuple(tuple(Q(1) if o == i else Q(0) for i in range(dv)) for o in range(dv))}
    prev = _iterated_coaction(rep, k - 1)
    out = {}
    for w, table in prev.items():
        for g in range(n):
            ent = []
            for o in range(dv):
                row = []
                for i in range(dv):
                    s = Q(0)
                    for mid in range(dv):
                        a = lam[o][mid][g]
                        if a != 0:
                            s += a * table[mid][i]
                    row.append(s)
                ent.append(tuple(row))
            out[(g,) + w] = tuple(ent)
    return out


def phi(rep: Representation, t: TensorElement) -> Matrix:
    """Word-to-operator map through iterated coaction contraction."""
    dv = rep.dimV
    acc = [[Q(0)] * dv for _ in range(dv)]
    for w, c in t.terms.items():
        table = _iterated_coaction(rep, len(w))[w]
        for o in range(dv):
            for i in range(dv):
                v = table[o][i]
                if v != 0:
                    acc[o][i] += c * v
    return Matrix(acc)


def s_to_hom(rep: Representation, s: SymElement) -> Matrix:
    """Symmetric element to operator: symmetrize, then contract coactions.

    Degree matching makes the exponential of the coaction a finite sum:
    the degree-n component only ever meets the n-fold coaction over n!.
    """
    if isinstance(s, tuple):
        s = SymElement.monomial(s)
    return phi(rep, symmetrize(s))


def derivation_apply(alg: LieAlgebra, i: int, s: SymElement) -> SymElement:
    """Extend ad(x_i) to symmetric elements as a derivation."""
    if isinstance(s, tuple):
        s = SymElement.monomial(s)
    out: dict[SymMonomial, Fraction] = {}
    for m, coeff in s.terms.items():
        for pos, letter in enumerate(m):
            rest = m[:pos] + m[pos + 1:]
            for k, c in enumerate(alg.bracket(i, letter)):
                if c == 0:
                    continue
                mono = tuple(sorted(rest + (k,)))
                out[mono] = out.get(mono, Q(0)) + coeff * c
    return SymElement(out)


def sym_basis(dim: int, degree: int) -> list[SymMonomial]:
    return list(itertools.combinations_with_replacement(range(dim), degree))


def invariants_s(alg: LieAlgebra, degree: int) -> list[SymElement]:
    """Basis of the invariant subspace of degree-d symmetric elements.

    Stacks the derivation action of every basis element and takes the
    exact nullspace; every returned element is re-verified by direct
    application before it is handed out.
    """
    basis = sym_basis(alg.dim, degree)
    index = {m: c for c, m in enumerate(basis)}
    nb = len(basis)
    if degree == 0:
        return [SymElement({(): 1})]
    blocks = []
    for i in range(alg.dim):
        rows = [[Q(0)] * nb for _ in range(nb)]
        for c, m in enumerate(basis):
            img = derivation_apply(alg, i, SymElement.monomial(m))
            for mono, coeff in img.terms.items():
                rows[index[mono]][c] += coeff
        blocks.append(Matrix(rows))
    stacked = Matrix.stack(blocks)
    out = []
    for vec in stacked.kernel():
        elem = SymElement({basis[c]: v for c, v in enumerate(vec)})
        for i in range(alg.dim):
            if not derivation_apply(alg, i, elem).is_zero():
                raise AssertionError("invariant candidate fails re-verification")
        out.append(elem)
    return out


@dataclass
class DiagramReport:
    element: SymElement
    path_theta: Matrix
    path_contract: Matrix
    equal: bool
    difference: Matrix | None
    central: bool | None  # image commutes with the action; None if not asked


def check_pbw_diagram(
    rep: Representation, s: SymElement, check_central: bool = False
) -> DiagramReport:
    """Compare the two routes from a symmetric element to End(V).

    Route one symmetrizes and composes matrices (theta); route two
    symmetrizes and contracts iterated coactions (phi).  Exact equality is
    the commutativity of the square.  With check_central=True the report
    also records whether the image commutes with every action matrix,
    which is expected when s is invariant.
    """
    if isinstance(s, tuple):
        s = SymElement.monomial(s)
    sym = symmetrize(s)
    a = theta(rep, sym)
    b = phi(rep, sym)
    equal = a == b
    central = None
    if check_central:
        central = all(b.commutator(m).is_zero() for m in rep.matrices)
    return DiagramReport(
        element=s,
        path_theta=a,
        path_contract=b,
        equal=equal,
        difference=None if equal else a - b,
        central=central,
    )


@dataclass
class AdjunctionReport:
    equal: bool
    failures: list[int]


def adjunction_check(rep: Representation) -> AdjunctionReport:
    """Re-derive the coaction from the bilinear action map and compare.

    The action g (x) V -> V is laid out as one (dim*dimV) x dimV matrix by
    applying each rho(x_g) to the basis of V; reshaping its entries along
    the adjunction and contracting the g*-slot with x_i must reproduce
    rho(x_i) entry for entry.
    """
    alg, dv = rep.algebra, rep.dimV
    bilinear = {}
    for g in range(alg.dim):
        for j in range(dv):
            col = rep.matrices[g].apply([1 if t == j else 0 for t in range(dv)])
            for o in range(dv):
                bilinear[(g, o, j)] = col[o]
    lam = LambdaMap(rep)
    failures = []
    for i in range(alg.dim):
        contracted = lam.contract_letter(i)
        direct = Matrix([[bilinear[(i, o, j)] for j in range(dv)] for o in range(dv)])
        if contracted != direct:
            failures.append(i)
    return AdjunctionReport(equal=not failures, failures=failures)
