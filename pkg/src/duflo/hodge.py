"""Bi-exterior model of polyvector fields acting on differential forms.

The model is built on two rank-n spaces: generators a_1..a_n span the
"cohomological" directions and b_1..b_n the holomorphic form directions.
Forms live in /\\A (x) /\\B, polyvector fields in /\\A (x) /\\B*, and the
endomorphism side (line-bundle case) is /\\A.  All generators are odd, so
a term is stored as a pair of bitmasks (amask, bmask) meaning the wedge
word  a_{i1} ^ ... ^ a_{ip} ^ b_{j1} ^ ... ^ b_{jq}  with ascending
indices, and every sign is the permutation sign relative to that order.

Sign conventions (fixed here, pinned by golden tests):

  * wedge is the graded-commutative product on the total degree p + q;
  * a product of generators acts on a class by applying the generators
    right to left, each a_i by left wedge and each dual pair by the left
    interior product (an antiderivation), so the module law
    (u ^ w) -| x = u -| (w -| x) holds on the nose for both contractions;
  * the pairing of a b-generator against a b*-generator (forms acting on
    polyvectors) carries one extra minus sign per pair, the graded swap of
    the defining pairing <b*, b> = 1.  This is what makes the two mixed
    contractions agree on their common (1,1) x (1,1) -> (2,0) overlap.

Everything is exact; no floats anywhere.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .linalg import Matrix, Q, kernel, parse_rational


class ModelMismatch(Exception):
    pass


class BidegreeError(Exception):
    pass


class NonzeroConstantTerm(Exception):
    pass


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask >> i:
        if (mask >> i) & 1:
            out.append(i)
        i += 1
    return out


def merge_sign(first: int, second: int) -> int:
    """Permutation sign for merging two ascending disjoint index blocks."""
    inv = 0
    for i in _bits(first):
        inv += (second & ((1 << i) - 1)).bit_count()
    return -1 if inv & 1 else 1


class _Exterior:
    """Shared storage for classes keyed by (amask, bmask)."""

    __slots__ = ("model", "terms")

    def __init__(self, model: "HodgeModel", terms=None):
        limit = 1 << model.n
        tidy: dict[tuple[int, int], Fraction] = {}
        for (a, b), c in (terms or {}).items():
            c = parse_rational(c)
            if c == 0:
                continue
            if not (0 <= a < limit and 0 <= b < limit):
                raise BidegreeError(f"term ({a},{b}) outside rank-{model.n} model")
            key = (a, b)
            tidy[key] = tidy.get(key, Q(0)) + c
        self.model = model
        self.terms = {k: c for k, c in tidy.items() if c != 0}

    # -- structure ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def bidegrees(self) -> set[tuple[int, int]]:
        return {(a.bit_count(), b.bit_count()) for a, b in self.terms}

    def component(self, p: int, q: int):
        return type(self)(
            self.model,
            {
                k: c
                for k, c in self.terms.items()
                if k[0].bit_count() == p and k[1].bit_count() == q
            },
        )

    def __eq__(self, other):
        return type(self) is type(other) and self.terms == other.terms

    def __add__(self, other):
        _same_model(self, other)
        if type(self) is not type(other):
            raise TypeError("cannot add classes of different kinds")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Q(0)) + c
        return type(self)(self.model, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = parse_rational(c)
        return type(self)(self.model, {k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    # -- literals ----------------------------------------------------------
    @classmethod
    def zero(cls, model):
        return cls(model, {})

    @classmethod
    def one(cls, model):
        return cls(model, {(0, 0): 1})

    @classmethod
    def term(cls, model, a_indices, b_indices, coeff=1):
        """Build a single term from 1-based strictly increasing indices."""
        a = _mask_from_indices(model.n, a_indices)
        b = _mask_from_indices(model.n, b_indices)
        return cls(model, {(a, b): coeff})

    def to_obj(self):
        by_bidegree: dict[tuple[int, int], list] = {}
        for (a, b), c in sorted(self.terms.items()):
            pq = (a.bit_count(), b.bit_count())
            by_bidegree.setdefault(pq, []).append(
                {
                    "a": [i + 1 for i in _bits(a)],
                    "b": [j + 1 for j in _bits(b)],
                    "coeff": str(c),
                }
            )
        return [
            {"bidegree": list(pq), "terms": terms}
            for pq, terms in sorted(by_bidegree.items())
        ]

    @classmethod
    def from_obj(cls, model, obj):
        terms = {}
        for group in obj:
            for t in group["terms"]:
                a = _mask_from_indices(model.n, t["a"])
                b = _mask_from_indices(model.n, t["b"])
                key = (a, b)
                terms[key] = terms.get(key, Q(0)) + parse_rational(t["coeff"])
        return cls(model, terms)

    def __repr__(self):
        if not self.terms:
            return f"{type(self).__name__}(0)"
        parts = []
        for (a, b), c in sorted(self.terms.items()):
            aa = "^".join(f"a{i+1}" for i in _bits(a)) or "1"
            bb = "^".join(f"{self._bsym}{j+1}" for j in _bits(b))
            word = aa + ("^" + bb if bb else "")
            parts.append(f"{c}*{word}")
        return f"{type(self).__name__}(" + " + ".join(parts) + ")"


def _mask_from_indices(n, indices):
    mask = 0
    prev = 0
    for i in indices:
        i = int(i)
        if i <= prev:
            raise BidegreeError("indices must be strictly increasing and 1-based")
        if i > n:
            raise BidegreeError(f"index {i} outside rank-{n} model")
        mask |= 1 << (i - 1)
        prev = i
    return mask


def _same_model(u, v):
    if u.model is not v.model:
        raise ModelMismatch(
            f"classes belong to different models (ranks {u.model.n} and {v.model.n})"
        )


class FormClass(_Exterior):
    """Element of /\\A (x) /\\B (the form side)."""

    _bsym = "b"


class PolyClass(_Exterior):
    """Element of /\\A (x) /\\B* (the polyvector side)."""

    _bsym = "b*"


class ExtClass:
    """Graded element of /\\A, keyed by amask."""

    __slots__ = ("model", "terms")

    def __init__(self, model, terms=None):
        limit = 1 << model.n
        tidy: dict[int, Fraction] = {}
        for a, c in (terms or {}).items():
            c = parse_rational(c)
            if c == 0:
                continue
            if not 0 <= a < limit:
                raise BidegreeError(f"term {a} outside rank-{model.n} model")
            tidy[a] = tidy.get(a, Q(0)) + c
        self.model = model
        self.terms = {k: c for k, c in tidy.items() if c != 0}

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {a.bit_count() for a in self.terms}

    def __eq__(self, other):
        return isinstance(other, ExtClass) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Q(0)) + c
        return ExtClass(self.model, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = parse_rational(c)
        return ExtClass(self.model, {k: c * v for k, v in self.terms.items()})

    def to_obj(self):
        return [
            {"a": [i + 1 for i in _bits(a)], "coeff": str(c)}
            for a, c in sorted(self.terms.items())
        ]

    def __repr__(self):
        if not self.terms:
            return "ExtClass(0)"
        parts = []
        for a, c in sorted(self.terms.items()):
            word = "^".join(f"a{i+1}" for i in _bits(a)) or "1"
            parts.append(f"{c}*{word}")
        return "ExtClass(" + " + ".join(parts) + ")"


class HodgeModel:
    """Rank-n bi-exterior model together with its Todd datum.

    The Todd datum is a form with components only in bidegrees (p, p) and
    constant term 1.  It is an input, not derived: the strictly torus-like
    case is todd_terms = None (datum 1), which makes the Duflo twist the
    identity.
    """

    __slots__ = ("n", "todd", "_sqrt", "_inv_sqrt")

    def __init__(self, n: int, todd: "FormClass | dict | None" = None):
        if n < 1:
            raise ValueError("model rank must be at least 1")
        self.n = n
        self._sqrt = None
        self._inv_sqrt = None
        if todd is None:
            todd = FormClass(self, {(0, 0): 1})
        elif isinstance(todd, dict):
            todd = FormClass(self, todd)
        if todd.model is not self:
            raise ModelMismatch("todd datum must be built on this model")
        for (a, b), _ in todd.terms.items():
            if a.bit_count() != b.bit_count():
                raise BidegreeError("todd datum must have only (p,p) components")
        if todd.terms.get((0, 0), Q(0)) != 1:
            raise BidegreeError("todd datum must have constant term 1")
        self.todd = todd

    def __repr__(self):
        return f"HodgeModel(n={self.n})"


# ---------------------------------------------------------------------------
# products and contractions
# ---------------------------------------------------------------------------

def wedge(u, v):
    """Graded-commutative product; same-kind classes only."""
    _same_model(u, v)
    if type(u) is not type(v):
        raise TypeError("wedge needs two classes of the same kind")
    out: dict[tuple[int, int], Fraction] = {}
    for (a1, b1), c1 in u.terms.items():
        pb1 = b1.bit_count()
        for (a2, b2), c2 in v.terms.items():
            if a1 & a2 or b1 & b2:
                continue
            sign = merge_sign(a1, a2) * merge_sign(b1, b2)
            if (pb1 * a2.bit_count()) & 1:
                sign = -sign
            key = (a1 | a2, b1 | b2)
            out[key] = out.get(key, Q(0)) + sign * c1 * c2
    return type(u)(u.model, out)


def _contract_term(a_act, b_act, a_tgt, b_tgt, pair_sign):
    """One generator word acting on one target term.

    The acting word is [a(a_act), dual(b_act)] and is applied right to
    left: dual generators contract (left interior product, descending
    index order), then the a-part wedges in.  pair_sign is the extra sign
    per contracted pair (+1 for polyvectors on forms, -1 for forms on
    polyvectors).  Returns (sign, amask, bmask) or None.
    """
    if b_act & ~b_tgt or a_act & a_tgt:
        return None
    sign = 1
    b = b_tgt
    jumps_a = a_tgt.bit_count()
    for j in reversed(_bits(b_act)):
        jumps = jumps_a + (b & ((1 << j) - 1)).bit_count()
        if jumps & 1:
            sign = -sign
        if pair_sign < 0:
            sign = -sign
        b &= ~(1 << j)
    sign *= merge_sign(a_act, a_tgt)
    return sign, a_act | a_tgt, b


def contract_T_on_Omega(alpha: PolyClass, v: FormClass) -> FormClass:
    """Polyvector acting on a form: wedge on A, interior product on B.

    A (p,q) polyvector sends a (p',q') form to bidegree (p+p', q'-q); the
    result is zero whenever q > q'.
    """
    _same_model(alpha, v)
    out: dict[tuple[int, int], Fraction] = {}
    for (aa, bs), ca in alpha.terms.items():
        for (av, bv), cv in v.terms.items():
            hit = _contract_term(aa, bs, av, bv, +1)
            if hit is None:
                continue
            sign, a, b = hit
            out[(a, b)] = out.get((a, b), Q(0)) + sign * ca * cv
    return FormClass(alpha.model, out)


def contract_Omega_on_T(v: FormClass, alpha: PolyClass) -> PolyClass:
    """Form acting on a polyvector: the dual contraction.

    This is the only contraction used inside the Duflo operator.  Each
    contracted pair carries the graded-swap sign of the defining pairing.
    """
    _same_model(v, alpha)
    out: dict[tuple[int, int], Fraction] = {}
    for (av, bv), cv in v.terms.items():
        for (aa, bs), ca in alpha.terms.items():
            hit = _contract_term(av, bv, aa, bs, -1)
            if hit is None:
                continue
            sign, a, b = hit
            out[(a, b)] = out.get((a, b), Q(0)) + sign * cv * ca
    return PolyClass(v.model, out)


# ---------------------------------------------------------------------------
# exponentials, square roots, line-bundle classes
# ---------------------------------------------------------------------------

def exp_form(v: FormClass) -> FormClass:
    """Exponential sum of wedge powers over k!; needs zero constant term."""
    if (0, 0) in v.terms:
        raise NonzeroConstantTerm("exp_form needs a class with zero (0,0) part")
    acc = FormClass.one(v.model)
    power = FormClass.one(v.model)
    k = 0
    while True:
        power = wedge(power, v)
        k += 1
        if power.is_zero():
            break
        acc = acc + power.scale(Fraction(1, factorial(k)))
    return acc


def atiyah_line(model: HodgeModel, c1: FormClass) -> FormClass:
    """Obstruction class of line-bundle data: its first Chern form."""
    if c1.model is not model:
        raise ModelMismatch("c1 built on a different model")
    for (a, b) in c1.terms:
        if a.bit_count() != 1 or b.bit_count() != 1:
            raise BidegreeError("line-bundle first Chern class must be pure (1,1)")
    return c1


def _even_pieces(f: FormClass, n: int) -> list[FormClass]:
    return [f.component(p, p) for p in range(n + 1)]


def sqrt_todd(model: HodgeModel) -> FormClass:
    """Formal square root of the Todd datum, constant term 1, exact."""
    if model._sqrt is None:
        t = _even_pieces(model.todd, model.n)
        s: list[FormClass] = [FormClass.one(model)]
        for w in range(1, model.n + 1):
            acc = t[w]
            for i in range(1, w):
                acc = acc - wedge(s[i], s[w - i])
            s.append(acc.scale(Fraction(1, 2)))
        total = FormClass.zero(model)
        for piece in s:
            total = total + piece
        model._sqrt = total
    return model._sqrt


def inv_sqrt_todd(model: HodgeModel) -> FormClass:
    """Formal inverse of sqrt_todd: the unique series with s*u = 1."""
    if model._inv_sqrt is None:
        s = _even_pieces(sqrt_todd(model), model.n)
        u: list[FormClass] = [FormClass.one(model)]
        for w in range(1, model.n + 1):
            acc = FormClass.zero(model)
            for i in range(1, w + 1):
                acc = acc + wedge(s[i], u[w - i])
            u.append(acc.scale(-1))
        total = FormClass.zero(model)
        for piece in u:
            total = total + piece
        model._inv_sqrt = total
    return model._inv_sqrt


def duflo(model: HodgeModel, alpha: PolyClass) -> PolyClass:
    """Duflo twist: contraction of the Todd square root into a polyvector."""
    return contract_Omega_on_T(sqrt_todd(model), alpha)


def duflo_inverse(model: HodgeModel, alpha: PolyClass) -> PolyClass:
    return contract_Omega_on_T(inv_sqrt_todd(model), alpha)


def mukai_line(model: HodgeModel, c1: FormClass) -> FormClass:
    """Mukai vector of line-bundle data: exp(c1) twisted by the Todd root."""
    at = atiyah_line(model, c1)
    return wedge(exp_form(at), sqrt_todd(model))


def contract_exp_atiyah(alpha: PolyClass, at: FormClass) -> ExtClass:
    """Total contraction against the exponential obstruction class.

    The (p,k) part of alpha pairs all k dual factors against the k-th
    wedge power of the (1,1) class over k!; A-factors wedge.  The result
    is graded by p+k and equals the leftover-free part of
    contract_T_on_Omega(alpha, exp_form(at)).
    """
    model = alpha.model
    at = atiyah_line(model, at)
    powers = [FormClass.one(model)]
    pw = FormClass.one(model)
    for k in range(1, model.n + 1):
        pw = wedge(pw, at)
        powers.append(pw.scale(Fraction(1, factorial(k))))
    out: dict[int, Fraction] = {}
    for (aa, bs), ca in alpha.terms.items():
        k = bs.bit_count()
        for (av, bv), cv in powers[k].terms.items():
            if bv != bs:
                continue
            hit = _contract_term(aa, bs, av, bv, +1)
            if hit is None:
                continue
            sign, a, b = hit
            assert b == 0
            out[a] = out.get(a, Q(0)) + sign * ca * cv
    return ExtClass(model, out)


# ---------------------------------------------------------------------------
# verification routines
# ---------------------------------------------------------------------------

def poly_basis(model: HodgeModel) -> list[PolyClass]:
    """Full term basis of the polyvector side, in canonical order."""
    size = 1 << model.n
    return [
        PolyClass(model, {(a, b): 1}) for a in range(size) for b in range(size)
    ]


def poly_basis_11(model: HodgeModel) -> list[PolyClass]:
    return [
        PolyClass(model, {(1 << i, 1 << j): 1})
        for i in range(model.n)
        for j in range(model.n)
    ]


def form_basis_11(model: HodgeModel) -> list[FormClass]:
    return [
        FormClass(model, {(1 << i, 1 << j): 1})
        for i in range(model.n)
        for j in range(model.n)
    ]


def exp_atiyah_kernel(model: HodgeModel, at: FormClass) -> list[PolyClass]:
    """Exact basis of {alpha : alpha -| exp(at) = 0}.

    Linear in alpha, so the kernel is computed from the matrix of the
    contraction over the canonical term basis.
    """
    basis = poly_basis(model)
    size = 1 << model.n
    rows = [[Q(0)] * len(basis) for _ in range(size)]
    for col, alpha in enumerate(basis):
        h = contract_exp_atiyah(alpha, at)
        for a, c in h.terms.items():
            rows[a][col] = c
    out = []
    for vec in kernel(Matrix(rows)):
        terms = {}
        for col, coeff in enumerate(vec):
            if coeff != 0:
                a, b = divmod(col, size)
                terms[(a, b)] = coeff
        out.append(PolyClass(model, terms))
    return out


@dataclass
class MukaiImplicationReport:
    obstruction: ExtClass  # alpha -| exp(at)
    moduli_action: FormClass  # D(alpha) -| v(L)
    hypothesis: bool  # obstruction vanishes
    conclusion: bool  # moduli action vanishes
    ok: bool
    status: str


def check_mukai_implication(
    model: HodgeModel, alpha: PolyClass, c1: FormClass
) -> MukaiImplicationReport:
    """One instance of: obstruction vanishing forces Mukai-pairing vanishing.

    A failed implication would mean the sign conventions above are
    inconsistent, so it is reported as critical rather than raised.
    """
    at = atiyah_line(model, c1)
    h = contract_exp_atiyah(alpha, at)
    m = contract_T_on_Omega(duflo(model, alpha), mukai_line(model, c1))
    hyp = h.is_zero()
    concl = m.is_zero()
    ok = (not hyp) or concl
    if not ok:
        status = "critical-fail"
    elif hyp:
        status = "pass"
    else:
        status = "vacuous"
    return MukaiImplicationReport(h, m, hyp, concl, ok, status)


@dataclass
class FirstOrderReport:
    quarter_identity: bool  # D(alpha) - alpha = (c1/4) -| alpha
    h2_component: bool  # top-left component identity against the Todd root
    loci_equal: bool | None  # vanishing loci of the two pairings coincide
    witness: dict | None


def first_order_check(model: HodgeModel, alpha: PolyClass) -> FirstOrderReport:
    """Identities for (1,1) polyvectors when the Todd datum designates c1.

    The designated first Chern form is twice the (1,1) part of the Todd
    datum.  Checks:

      (i)  the Duflo twist moves alpha by exactly (c1/4) -| alpha;
      (ii) the 2-wedge A-component of D(alpha) -| sqrt(Todd) equals
           alpha -| (c1/2);
      (iii) {alpha : alpha -| c1 = 0} equals
           {alpha : D(alpha) -| v(O) = 0} as subspaces of the (1,1) part,
           compared through canonical kernel bases.

    (i) and (ii) hold for any Todd datum.  The locus comparison (iii) is
    guaranteed only when the datum is generated by c1 (components are
    rational multiples of wedge powers of c1); with independent higher
    (p,p) data the two loci genuinely differ, so callers sweeping (iii)
    must build the datum from c1.
    """
    for (a, b) in alpha.terms:
        if a.bit_count() != 1 or b.bit_count() != 1:
            raise BidegreeError("first_order_check needs a pure (1,1) polyvector")
    c1 = model.todd.component(1, 1).scale(2)
    d_alpha = duflo(model, alpha)

    move = contract_Omega_on_T(c1.scale(Fraction(1, 4)), alpha)
    check_i = (d_alpha - alpha) == move

    lhs = contract_T_on_Omega(d_alpha, sqrt_todd(model)).component(2, 0)
    rhs = contract_T_on_Omega(alpha, c1.scale(Fraction(1, 2))).component(2, 0)
    check_ii = lhs == rhs

    basis = poly_basis_11(model)
    v_sheaf = mukai_line(model, FormClass.zero(model))
    rows_c1 = []
    rows_v = []
    for beta in basis:
        rows_c1.append(contract_T_on_Omega(beta, c1))
        rows_v.append(contract_T_on_Omega(duflo(model, beta), v_sheaf))
    k1 = _kernel_of_images(model, basis, rows_c1)
    k2 = _kernel_of_images(model, basis, rows_v)
    check_iii = k1 == k2

    witness = None
    if not (check_i and check_ii and check_iii):
        witness = {
            "alpha": alpha.to_obj(),
            "todd": model.todd.to_obj(),
            "duflo_alpha": d_alpha.to_obj(),
        }
    return FirstOrderReport(check_i, check_ii, check_iii, witness)


def _kernel_of_images(model, basis, images) -> list[list[Fraction]]:
    """Canonical kernel basis of a linear map given by images of a basis."""
    coords = sorted({k for img in images for k in img.terms})
    coord_index = {k: r for r, k in enumerate(coords)}
    rows = [[Q(0)] * len(basis) for _ in coords]
    for col, img in enumerate(images):
        for k, c in img.terms.items():
            rows[coord_index[k]][col] = c
    if not rows:
        rows = [[Q(0)] * len(basis)]
    return kernel(Matrix(rows))
