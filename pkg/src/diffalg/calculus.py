"""First-order differential calculus on a basis-ordered algebra.

The calculus is determined by one affine map per generator: a family
``nu`` with ``nu_a(D_j) = lambda_{aj} D_j + mu_{aj}``, each extended
multiplicatively to the whole algebra.  The differential pushes basis
one-forms to the left through coefficients::

    p * dD_a = dD_a * nu_a(p)
    d(D_{l_1} ... D_{l_m}) = sum_k  dD_{l_k} * nu_{l_k}(prefix_k) * suffix_k

Higher forms carry a twisted wedge: moving ``dD_b`` past ``dD_a`` with
``a < b`` costs ``-lambda_{ab}``, so the d-square of every element vanishes
exactly when the lowered partials satisfy the twisted commutation rule.
The construction below derives the family directly from the coefficient
table: compatibility of ``d`` with a two-sided pair relation forces

    nu_a(D_b) = (g(a, b) D_b - x_b) / g(b, a)

for every ``a != b`` (``g(u, v)`` is the coefficient of the written word
``D_u D_v``), and each interacting diagonal is forced the same way from a
second interacting index.  One-sided pairs admit no such map; the
obstruction they leave behind is exposed by :func:`no_go_residual`.

The naive closed form for a lowered partial (bring ``k_a * D_a^{k_a - 1}``
out front) is valid only for a linear twist; whenever some diagonal map is
genuinely affine the correct closed form keeps the geometric sum in
:func:`closed_partial_derivative`, which this module cross-checks against
the positional sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .classify import Decomposition, FamilyIdentification, decompose, identify_family
from .engine import Poly, monomial_word, multiply, normal_form, power
from .presentation import AlgebraPresentation
from .scalars import rational

__all__ = [
    "CalculusError", "AffineAutomorphismFamily", "build_automorphisms",
    "shift_ansatz", "apply_automorphism", "AutomorphismReport",
    "verify_automorphisms", "differential", "partial_derivative",
    "closed_partial_derivative", "GradedForm", "basis_form", "scalar_form",
    "wedge", "form_differential", "left_multiply", "right_multiply", "pi_omega",
    "nu_omega", "nu_omega_inverse", "check_connectedness",
    "check_integrating_form", "leibniz_defects", "check_d_squared",
    "no_go_residual",
]


class CalculusError(ValueError):
    """Raised when no twisting family exists for the requested data."""


@dataclass(frozen=True)
class AffineAutomorphismFamily:
    """One affine generator map per index: ``nu_a(D_j) = lam(a,j) D_j + mu(a,j)``."""

    n: int
    table: tuple  # table[a-1][j-1] = (lam, mu)

    def lam(self, a: int, j: int):
        return self.table[a - 1][j - 1][0]

    def mu(self, a: int, j: int):
        return self.table[a - 1][j - 1][1]

    def map_of(self, a: int) -> dict:
        return {j: self.table[a - 1][j - 1] for j in range(1, self.n + 1)}


def build_automorphisms(P: AlgebraPresentation,
                        dec: Decomposition | None = None,
                        fam: FamilyIdentification | None = None
                        ) -> AffineAutomorphismFamily:
    """Derive the twisting family forced by d-compatibility.

    Raises :class:`CalculusError` when some required pair is one-sided, i.e.
    when no affine family can make the differential well defined.
    """
    if dec is None:
        dec = decompose(P)
    if fam is None:
        fam = identify_family(P, dec)
    if not fam.consistent:
        raise CalculusError(
            "the coefficient table matches no closed pattern: "
            + "; ".join(fam.violations))
    n = P.n
    interacting = set(dec.I)
    table = []
    for a in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if j != a:
                den = P.g(j, a)
                if den == 0:
                    raise CalculusError(
                        f"no affine family exists: the pair ({j},{a}) is "
                        f"one-sided, so D{j} cannot be pushed through dD{a}")
                row.append((P.g(a, j) / den, -P.x(j) / den))
            elif a in interacting and len(interacting) >= 2:
                other = min(i for i in interacting if i != a)
                num, den = P.g(other, a), P.g(a, other)
                if den == 0:
                    raise CalculusError(
                        f"no affine family exists: the pair ({a},{other}) "
                        f"is one-sided on its trailing slot")
                row.append((num / den, -P.x(a) / den))
            else:
                row.append((rational(1), rational(0)))
        table.append(tuple(row))
    return AffineAutomorphismFamily(n, tuple(table))


def shift_ansatz(P: AlgebraPresentation,
                 dec: Decomposition | None = None,
                 fam: FamilyIdentification | None = None
                 ) -> AffineAutomorphismFamily:
    """The uniform-shift candidate family ``nu_a(D_b) = D_b - x_b / g``.

    This is the family that twists a fully-interacting uniform table; the
    scale falls back to 1 when the identified pattern has no uniform
    coefficient.  It is used to exhibit concrete failures on tables that
    admit no calculus at all.
    """
    if dec is None:
        dec = decompose(P)
    if fam is None:
        fam = identify_family(P, dec)
    g = fam.params.get("g")
    scale = rational(1) / g if g not in (None, 0) else rational(1)
    n = P.n
    one = rational(1)
    table = tuple(
        tuple((one, -scale * P.x(j)) for j in range(1, n + 1))
        for _ in range(n))
    return AffineAutomorphismFamily(n, table)


def _apply_map_to_word(nu_map: dict, word, P: AlgebraPresentation) -> Poly:
    out = Poly.one(P.n)
    for letter in word:
        lam, mu = nu_map[letter]
        img = Poly.generator(P.n, letter).scale(lam) + Poly.scalar(P.n, mu)
        out = multiply(out, img, P)
    return out


def apply_automorphism(nu_map: dict, p: Poly, P: AlgebraPresentation) -> Poly:
    """Extend one generator map multiplicatively and apply it to ``p``."""
    out = Poly.zero(P.n)
    for expts, c in p.terms.items():
        out = out + _apply_map_to_word(nu_map, monomial_word(expts), P).scale(c)
    return out


def _relation_combination(P: AlgebraPresentation, u: int, v: int) -> dict:
    """The pair relation as a free combination that reduces to zero."""
    comb = {}
    if P.g(u, v) != 0:
        comb[(u, v)] = P.g(u, v)
    if P.g(v, u) != 0:
        comb[(v, u)] = -P.g(v, u)
    if P.x(v) != 0:
        comb[(u,)] = comb.get((u,), rational(0)) - P.x(v)
    if P.x(u) != 0:
        comb[(v,)] = comb.get((v,), rational(0)) + P.x(u)
    return comb


@dataclass(frozen=True)
class AutomorphismReport:
    relations_preserved: bool
    pairwise_commute: bool
    bijective: bool
    failures: tuple

    @property
    def ok(self) -> bool:
        return self.relations_preserved and self.pairwise_commute and self.bijective


def verify_automorphisms(nu: AffineAutomorphismFamily,
                         P: AlgebraPresentation) -> AutomorphismReport:
    n = P.n
    failures = []
    bijective = True
    for a in range(1, n + 1):
        for j in range(1, n + 1):
            if nu.lam(a, j) == 0:
                bijective = False
                failures.append(f"nu_{a} sends D{j} to a constant")
    relations_ok = True
    for a in range(1, n + 1):
        nu_map = nu.map_of(a)
        for u, v in combinations(range(1, n + 1), 2):
            image = Poly.zero(n)
            for word, c in _relation_combination(P, u, v).items():
                image = image + _apply_map_to_word(nu_map, word, P).scale(c)
            if not image.is_zero():
                relations_ok = False
                failures.append(
                    f"nu_{a} breaks the relation of the pair ({u},{v})")
    commute_ok = True
    for a, b in combinations(range(1, n + 1), 2):
        for j in range(1, n + 1):
            la, ma = nu.lam(a, j), nu.mu(a, j)
            lb, mb = nu.lam(b, j), nu.mu(b, j)
            if lb * ma + mb != la * mb + ma:
                commute_ok = False
                failures.append(
                    f"nu_{a} and nu_{b} disagree on D{j} depending on order")
    return AutomorphismReport(relations_ok, commute_ok, bijective,
                              tuple(failures))


def _d_combination(comb: dict, nu: AffineAutomorphismFamily,
                   P: AlgebraPresentation) -> dict:
    """Apply the positional differential to a free-word combination.

    Returns the one-form coefficients as ``{a: Poly}`` with zero entries
    dropped.
    """
    out: dict = {}
    for word, c in comb.items():
        for k, letter in enumerate(word):
            prefix = _apply_map_to_word(nu.map_of(letter), word[:k], P)
            suffix = normal_form(word[k + 1:], P)
            piece = multiply(prefix, suffix, P).scale(c)
            if letter in out:
                out[letter] = out[letter] + piece
            else:
                out[letter] = piece
    return {a: p for a, p in out.items() if not p.is_zero()}


def differential(p: Poly, nu: AffineAutomorphismFamily,
                 P: AlgebraPresentation) -> "GradedForm":
    comb = {monomial_word(expts): c for expts, c in p.terms.items()}
    coeffs = {(a,): q for a, q in _d_combination(comb, nu, P).items()}
    return GradedForm(P.n, 1, coeffs)


def partial_derivative(a: int, p: Poly, nu: AffineAutomorphismFamily,
                       P: AlgebraPresentation) -> Poly:
    comb = {monomial_word(expts): c for expts, c in p.terms.items()}
    return _d_combination(comb, nu, P).get(a, Poly.zero(P.n))


def closed_partial_derivative(a: int, exponents, nu: AffineAutomorphismFamily,
                              P: AlgebraPresentation) -> Poly:
    """Closed form of the ``a``-th lowered partial on an ordered product.

    ``exponents`` are the multiplicities ``(k_1, ..., k_n)`` of the
    ascending product ``D_1^{k_1} ... D_n^{k_n}``.  Factors below ``a``
    arrive transported by ``nu_a``; the ``a``-th factor contributes a
    geometric sum pairing ``m`` transported copies with ``k_a - 1 - m``
    untouched ones, which collapses to ``k_a D_a^{k_a-1}`` only when the
    diagonal map is linear.
    """
    n = P.n
    ka = exponents[a - 1]
    if ka == 0:
        return Poly.zero(n)
    nu_map = nu.map_of(a)
    out = Poly.one(n)
    for b in range(1, a):
        kb = exponents[b - 1]
        if kb:
            out = multiply(out, _apply_map_to_word(nu_map, (b,) * kb, P), P)
    lam, mu = nu_map[a]
    da = Poly.generator(n, a)
    da_img = da.scale(lam) + Poly.scalar(n, mu)
    middle = Poly.zero(n)
    for m in range(ka):
        piece = multiply(power(da_img, m, P), power(da, ka - 1 - m, P), P)
        middle = middle + piece
    out = multiply(out, middle, P)
    tail = tuple(letter for b in range(a + 1, n + 1)
                 for letter in (b,) * exponents[b - 1])
    return multiply(out, normal_form(tail, P), P)


class GradedForm:
    """A finite sum ``dD_J * p_J`` with ``J`` a strictly increasing index set."""

    __slots__ = ("n", "degree", "coeffs")

    def __init__(self, n: int, degree: int, coeffs: dict | None = None):
        self.n = n
        self.degree = degree
        clean = {}
        for J, p in (coeffs or {}).items():
            J = tuple(J)
            if len(J) != degree or list(J) != sorted(set(J)):
                raise ValueError(f"malformed basis index set {J} in degree {degree}")
            if not p.is_zero():
                clean[J] = p
        self.coeffs = clean

    @staticmethod
    def zero(n: int, degree: int) -> "GradedForm":
        return GradedForm(n, degree, {})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "GradedForm") -> "GradedForm":
        if (self.n, self.degree) != (other.n, other.degree):
            raise ValueError("cannot add forms of different degrees")
        out = dict(self.coeffs)
        for J, p in other.coeffs.items():
            q = out.get(J)
            out[J] = p if q is None else q + p
        return GradedForm(self.n, self.degree, out)

    def scale(self, c) -> "GradedForm":
        return GradedForm(self.n, self.degree,
                          {J: p.scale(c) for J, p in self.coeffs.items()})

    def __eq__(self, other):
        return (isinstance(other, GradedForm) and self.n == other.n
                and self.degree == other.degree and self.coeffs == other.coeffs)

    def __repr__(self):
        return f"GradedForm(n={self.n}, degree={self.degree}, {self.coeffs!r})"


def basis_form(n: int, J, p: Poly) -> GradedForm:
    J = tuple(sorted(J))
    return GradedForm(n, len(J), {J: p})


def scalar_form(n: int, p: Poly) -> GradedForm:
    return GradedForm(n, 0, {(): p})


def _merge_twist(left, right, nu: AffineAutomorphismFamily):
    """Sign-and-scale factor for sorting ``dD_left dD_right`` into one set."""
    factor = rational(1)
    for j in left:
        for u in right:
            if u < j:
                factor = factor * (-nu.lam(u, j))
    return factor


def _transport(p: Poly, indices, nu: AffineAutomorphismFamily,
               P: AlgebraPresentation) -> Poly:
    # the family commutes, so the composition order is immaterial
    for k in indices:
        p = apply_automorphism(nu.map_of(k), p, P)
    return p


def wedge(xi: GradedForm, eta: GradedForm, nu: AffineAutomorphismFamily,
          P: AlgebraPresentation) -> GradedForm:
    out = GradedForm.zero(xi.n, xi.degree + eta.degree)
    for J, p in xi.coeffs.items():
        for K, q in eta.coeffs.items():
            if set(J) & set(K):
                continue
            factor = _merge_twist(J, K, nu)
            merged = tuple(sorted(J + K))
            piece = multiply(_transport(p, K, nu, P), q, P).scale(factor)
            out = out + GradedForm(xi.n, out.degree, {merged: piece})
    return out


def form_differential(xi: GradedForm, nu: AffineAutomorphismFamily,
                      P: AlgebraPresentation) -> GradedForm:
    """Extend d to higher forms: ``d(dD_J p) = (-1)^{|J|} dD_J ^ d(p)``."""
    sign = -1 if xi.degree % 2 else 1
    out = GradedForm.zero(xi.n, xi.degree + 1)
    for J, p in xi.coeffs.items():
        head = GradedForm(xi.n, xi.degree, {J: Poly.one(xi.n)})
        out = out + wedge(head, differential(p, nu, P), nu, P).scale(sign)
    return out


def left_multiply(p: Poly, xi: GradedForm, nu: AffineAutomorphismFamily,
                  P: AlgebraPresentation) -> GradedForm:
    return GradedForm(xi.n, xi.degree, {
        J: multiply(_transport(p, J, nu, P), q, P)
        for J, q in xi.coeffs.items()})


def right_multiply(xi: GradedForm, p: Poly,
                   P: AlgebraPresentation) -> GradedForm:
    return GradedForm(xi.n, xi.degree,
                      {J: multiply(q, p, P) for J, q in xi.coeffs.items()})


def pi_omega(tau: GradedForm) -> Poly:
    """Project a top-degree form onto its volume coefficient."""
    if tau.degree != tau.n:
        raise CalculusError(
            f"projection needs a degree-{tau.n} form, got degree {tau.degree}")
    full = tuple(range(1, tau.n + 1))
    return tau.coeffs.get(full, Poly.zero(tau.n))


def _omega_maps(nu: AffineAutomorphismFamily):
    """Per-generator affine data of the composed volume twist."""
    n = nu.n
    composed = {}
    for j in range(1, n + 1):
        lam, mu = rational(1), rational(0)
        for a in range(n, 0, -1):
            la, ma = nu.lam(a, j), nu.mu(a, j)
            lam, mu = la * lam, la * mu + ma
        composed[j] = (lam, mu)
    return composed


def nu_omega(p: Poly, nu: AffineAutomorphismFamily,
             P: AlgebraPresentation) -> Poly:
    return apply_automorphism(_omega_maps(nu), p, P)


def nu_omega_inverse(p: Poly, nu: AffineAutomorphismFamily,
                     P: AlgebraPresentation) -> Poly:
    inverse = {}
    for j, (lam, mu) in _omega_maps(nu).items():
        if lam == 0:
            raise CalculusError(
                f"the volume twist is singular: it sends D{j} to a constant")
        inverse[j] = (rational(1) / lam, -mu / lam)
    return apply_automorphism(inverse, p, P)


def _monomials(n: int, degree: int):
    """All exponent tuples of the given total degree."""
    if n == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in _monomials(n - 1, degree - first):
            yield (first,) + rest


def check_connectedness(P: AlgebraPresentation, nu: AffineAutomorphismFamily,
                        degree_bound: int = 5) -> bool:
    """No nonconstant element of bounded degree may be closed."""
    for deg in range(1, degree_bound + 1):
        for expts in _monomials(P.n, deg):
            if differential(Poly.monomial(P.n, expts), nu, P).is_zero():
                return False
    return True


def _dual_bases(k: int, nu: AffineAutomorphismFamily, n: int):
    """Pairs ``(J, inverse twist)`` so that ``dD_{J^c} * c_J`` is dual to ``dD_J``."""
    out = []
    for J in combinations(range(1, n + 1), k):
        comp = tuple(a for a in range(1, n + 1) if a not in J)
        out.append((J, comp, rational(1) / _merge_twist(comp, J, nu)))
    return out


def check_integrating_form(P: AlgebraPresentation,
                           nu: AffineAutomorphismFamily, k: int,
                           degree_bound: int = 3,
                           which: str = "both") -> bool:
    """Dual-basis expansion identities of the volume form in degree ``k``.

    ``which`` selects the expansion through the left slot (``"expand"``),
    through the right slot (``"project"``), or both.
    """
    n = P.n
    duals = _dual_bases(k, nu, n)
    cobases = _dual_bases(n - k, nu, n)
    monos = [m for d in range(degree_bound + 1) for m in _monomials(n, d)]
    for K in combinations(range(1, n + 1), k):
        for expts in monos:
            omega_prime = basis_form(n, K, Poly.monomial(n, expts))
            if which in ("both", "expand"):
                total = GradedForm.zero(n, k)
                for J, comp, c in duals:
                    bar = basis_form(n, comp, Poly.scalar(n, c))
                    coefficient = pi_omega(wedge(bar, omega_prime, nu, P))
                    total = total + right_multiply(
                        basis_form(n, J, Poly.one(n)), coefficient, P)
                if total != omega_prime:
                    return False
            if which in ("both", "project"):
                total = GradedForm.zero(n, k)
                for M, comp, c in cobases:
                    bar = basis_form(n, comp, Poly.scalar(n, c))
                    head = pi_omega(wedge(omega_prime,
                                          basis_form(n, M, Poly.one(n)), nu, P))
                    total = total + left_multiply(
                        nu_omega_inverse(head, nu, P), bar, nu, P)
                if total != omega_prime:
                    return False
    return True


def leibniz_defects(P: AlgebraPresentation,
                    nu: AffineAutomorphismFamily) -> tuple:
    """Pairs whose relation is not annihilated by the differential."""
    bad = []
    for u, v in combinations(range(1, P.n + 1), 2):
        if _d_combination(_relation_combination(P, u, v), nu, P):
            bad.append((u, v))
    return tuple(bad)


def check_d_squared(P: AlgebraPresentation, nu: AffineAutomorphismFamily,
                    degree_bound: int = 4) -> bool:
    """d applied twice kills every monomial of bounded degree."""
    for deg in range(1, degree_bound + 1):
        for expts in _monomials(P.n, deg):
            first = differential(Poly.monomial(P.n, expts), nu, P)
            if not form_differential(first, nu, P).is_zero():
                return False
    return True


def no_go_residual(P: AlgebraPresentation, i: int, t: int,
                   nu: AffineAutomorphismFamily) -> Poly:
    """The ``dD_i`` coefficient of d applied to the ``{i, t}`` relation.

    A well-defined differential needs this to vanish; for a one-sided pair
    it reduces to the pair's leading coefficient times ``D_t`` (transported
    when ``t`` precedes ``i``), which is nonzero whenever the presentation
    is admissible.
    """
    u, v = min(i, t), max(i, t)
    return _d_combination(_relation_combination(P, u, v), nu, P).get(
        i, Poly.zero(P.n))
