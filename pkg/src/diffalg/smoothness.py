"""Differential-smoothness decision with machine-checkable evidence.

The decision is three-valued.  ``Smooth`` always comes with a twisting
family (the witness) that :func:`verify_witness` can check exhaustively up
to a degree bound; ``NotSmooth`` comes with an obstruction — an interacting
index, a non-coupling index, and the nonzero residual that survives in the
``dD_i`` slot no matter which affine family is tried; everything outside
the reach of the implemented constructions stays ``Undetermined`` with a
note saying what is missing, never a guess.
"""

from __future__ import annotations

from dataclasses import dataclass

from .calculus import (
    AffineAutomorphismFamily, CalculusError, build_automorphisms,
    check_connectedness, check_d_squared, check_integrating_form,
    leibniz_defects, no_go_residual, shift_ansatz, verify_automorphisms,
)
from .classify import Decomposition, FamilyIdentification, decompose, identify_family
from .engine import Poly, is_pbw
from .presentation import AlgebraPresentation

__all__ = ["SmoothnessError", "Obstruction", "SmoothnessVerdict",
           "gk_dimension", "decide_smoothness", "WitnessReport",
           "verify_witness"]


class SmoothnessError(ValueError):
    """Raised when the decision procedure cannot even start."""


@dataclass(frozen=True)
class Obstruction:
    i: int
    t: int
    residual: Poly


@dataclass(frozen=True)
class SmoothnessVerdict:
    verdict: str  # "Smooth" | "NotSmooth" | "Undetermined"
    theorem_case: str | None = None  # "i" | "ii" | "iii" | "iv"
    witness: AffineAutomorphismFamily | None = None
    obstruction: Obstruction | None = None
    notes: tuple = ()


def gk_dimension(P: AlgebraPresentation) -> int:
    """Growth dimension of a basis-ordered presentation (its generator count)."""
    report = is_pbw(P)
    if not report.pbw:
        a, b, c = report.first_failure
        raise SmoothnessError(
            f"the ordered monomials are not a basis: the triple "
            f"({a},{b},{c}) reduces ambiguously")
    return P.n


def _try_witness(P, dec, fam, case: str) -> SmoothnessVerdict:
    try:
        witness = build_automorphisms(P, dec, fam)
    except CalculusError as exc:
        return SmoothnessVerdict("Undetermined", notes=(str(exc),))
    return SmoothnessVerdict("Smooth", theorem_case=case, witness=witness)


def decide_smoothness(P: AlgebraPresentation,
                      dec: Decomposition | None = None,
                      fam: FamilyIdentification | None = None
                      ) -> SmoothnessVerdict:
    gk_dimension(P)  # refuse non-confluent input outright
    if dec is None:
        dec = decompose(P)
    if fam is None:
        fam = identify_family(P, dec)

    if not fam.consistent:
        return SmoothnessVerdict(
            "Undetermined",
            notes=("the coefficient table matches no closed pattern",)
            + fam.violations)

    if dec.T:
        i = dec.I[0]
        t = dec.T[0]
        candidate = shift_ansatz(P, dec, fam)
        residual = no_go_residual(P, i, t, candidate)
        return SmoothnessVerdict(
            "NotSmooth",
            obstruction=Obstruction(i, t, residual),
            notes=(f"the pair ({min(i, t)},{max(i, t)}) couples one-sidedly "
                   f"while x{i} != 0, so pushing D{t} through dD{i} leaves "
                   f"a nonzero residual for every affine family",))

    if fam.family == "A_I":
        return _try_witness(P, dec, fam, "i")

    if fam.family == "A_II":
        return SmoothnessVerdict(
            "Undetermined",
            notes=("every interacting pair couples one-sidedly, so no "
                   "affine twisting family exists; nothing further is "
                   "known for this pattern",))

    if fam.family == "B":
        couplings = {fam.params[f"g{s}"] for s in dec.S}
        if len(couplings) > 1:
            return SmoothnessVerdict(
                "Undetermined",
                notes=("bystander couplings take several values, but the "
                       "known witness construction needs a single one",))
        return _try_witness(P, dec, fam, "iii")

    if fam.family == "C":
        if len(dec.R_components) != 1:
            return SmoothnessVerdict(
                "Undetermined",
                notes=(f"the non-interacting part splits into "
                       f"{len(dec.R_components)} components, but the known "
                       f"witness construction needs a connected one",))
        couplings = {fam.params[f"g{r}"] for r in dec.R}
        if len(couplings) > 1:
            return SmoothnessVerdict(
                "Undetermined",
                notes=("couplings to the interacting index take several "
                       "values, but the known witness construction needs "
                       "a single one",))
        return _try_witness(P, dec, fam, "ii")

    # family D
    one_sided = [(u, v) for u in P.generators for v in P.generators
                 if u < v and (P.g(u, v) == 0 or P.g(v, u) == 0)]
    if one_sided:
        u, v = one_sided[0]
        return SmoothnessVerdict(
            "Undetermined",
            notes=(f"the pair ({u},{v}) couples one-sidedly; no affine "
                   f"family exists, and with no interacting index the "
                   f"residual argument does not apply",))
    return _try_witness(P, dec, fam, "iv")


@dataclass(frozen=True)
class WitnessReport:
    checks: tuple  # ((name, passed), ...) in evaluation order

    @property
    def ok(self) -> bool:
        return all(passed for _, passed in self.checks)


def verify_witness(P: AlgebraPresentation, verdict: SmoothnessVerdict,
                   degree_bound: int | None = None,
                   dd_degree: int = 4,
                   connectedness_degree: int = 5) -> WitnessReport:
    """Run every calculus check against a Smooth verdict's witness.

    ``degree_bound`` caps the coefficient degree in the volume-form
    identities (the costliest step); it defaults to 3 for three generators
    and 2 beyond that.
    """
    if verdict.witness is None:
        raise SmoothnessError("the verdict carries no witness to verify")
    nu = verdict.witness
    if degree_bound is None:
        degree_bound = 3 if P.n == 3 else 2
    checks = []
    auto = verify_automorphisms(nu, P)
    checks.append(("relations-preserved", auto.relations_preserved))
    checks.append(("pairwise-commute", auto.pairwise_commute))
    checks.append(("bijective", auto.bijective))
    checks.append(("leibniz", not leibniz_defects(P, nu)))
    checks.append(("d-squared-zero", check_d_squared(P, nu, dd_degree)))
    checks.append(("connectedness",
                   check_connectedness(P, nu, connectedness_degree)))
    for k in range(P.n):
        checks.append((f"integral-expand-k{k}",
                       check_integrating_form(P, nu, k, degree_bound,
                                              which="expand")))
        checks.append((f"integral-project-k{k}",
                       check_integrating_form(P, nu, k, degree_bound,
                                              which="project")))
    return WitnessReport(tuple(checks))
