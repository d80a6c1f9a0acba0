"""Injection structures

Orbits are named like the materialized prefix does: "o0.c" is the omega
orbit of copy c, "c<k>.c" the cycle of length k of copy c. Position 0 of an
omega orbit is its first element.
"""

from structutils import Family
from uhpres import InjSpectrum
from .report import ExceptionalSet, Report


def _omega_reps(sp: InjSpectrum):
    return tuple(f"o0.{copy}:0" for copy in range(sp.omega_orbits.value))


def definable_closure_injection(sp: InjSpectrum) -> ExceptionalSet:
    """D(S) for the minimal exceptional set: the union of the omega-orbits

    Listed by the representatives of those orbits; a unique fixed point is
    definable as well and is listed too.
    """
    elems = _omega_reps(sp)
    desc = "the union of the omega-orbits"
    if sp.as_dict().get(1) == 1:
        elems += ("c1.0:0",)
        desc += " and the unique fixed point"
    return ExceptionalSet(elems, desc)


def analyze_injection(sp: InjSpectrum) -> Report:
    """Decide the homogeneity notions of an injection structure

    Argument
      sp: the orbit spectrum
    Returns
      the report
    """
    omega, zeta = sp.omega_orbits, sp.zeta_orbits
    wuh = omega.is_finite
    r = Report(Family.INJECTION, omega == 0, wuh, (omega + zeta).is_finite,
               omega.is_finite or zeta.is_finite)
    r.cite('inj-uh', 'inj-wuh', 'inj-cc', 'inj-d2')
    if not wuh:
        r.notes.append("infinitely many omega-orbits")
        return r
    reps = _omega_reps(sp)
    r.minimal_exceptional = [
        ExceptionalSet(reps, "one element from each omega-orbit")]
    r.special = list(reps)
    r.definable_closure = definable_closure_injection(sp)
    if sp.as_dict().get(1) == 1:
        r.notes.append("a unique orbit of size one is definable without "
                       "parameters")
    r.cite('inj-dcl')
    return r
