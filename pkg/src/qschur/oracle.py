"""Brute-force cross-checks.

Relative tableau sets are recomputed by filtering the full list of standard
tableaux, never by the pruned search under test.  The remaining checks test
identities that must hold however the inputs were produced.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

from .combinatorics import (
    Multicharge,
    Multipartition,
    StandardTableau,
    degree_codegree,
    dominates,
    enumerate_multipartitions,
    enumerate_standard,
    final_tableau,
    graded_standard,
    initial_tableau,
    residue_sequence,
    std_relative,
    tableau_dominates,
)
from .fock import (
    GradedMatrix,
    cartan_matrix,
    dim_upper,
    straighten_canonical,
    straighten_tilting,
    zmu_expansion,
)
from .laurent import ONE, LaurentPoly
from .roots import Block, content

__all__ = [
    "CheckReport",
    "brute_std_relative",
    "brute_zmu",
    "check_degree_sums",
    "check_decomposition_matrix",
    "check_canonical_characterization",
    "check_cartan",
    "check_palindromic",
    "check_std_generator",
    "verify_block_invariants",
    "conjugate_duality_check",
    "cellular_dimension_check",
]


@dataclass
class CheckReport:
    name: str
    scope: dict[str, Any]
    passed: bool = True
    counterexample: dict[str, Any] | None = None
    checked: int = 0
    sub_reports: list["CheckReport"] = field(default_factory=list)

    def fail(self, **witness) -> "CheckReport":
        self.passed = False
        self.counterexample = witness
        return self

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "scope": self.scope,
            "passed": self.passed,
            "checked": self.checked,
            "counterexample": self.counterexample,
        }
        if self.sub_reports:
            out["checks"] = [r.to_json() for r in self.sub_reports]
        return out

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name} ({self.checked} checks)"
        if self.counterexample:
            line += f" counterexample: {self.counterexample}"
        return line


def _scope(block: Block, mc: Multicharge) -> dict[str, Any]:
    return {"n": block.n, "level": mc.level, "e": mc.e, "kappa": list(mc.kappa), "block": block.key}


def brute_std_relative(mu: Multipartition, lam: Multipartition, mode: str, mc: Multicharge) -> list[StandardTableau]:
    """``Std^mu(lam)`` or ``Std_mu(lam)`` by filtering every standard ``lam``-tableau."""
    ref = initial_tableau(mu) if mode == "upper" else final_tableau(mu)
    res = residue_sequence(ref, mc)
    out = []
    for s in enumerate_standard(lam):
        if residue_sequence(s, mc) != res:
            continue
        ok = tableau_dominates(s, ref) if mode == "upper" else tableau_dominates(ref, s)
        if ok:
            out.append(s)
    return out


def brute_zmu(mu: Multipartition, members, mc: Multicharge) -> dict[Multipartition, LaurentPoly]:
    ref = degree_codegree(initial_tableau(mu), mc)[0]
    out = {}
    for lam in members:
        degs = [degree_codegree(s, mc)[0] - ref for s in brute_std_relative(mu, lam, "upper", mc)]
        if degs:
            out[lam] = LaurentPoly.from_degrees(degs)
    return out


# ---------------------------------------------------------------------------
# individual checks


def check_degree_sums(block: Block, mc: Multicharge) -> CheckReport:
    rep = CheckReport("deg+codeg=defect", _scope(block, mc))
    for lam in block.members:
        for t, d, cd in graded_standard(lam, mc):
            rep.checked += 1
            if d + cd != block.defect:
                return rep.fail(tableau=str(t), shape=str(lam), deg=d, codeg=cd, defect=block.defect)
    return rep


def check_decomposition_matrix(block: Block, mc: Multicharge, D: GradedMatrix) -> CheckReport:
    """Unitriangularity, block support and (for e = 0) positivity of ``D``."""
    rep = CheckReport("decomposition matrix unitriangular", _scope(block, mc))
    members = set(block.members)
    for mu in block.members:
        rep.checked += 1
        if D[mu, mu] != ONE:
            return rep.fail(row=str(mu), col=str(mu), entry=D[mu, mu].to_text(), reason="diagonal is not 1")
    for (lam, mu), v in sorted(D.entries.items(), key=lambda kv: (kv[0][0].components, kv[0][1].components)):
        if lam == mu:
            continue
        rep.checked += 1
        if lam not in members or mu not in members:
            return rep.fail(row=str(lam), col=str(mu), entry=v.to_text(), reason="label outside the block")
        if not dominates(lam, mu):
            return rep.fail(row=str(lam), col=str(mu), entry=v.to_text(), reason="row does not dominate column")
        if mc.e == 0 and not (v.is_nonnegative() and v.mindeg() >= 1):
            return rep.fail(row=str(lam), col=str(mu), entry=v.to_text(), reason="entry not in qN[q]")
    return rep


def check_canonical_characterization(block: Block, mc: Multicharge, D: GradedMatrix) -> CheckReport:
    """Each ``[Z^mu]`` must be a bar-invariant, nonnegative combination of the columns of ``D``.

    Solved by back-substitution from the least dominant label, so a bad entry
    ``D[lam, nu]`` shows up as a non-invariant coefficient at ``(lam, nu)``.
    """
    rep = CheckReport("canonical basis characterization", _scope(block, mc))
    labels = sorted(block.members, key=lambda m: m.components)
    columns: dict[Multipartition, dict[Multipartition, LaurentPoly]] = {m: {} for m in labels}
    for (r, c), v in D.entries.items():
        if c in columns:
            columns[c][r] = v
    for mu in labels:
        residual = dict(zmu_expansion(mu, mc).entries)
        for nu in labels:
            a = residual.get(nu)
            if not a:
                continue
            rep.checked += 1
            if not (a.is_bar_invariant() and a.is_nonnegative()):
                return rep.fail(row=str(nu), col=str(mu), entry=D[nu, mu].to_text(), coefficient=a.to_text())
            for lam, d in columns[nu].items():
                residual[lam] = residual.get(lam, LaurentPoly()) - a * d
        leftover = {str(k): v.to_text() for k, v in residual.items() if v}
        if leftover:
            return rep.fail(col=str(mu), leftover=leftover)
    return rep


def check_cartan(block: Block, mc: Multicharge, D: GradedMatrix) -> CheckReport:
    rep = CheckReport("Cartan matrix symmetric", _scope(block, mc))
    C = cartan_matrix(D)
    for lam in C.row_labels:
        rep.checked += 1
        if C[lam, lam].coefficient(0) != 1:
            return rep.fail(row=str(lam), col=str(lam), entry=C[lam, lam].to_text(), reason="diagonal constant term")
        for mu in C.col_labels:
            if C[lam, mu] != C[mu, lam]:
                return rep.fail(row=str(lam), col=str(mu), entry=C[lam, mu].to_text(), transpose=C[mu, lam].to_text())
    return rep


def check_palindromic(block: Block, mc: Multicharge) -> CheckReport:
    rep = CheckReport("graded dimension palindromic", _scope(block, mc))
    for mu in block.members:
        g = dim_upper(mu, mc)
        rep.checked += 1
        if g != g.bar().shift(2 * block.defect):
            return rep.fail(mu=str(mu), dim=g.to_text(), defect=block.defect)
    return rep


def check_std_generator(block: Block, mc: Multicharge) -> CheckReport:
    """The pruned search for ``Std^mu(lam)`` and ``Std_mu(lam)`` against brute filtering."""
    rep = CheckReport("relative tableau generator", _scope(block, mc))
    for mu in block.members:
        for lam in block.members:
            for mode in ("upper", "lower"):
                fast = {s.path for s in std_relative(mu, lam, mode, mc)}
                slow = {s.path for s in brute_std_relative(mu, lam, mode, mc)}
                rep.checked += 1
                if fast != slow:
                    return rep.fail(mu=str(mu), lam=str(lam), mode=mode, fast=len(fast), brute=len(slow))
        rep.checked += 1
        fast_z = zmu_expansion(mu, mc).entries
        slow_z = brute_zmu(mu, block.members, mc)
        if fast_z != slow_z:
            return rep.fail(mu=str(mu), reason="Z expansion differs from brute force")
    return rep


def verify_block_invariants(
    block: Block, mc: Multicharge, D: GradedMatrix | None = None, brute: bool = True
) -> CheckReport:
    """Run every block-level check; pass ``D`` to audit a given matrix instead of a fresh one."""
    if D is None:
        D = straighten_canonical(block, mc)[1]
    subs = [
        check_degree_sums(block, mc),
        check_decomposition_matrix(block, mc, D),
        check_canonical_characterization(block, mc, D),
        check_cartan(block, mc, D),
        check_palindromic(block, mc),
    ]
    if brute:
        subs.append(check_std_generator(block, mc))
    rep = CheckReport("block invariants", _scope(block, mc), sub_reports=subs)
    rep.checked = sum(r.checked for r in subs)
    for r in subs:
        if not r.passed:
            rep.fail(check=r.name, **(r.counterexample or {}))
            break
    return rep


def conjugate_duality_check(block: Block, mc: Multicharge) -> CheckReport:
    """Tableau statistics and tilting coefficients against the conjugate block."""
    rep = CheckReport("conjugate duality", _scope(block, mc))
    mc2 = mc.conjugate()
    for lam in block.members:
        for t in enumerate_standard(lam):
            t2 = t.conjugate()
            rep.checked += 1
            neg = tuple(mc.reduce(-i) for i in residue_sequence(t, mc))
            if residue_sequence(t2, mc2) != neg:
                return rep.fail(tableau=str(t), reason="conjugate residues are not negated")
            d, cd = degree_codegree(t, mc)
            d2, cd2 = degree_codegree(t2, mc2)
            if (d2, cd2) != (cd, d):
                return rep.fail(tableau=str(t), deg=d, codeg=cd, conj_deg=d2, conj_codeg=cd2)
    conj = block.conjugate()
    if set(conj.members) != {m for m in conj.members if content(m, mc2) == conj.beta}:
        return rep.fail(reason="conjugate members have the wrong content")
    _, D2 = straighten_canonical(conj, mc2)
    tilt = straighten_tilting(block, mc)
    for lam in block.members:
        for mu in block.members:
            rep.checked += 1
            lhs = tilt[lam][mu]
            rhs = D2[mu.conjugate(), lam.conjugate()].bar()
            if lhs != rhs:
                return rep.fail(tilting=str(lam), delta=str(mu), coefficient=lhs.to_text(), expected=rhs.to_text())
    return rep


def cellular_dimension_check(n: int, level: int) -> CheckReport:
    """``sum_lam (#Std(lam))^2 = level^n * n!``."""
    rep = CheckReport("cellular dimension", {"n": n, "level": level})
    total = 0
    for lam in enumerate_multipartitions(n, level):
        total += len(enumerate_standard(lam)) ** 2
        rep.checked += 1
    expected = level**n * math.factorial(n)
    if total != expected:
        rep.fail(total=total, expected=expected)
    return rep
