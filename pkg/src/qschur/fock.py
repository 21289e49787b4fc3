"""Fock space computations: Weyl-filtration expansions, straightening to the
canonical and tilting bases, decomposition and Cartan matrices, Kleshchev
labels, graded dimensions and the closed formula in level two.

Vectors are expansions in the standard basis ``[Delta^lam]`` of one block.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .combinatorics import (
    Multicharge,
    Multipartition,
    degree_codegree,
    dominates,
    final_tableau,
    graded_standard,
    initial_tableau,
    StandardTableau,
    order_key,
    std_relative,
    std_relative_all,
)
from .errors import NonUniqueTableau, NotLevelTwo, PositivityViolation, Unsupported
from .laurent import ONE, ZERO, LaurentPoly
from .roots import Block, RootVector, check_scope, content

__all__ = [
    "FockVector",
    "GradedMatrix",
    "zmu_expansion",
    "emu_expansion",
    "straighten_canonical",
    "straighten_tilting",
    "decomposition_matrix",
    "cartan_matrix",
    "is_kleshchev",
    "kleshchev_members",
    "hecke_submatrix",
    "dim_upper",
    "dim_lower",
    "dim_schur_block",
    "dim_hecke_block",
    "level2_decomposition",
    "tilting_matrix",
    "dominance_violations",
    "cellular_degree",
    "is_conjectural",
]


@dataclass
class FockVector:
    """A finite combination of standard basis vectors ``[Delta^lam]``."""

    entries: dict[Multipartition, LaurentPoly] = field(default_factory=dict)
    block_key: RootVector | None = None

    def __post_init__(self) -> None:
        self.entries = {lam: c for lam, c in self.entries.items() if c}

    def __getitem__(self, lam: Multipartition) -> LaurentPoly:
        return self.entries.get(lam, ZERO)

    def support(self) -> list[Multipartition]:
        """Keys with nonzero coefficient, most dominant first."""
        return sorted(self.entries, key=order_key, reverse=True)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.entries == other.entries

    def __add__(self, other: "FockVector") -> "FockVector":
        out = dict(self.entries)
        for lam, c in other.entries.items():
            out[lam] = out.get(lam, ZERO) + c
        return FockVector(out, self.block_key)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scale(-1)

    def scale(self, c) -> "FockVector":
        c = LaurentPoly.coerce(c)
        return FockVector({lam: c * v for lam, v in self.entries.items()}, self.block_key)

    def to_json(self) -> dict[str, str]:
        return {str(lam): self.entries[lam].to_text() for lam in self.support()}

    @classmethod
    def from_json(cls, obj: Mapping[str, str]) -> "FockVector":
        return cls({Multipartition.parse(k): LaurentPoly.from_text(v) for k, v in obj.items()})

    def __str__(self) -> str:
        if not self.entries:
            return "0"
        bits = []
        for lam in self.support():
            c = self.entries[lam]
            coeff = "" if c == ONE else f"({c.to_text()})"
            bits.append(f"{coeff}[{lam}]")
        return " + ".join(bits)


@dataclass
class GradedMatrix:
    """A matrix of Laurent polynomials with multipartition labels.

    Entries are stored sparsely; missing entries are zero.  Labels are kept in
    increasing total order, so decomposition matrices come out lower
    unitriangular.
    """

    row_labels: list[Multipartition]
    col_labels: list[Multipartition]
    entries: dict[tuple[Multipartition, Multipartition], LaurentPoly] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.entries = {k: v for k, v in self.entries.items() if v}

    def __getitem__(self, key: tuple[Multipartition, Multipartition]) -> LaurentPoly:
        return self.entries.get(key, ZERO)

    def triples(self) -> set[tuple[str, str, str]]:
        """Nonzero entries as ``(row, col, laurent text)`` strings."""
        return {(str(r), str(c), v.to_text()) for (r, c), v in self.entries.items()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return (
            set(self.row_labels) == set(other.row_labels)
            and set(self.col_labels) == set(other.col_labels)
            and self.entries == other.entries
        )

    def transpose(self) -> "GradedMatrix":
        return GradedMatrix(
            list(self.col_labels), list(self.row_labels), {(c, r): v for (r, c), v in self.entries.items()}
        )

    def restrict_columns(self, keep: Iterable[Multipartition]) -> "GradedMatrix":
        keep = set(keep)
        cols = [c for c in self.col_labels if c in keep]
        return GradedMatrix(
            list(self.row_labels), cols, {(r, c): v for (r, c), v in self.entries.items() if c in keep}
        )

    # -- emitters -----------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rows": [str(r) for r in self.row_labels],
            "cols": [str(c) for c in self.col_labels],
            "entries": [[self[r, c].to_text() for c in self.col_labels] for r in self.row_labels],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "GradedMatrix":
        rows = [Multipartition.parse(r) for r in obj["rows"]]
        cols = [Multipartition.parse(c) for c in obj["cols"]]
        entries = {}
        for r, line in zip(rows, obj["entries"]):
            for c, text in zip(cols, line):
                entries[r, c] = LaurentPoly.from_text(text)
        return cls(rows, cols, entries)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([""] + [str(c) for c in self.col_labels])
        for r in self.row_labels:
            w.writerow([str(r)] + [self[r, c].to_text() for c in self.col_labels])
        return buf.getvalue()

    def to_text(self) -> str:
        cells = [[""] + [str(c) for c in self.col_labels]]
        for r in self.row_labels:
            cells.append([str(r)] + [self[r, c].to_text() if self[r, c] else "." for c in self.col_labels])
        widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
        return "\n".join("  ".join(x.rjust(w) for x, w in zip(row, widths)).rstrip() for row in cells) + "\n"

    def to_latex(self) -> str:
        """LaTeX array with ``|``-separated labels and ``.`` for zero.

        A lower triangular square matrix leaves its upper triangle blank.
        """
        level = self.row_labels[0].level if self.row_labels else 1
        if level == 1:
            colspec = "r"
        else:
            colspec = "r@{|}" + "c@{|}" * (level - 2) + "l"
        ncols = len(self.col_labels)
        lines = [f"\\begin{{array}}{{{colspec}|*{{{ncols + 1}}}{{c}}}}"]
        col_pos = {c: j for j, c in enumerate(self.col_labels)}
        square = self.row_labels == self.col_labels
        if square:
            # only blank the upper triangle when nothing lives there
            row_pos = {r: i for i, r in enumerate(self.row_labels)}
            square = all(col_pos[c] <= row_pos[r] for r, c in self.entries)
        for i, r in enumerate(self.row_labels):
            label = "(" + "&".join(r.latex_components()) + ")"
            cells = []
            for c in self.col_labels:
                if square and col_pos[c] > i:
                    cells.append("")
                else:
                    cells.append(self[r, c].to_latex())
            lines.append(label + "&" + "&".join(cells) + "&\\\\")
        lines.append("\\end{array}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.to_json(), indent=1, sort_keys=True) + "\n"
        if fmt == "csv":
            return self.to_csv()
        if fmt == "latex":
            return self.to_latex()
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------


def is_conjectural(n: int, mc: Multicharge) -> bool:
    """Straightening outside e = 0 and level two is not backed by a proof."""
    return mc.e > 0 and mc.level >= 3


def _expansion(mu: Multipartition, mc: Multicharge, mode: str) -> FockVector:
    check_scope(mu.n, mc)
    return FockVector(dict(_expansion_terms(mu, mc, mode)), content(mu, mc))


@lru_cache(maxsize=1 << 14)
def _expansion_terms(mu: Multipartition, mc: Multicharge, mode: str) -> tuple:
    if mode == "upper":
        ref_deg = degree_codegree(initial_tableau(mu), mc)[0]
    else:
        ref_deg = degree_codegree(final_tableau(mu), mc)[0]
    return tuple(
        (lam, LaurentPoly.from_degrees(d - ref_deg for _, d, _ in items))
        for lam, items in std_relative_all(mu, mode, mc).items()
    )


def zmu_expansion(mu: Multipartition, mc: Multicharge) -> FockVector:
    """``[Z^mu] = sum_lam sum_{s in Std^mu(lam)} q^(deg s - deg t^mu) [Delta^lam]``."""
    return _expansion(mu, mc, "upper")


def emu_expansion(mu: Multipartition, mc: Multicharge) -> FockVector:
    """``[E^mu] = sum_lam sum_{s in Std_mu(lam)} q^(deg s - deg t_mu) [Delta^lam]``.

    The support lies in ``{lam : mu dominates lam}``.
    """
    return _expansion(mu, mc, "lower")


def _check_nonnegative(v: FockVector, mu: Multipartition) -> None:
    for lam, c in v.entries.items():
        if not c.is_nonnegative():
            raise PositivityViolation(f"negative coefficient {c} on [{lam}] while straightening {mu}")


def _ordered_members(block: Block) -> list[Multipartition]:
    return sorted(block.members, key=order_key)


def straighten_canonical(
    block: Block,
    mc: Multicharge,
    trace: Callable[[Multipartition, Multipartition, LaurentPoly], None] | None = None,
) -> tuple[dict[Multipartition, FockVector], GradedMatrix]:
    """Canonical basis ``{[P^mu]}`` of a block and its decomposition matrix.

    Starting from ``[Z^mu]``, repeatedly subtract bar-invariant multiples of
    already computed ``[P^nu]`` until every off-diagonal coefficient lies in
    ``q N[q]``.  ``trace(mu, nu, amount)`` is called for each subtraction.
    """
    check_scope(block.n, mc)
    p_basis: dict[Multipartition, FockVector] = {}
    for mu in reversed(_ordered_members(block)):
        v = zmu_expansion(mu, mc)
        _check_nonnegative(v, mu)
        while True:
            best = None
            for nu in v.support():
                if nu == mu:
                    continue
                d = v[nu].mindeg()
                if d <= 0 and (best is None or d < best[1]):
                    best = (nu, d)
            if best is None:
                break
            nu, d = best
            c = v[nu].coefficient(d)
            amount = LaurentPoly({d: c, -d: c}) if d < 0 else LaurentPoly({0: c})
            if trace is not None:
                trace(mu, nu, amount)
            v = v - p_basis[nu].scale(amount)
            _check_nonnegative(v, mu)
        if v[mu] != ONE:
            raise PositivityViolation(f"diagonal coefficient {v[mu]} for {mu}")
        p_basis[mu] = v
    return p_basis, _matrix_from_basis(block, p_basis)


def straighten_tilting(
    block: Block,
    mc: Multicharge,
    trace: Callable[[Multipartition, Multipartition, LaurentPoly], None] | None = None,
) -> dict[Multipartition, FockVector]:
    """Tilting basis ``{[T_mu]}``: ``[Delta^mu]`` plus terms in ``q^-1 N[q^-1]``.

    Mirrors :func:`straighten_canonical` starting from ``[E^mu]``; because
    ``[E^mu]`` is supported below ``mu``, the least dominant ``mu`` is
    handled first.
    """
    check_scope(block.n, mc)
    t_basis: dict[Multipartition, FockVector] = {}
    for mu in _ordered_members(block):
        v = emu_expansion(mu, mc)
        _check_nonnegative(v, mu)
        while True:
            best = None
            for nu in v.support():
                if nu == mu:
                    continue
                d = v[nu].maxdeg()
                if d >= 0 and (best is None or d > best[1]):
                    best = (nu, d)
            if best is None:
                break
            nu, d = best
            c = v[nu].coefficient(d)
            amount = LaurentPoly({d: c, -d: c}) if d > 0 else LaurentPoly({0: c})
            if trace is not None:
                trace(mu, nu, amount)
            v = v - t_basis[nu].scale(amount)
            _check_nonnegative(v, mu)
        if v[mu] != ONE:
            raise PositivityViolation(f"diagonal coefficient {v[mu]} for {mu}")
        t_basis[mu] = v
    return t_basis


def _matrix_from_basis(block: Block, basis: Mapping[Multipartition, FockVector]) -> GradedMatrix:
    labels = _ordered_members(block)
    entries = {(lam, mu): c for mu, v in basis.items() for lam, c in v.entries.items()}
    return GradedMatrix(labels, list(labels), entries)


def decomposition_matrix(block: Block, mc: Multicharge) -> GradedMatrix:
    return straighten_canonical(block, mc)[1]


def tilting_matrix(block: Block, mc: Multicharge) -> GradedMatrix:
    """Entry ``(mu, lam)`` is the coefficient of ``[Delta^mu]`` in ``[T_lam]``."""
    return _matrix_from_basis(block, straighten_tilting(block, mc))


def cartan_matrix(D: GradedMatrix) -> GradedMatrix:
    """``C = D^T D``, i.e. ``C[lam, mu] = sum_nu D[nu, lam] D[nu, mu]``."""
    cols = list(D.col_labels)
    by_col: dict[Multipartition, dict[Multipartition, LaurentPoly]] = {c: {} for c in cols}
    for (r, c), v in D.entries.items():
        by_col[c][r] = v
    entries = {}
    for lam in cols:
        a = by_col[lam]
        for mu in cols:
            b = by_col[mu]
            acc = ZERO
            for nu, x in a.items():
                y = b.get(nu)
                if y is not None:
                    acc = acc + x * y
            if acc:
                entries[lam, mu] = acc
    return GradedMatrix(list(cols), list(cols), entries)


def is_kleshchev(mu: Multipartition, mc: Multicharge) -> bool:
    """Row criterion for Kleshchev multipartitions when ``e = 0`` and the charge is weakly decreasing."""
    kappa = mc.kappa
    if mc.e != 0:
        raise Unsupported("Kleshchev detection is only available for e = 0")
    if any(kappa[i] < kappa[i + 1] for i in range(len(kappa) - 1)):
        raise Unsupported(f"multicharge {mc} is not weakly decreasing")
    if mu.level != mc.level:
        raise ValueError("multipartition and multicharge have different levels")

    def part(l: int, r: int) -> int:
        p = mu.components[l]
        return p[r - 1] if r <= len(p) else 0

    for l in range(mu.level - 1):
        shift = kappa[l] - kappa[l + 1]
        for r in range(1, len(mu.components[l]) + 1):
            if part(l, r + shift) > part(l + 1, r):
                return False
    return True


def kleshchev_members(block: Block, mc: Multicharge) -> list[Multipartition]:
    return [mu for mu in _ordered_members(block) if is_kleshchev(mu, mc)]


def hecke_submatrix(D: GradedMatrix, mc: Multicharge) -> GradedMatrix:
    """Restrict a decomposition matrix to its Kleshchev columns."""
    return D.restrict_columns(mu for mu in D.col_labels if is_kleshchev(mu, mc))


# ---------------------------------------------------------------------------
# graded dimensions


@lru_cache(maxsize=4096)
def _shape_generating(lam: Multipartition, mc: Multicharge) -> tuple[LaurentPoly, LaurentPoly]:
    """``(sum_t q^deg t, sum_t q^codeg t)`` over standard ``lam``-tableaux."""
    items = graded_standard(lam, mc)
    return (
        LaurentPoly.from_degrees(d for _, d, _ in items),
        LaurentPoly.from_degrees(cd for _, _, cd in items),
    )


def dim_upper(mu: Multipartition, mc: Multicharge) -> LaurentPoly:
    """Graded dimension of ``G^mu``, built from ``Std^mu`` and degrees."""
    check_scope(mu.n, mc)
    # the relative degrees of Std^mu(lam) are exactly the coefficients of [Z^mu]
    total = ZERO
    for lam, coeff in _expansion_terms(mu, mc, "upper"):
        total = total + coeff * _shape_generating(lam, mc)[0]
    return total


def dim_lower(mu: Multipartition, mc: Multicharge) -> LaurentPoly:
    """Graded dimension of ``G_mu``, built from ``Std_mu`` and codegrees."""
    check_scope(mu.n, mc)
    ref = degree_codegree(final_tableau(mu), mc)[1]
    total = ZERO
    for lam, items in std_relative_all(mu, "lower", mc).items():
        total = total + LaurentPoly.from_degrees(cd - ref for _, _, cd in items) * _shape_generating(lam, mc)[1]
    return total


def dim_schur_block(block: Block, mc: Multicharge) -> LaurentPoly:
    check_scope(block.n, mc)
    column_sums: dict[Multipartition, LaurentPoly] = {}
    for mu in block.members:
        for lam, c in zmu_expansion(mu, mc).entries.items():
            column_sums[lam] = column_sums.get(lam, ZERO) + c
    return sum((c * c for c in column_sums.values()), ZERO)


def dim_hecke_block(block: Block, mc: Multicharge) -> LaurentPoly:
    check_scope(block.n, mc)
    total = ZERO
    for lam in block.members:
        g = _shape_generating(lam, mc)[0]
        total = total + g * g
    return total


# ---------------------------------------------------------------------------


def level2_decomposition(block: Block, mc: Multicharge) -> GradedMatrix:
    """Decomposition matrix in level two read off directly from ``Std^mu``."""
    if mc.level != 2:
        raise NotLevelTwo(f"level {mc.level} multicharge; the closed formula needs level 2")
    check_scope(block.n, mc)
    entries = {}
    for mu in block.members:
        ref = degree_codegree(initial_tableau(mu), mc)[0]
        for lam, items in std_relative_all(mu, "upper", mc).items():
            if len(items) > 1:
                raise NonUniqueTableau(f"{len(items)} tableaux in Std^{mu}({lam})")
            entries[lam, mu] = LaurentPoly.monomial(items[0][1] - ref)
    labels = _ordered_members(block)
    return GradedMatrix(labels, list(labels), entries)


def cellular_degree(
    s: StandardTableau, mu: Multipartition, t: StandardTableau, nu: Multipartition, mc: Multicharge
) -> int:
    """Degree of the cellular basis element indexed by ``s`` in ``Std^mu(lam)`` and ``t`` in ``Std^nu(lam)``."""
    if s.shape != t.shape:
        raise ValueError("s and t must have the same shape")
    for tab, label in ((s, mu), (t, nu)):
        if not any(x.path == tab.path for x in std_relative(label, tab.shape, "upper", mc)):
            raise ValueError(f"{tab} is not in Std^{label}({tab.shape})")
    ds, _ = degree_codegree(s, mc)
    dt, _ = degree_codegree(t, mc)
    return ds - degree_codegree(initial_tableau(mu), mc)[0] + dt - degree_codegree(initial_tableau(nu), mc)[0]


def dominance_violations(D: GradedMatrix) -> list[tuple[Multipartition, Multipartition]]:
    """Nonzero entries ``(lam, mu)`` with ``lam`` not dominating ``mu``."""
    return [(r, c) for (r, c) in D.entries if not dominates(r, c)]
