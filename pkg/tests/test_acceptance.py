"""Acceptance criteria, each run at its stated scope and tolerance.

Every test reports a PASS/FAIL line through ``acceptance_log``; the lines are
collected in the terminal summary.  Parts that fail for a documented reason
are marked ``xfail(strict=True)``: they still run the criterion unchanged, and
a companion test pins down exactly which inputs fail.
"""

import json
import time
from pathlib import Path

import pytest

from qschur.cli import main
from qschur.combinatorics import (
    Multicharge,
    Multipartition,
    StandardTableau,
    degree_codegree,
    graded_standard,
    initial_tableau,
    std_relative,
    std_relative_all,
)
from qschur.errors import Unsupported
from qschur.fock import (
    FockVector,
    GradedMatrix,
    cellular_degree,
    dim_upper,
    kleshchev_members,
    level2_decomposition,
    straighten_canonical,
    zmu_expansion,
)
from qschur.laurent import ONE, q
from qschur.oracle import cellular_dimension_check, conjugate_duality_check, verify_block_invariants
from qschur.roots import blocks, find_block

GOLDEN = Path(__file__).parent / "golden"
MP = Multipartition.parse
MC3 = Multicharge((0, 0, 0), 0)
BIG_BLOCK = "a-1:1,a0:3,a1:1,a2:1,a3:1"
BIG_ARGS = ["--n", "7", "--charge", "0,0,0", "--e", "0", "--block", BIG_BLOCK]

# e = 0 property scope: level 1, every level-2 charge up to shift, and a
# spread of level-3 charges.
CHARGES_E0 = (
    [(0,)]
    + [(0, d) for d in range(-7, 8)]
    + [(0, a, b) for a in range(-2, 3) for b in range(-2, 3)]
    + [(0, 3, 6), (0, -4, 4)]
)


def e_equals_n_cases(max_n):
    # level 2 with e = n: every charge up to a common shift is (0, d) with 0 <= d < e
    return [(n, (0, d)) for n in range(2, max_n + 1) for d in range(n)]


# ---------------------------------------------------------------------------
# 1-5: the worked example


def test_criterion_1_golden_matrix(acceptance_log, capsys):
    start = time.perf_counter()
    code = main(["decomp", *BIG_ARGS, "--format", "json"])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    ours = GradedMatrix.from_json(json.loads(out))
    golden = GradedMatrix.from_json(json.loads((GOLDEN / "defect4_block_decomposition.json").read_text()))
    cells = [(r, c) for r in golden.row_labels for c in golden.col_labels]
    mismatched = [(str(r), str(c)) for r, c in cells if ours[r, c] != golden[r, c]]
    main(["decomp", *BIG_ARGS, "--format", "latex"])
    latex_same = capsys.readouterr().out == (GOLDEN / "defect4_block_decomposition.tex").read_text()
    ok = code == 0 and len(cells) == 225 and not mismatched and latex_same and elapsed < 60
    acceptance_log(
        1, ok, f"{225 - len(mismatched)}/225 entries equal, LaTeX identical={latex_same}, {elapsed:.2f}s"
    )
    assert ok, mismatched


def test_criterion_2_zmu_and_straightening(acceptance_log):
    mu = MP("4,1|1|1")
    z = zmu_expansion(mu, MC3)
    expected = FockVector({mu: ONE, MP("4,2|-|1"): q, MP("4,2|1|-"): q**2 + 1})
    p_basis, _ = straighten_canonical(find_block(7, MC3, BIG_BLOCK), MC3)
    relation = z == p_basis[mu] + p_basis[MP("4,2|1|-")]
    ok = z == expected and relation
    acceptance_log(2, ok, f"Z = {z}; Z = P^mu + P^(4,2|1|-): {relation}")
    assert ok


def test_criterion_3_defect(acceptance_log):
    b = find_block(7, MC3, BIG_BLOCK)
    ok = b.defect == 4 and len(b.members) == 15
    acceptance_log(3, ok, f"defect {b.defect}, {len(b.members)} members")
    assert ok


def test_criterion_4_kleshchev(acceptance_log):
    found = {str(m) for m in kleshchev_members(find_block(7, MC3, BIG_BLOCK), MC3)}
    ok = found == {"-|1|4,2", "1|1|4,1"}
    acceptance_log(4, ok, f"Kleshchev set {sorted(found)}")
    assert ok


def test_criterion_5_degree_example(acceptance_log):
    mu = MP("1|2,1|2,2")
    t = StandardTableau.from_rows([[[1, 6], [7]], [[2, 3], [4, 8]], [[5]]])
    in_std = any(s.path == t.path for s in std_relative(mu, MP("2,1|2,2|1"), "upper", MC3))
    deg_t = degree_codegree(t, MC3)[0]
    deg_tmu = degree_codegree(initial_tableau(mu), MC3)[0]
    psi = cellular_degree(t, mu, t, mu, MC3)
    ok = in_std and t.shape == MP("2,1|2,2|1") and (deg_t, deg_tmu, psi) == (2, 3, -2)
    acceptance_log(5, ok, f"deg t = {deg_t}, deg t^mu = {deg_tmu}, cellular degree {psi}")
    assert ok


# ---------------------------------------------------------------------------
# 6: property suite


def _property_failures(n, mc):
    """All violations of the criterion-6 properties for one (n, charge)."""
    failures = []
    for b in blocks(n, mc):
        for lam in b.members:
            for t, d, cd in graded_standard(lam, mc):
                if d + cd != b.defect:
                    failures.append(("deg+codeg", str(t)))
        rep = verify_block_invariants(b, mc, brute=False)
        for sub in rep.sub_reports:
            if sub.name == "graded dimension palindromic":
                continue
            if not sub.passed:
                failures.append((sub.name, json.dumps(sub.counterexample, sort_keys=True)))
        # every palindromic failure, not just the first one
        for mu in b.members:
            g = dim_upper(mu, mc)
            if g != g.bar().shift(2 * b.defect):
                failures.append(("palindromic", str(mu)))
    return failures


def _cellular_failures():
    return [(n, level) for n in range(7) for level in (1, 2, 3) if not cellular_dimension_check(n, level).passed]


@pytest.fixture(scope="module")
def e_equals_n_property_failures():
    return {(n, kappa): _property_failures(n, Multicharge(kappa, n)) for n, kappa in e_equals_n_cases(8)}


@pytest.mark.slow
def test_criterion_6_properties_e0(acceptance_log):
    start = time.perf_counter()
    failures = {}
    runs = 0
    for kappa in CHARGES_E0:
        mc = Multicharge(kappa, 0)
        for n in range(8):
            runs += 1
            bad = _property_failures(n, mc)
            if bad:
                failures[kappa, n] = bad
    cell = _cellular_failures()
    ok = not failures and not cell
    acceptance_log(
        6,
        ok,
        f"e=0: {runs} (charge, n) runs, {len(failures)} with failures, "
        f"dimension identity failures {cell}, {time.perf_counter() - start:.0f}s",
        part="a",
    )
    assert ok, (failures, cell)


@pytest.mark.xfail(
    strict=True,
    reason="at e = n the graded dimension of G^mu for mu = (-|n) is not palindromic; "
    "see test_criterion_6_e_equals_n_failure_is_localized",
)
def test_criterion_6_properties_e_equals_n(acceptance_log, e_equals_n_property_failures):
    bad = {k: v for k, v in e_equals_n_property_failures.items() if v}
    count = sum(len(v) for v in bad.values())
    acceptance_log(
        6,
        not bad,
        f"e=n, level 2, n<=8: {len(e_equals_n_property_failures)} runs, {count} violations in {len(bad)} runs "
        "(all: DimG^(-|n) not palindromic)",
        part="b",
    )
    assert not bad


def test_criterion_6_e_equals_n_failure_is_localized(e_equals_n_property_failures):
    # exactly one violation per run: the palindromic check for the one-row
    # multipartition in the last component; nothing else fails
    for (n, kappa), bad in e_equals_n_property_failures.items():
        assert bad == [("palindromic", str(Multipartition(((), (n,)))))], (n, kappa)


def test_e_above_n_is_clean():
    # one step past the boundary every property holds
    for n, kappa in e_equals_n_cases(7):
        assert _property_failures(n, Multicharge(kappa, n + 1)) == [], (n, kappa)


# ---------------------------------------------------------------------------
# 7: level two closed formula


def _level2_report(n, mc):
    mismatches, non_monomial, multi = [], [], []
    for b in blocks(n, mc):
        for mu in b.members:
            for lam, items in std_relative_all(mu, "upper", mc).items():
                if len(items) > 1:
                    multi.append((str(lam), str(mu)))
        if multi:
            continue
        L = level2_decomposition(b, mc)
        _, D = straighten_canonical(b, mc)
        non_monomial += [(str(r), str(c)) for (r, c), v in D.entries.items() if not v.is_monomial()]
        keys = set(D.entries) | set(L.entries)
        mismatches += [(str(r), str(c), D[r, c].to_text(), L[r, c].to_text()) for r, c in keys if D[r, c] != L[r, c]]
    return mismatches, non_monomial, multi


@pytest.fixture(scope="module")
def e_equals_n_level2():
    return {(n, kappa): _level2_report(n, Multicharge(kappa, n)) for n, kappa in e_equals_n_cases(8)}


def test_criterion_7_level2_e0(acceptance_log):
    bad = {}
    runs = 0
    for d in range(-8, 9):
        for n in range(9):
            runs += 1
            rep = _level2_report(n, Multicharge((0, d), 0))
            if any(rep):
                bad[d, n] = rep
    acceptance_log(7, not bad, f"e=0: {runs} (charge, n) runs, {len(bad)} with differences", part="a")
    assert not bad


@pytest.mark.xfail(
    strict=True,
    reason="at e = n with kappa_1 = kappa_2 mod e the closed formula gives 1 off the diagonal "
    "in column (-|n); see test_criterion_7_e_equals_n_failure_is_localized",
)
def test_criterion_7_level2_e_equals_n(acceptance_log, e_equals_n_level2):
    bad = {k: v for k, v in e_equals_n_level2.items() if any(v)}
    acceptance_log(
        7,
        not bad,
        f"e=n: {len(e_equals_n_level2)} runs, {len(bad)} with differences "
        "(monomial and #Std<=1 hold everywhere; formula and straightening differ in column (-|n) "
        "when kappa_1 = kappa_2 mod e)",
        part="b",
    )
    assert not bad


def test_criterion_7_e_equals_n_failure_is_localized(e_equals_n_level2):
    for (n, kappa), (mismatches, non_monomial, multi) in e_equals_n_level2.items():
        assert not non_monomial and not multi
        if kappa[1] % n == 0:
            assert mismatches and {c for _, c, _, _ in mismatches} == {str(Multipartition(((), (n,))))}
            # the closed formula puts a constant 1 below the diagonal, which is not in qN[q]
            assert any(lv == "1" and dv == "0" for _, _, dv, lv in mismatches)
        else:
            assert not mismatches, (n, kappa)


# ---------------------------------------------------------------------------
# 8: tilting duality


@pytest.mark.slow
def test_criterion_8_tilting_duality(acceptance_log):
    charges = [(0,)] + [(0, d) for d in range(-6, 7)] + [(0, 0, 0), (0, 1, 2), (0, -1, 1), (2, 0, 1)]
    start = time.perf_counter()
    bad, checked = [], 0
    for kappa in charges:
        mc = Multicharge(kappa, 0)
        for n in range(7):
            for b in blocks(n, mc):
                rep = conjugate_duality_check(b, mc)
                checked += rep.checked
                if not rep.passed:
                    bad.append(rep.summary())
    acceptance_log(8, not bad, f"{checked} comparisons, {len(bad)} failing blocks, {time.perf_counter() - start:.0f}s")
    assert not bad


# ---------------------------------------------------------------------------
# 9: negative controls


def test_criterion_9_negative_control(acceptance_log, capsys):
    block = find_block(7, MC3, BIG_BLOCK)
    _, D = straighten_canonical(block, MC3)
    bad = GradedMatrix(D.row_labels, D.col_labels, dict(D.entries))
    row, col = MP("4,1|1|1"), MP("1|-|4,2")
    bad.entries[row, col] = D[row, col] + q
    rep = verify_block_invariants(block, MC3, D=bad, brute=False)
    localized = (
        not rep.passed
        and rep.counterexample is not None
        and (rep.counterexample.get("row"), rep.counterexample.get("col")) == (str(row), str(col))
    )
    code = main(["decomp", "--n", "5", "--charge", "0,0", "--e", "3"])
    err = capsys.readouterr().err
    with pytest.raises(Unsupported):
        blocks(5, Multicharge((0, 0), 3))
    ok = localized and code == 2 and "e >= n" in err
    acceptance_log(
        9, ok, f"corrupted entry reported at {rep.counterexample and (rep.counterexample.get('row'), rep.counterexample.get('col'))}; "
        f"1<e<n exit status {code}"
    )
    assert ok
