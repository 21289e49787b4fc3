import json

import pytest

from qschur.combinatorics import Multicharge, Multipartition, std_relative
from qschur.fock import GradedMatrix, decomposition_matrix, zmu_expansion
from qschur.laurent import ONE, q
from qschur.oracle import (
    CheckReport,
    brute_std_relative,
    brute_zmu,
    cellular_dimension_check,
    conjugate_duality_check,
    verify_block_invariants,
)
from qschur.roots import blocks, find_block

MP = Multipartition.parse
MC2 = Multicharge((0, 0), 0)
MC3 = Multicharge((0, 0, 0), 0)


@pytest.fixture(scope="module")
def big_block():
    return find_block(7, MC3, "a-1:1,a0:3,a1:1,a2:1,a3:1")


def test_brute_std_small():
    # hand enumeration: Std^(-|1)(1|-) is the single box, Std^(1|-)(-|1) is empty
    assert len(brute_std_relative(MP("-|1"), MP("1|-"), "upper", MC2)) == 1
    assert brute_std_relative(MP("1|-"), MP("-|1"), "upper", MC2) == []
    assert len(brute_std_relative(MP("1|-"), MP("-|1"), "lower", MC2)) == 1


def test_brute_zmu_matches_hand_value():
    assert brute_zmu(MP("-|1"), [MP("1|-"), MP("-|1")], MC2) == {MP("1|-"): q, MP("-|1"): ONE}


def test_brute_zmu_big_block_column(big_block):
    mu = MP("4,1|1|1")
    assert brute_zmu(mu, big_block.members, MC3) == zmu_expansion(mu, MC3).entries


@pytest.mark.parametrize("kappa,e,n", [((0, 1), 0, 4), ((0, 0, 0), 0, 4), ((0, 2), 5, 5)])
def test_generator_against_brute(kappa, e, n):
    mc = Multicharge(kappa, e)
    for b in blocks(n, mc):
        for mu in b.members:
            for lam in b.members:
                for mode in ("upper", "lower"):
                    fast = {s.path for s in std_relative(mu, lam, mode, mc)}
                    slow = {s.path for s in brute_std_relative(mu, lam, mode, mc)}
                    assert fast == slow


def test_verify_small_block():
    (b,) = blocks(1, MC2)
    rep = verify_block_invariants(b, MC2)
    assert rep.passed and rep.counterexample is None
    assert rep.checked > 0


def test_verify_big_block(big_block):
    rep = verify_block_invariants(big_block, MC3)
    assert rep.passed, rep.summary()
    assert [r.name for r in rep.sub_reports] == [
        "deg+codeg=defect",
        "decomposition matrix unitriangular",
        "canonical basis characterization",
        "Cartan matrix symmetric",
        "graded dimension palindromic",
        "relative tableau generator",
    ]


def test_corrupted_matrix_is_caught(big_block):
    D = decomposition_matrix(big_block, MC3)
    row, col = MP("4,1|1|1"), MP("1|-|4,2")
    bad = GradedMatrix(D.row_labels, D.col_labels, dict(D.entries))
    bad.entries[row, col] = q**3 + 2 * q
    rep = verify_block_invariants(big_block, MC3, D=bad, brute=False)
    assert not rep.passed
    # still unitriangular and positive, and D^T D is symmetric for any D,
    # so only the bar-invariance of the Z coefficients can see this
    assert rep.counterexample["check"] == "canonical basis characterization"
    assert (rep.counterexample["row"], rep.counterexample["col"]) == (str(row), str(col))
    assert rep.counterexample["entry"] == "2*q + q^3"


def test_corrupted_entries_localized(big_block):
    D = decomposition_matrix(big_block, MC3)
    row, col = MP("4,2|1|-"), MP("1|4,2|-")
    bad = GradedMatrix(D.row_labels, D.col_labels, dict(D.entries))
    bad.entries[row, col] = q - 1
    rep = verify_block_invariants(big_block, MC3, D=bad, brute=False)
    assert not rep.passed
    assert rep.counterexample["row"] == "4,2|1|-" and rep.counterexample["col"] == "1|4,2|-"
    assert rep.counterexample["reason"] == "entry not in qN[q]"

    bad2 = GradedMatrix(D.row_labels, D.col_labels, dict(D.entries))
    bad2.entries[col, row] = q
    rep2 = verify_block_invariants(big_block, MC3, D=bad2, brute=False)
    assert rep2.counterexample["reason"] == "row does not dominate column"


def test_report_json():
    (b,) = blocks(1, MC2)
    doc = verify_block_invariants(b, MC2).to_json()
    assert json.loads(json.dumps(doc)) == doc
    assert doc["passed"] and len(doc["checks"]) == 6
    rep = CheckReport("x", {}).fail(where="here")
    assert rep.summary().startswith("FAIL x") and "where" in rep.summary()


@pytest.mark.parametrize("kappa", [(0, 0), (3, -1), (0, 0, 0)])
def test_duality_single_box(kappa):
    mc = Multicharge(kappa, 0)
    for b in blocks(1, mc):
        assert conjugate_duality_check(b, mc).passed


def test_duality_small_blocks():
    for e, n in [(0, 4), (4, 4), (5, 4)]:
        mc = Multicharge((0, 1), e)
        for b in blocks(n, mc):
            rep = conjugate_duality_check(b, mc)
            assert rep.passed, rep.summary()


@pytest.mark.parametrize("n,level", [(0, 1), (3, 2), (4, 3), (5, 2)])
def test_cellular_dimension(n, level):
    assert cellular_dimension_check(n, level).passed
