from __future__ import annotations

from fractions import Fraction

import pytest

from conftest import P1, S1, S2, SPLIT, V
from sdhall.backends import QuiverBackend, A2
from sdhall.coefficients import QSqrt, vpow
from sdhall.hallcore import HallAlgebra


@pytest.fixture(scope="module")
def hv(vect2):
    return HallAlgebra(vect2)


@pytest.fixture(scope="module")
def ha(a2):
    return HallAlgebra(a2)


def test_hall_numbers(hv, ha):
    assert hv.h(V(1), V(1), V(2)) == Fraction(1, 2)
    assert ha.h(S1, S2, P1) == 1
    assert ha.h(S1, S2, SPLIT) == 1
    assert ha.h(S2, S1, P1) == 0
    assert ha.h(S2, S1, SPLIT) == 1
    assert ha.hall_number(S1, S2, P1) == ha.hall_number_direct(S1, S2, P1)


def test_extension_distribution(hv, ha):
    assert hv.middle_terms(V(1), V(1)) == {V(2): Fraction(1, 2)}
    assert ha.extension_distribution(S1, S2) == {SPLIT: 1, P1: 1}


def test_twisted_product(ha):
    vinv = vpow(-1, 2)
    assert ha.product(ha.basis(S1), ha.basis(S2)) == {SPLIT: vinv, P1: vinv}
    assert ha.product(ha.basis(S2), ha.basis(S1)) == {SPLIT: QSqrt.one(2)}
    assert ha.product(ha.basis(S1), ha.basis(S2), twisted=False) == {SPLIT: QSqrt.one(2), P1: QSqrt.one(2)}


def test_green_coproduct(hv, ha):
    d = hv.green_coproduct(hv.basis(V(2)))
    assert d[(V(1), V(1))] == QSqrt(0, 3, 2)
    assert d[(V(0), V(2))] == 1 and d[(V(2), V(0))] == 1
    dp = ha.green_coproduct(ha.basis(P1))
    assert dp == {(ha.backend.zero, P1): 1, (S1, S2): vpow(-1, 2), (P1, ha.backend.zero): 1}


def test_counit(ha):
    assert ha.counit(ha.basis(ha.backend.zero)) == 1
    assert ha.counit(ha.basis(P1)) == 0


def test_decompositions(ha):
    assert ha.decompositions(P1) == [(ha.backend.zero, P1, 1), (S1, S2, 1), (P1, ha.backend.zero, 1)]


@pytest.mark.parametrize("q,bound", [(2, (3,)), (3, (3,))])
def test_vect_suites(q, bound):
    from sdhall.backends import VectBackend

    h = HallAlgebra(VectBackend(q))
    for rep in (h.verify_double_entry(bound), h.verify_associativity(bound), h.verify_green_formula((2,)), h.verify_green_corollary((2,))):
        assert rep.passed, rep.first_failure
        assert rep.instances > 0


def test_a2_suites(ha):
    b = (1, 1)
    reports = [
        ha.verify_double_entry(b),
        ha.verify_associativity(b),
        ha.verify_green_formula(b),
        ha.verify_green_corollary(b),
        ha.verify_coassociativity(b),
        ha.verify_counit(b),
        ha.verify_bialgebra(b),
    ]
    for rep in reports:
        assert rep.passed, (rep.name, rep.first_failure)


def test_fault_injection_is_detected():
    h = HallAlgebra(QuiverBackend(A2, 2))
    h.overrides[(S1, S2, P1)] = Fraction(2)
    assert not h.verify_double_entry((1, 1)).passed
    assert not h.verify_green_formula((1, 1)).passed


def test_hall_table(hv):
    rows = hv.hall_table((2,))
    row = next(r for r in rows if (r["M"], r["N"], r["R"]) == ("V1", "V1", "V2"))
    assert row["h"] == {"rat": "1/2", "surd": "0"}
    assert all(r["agree"] for r in rows)
