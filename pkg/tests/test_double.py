from __future__ import annotations

import pytest

from conftest import P1, S1, V
from sdhall.backends import VectBackend
from sdhall.coefficients import vpow
from sdhall.double import DrinfeldDouble
from sdhall.sdh import SDHAlgebra


def test_pairing_values(double_vect, double_a2):
    d = double_vect
    p, m = d.plus, d.minus
    assert d.pairing_key(p.key(alpha=(1,)), m.key(alpha=(2,))) == vpow(4, 2)
    assert d.pairing_key(p.key(V(1)), m.key(V(1))) == 1  # a_{V1} = q - 1
    assert d.pairing_key(p.key(V(2)), m.key(V(2))) == 6
    assert d.pairing_key(p.key(V(1)), m.key(V(2))) == 0
    a = double_a2
    assert a.pairing_key(a.plus.key(P1), a.minus.key(P1)) == 1
    assert a.pairing_key(a.plus.key(S1, (1, 0)), a.minus.key(S1, (0, 1))) == vpow(-1, 2)


def test_map_i_on_generators(double_vect):
    d = double_vect
    s = d.sdh
    assert d.i_plus(d.plus.key(V(1), (1,))) == {s.key((1,), None, None, V(1)): vpow(-2, 2)}
    assert d.iso_i(d.plus.key(), d.minus.key()) == s.unit()


def _all(d: DrinfeldDouble, bound):
    return [
        d.verify_hopf_pairing(bound),
        *d.plus.verify_bialgebra(bound),
        *d.minus.verify_bialgebra(bound),
        *d.verify_double_relations(bound),
        d.verify_bialgebra_iso(bound),
        d.verify_injective(bound),
    ]


@pytest.mark.parametrize("which,bound", [("double_vect", (2,)), ("double_a2", (1, 1))])
def test_double_suites_pass(which, bound, request):
    for rep in _all(request.getfixturevalue(which), bound):
        assert rep.passed and rep.instances > 0, (rep.name, rep.first_failure)


def _failed(d, bound):
    return {r.name for r in _all(d, bound) if not r.passed}


def test_negative_minus_twist_breaks_relations():
    d = DrinfeldDouble(SDHAlgebra(VectBackend(2)), minus_sign=-1)
    failed = _failed(d, (2,))
    assert {"double_D2", "ext_minus_compatibility"} <= failed


def test_literal_sweedler_order_breaks_pairing():
    d = DrinfeldDouble(SDHAlgebra(VectBackend(2)), minus_order="literal")
    failed = _failed(d, (2,))
    assert {"hopf_pairing", "double_D4"} <= failed
