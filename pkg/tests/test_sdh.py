from __future__ import annotations

import pytest

from conftest import P1, S1, S2, SPLIT, V
from sdhall.coefficients import QSqrt, vpow
from sdhall.report import TruncationError
from sdhall.sdh import COPRODUCT_TERMS, PRODUCT_TERMS, Perturbation, SDHAlgebra, sensitivity_controls

ONE = QSqrt.one(2)


def C(s, x):
    return s.key(b=x)


def Cs(s, x):
    return s.key(a=x)


def test_unit(sdh_vect, sdh_a2):
    for s, b in ((sdh_vect, (2,)), (sdh_a2, (1, 1))):
        assert s.verify_unit(b).passed
    assert sdh_vect.counit(sdh_vect.unit()) == 1


def test_key_labels(sdh_vect):
    assert sdh_vect.unit_key.label() == "[C*V0+CV0]"
    assert sdh_vect.key(alpha=(1,), beta=(2,)).label() == "K[1]*K*[2]"
    assert sdh_vect.key((1,), None, V(1), None).degree() == ((2,), (1,))


def test_k_factors_commute_with_each_other(sdh_vect):
    s = sdh_vect
    k, ks = s.key(alpha=(1,)), s.key(beta=(1,))
    assert s.product_keys(k, ks) == s.product_keys(ks, k) == {s.key(alpha=(1,), beta=(1,)): ONE}


def test_k_factors_pass_cores_with_symmetric_form(sdh_vect, sdh_a2):
    s = sdh_vect
    k = s.key(alpha=(1,))
    core = Cs(s, V(1))
    assert s.product_keys(k, core) == {s.key((1,), None, V(1), None): ONE}
    assert s.product_keys(core, k) == {s.key((1,), None, V(1), None): vpow(2, 2)}
    ks = s.key(beta=(1,))
    assert s.product_keys(core, ks) == {s.key(None, (1,), V(1), None): vpow(-2, 2)}
    a = sdh_a2
    assert a.product_keys(C(a, S1), a.key(alpha=(0, 1))) == {a.key((0, 1), None, None, S1): vpow(1, 2)}


def test_core_products(sdh_vect, sdh_a2):
    s = sdh_vect
    assert s.product_keys(C(s, V(1)), Cs(s, V(1))) == {s.key(a=V(1), b=V(1)): ONE, s.key(beta=(1,)): ONE}
    assert s.product_keys(Cs(s, V(1)), C(s, V(1))) == {s.key(a=V(1), b=V(1)): ONE, s.key(alpha=(1,)): ONE}
    assert s.product_keys(Cs(s, V(1)), Cs(s, V(1))) == {Cs(s, V(2)): vpow(-1, 2)}
    a = sdh_a2
    assert a.product_keys(C(a, S1), C(a, S2)) == {C(a, SPLIT): vpow(-1, 2), C(a, P1): vpow(-1, 2)}
    assert a.product_keys(Cs(a, S2), C(a, S1)) == {a.key(a=S2, b=S1): ONE}


def test_coproducts(sdh_vect):
    s = sdh_vect
    u = s.unit_key
    assert s.coproduct_key(Cs(s, V(1))) == {(Cs(s, V(1)), s.key(beta=(1,))): ONE, (u, Cs(s, V(1))): ONE}
    assert s.coproduct_key(C(s, V(1))) == {(s.key(alpha=(1,)), C(s, V(1))): ONE, (C(s, V(1)), u): ONE}
    k = s.key(alpha=(1,))
    assert s.coproduct_key(k) == {(k, k): ONE}


def test_counit_values(sdh_vect, sdh_a2):
    s = sdh_vect
    assert s.counit_key(s.key(alpha=(1,), beta=(2,))) == 1
    assert s.counit_key(Cs(s, V(1))) == 0
    assert s.counit_key(s.key(a=V(1), b=V(1))) == -1
    a = sdh_a2
    assert a.counit_key(a.key(a=S1, b=S1)) == -1
    assert a.counit_key(a.key(a=S1, b=S2)) == 0


def test_naive_counit_breaks_the_counit_axiom():
    from sdhall.backends import VectBackend

    s = SDHAlgebra(VectBackend(2))
    s.naive_counit = True
    rep = s.verify_counit((1,))
    assert not rep.passed
    assert rep.first_failure["key"] == s.key(a=V(1), b=V(1)).to_json()


def test_normal_forms(sdh_vect):
    s = sdh_vect
    cb = s.complexes
    # K_V1 + C*_V1 carries v^<Im d0, H0 - H1> = v^1
    c = cb.direct_sum_complex(cb.standard_complexes(V(1))[0], cb.standard_complexes(V(1))[3])
    assert s.normal_form(c) == {s.key((1,), None, V(1), None): vpow(1, 2)}
    c = cb.direct_sum_complex(cb.standard_complexes(V(1))[1], cb.standard_complexes(V(1))[3])
    assert s.normal_form(c) == {s.key(None, (1,), V(1), None): vpow(-1, 2)}


@pytest.mark.parametrize("which,bound", [("sdh_vect", (2,)), ("sdh_a2", (1, 1))])
def test_oracle_suites(which, bound, request):
    s = request.getfixturevalue(which)
    for rep in (s.verify_normal_forms(bound), s.verify_k_alpha(bound)):
        assert rep.passed and rep.instances > 0, rep.first_failure


def test_product_matches_oracle_vect(sdh_vect):
    assert sdh_vect.verify_product_oracle((2,)).passed


def test_bialgebra_vect(sdh_vect):
    b = (2,)
    for rep in (sdh_vect.verify_coassociativity(b), sdh_vect.verify_compatibility(b), sdh_vect.verify_counit(b)):
        assert rep.passed, rep.first_failure


def test_associativity_vect(sdh_vect):
    rep = sdh_vect.verify_associativity((2,))
    assert rep.passed and rep.instances == 20**3


def test_associativity_small(sdh_a2):
    keys = sdh_a2.keys_up_to((1, 0)) + sdh_a2.keys_up_to((0, 1))[1:]
    assert sdh_a2.verify_associativity((1, 1), keys).passed


def test_truncation():
    from sdhall.backends import VectBackend

    s = SDHAlgebra(VectBackend(2), bound=(1,))
    with pytest.raises(TruncationError):
        s.product_keys(s.key(a=V(1)), s.key(a=V(1)))


def test_perturbation_apply():
    assert Perturbation(1).apply((2, 3)) == 6
    assert Perturbation(-1, 1).apply((2, 3)) == 2


def test_perturbed_product_disagrees_with_oracle(sdh_vect):
    from sdhall.backends import VectBackend

    s = SDHAlgebra(VectBackend(2))
    s.product_perturbation = Perturbation(1)
    assert not s.verify_product_oracle((1,)).passed


def test_sensitivity_controls_vect(vect2):
    rep = sensitivity_controls(vect2, (2,))
    assert rep.instances == 2 * (len(PRODUCT_TERMS) + 1) + 2 * (len(COPRODUCT_TERMS) + 1)
    assert rep.passed, rep.first_failure
