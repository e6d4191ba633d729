from __future__ import annotations

import json
from fractions import Fraction

import pytest

from conftest import P1, S1, S2, SPLIT, V
from sdhall.backends import A2, ConfigError, Iso, QuiverBackend, QuiverSpec, VectBackend, make_backend
from sdhall.finfield import gaussian_binomial, gl_order
from sdhall.reps import RepEngine

KRONECKER = QuiverSpec(2, ((0, 1), (0, 1)))
A3 = QuiverSpec(3, ((0, 1), (1, 2)))


def test_object_counts(vect2, a2):
    assert vect2.objects_up_to((2,)) == [V(0), V(1), V(2)]
    assert len(a2.objects_up_to((1, 1))) == 5
    assert a2.objects_up_to((0, 0)) == [a2.zero]


def test_a2_small_invariants(a2):
    assert a2.hom_count(S1, S2) == 1
    assert a2.hom_count(S2, S1) == 1
    assert a2.hom_count(P1, S1) == 2
    assert a2.hom_count(S2, P1) == 2
    assert a2.hom_count(P1, S2) == 1
    assert a2.aut_count(P1) == 1
    assert a2.aut_count(SPLIT) == 1
    assert a2.euler_form(S1.dim, S2.dim) == -1
    assert a2.euler_form(S2.dim, S1.dim) == 0
    assert a2.symmetric_form(S1.dim, S2.dim) == -1
    assert a2.ext_dim(S1, S2) == 1
    assert a2.ext_dim(S2, S1) == 0


def test_sub_quotient_counts(vect2, a2):
    assert vect2.sub_quotient_count(V(2), V(1), V(1)) == 3
    assert a2.sub_quotient_count(P1, S1, S2) == 1
    assert a2.sub_quotient_count(P1, S2, S1) == 0
    assert a2.sub_quotient_count(SPLIT, S2, S1) == 1


@pytest.mark.parametrize("q", [2, 3])
def test_vect_counts_are_closed_forms(q):
    b = VectBackend(q)
    for n in range(4):
        assert b.aut_count(V(n)) == gl_order(n, q)
        for k in range(n + 1):
            assert b.sub_quotient_count(V(n), V(n - k), V(k)) == gaussian_binomial(n, k, q)


def test_direct_sum(vect2, a2):
    assert vect2.direct_sum(V(1), V(2)) == V(3)
    assert a2.direct_sum(S1, S2) == SPLIT
    assert a2.direct_sum(a2.zero, P1) == P1


def test_simples(a2):
    assert a2.simples() == [S1, S2]


@pytest.mark.parametrize(
    "spec,dims,q",
    [(A2, (2, 2), 2), (A2, (1, 2), 3), (KRONECKER, (1, 1), 2), (KRONECKER, (1, 2), 2), (A3, (1, 1, 1), 2), (A3, (1, 2, 1), 2)],
)
def test_classification_is_complete(spec, dims, q):
    # orbit-counting: the number of GL_d-orbits is sum over reps of |Aut r| / |GL_d|
    b = QuiverBackend(spec, q)
    reps = b.engine.all_reps(dims)
    gl = 1
    for d in dims:
        gl *= gl_order(d, q)
    orbits = sum(Fraction(b.engine.aut_count(r), gl) for r in reps)
    assert orbits == len(b.objects_of_class(dims))
    seen = {b.classify(r) for r in reps}
    assert seen == set(b.objects_of_class(dims))


def test_kronecker_has_projective_line_of_regular_modules():
    b = QuiverBackend(KRONECKER, 3)
    assert len(b.objects_of_class((1, 1))) == 3 + 1 + 1


@pytest.mark.parametrize("spec,dims", [(A2, (2, 2)), (A2, (3, 2)), (A3, (2, 1, 1))])
def test_aut_count_split_matches_brute_force(spec, dims):
    b = QuiverBackend(spec, 2)
    small = RepEngine(spec.bound_quiver(), 2, budget=8)
    for m in b.objects_of_class(dims):
        rep = b.representative(m)
        assert small.aut_count(rep) == b.engine.aut_count(rep)


def test_quiver_file_loading(tmp_path):
    path = tmp_path / "a2.json"
    path.write_text(json.dumps(A2.to_json(q=3)))
    spec, q = QuiverSpec.load(path)
    assert spec == A2 and q == 3


@pytest.mark.parametrize(
    "data",
    [{"vertices": 2, "arrows": [[0, 2]]}, {"vertices": 2, "arrows": [[0, 1], [1, 0]]}, {"arrows": []}, {"vertices": 1, "arrows": [[0, 0]]}],
)
def test_bad_quivers_are_config_errors(data):
    with pytest.raises(ConfigError):
        QuiverSpec.from_json(data)


def test_backend_config_errors(a2):
    with pytest.raises(ConfigError):
        VectBackend(4)
    with pytest.raises(ConfigError):
        make_backend("quiver", 2)
    with pytest.raises(ConfigError):
        make_backend("sheaves", 2)
    with pytest.raises(ConfigError):
        a2.objects_up_to((1,))


def test_iso_labels_are_stable():
    assert Iso((1, 1), 1).label() == Iso((1, 1), 1).label()
    assert Iso((1, 1), 0).label() != Iso((1, 1), 1).label()
