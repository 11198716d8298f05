import json
import math

import pytest

import _relcalc as rc


def test_graph_roundtrip_and_parts():
    T = rc.LinearRelation.graph([[0j, 1 + 0j], [1 + 0j, 0j]])
    p = rc.parts(T)
    assert p.dom.dim == 2
    assert p.mul.dim == 0
    assert rc.adjoint(rc.adjoint(T)).equals(T)


def test_classification_of_multivalued_relation():
    T = rc.parse_relation(json.dumps({
        "ambient_dim": 2,
        "spanning_pairs": [{"f": [[0, 0], [0, 0]], "g": [[1, 0], [0, 0]]}],
    }))
    c = rc.classify(T)
    assert not c.is_operator
    assert c.is_symmetric
    assert c.is_dissipative


def test_schema_error_is_mapped():
    with pytest.raises(rc.SchemaError):
        rc.parse_relation("not json")


def test_jacobi_free_model_spectrum():
    m = rc.JacobiModel()
    m.b = [1.0, 1.0]
    m.q = [0.0, 0.0, 0.0]
    m.N = 3
    rep = rc.eigenvalues(rc.jacobi_relation(m))
    values = sorted(ev.value.real for ev in rep.finite_eigenvalues)
    assert values == pytest.approx([-math.sqrt(2), 0.0, math.sqrt(2)], abs=1e-10)
    assert rc.cross_validate_extension(m, rc.Tau(1j))


def test_debranges_selfadjoint_case():
    model = rc.build_model([-1j, -2j])
    S = rc.s_tau(model, 1 + 0j, 1j)
    assert rc.classify(S).is_selfadjoint
    rep = rc.eigenvalues(S)
    assert rep.infinite_multiplicity == 1
    assert len(rep.finite_eigenvalues) == 1
    assert abs(rep.finite_eigenvalues[0].value) <= 1e-9


def test_transform_involution():
    T = rc.LinearRelation.graph([[1j, 0j], [0j, 2 + 0j]])
    Z = rc.z_transform(T, 1j)
    assert rc.z_transform(Z, 1j).equals(T)
