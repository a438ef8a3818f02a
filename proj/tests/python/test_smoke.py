import math

import numpy as np
import pytest

import su3coh


def test_canonicalize_classes():
    c = su3coh.canonicalize(2, -2)
    assert c["cls"] == "RootType"
    assert c == su3coh.canonicalize(1, -1)
    assert su3coh.canonicalize(2, -1) == su3coh.canonicalize(1, 1)
    assert su3coh.canonicalize(1, 1)["cls"] == "SingularType"
    with pytest.raises(su3coh.Error):
        su3coh.canonicalize(0, 0)


def test_normalizer_components():
    assert su3coh.normalizer_components(1, -1) == {
        "identity_component": "Torus",
        "component_count": 2,
    }
    assert su3coh.normalizer_components(1, 1)["identity_component"] == "U2"
    assert su3coh.normalizer_components_nonconnected(1, 1, 2) == 2


def test_principal_stabilizers():
    ps = su3coh.principal_stabilizer("U2 3")
    assert ps["cls"] == "SingularType"
    assert ps["h"] == 1
    assert su3coh.principal_stabilizer("T2 4 6")["h"] == 2
    assert su3coh.principal_stabilizer("T2 0 1")["cls"] == "RootType"
    assert su3coh.restrict_u2_to_torus(7) == (3, 1)


def test_classification_counts():
    assert su3coh.count_diffeo_classes("P(1)", "P(1)") == {
        "count": 2,
        "reason": "TwoClasses",
    }
    assert su3coh.count_diffeo_classes("S", "L")["count"] == 1
    assert su3coh.count_diffeo_classes("F(0,2)", "Squot(2)")["count"] == 1
    with pytest.raises(su3coh.IncompatibleRegime):
        su3coh.count_diffeo_classes("Squot(2)", "S")
    partners = dict(su3coh.admissible_partners("S", 5))
    assert set(partners) == {"S", "L", "P(1)", "F(0,1)"}


def test_tables_agree_with_delta_oracle():
    rules = su3coh.emit_tables(4)
    delta = su3coh.emit_tables_delta(4)
    for r, d in zip(rules[1:], delta[1:]):
        assert r["cells"] == d["cells"]
    t2 = rules[1]
    i = t2["row_labels"].index("P(1)")
    j = t2["col_labels"].index("P(1)")
    assert t2["cells"][i][j] == 2


def test_numeric_layer():
    u = np.diag([1j, -1j, 0]).astype(complex)
    v = np.diag([1j, 1j, -2j]).astype(complex)
    assert su3coh.inner(u, u) == pytest.approx(2.0)
    assert su3coh.inner(u, v) == pytest.approx(0.0)
    assert np.allclose(su3coh.bracket(u, v), 0)
    g = su3coh.expm(u)
    assert np.allclose(g @ g.conj().T, np.eye(3), atol=1e-12)

    b = su3coh.geodesic_point(math.pi / 8)
    assert su3coh.consim_stabilizer_dim(b) == 1
    assert su3coh.consim_stabilizer_dim(np.eye(3, dtype=complex)) == 3
    assert np.allclose(
        su3coh.gamma(su3coh.geodesic_point(0.3)), su3coh.geodesic_point(0.6)
    )
    assert su3coh.flow_line_stabilizer(math.pi / 3) == 2
    assert su3coh.flow_line_stabilizer(0.0) == 4


def test_verify_suite_small():
    reports = su3coh.verify_suite(seed=1, samples=50, group="consim")
    assert reports and all(r["passed"] for r in reports)
    gcd_reports = su3coh.verify_torus_lemma(2)
    assert gcd_reports[0]["passed"]


def test_parse_errors():
    with pytest.raises(su3coh.ParseError):
        su3coh.count_diffeo_classes("Q(1)", "S")
    with pytest.raises(su3coh.Error):
        su3coh.principal_stabilizer("U2 4")
