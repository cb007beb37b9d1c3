import cmath

import numpy as np
import pytest

import homsiegel as hs


def test_exponents_of_catalog_domains():
    assert hs.catalog("disk").exponents()["s"] == [2]
    assert hs.catalog("sym2").exponents()["s"] == [0, 3]
    assert hs.catalog("vinberg").exponents()["s"] == [-2, 0, 3]
    assert hs.catalog("ball").exponents()["s"] == [3]


def test_validation(fixtures):
    assert hs.load(fixtures / "vinberg.json").validate()["pass"]
    report = hs.load(fixtures / "bad_v3.json").validate()
    assert not report["pass"]
    assert {v["axiom"] for v in report["violations"]} == {"V3"}


@pytest.mark.parametrize("name", ["disk", "sym2", "vinberg", "ball"])
def test_ratio_and_product_forms_agree(name):
    d = hs.catalog(name)
    for stream in range(10):
        p = d.random_point(seed=42, stream=2 * stream)
        q = d.random_point(seed=42, stream=2 * stream + 1)
        a = d.log_kernel(p, q, "ratio")
        b = d.log_kernel(p, q, "product")
        assert abs(cmath.exp(b - a) - 1) < 1e-8
        assert abs(d.log_kernel(p, d.base_point(), "product")) < 1e-12


def test_upper_half_plane_values():
    d = hs.catalog("disk")
    z = (np.array([[2j]]), None)
    assert abs(d.kernel(z, z) - 81 / 64) < 1e-12
    assert abs(d.metric(d.base_point())[0, 0] - 0.5) < 1e-14


def test_domain_errors():
    d = hs.catalog("ball")
    outside = (np.array([[1j]]), np.array([[2.0 + 0j]]))
    with pytest.raises(hs.DomainError):
        d.log_kernel(outside, d.base_point())
    with pytest.raises(hs.StructuralError):
        hs.Domain({"nu0": 0}).validate()


def test_distance_disk():
    a, b = np.array([[0.3 + 0.2j]]), np.array([[-0.5 + 0.4j]])
    expected = np.sqrt(2) * np.arctanh(abs((a - b) / (1 - np.conj(b) * a))[0, 0])
    assert abs(hs.distance_disk(a, b, 1) - expected) < 1e-12


def test_envelope_small():
    report = hs.catalog("sym2").envelope(rho=1.0, samples=100)
    assert report["pass"]
    assert report["seed"] == 42
    assert 1 / report["bound"] <= report["min"] <= report["max"] <= report["bound"]


def test_oracles():
    assert hs.oracle_kernel("disk", 12, 1_000_000)["max_rel_error"] < 0.02
    assert hs.oracle_volume("disk", 200_000)["pass"]
