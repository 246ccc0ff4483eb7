"""Measure catalog: closed forms, quadrature fallback, ratio certificates."""

import math

import numpy as np
import pytest

from meanmeasure import (
    CATALOG_NAMES,
    DomainError,
    MeasureSpec,
    UnknownMeasure,
    catalog,
    consistency_errors,
    density_ratio_increasing,
    normalize,
    quad,
)

E2 = math.e ** 2

# closed-form set measures used as oracles throughout
mu_geometric = lambda a, b: (1.0 / math.sqrt(a) - 1.0 / math.sqrt(b)) / E2
mu_harmonic = lambda a, b: 1.0 / a ** 2 - 1.0 / b ** 2

# sampling windows that stay inside each catalog domain
WINDOWS = {
    "lebesgue": (-20.0, 20.0),
    "exponential": (-5.0, 5.0),
    "geometric": (0.1, 50.0),
    "harmonic": (0.1, 50.0),
    "logarithmic": (0.1, 50.0),
    "square": (0.1, 50.0),
}


def test_catalog_names_and_unknown():
    assert set(CATALOG_NAMES) == {
        "lebesgue", "geometric", "harmonic", "logarithmic", "square",
        "exponential",
    }
    with pytest.raises(UnknownMeasure):
        catalog("cauchy")


def test_geometric_closed_forms():
    g = catalog("geometric")
    for x in (0.5, 1.0, 2.0, 10.0):
        assert g.density(x) == pytest.approx(1.0 / (2.0 * E2 * x * math.sqrt(x)),
                                             rel=1e-15)
        assert g.cdf(x) == pytest.approx((1.0 - 1.0 / math.sqrt(x)) / E2,
                                         rel=1e-14, abs=1e-18)
        assert g.antiderivative(x) == pytest.approx(
            (math.sqrt(x) - 1.0) ** 2 / E2, rel=1e-14, abs=1e-18)
    assert g.density_shape == "decreasing"


def test_harmonic_and_logarithmic_closed_forms():
    h = catalog("harmonic")
    assert h.density(2.0) == pytest.approx(2.0 / 8.0, rel=1e-15)
    assert h.cdf(2.0) == pytest.approx(1.0 - 0.25, rel=1e-15)
    assert h.antiderivative(2.0) == pytest.approx(0.5, rel=1e-15)
    lg = catalog("logarithmic")
    assert lg.density(4.0) == pytest.approx(0.25, rel=1e-15)
    assert lg.cdf(4.0) == pytest.approx(math.log(4.0), rel=1e-15)
    assert lg.antiderivative(4.0) == pytest.approx(4.0 * math.log(4.0) - 3.0,
                                                   rel=1e-15)


def test_mu_examples():
    # oracle: paper-style closed form for the geometric measure of [1, 4]
    assert catalog("geometric").mu(normalize([(1, 4)])) == pytest.approx(
        0.06766764161830635, rel=1e-13)
    assert catalog("lebesgue").mu(normalize([(0, 1), (2, 4)])) == 3.0
    assert catalog("harmonic").mu(normalize([(1, 2)])) == pytest.approx(
        0.75, rel=1e-13)


def test_first_moment_examples():
    assert catalog("lebesgue").first_moment(normalize([(0, 2)])) == \
        pytest.approx(2.0, rel=1e-13)
    # oracle: integral of x w(x) over [1, 4] is (sqrt(4) - sqrt(1)) / e^2
    assert catalog("geometric").first_moment(normalize([(1, 4)])) == \
        pytest.approx(0.1353352832366127, rel=1e-13)
    # oracle: 2 (b - a) / (a b) at (1, 2)
    assert catalog("harmonic").first_moment(normalize([(1, 2)])) == \
        pytest.approx(1.0, rel=1e-13)


def test_quadrature_fallback_matches_closed_form():
    g = catalog("geometric")
    density_only = MeasureSpec(name="geometric-density-only",
                               domain=g.domain, density=g.density)
    H = normalize([(1, 4), (9, 16)])
    want = mu_geometric(1, 4) + mu_geometric(9, 16)
    assert density_only.mu(H) == pytest.approx(want, rel=1e-9)
    moment_want = (math.sqrt(4) - 1 + math.sqrt(16) - math.sqrt(9)) / E2
    assert density_only.first_moment(H) == pytest.approx(moment_want, rel=1e-9)


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_density_integrates_to_cdf_difference(name):
    spec = catalog(name)
    lo, hi = WINDOWS[name]
    rng = np.random.default_rng(hash(name) % 2 ** 32)
    for _ in range(200):
        a, b = np.sort(rng.uniform(lo, hi, size=2))
        if b - a < 1e-6:
            continue
        want = spec.cdf(b) - spec.cdf(a)
        got = quad(spec.density, float(a), float(b)).value
        assert abs(got - want) <= max(1e-9, 1e-8 * abs(want))


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_moment_closed_form_matches_quadrature(name):
    spec = catalog(name)
    lo, hi = WINDOWS[name]
    rng = np.random.default_rng((hash(name) + 1) % 2 ** 32)
    for _ in range(200):
        a, b = np.sort(rng.uniform(lo, hi, size=2))
        if b - a < 1e-6:
            continue
        H = normalize([(a, b)])
        want = spec.first_moment(H)
        got = quad(lambda x: x * spec.density(x), float(a), float(b)).value
        assert abs(got - want) <= max(1e-9, 1e-8 * abs(want))


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_mu_additive_and_positive(name):
    spec = catalog(name)
    lo, hi = WINDOWS[name]
    rng = np.random.default_rng((hash(name) + 2) % 2 ** 32)
    for _ in range(100):
        pts = np.sort(rng.uniform(lo, hi, size=4))
        A = normalize([(pts[0], pts[1])])
        B = normalize([(pts[2], pts[3])])
        if A.is_empty or B.is_empty or not A.is_disjoint_from(B):
            continue
        whole = spec.mu(A.union(B))
        assert whole > 0.0
        assert abs(whole - spec.mu(A) - spec.mu(B)) <= 1e-12 * (1.0 + abs(whole))


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_primitive_consistency(name):
    lo, hi = WINDOWS[name]
    err_Ff, err_fw = consistency_errors(catalog(name), (lo + 0.05, hi))
    assert err_Ff <= 1e-6
    assert err_fw <= 1e-6


def test_domain_is_enforced():
    g = catalog("geometric")
    with pytest.raises(DomainError):
        g.mu(normalize([(-1.0, 2.0)]))
    with pytest.raises(DomainError):
        g.mu(normalize([(0.0, 1.0)]))  # touches the open boundary


def test_float_overflow_is_reported():
    # e^710 exceeds the double range; the catalog domain is all of R, so
    # this must surface as an explicit error rather than a NaN mean
    with pytest.raises(DomainError):
        catalog("exponential").mu(normalize([(700.0, 710.0)]))


def test_scaled_measure():
    g = catalog("geometric")
    g3 = g.scaled(3.0)
    H = normalize([(1, 4)])
    assert g3.mu(H) == pytest.approx(3.0 * g.mu(H), rel=1e-15)
    assert g3.first_moment(H) == pytest.approx(3.0 * g.first_moment(H), rel=1e-15)
    with pytest.raises(ValueError):
        g.scaled(-1.0)


# -- density-ratio certificates ------------------------------------------------


def test_ratio_lebesgue_over_geometric_certified():
    cert = density_ratio_increasing(catalog("lebesgue"), catalog("geometric"),
                                    (0.1, 100.0))
    assert cert.status == "certified"


def test_ratio_geometric_over_lebesgue_refuted():
    cert = density_ratio_increasing(catalog("geometric"), catalog("lebesgue"),
                                    (0.1, 100.0))
    assert cert.status == "refuted"
    x1, x2, r1, r2 = cert.witness
    assert x1 < x2 and r1 > r2


def test_ratio_geometric_over_harmonic_certified():
    # oracle: (1 / (2 e^2 x^1.5)) / (2 / x^3) = x^1.5 / (4 e^2), increasing
    cert = density_ratio_increasing(catalog("geometric"), catalog("harmonic"),
                                    (0.5, 50.0))
    assert cert.status == "certified"


def test_ratio_inconclusive_without_declared_shape():
    g = catalog("geometric")
    anon = MeasureSpec(name="anon", domain=g.domain, density=g.density,
                       cdf=g.cdf, antiderivative=g.antiderivative,
                       density_shape="none")
    cert = density_ratio_increasing(catalog("lebesgue"), anon, (0.1, 100.0))
    assert cert.status == "inconclusive"


def test_ratio_rejects_nonpositive_density():
    bad = MeasureSpec(name="signed", domain=(-10.0, 10.0),
                      density=lambda x: x, density_shape="increasing")
    with pytest.raises(DomainError):
        density_ratio_increasing(bad, catalog("lebesgue"), (-1.0, 1.0))
