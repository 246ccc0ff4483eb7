"""Measure-weighted means of interval sets and their structural probes.

The central quantity is the measure-weighted centroid of a bounded set
(first moment over mass).  Around it this module provides the plain
Lebesgue centroid, the symmetric-difference pseudo-metric, decomposition
and continuity diagnostics, an inequality certifier between two measures,
the quasi-arithmetic comparator ``exp(Avg(log H))``, density-ratio bounds
on an interval, translation sweeps toward infinity, and the double-integral
form of the two-argument mean.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import DomainError, EmptySet, InvalidInterval, NotDisjoint, NotNested
from .intervals import IntervalSet, normalize
from .measures import MeasureSpec, RatioCertificate, density_ratio_increasing
from .quadrature import quad

_EPS = 2.0 ** -50


@dataclass(frozen=True)
class MeanReport:
    """Mean value with the mass, moment, and a propagated numeric error bound."""

    value: float
    mass: float
    moment: float
    err: float


@dataclass(frozen=True)
class BoundPair:
    """Infimum and supremum of mu(J)/lambda(J) over subintervals J of an interval.

    ``exact`` is True when the bounds come from density endpoint limits of a
    monotone density; grid estimates for unknown shapes bracket the true
    values from inside.
    """

    m: float
    M: float
    exact: bool


@dataclass(frozen=True)
class SweepRow:
    x: float
    mean: float
    avg: float
    abs_diff: float
    ratio_bound: float


def mean(spec: MeasureSpec, H: IntervalSet) -> MeanReport:
    """Measure-weighted centroid of ``H``: first moment over mass."""
    if H.is_empty:
        raise EmptySet("mean of the empty set is undefined")
    mass, mass_err = spec.mass_with_error(H)
    moment, moment_err = spec.moment_with_error(H)
    if not (mass > 0.0):
        raise DomainError(f"measure {spec.name!r} gave non-positive mass {mass!r}")
    value = moment / mass
    err = (moment_err + abs(value) * mass_err) / mass + 4.0 * _EPS * abs(value)
    return MeanReport(value=value, mass=mass, moment=moment, err=err)


def ordinary(spec: MeasureSpec, a: float, b: float) -> float:
    """The two-argument mean derived from the measure: mean of ``[a, b]``."""
    if not (a < b):
        raise InvalidInterval(f"ordinary mean needs a < b, got ({a!r}, {b!r})")
    return mean(spec, normalize([(a, b)])).value


def avg(H: IntervalSet) -> float:
    """Lebesgue-weighted centroid of ``H`` (closed form)."""
    if H.is_empty:
        raise EmptySet("avg of the empty set is undefined")
    moment = math.fsum(0.5 * (hi * hi - lo * lo) for lo, hi in H)
    return moment / H.lebesgue()


def pseudo_metric(spec: MeasureSpec, A: IntervalSet, B: IntervalSet) -> float:
    """Measure of the symmetric difference of two sets."""
    spec.require_domain(A)
    spec.require_domain(B)
    return spec.mu(A.symdiff(B))


def decompose_check(spec: MeasureSpec, parts: Sequence[IntervalSet]) -> float:
    """Residual of the weighted-decomposition identity over disjoint parts.

    Returns ``|mean(union) - sum(mu_i * mean_i) / sum(mu_i)|``.
    """
    parts = list(parts)
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            if not parts[i].is_disjoint_from(parts[j]):
                raise NotDisjoint(f"parts {i} and {j} overlap")
    whole = IntervalSet()
    for p in parts:
        whole = whole.union(p)
    reports = [mean(spec, p) for p in parts]
    weighted = math.fsum(r.mass * r.value for r in reports) / math.fsum(
        r.mass for r in reports
    )
    return abs(mean(spec, whole).value - weighted)


def cantor_probe(spec: MeasureSpec, chain: Sequence[IntervalSet]) -> list[float]:
    """Mean gaps along a descending chain, relative to the chain's last set."""
    chain = list(chain)
    if not chain:
        raise EmptySet("empty chain")
    for i in range(len(chain) - 1):
        if not chain[i + 1].is_subset_of(chain[i]):
            raise NotNested(f"chain element {i + 1} is not contained in element {i}")
    last = mean(spec, chain[-1]).value
    return [abs(mean(spec, H).value - last) for H in chain]


@dataclass(frozen=True)
class MonotonicityReport:
    values: dict  # means keyed "A", "B", "A|B", "A|C", "A|B|C"
    disjoint_pass: bool
    union_pass: bool
    union_vacuous: bool
    strict_pass: Optional[bool]  # None when no strict hypothesis applied

    @property
    def passed(self) -> bool:
        return self.disjoint_pass and self.union_pass and self.strict_pass is not False


def monotonicity_probe(spec: MeasureSpec, A: IntervalSet, B: IntervalSet,
                       C: IntervalSet) -> MonotonicityReport:
    """Check order compatibility of the mean under disjoint unions.

    Two implications are exercised: for disjoint ``A, B`` the mean of the
    union lies between the two means; and if adjoining ``B`` and adjoining
    ``C`` (disjoint from each other) both move the mean of ``A`` the same
    way, adjoining both moves it that way too, strictly so when one of the
    hypotheses is strict.
    """
    if not A.is_disjoint_from(B):
        raise NotDisjoint("A and B overlap")
    if not B.is_disjoint_from(C):
        raise NotDisjoint("B and C overlap")

    m_a = mean(spec, A).value
    m_b = mean(spec, B).value
    m_ab = mean(spec, A.union(B)).value
    m_ac = mean(spec, A.union(C)).value
    m_abc = mean(spec, A.union(B).union(C)).value
    values = {"A": m_a, "B": m_b, "A|B": m_ab, "A|C": m_ac, "A|B|C": m_abc}

    tol = 1e-12 * (1.0 + max(abs(v) for v in values.values()))
    lo_v, hi_v = sorted((m_a, m_b))
    disjoint_pass = (lo_v - tol) <= m_ab <= (hi_v + tol)

    up = m_a <= m_ab + tol and m_a <= m_ac + tol
    down = m_ab <= m_a + tol and m_ac <= m_a + tol
    union_vacuous = not (up or down)
    union_pass = True
    strict_pass: Optional[bool] = None
    strict_margin = 1e-9 * (1.0 + abs(m_a))
    if up:
        union_pass = m_a <= m_abc + tol
        if m_ab > m_a + strict_margin or m_ac > m_a + strict_margin:
            strict_pass = m_abc > m_a
    if down and union_pass:
        union_pass = m_abc <= m_a + tol
        if m_ab < m_a - strict_margin or m_ac < m_a - strict_margin:
            strict_pass = m_abc < m_a
    return MonotonicityReport(values, disjoint_pass, union_pass,
                              union_vacuous, strict_pass)


@dataclass(frozen=True)
class LeqCertificate:
    """Outcome of comparing two measures' means across a window."""

    status: str  # "certified" | "refuted" | "inconclusive"
    witness: object = None
    ratio: Optional[RatioCertificate] = None

    @property
    def certified(self) -> bool:
        return self.status == "certified"


def random_interval_union(rng: np.random.Generator, window: tuple[float, float],
                          max_intervals: int = 5,
                          min_intervals: int = 1) -> IntervalSet:
    """Random disjoint union of 1..max_intervals intervals inside ``window``."""
    lo, hi = window
    while True:
        k = int(rng.integers(min_intervals, max_intervals + 1))
        pts = np.sort(rng.uniform(lo, hi, size=2 * k))
        H = normalize([(pts[2 * i], pts[2 * i + 1]) for i in range(k)])
        if not H.is_empty:
            return H


def certify_leq(mu_spec: MeasureSpec, nu_spec: MeasureSpec,
                window: tuple[float, float], n_probe: int = 200,
                n_random: int = 500, rng=None) -> LeqCertificate:
    """Certify mean-by-mu <= mean-by-nu on every interval union in the window.

    Certification needs (a) the two-argument means ordered on random
    subintervals and (b) the density ratio nu/mu nondecreasing; the verdict
    is then validated on random interval unions.  Any violation beyond 1e-9
    refutes with a witness; a clean run with an inconclusive ratio check
    stays inconclusive.
    """
    rng = np.random.default_rng(rng)
    lo, hi = window
    box = normalize([(lo, hi)])
    mu_spec.require_domain(box)
    nu_spec.require_domain(box)

    for _ in range(n_probe):
        a, b = np.sort(rng.uniform(lo, hi, size=2))
        if b - a < 1e-9 * (hi - lo):
            continue
        k_mu = ordinary(mu_spec, a, b)
        k_nu = ordinary(nu_spec, a, b)
        if k_mu > k_nu + 1e-9:
            return LeqCertificate(
                "refuted",
                witness={"interval": (float(a), float(b)),
                         "mean_mu": k_mu, "mean_nu": k_nu},
            )

    ratio = density_ratio_increasing(nu_spec, mu_spec, window,
                                     n_probe=max(n_probe, 128))

    for _ in range(n_random):
        H = random_interval_union(rng, window)
        v_mu = mean(mu_spec, H).value
        v_nu = mean(nu_spec, H).value
        if v_mu > v_nu + 1e-9:
            return LeqCertificate(
                "refuted",
                witness={"set": H, "mean_mu": v_mu, "mean_nu": v_nu},
                ratio=ratio,
            )

    if ratio.certified:
        return LeqCertificate("certified", ratio=ratio)
    return LeqCertificate("inconclusive", witness=ratio.witness, ratio=ratio)


def exp_avg_log(H: IntervalSet) -> float:
    """exp of the Lebesgue centroid of the log image of ``H``."""
    if H.is_empty:
        raise EmptySet("exp_avg_log of the empty set is undefined")
    if H.infimum() <= 0.0:
        raise DomainError("exp_avg_log needs a set of positive numbers")
    mapped = normalize([(math.log(lo), math.log(hi)) for lo, hi in H])
    return math.exp(avg(mapped))


def m_bound(spec: MeasureSpec, interval: tuple[float, float],
            levels: int = 7) -> BoundPair:
    """Bounds on mu(J)/lambda(J) over subintervals J of ``interval``.

    For a declared monotone density the infimum and supremum are the density
    limits at the interval's ends (exact).  Otherwise a refining family of
    uniform subintervals gives inner estimates.
    """
    lo, hi = interval
    if not (lo < hi):
        raise InvalidInterval(f"interval needs lo < hi, got ({lo!r}, {hi!r})")
    spec.require_domain(normalize([(lo, hi)]))
    if spec.density_shape == "decreasing":
        return BoundPair(m=spec.density(hi), M=spec.density(lo), exact=True)
    if spec.density_shape == "increasing":
        return BoundPair(m=spec.density(lo), M=spec.density(hi), exact=True)
    m_est = math.inf
    M_est = -math.inf
    for k in range(levels):
        edges = np.linspace(lo, hi, 2 ** k + 1)
        for j in range(len(edges) - 1):
            piece = normalize([(edges[j], edges[j + 1])])
            r = spec.mu(piece) / piece.lebesgue()
            m_est = min(m_est, r)
            M_est = max(M_est, r)
    return BoundPair(m=m_est, M=M_est, exact=False)


def infinity_sweep(spec: MeasureSpec, H: IntervalSet,
                   shifts: Sequence[float]) -> list[SweepRow]:
    """Mean vs. Lebesgue centroid of ``H + x`` for each shift, with the
    density-ratio bound of the enclosing interval.  Rows are ordered by shift.
    """
    if H.is_empty:
        raise EmptySet("sweep of the empty set is undefined")
    lo, hi = H.infimum(), H.supremum()
    rows = []
    for x in sorted(float(s) for s in shifts):
        Hx = H.translate(x)
        v = mean(spec, Hx).value
        a = avg(Hx)
        bounds = m_bound(spec, (lo + x, hi + x))
        rows.append(SweepRow(x=x, mean=v, avg=a, abs_diff=abs(v - a),
                             ratio_bound=bounds.M / bounds.m))
    return rows


def double_integral_mean(spec: MeasureSpec, a: float, b: float,
                         tol: float = 1e-8) -> float:
    """Two-argument mean via the symmetric double integral of (x+y)/2.

    Evaluates the double integral by iterated adaptive quadrature of the
    density (an independent route; no antiderivatives are consulted) and
    divides by the squared mass of ``[a, b]``.
    """
    if not (a < b):
        raise InvalidInterval(f"double integral needs a < b, got ({a!r}, {b!r})")
    box = normalize([(a, b)])
    spec.require_domain(box)
    mass = quad(spec.density, a, b, abs_tol=tol * 1e-3, rel_tol=1e-10).value

    def outer_integrand(y: float) -> float:
        inner = quad(lambda x: 0.5 * (x + y) * spec.density(x), a, b,
                     abs_tol=tol * 1e-3, rel_tol=1e-10)
        return inner.value * spec.density(y)

    outer = quad(outer_integrand, a, b, abs_tol=tol * 1e-2, rel_tol=1e-9)
    return outer.value / (mass * mass)
