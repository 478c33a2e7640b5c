"""Exact distributions of tableau statistics, and a desk-scale CLT check.

Under the uniform distribution on size-n tableaux the AG-row count r is a sum
of independent Bernoulli variables J_k with P(J_k = 1) = 1/(2k), giving the
probability generating function prod_k (z + 2k - 1)/(2k) and harmonic-number
moments.  The beta/delta total is n - r exactly, the alpha/gamma total shares
its law by transposition, and both diagonal statistics follow the type-B
Eulerian law V(n, m)/(2**n n!).  Everything except `clt_check` is exact
rational arithmetic.
"""

from __future__ import annotations

import random
from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from math import factorial, lcm
from statistics import NormalDist
from typing import Sequence

from .polyengine import Polynomial, v_row


@dataclass(frozen=True)
class ExactPMF:
    """Probability mass on consecutive integers offset..offset+len-1."""

    offset: int
    probs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        assert sum(self.probs) == 1, "pmf must sum to one"
        assert all(p >= 0 for p in self.probs)

    def support(self) -> range:
        return range(self.offset, self.offset + len(self.probs))

    def p(self, value: int) -> Fraction:
        idx = value - self.offset
        if 0 <= idx < len(self.probs):
            return self.probs[idx]
        return Fraction(0)

    def mean(self) -> Fraction:
        return sum(
            (Fraction(v) * p for v, p in zip(self.support(), self.probs)),
            Fraction(0),
        )

    def variance(self) -> Fraction:
        mu = self.mean()
        return sum(
            (p * (Fraction(v) - mu) ** 2 for v, p in zip(self.support(), self.probs)),
            Fraction(0),
        )

    def sample(self, count: int, seed: int) -> list[int]:
        """Exact inverse-transform draws: an integer uniform below the common
        denominator is bisected into the cumulative weights, so each value is
        hit with exactly its rational probability."""
        denom = lcm(*(p.denominator for p in self.probs))
        weights = [int(p * denom) for p in self.probs]
        return draw_integers(weights, count, seed, offset=self.offset)


def draw_integers(
    weights: Sequence[int], count: int, seed: int, offset: int = 0
) -> list[int]:
    """Categorical draws proportional to integer weights, bias-free."""
    cum = list(accumulate(weights))
    total = cum[-1]
    if total <= 0:
        raise ValueError("weights must have positive total")
    rng = random.Random(seed)
    return [
        offset + bisect_right(cum, rng.randrange(total)) for _ in range(count)
    ]


@dataclass(frozen=True)
class HarmonicPair:
    """H_n and the generalized H_n^(2), exact."""

    h1: Fraction
    h2: Fraction


def harmonic_pair(n: int) -> HarmonicPair:
    h1 = sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))
    h2 = sum((Fraction(1, k * k) for k in range(1, n + 1)), Fraction(0))
    return HarmonicPair(h1, h2)


def pgf_r(n: int) -> Polynomial:
    """prod_{k=1..n} (z + 2k - 1) / (2k)."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    acc = Polynomial.one()
    for k in range(1, n + 1):
        acc = acc * Polynomial.of(Fraction(2 * k - 1, 2 * k), Fraction(1, 2 * k))
    return acc


def dist_r(n: int) -> ExactPMF:
    """Law of the AG-row count, via the independent-Bernoulli convolution.

    Deliberately not read off pgf_r: the two routes are compared in tests.
    """
    probs = [Fraction(1)]
    for k in range(1, n + 1):
        p = Fraction(1, 2 * k)
        nxt = [Fraction(0)] * (len(probs) + 1)
        for v, mass in enumerate(probs):
            nxt[v] += mass * (1 - p)
            nxt[v + 1] += mass * p
        probs = nxt
    return ExactPMF(0, tuple(probs))


def moments_r(n: int) -> tuple[Fraction, Fraction]:
    """(mean, variance) = (H_n/2, H_n/2 - H_n^(2)/4)."""
    h = harmonic_pair(n)
    return h.h1 / 2, h.h1 / 2 - h.h2 / 4


def dist_delta(n: int) -> ExactPMF:
    """Law of the beta/delta total: the reflection n - r."""
    base = dist_r(n)
    return ExactPMF(0, tuple(reversed(base.probs)))


def dist_gamma(n: int) -> ExactPMF:
    """Law of the alpha/gamma total; equals dist_delta by transposition."""
    return dist_delta(n)


def moments_delta(n: int) -> tuple[Fraction, Fraction]:
    mean, var = moments_r(n)
    return n - mean, var


def dist_A(n: int) -> ExactPMF:
    """Diagonal alpha/gamma count: V(n, m) / (2**n n!)."""
    row = v_row(n)
    denom = 2**n * factorial(n)
    return ExactPMF(0, tuple(Fraction(v, denom) for v in row))


def dist_B(n: int) -> ExactPMF:
    """Diagonal beta/delta count; shares the law of dist_A (symmetric row)."""
    return dist_A(n)


def moments_A(n: int) -> tuple[Fraction, Fraction]:
    """Mean n/2; variance (n+1)/12 for n >= 2.

    n = 1 is the lone exception: the diagonal holds a single uniform
    symbol-class coin, so the variance is 1/4.  (The closed form arrives via
    a second factorial moment that vanishes identically at n = 1.)
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n == 1:
        return Fraction(1, 2), Fraction(1, 4)
    return Fraction(n, 2), Fraction(n + 1, 12)


@dataclass(frozen=True)
class CltReport:
    ks_statistic: float
    max_bin_dev: float
    sample_size: int


def clt_check(samples: Sequence[int], mean: float, sd: float) -> CltReport:
    """Compare integer-valued samples against the normal(mean, sd) reference.

    Returns the Kolmogorov-Smirnov distance with the half-integer continuity
    correction appropriate for lattice data (the raw lattice CDF sits half a
    point mass away from any continuous curve, which at moderate sd would
    swamp the quantity of interest), plus the largest deviation over roughly
    20 equal-probability bins whose edges are snapped to half-integers so the
    expected bin masses themselves respect the lattice.  Requires at least
    10**4 samples.
    """
    if sd <= 0:
        raise ValueError("sd must be positive")
    if len(samples) < 10**4:
        raise ValueError("clt_check needs at least 10**4 samples")
    norm = NormalDist()
    counts = Counter(samples)
    if any(v != int(v) for v in counts):
        raise ValueError("clt_check expects integer-valued samples")
    total = len(samples)
    ks = 0.0
    cum = 0
    for v in sorted(counts):
        lo = norm.cdf((v - 0.5 - mean) / sd)
        hi = norm.cdf((v + 0.5 - mean) / sd)
        ks = max(ks, abs(cum / total - lo))
        cum += counts[v]
        ks = max(ks, abs(cum / total - hi))
    raw = (mean + sd * norm.inv_cdf(k / 20) for k in range(1, 20))
    edges = sorted({round(e - 0.5) + 0.5 for e in raw})
    bins = [0] * (len(edges) + 1)
    for v, c in counts.items():
        bins[bisect_right(edges, v)] += c
    cdf_at = [0.0] + [norm.cdf((e - mean) / sd) for e in edges] + [1.0]
    max_dev = max(
        abs(c / total - (cdf_at[i + 1] - cdf_at[i])) for i, c in enumerate(bins)
    )
    return CltReport(ks, max_dev, total)
