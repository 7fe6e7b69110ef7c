"""Classical reference experiments: urn draws, chord-sampling protocols, and
attribute boxes.

These are the ground-truth fixtures for the statistics layer: every
distribution here is computable exactly (rational arithmetic), and each Monte
Carlo routine executes the corresponding draw protocol literally so the
empirical tables can be checked against the exact ones.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .errors import InvalidSpecError
from .rng import DiscreteDistribution, RngStream

__all__ = [
    "UrnSpec",
    "BertrandMethod",
    "AttributeBox",
    "AttributeTable",
    "urn_distribution",
    "urn_simulate",
    "bertrand_estimate",
    "attribute_joint_distribution",
]


@dataclass(frozen=True)
class UrnSpec:
    """An urn with ``red`` red and ``black`` black balls, drawn ``draws`` times."""

    red: int
    black: int
    draws: int
    with_replacement: bool

    def __post_init__(self):
        if self.red < 0 or self.black < 0:
            raise InvalidSpecError("ball counts must be non-negative")
        if self.red + self.black < 1:
            raise InvalidSpecError("urn must contain at least one ball")
        if self.draws < 1:
            raise InvalidSpecError("draws must be >= 1")
        if not self.with_replacement and self.draws > self.red + self.black:
            raise InvalidSpecError(
                f"cannot draw {self.draws} balls without replacement from {self.red + self.black}"
            )


class BertrandMethod(enum.Enum):
    """The three chord-sampling protocols for two concentric circles (R = 2r)."""

    RANDOM_ENDPOINTS = "random_endpoints"
    RANDOM_RADIAL_POINT = "random_radial_point"
    RANDOM_MIDPOINT = "random_midpoint"


def urn_distribution(spec: UrnSpec) -> DiscreteDistribution:
    """Exact pmf of X = number of red balls drawn.

    Binomial B(n, k/(k+m)) with replacement, hypergeometric without. Computed
    in rational arithmetic so the floats are the correctly rounded values.
    """
    k, m, n = spec.red, spec.black, spec.draws
    if spec.with_replacement:
        p = Fraction(k, k + m)
        support = range(n + 1)
        probs = [comb(n, x) * p**x * (1 - p) ** (n - x) for x in support]
    else:
        lo = max(0, n - m)
        hi = min(n, k)
        support = range(lo, hi + 1)
        total = comb(k + m, n)
        probs = [Fraction(comb(k, x) * comb(m, n - x), total) for x in support]
    return DiscreteDistribution(tuple(support), [float(p) for p in probs])


def urn_simulate(spec: UrnSpec, trials: int, rng: RngStream) -> dict:
    """Empirical frequency table of X over ``trials`` runs of the draw protocol."""
    if trials < 1:
        raise InvalidSpecError("trials must be >= 1")
    k, m, n = spec.red, spec.black, spec.draws
    if spec.with_replacement:
        # one uniform per individual draw, red iff u < k/(k+m)
        u = rng.generator.random((trials, n))
        reds = (u < k / (k + m)).sum(axis=1)
    else:
        # a fresh shuffle of the urn per trial; the first n positions are the draws
        balls = np.zeros((trials, k + m), dtype=np.int8)
        balls[:, :k] = 1
        perm = rng.generator.permuted(balls, axis=1)
        reds = perm[:, :n].sum(axis=1)
    values, counts = np.unique(reds, return_counts=True)
    return {int(v): float(c) / trials for v, c in zip(values, counts)}


def bertrand_estimate(method: BertrandMethod, trials: int, rng: RngStream) -> float:
    """Monte Carlo probability that a random chord of the outer circle (R = 1)
    cuts the inner circle (r = 1/2), under the given sampling protocol.

    The three protocols are distinct random experiments and converge to
    different probabilities; a chord cuts the inner circle iff its distance
    from the center is below r.
    """
    if trials < 1:
        raise InvalidSpecError("trials must be >= 1")
    g = rng.generator
    r = 0.5
    if method is BertrandMethod.RANDOM_ENDPOINTS:
        phi1 = g.random(trials) * 2 * np.pi
        phi2 = g.random(trials) * 2 * np.pi
        dist = np.abs(np.cos((phi1 - phi2) / 2.0))
        hits = dist < r
    elif method is BertrandMethod.RANDOM_RADIAL_POINT:
        g.random(trials)  # the radius direction; irrelevant by symmetry but part of the protocol
        dist = g.random(trials)
        hits = dist < r
    elif method is BertrandMethod.RANDOM_MIDPOINT:
        # uniform midpoint in the disc via rejection from the bounding square
        hits = np.empty(0, dtype=bool)
        remaining = trials
        while remaining > 0:
            x = g.random(remaining) * 2 - 1
            y = g.random(remaining) * 2 - 1
            inside = x * x + y * y <= 1.0
            d2 = x[inside] ** 2 + y[inside] ** 2
            hits = np.concatenate([hits, d2 < r * r])
            remaining = trials - hits.size
        hits = hits[:trials]
    else:  # pragma: no cover
        raise InvalidSpecError(f"unknown Bertrand method: {method!r}")
    return float(np.mean(hits))


@dataclass(frozen=True)
class AttributeBox:
    """A box of items carrying two binary attributes.

    ``counts`` maps an attribute tuple ``(color, size)`` with color 1 = red and
    size 1 = big to a positive multiplicity.
    """

    counts: tuple

    def __init__(self, counts):
        if hasattr(counts, "items"):
            counts = tuple(sorted(counts.items()))
        else:
            counts = tuple(sorted(counts))
        if not counts:
            raise InvalidSpecError("attribute box must not be empty")
        for key, mult in counts:
            if not (isinstance(key, tuple) and len(key) == 2 and set(key) <= {0, 1}):
                raise InvalidSpecError(f"attribute tuple {key!r} must be a pair of bits")
            if not isinstance(mult, int) or mult < 1:
                raise InvalidSpecError(f"multiplicity of {key!r} must be a positive integer")
        object.__setattr__(self, "counts", counts)

    @property
    def total(self) -> int:
        return sum(mult for _, mult in self.counts)


@dataclass(frozen=True)
class AttributeTable:
    """Joint distribution over (color, size) plus its two marginals."""

    joint: dict
    marginal_color: dict
    marginal_size: dict


def attribute_joint_distribution(box: AttributeBox) -> AttributeTable:
    """Exact joint table P(X1=i, X2=j) by counting, with marginals by summation."""
    total = box.total
    joint = {(i, j): 0.0 for i in (0, 1) for j in (0, 1)}
    for (i, j), mult in box.counts:
        joint[(i, j)] = float(Fraction(mult, total))
    marginal_color = {i: joint[(i, 0)] + joint[(i, 1)] for i in (0, 1)}
    marginal_size = {j: joint[(0, j)] + joint[(1, j)] for j in (0, 1)}
    return AttributeTable(joint, marginal_color, marginal_size)
