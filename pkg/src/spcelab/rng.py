"""Deterministic, stream-keyed randomness for reproducible Monte Carlo runs.

Every generator in the package draws from an :class:`RngStream` identified by a
``(root_seed, stream_label)`` pair. The label is a slash-separated path such as
``"clpm/source/block-17"``; hashing the pair with SHA-256 keys a counter-based
Philox engine, so a stream can be re-created at any time without replaying
whatever other streams were consumed before it. That property is what makes
block-parallel simulation deterministic: each block owns its own stream and the
merge order is fixed by the block index, not by worker scheduling.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidSpecError

__all__ = [
    "RngStream",
    "DiscreteDistribution",
    "derive_stream",
    "sample_discrete",
    "sample_uniform_angle",
]

_WEIGHT_TOL = 1e-12


def _philox_key(root_seed: int, stream_label: str) -> np.ndarray:
    """256-bit Philox key from the (seed, label) pair. Pure function of its inputs."""
    payload = f"{root_seed}\x1f{stream_label}".encode("utf-8")
    digest = hashlib.sha256(payload).digest()
    return np.frombuffer(digest, dtype=np.uint64).copy()


@dataclass
class RngStream:
    """A named, independently re-derivable random stream.

    Instances are created through :func:`derive_stream`. The generator is
    mutable (it has an internal counter) and must not be shared between
    concurrent workers; deriving new streams is always safe.
    """

    root_seed: int
    stream_label: str
    generator: np.random.Generator = field(repr=False, compare=False)

    def spawn(self, suffix: str) -> "RngStream":
        """Derive a child stream under this stream's label path."""
        return derive_stream(self.root_seed, f"{self.stream_label}/{suffix}")

    def uniform(self, size=None):
        """Uniform draws on [0, 1)."""
        return self.generator.random(size)


def derive_stream(root_seed: int, stream_label: str) -> RngStream:
    """Create the stream identified by ``(root_seed, stream_label)``.

    Identical arguments always yield an identical output sequence; distinct
    labels under one root seed yield statistically independent sequences.
    """
    if not stream_label:
        raise InvalidSpecError("stream_label must be non-empty")
    bit_gen = np.random.Philox(key=_philox_key(root_seed, stream_label))
    return RngStream(root_seed, stream_label, np.random.Generator(bit_gen))


@dataclass(frozen=True, eq=False)
class DiscreteDistribution:
    """A finite distribution over hashable outcome identifiers.

    Weights must be non-negative and sum to 1 within 1e-12; the support must
    not contain duplicates. Both are checked at construction so samplers can
    assume validity.
    """

    support: tuple
    weights: np.ndarray

    def __init__(self, support, weights):
        support = tuple(support)
        weights = np.asarray(weights, dtype=float)
        if len(support) != weights.shape[0] or weights.ndim != 1:
            raise InvalidSpecError("support and weights must have equal length")
        if len(set(support)) != len(support):
            raise InvalidSpecError("support contains duplicate identifiers")
        if weights.size == 0:
            raise InvalidSpecError("distribution must have at least one outcome")
        if np.any(weights < 0):
            raise InvalidSpecError("weights must be non-negative")
        total = float(weights.sum())
        if abs(total - 1.0) > _WEIGHT_TOL:
            raise InvalidSpecError(f"weights sum to {total!r}, expected 1 within {_WEIGHT_TOL}")
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "weights", weights)
        cumulative = np.cumsum(weights)
        cumulative[-1] = 1.0  # guard the top bin against rounding
        object.__setattr__(self, "_cumulative", cumulative)

    @classmethod
    def point_mass(cls, outcome) -> "DiscreteDistribution":
        return cls((outcome,), (1.0,))

    @classmethod
    def uniform(cls, support) -> "DiscreteDistribution":
        support = tuple(support)
        return cls(support, np.full(len(support), 1.0 / len(support)))

    def sample_indices(self, rng: RngStream, size=None) -> np.ndarray:
        """Indices into ``support`` with the distribution's frequencies."""
        u = rng.generator.random(size)
        return np.searchsorted(self._cumulative, u, side="right")

    def probability(self, outcome) -> float:
        try:
            return float(self.weights[self.support.index(outcome)])
        except ValueError:
            return 0.0

    def expectation(self) -> float:
        """Mean of a numeric support."""
        return float(np.dot(np.asarray(self.support, dtype=float), self.weights))


def sample_discrete(dist: DiscreteDistribution, rng: RngStream, size=None):
    """Draw outcome identifiers from ``dist``.

    With ``size=None`` returns a single identifier, otherwise a list of them.
    """
    idx = dist.sample_indices(rng, size)
    if size is None:
        return dist.support[int(idx)]
    return [dist.support[i] for i in np.asarray(idx).ravel()]


def sample_uniform_angle(rng: RngStream, size=None):
    """Uniform angles on [0, pi), the natural range for linear polarization."""
    return rng.generator.random(size) * np.pi
