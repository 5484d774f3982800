"""Seeded random instance generation.

Every trial ``index`` of a run with ``seed`` draws from its own generator
``default_rng([seed, index])``, so any single trial can be replayed without
running the ones before it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from ..linalg import symmetrize
from ..order import AccretiveDissipativeMatrix


@dataclass(frozen=True)
class InstanceSpec:
    """Parameters of a random run.

    ``dim`` is the matrix dimension.  When ``min_dim`` is given, trial ``i``
    uses dimension ``min_dim + i % (dim - min_dim + 1)`` instead, cycling
    through every size in ``[min_dim, dim]``.
    """

    dim: int = 4
    seed: int = 0
    conditioning: float = 100.0
    count: int = 100
    min_dim: int | None = None

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        if self.conditioning < 1:
            raise ValueError("conditioning must be >= 1")
        if self.count < 1:
            raise ValueError("count must be >= 1")
        if self.seed < 0 or self.seed >= 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.min_dim is not None and not 1 <= self.min_dim <= self.dim:
            raise ValueError("need 1 <= min_dim <= dim")

    def dim_for(self, index: int) -> int:
        if self.min_dim is None:
            return self.dim
        return self.min_dim + index % (self.dim - self.min_dim + 1)


def trial_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng([seed, index])


def random_complex(rng: np.random.Generator, n: int, m: int | None = None) -> np.ndarray:
    """Standard complex Gaussian n×m matrix."""
    m = n if m is None else m
    return (rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))) / np.sqrt(2)


def random_pd(rng: np.random.Generator, n: int, conditioning: float = 100.0) -> np.ndarray:
    """``G G* + δI`` with ``δ = ‖G G*‖ / conditioning``.

    The condition number is at most ``conditioning + 1``.
    """
    G = random_complex(rng, n)
    gram = symmetrize(G @ G.conj().T)
    delta = np.linalg.norm(gram, 2) / conditioning
    if delta == 0.0:
        delta = 1.0
    return symmetrize(gram + delta * np.eye(n))


def random_ad(rng: np.random.Generator, n: int, conditioning: float = 100.0) -> AccretiveDissipativeMatrix:
    A = random_pd(rng, n, conditioning)
    B = random_pd(rng, n, conditioning)
    return AccretiveDissipativeMatrix.from_parts(A, B)


def random_nonsingular(rng: np.random.Generator, n: int, conditioning: float = 100.0) -> np.ndarray:
    """Random complex matrix with condition number at most ``conditioning``."""
    U, _ = np.linalg.qr(random_complex(rng, n))
    V, _ = np.linalg.qr(random_complex(rng, n))
    s = np.exp(rng.uniform(0.0, np.log(conditioning), n))
    s[0] = 1.0
    return (U * s) @ V.conj().T


def generate_random_ad(spec: InstanceSpec) -> Iterator[AccretiveDissipativeMatrix]:
    """Deterministic stream of ``spec.count`` accretive-dissipative matrices."""
    for i in range(spec.count):
        yield random_ad(trial_rng(spec.seed, i), spec.dim_for(i), spec.conditioning)
