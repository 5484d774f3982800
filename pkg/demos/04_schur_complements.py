"""
Schur complements of means
==========================

For a 2x2 block matrix M, M/M22 = M11 - M12 M22^-1 M21.  Parallel sums
commute with Schur complements exactly; the analogous inequality for
the means fails, and here are concrete failures.
"""

import numpy as np

from admeans import MeanKind, evaluate_schur_mean_conjecture, parallel_sum_schur_equality
from admeans.harness import random_ad
from admeans.harness.registry import SCHUR_CONJECTURE_PAIRS

rng = np.random.default_rng(3)
T, S = random_ad(rng, 5), random_ad(rng, 5)
print("(T:S)/(T:S)22 - (T/T22):(S/S22), split 2:", parallel_sum_schur_equality(T, S, 2))

for name, kind, arithmetic in [("sum", MeanKind.ARITHMETIC, "sum"),
                               ("geo", MeanKind.GEOMETRIC, "mean"),
                               ("harm", MeanKind.HARMONIC, "mean")]:
    A, B = SCHUR_CONJECTURE_PAIRS[name]
    lhs, rhs, rel = evaluate_schur_mean_conjecture(A, B, kind, 1, arithmetic=arithmetic)
    print(f"{name:>4}: lhs {lhs[0, 0]:.4f}  rhs {rhs[0, 0]:.4f}  lhs vs rhs: {rel.tag.value}")
