"""
Arithmetic, geometric and harmonic means
========================================

Each mean acts on the real and imaginary parts separately, and the three
are ordered: arithmetic >= geometric >= harmonic.
"""

import numpy as np

from admeans import MeanKind, ad_mean, check_amgmhm, geometric_block_witness, riccati_residual, sqrt_product
from admeans.harness import random_ad

rng = np.random.default_rng(7)
T, S = random_ad(rng, 4), random_ad(rng, 4)

for kind in MeanKind:
    M = ad_mean(kind, T, S).matrix
    print(f"{kind.name.lower():>10}: trace = {np.trace(M):.4f}")

am_gm, gm_hm = check_amgmhm(T, S)
print("AM vs GM:", am_gm)
print("GM vs HM:", gm_hm)

# the geometric mean is the largest X with [[T, X], [X, S]] >= 0 (in both parts)
G = ad_mean(MeanKind.GEOMETRIC, T, S).matrix
print("block witness at G:", geometric_block_witness(T, S, G))
print("block witness at G + 0.01|T| I:", geometric_block_witness(T, S, G + 0.01 * np.linalg.norm(T.matrix, 2) * np.eye(4)))

# unlike the positive definite case, commuting normal T, S do not give
# T#S = T^(1/2) S^(1/2), and T#S does not solve X T^(-1) X = S
T, S = (3 + 4j) * np.eye(2), (15 + 8j) * np.eye(2)
print("T#S        =", ad_mean(MeanKind.GEOMETRIC, T, S).matrix[0, 0])
print("T^½ S^½    =", sqrt_product(T, S)[0, 0])
print("Riccati residual for (1+i)I, (1+2i)I:", riccati_residual((1 + 1j) * np.eye(2), (1 + 2j) * np.eye(2)))
