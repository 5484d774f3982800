"""
Parallel sums
=============

T : S = (T^-1 + S^-1)^-1.  Twice the parallel sum dominates the harmonic
mean, but need not be comparable with the geometric mean.
"""

import numpy as np

from admeans import MeanKind, ad_mean, check_parallel_vs_harmonic, compare_parallel_vs_geometric, parallel_sum

T, S = (1 + 1j) * np.eye(2), (1 + 2j) * np.eye(2)
two_par = 2 * parallel_sum(T, S)
print("2(T:S) =", two_par[0, 0], "  exact (14 + 18i)/13 =", (14 + 18j) / 13)
print("T#S    =", ad_mean(MeanKind.GEOMETRIC, T, S).matrix[0, 0])
print("T!S    =", ad_mean(MeanKind.HARMONIC, T, S).matrix[0, 0])
print("2(T:S) vs T#S:", compare_parallel_vs_geometric(T, S))
print("2(T:S) vs T!S:", check_parallel_vs_harmonic(T, S))
