"""
The accretive-dissipative cone and its order
============================================

Split a complex matrix into Hermitian real and imaginary parts, test cone
membership, and compare matrices part by part.
"""

import numpy as np

from admeans import ad_sqrt, compare_extended_order, is_accretive_dissipative, toeplitz_decompose

# T = A + iB with A, B Hermitian
T = np.array([[3 + 2j, 1 - 1j], [0.5 + 1j, 2 + 3j]])
parts = toeplitz_decompose(T)
print("real part\n", parts.real)
print("imaginary part\n", parts.imag)
print("accretive-dissipative:", is_accretive_dissipative(T))

# the order compares both parts; it is only partial
T = (32 + 24j) * np.eye(2)
S = (7 + 24j) * np.eye(2)
print("T vs S:", compare_extended_order(T, S))

# square roots need not preserve it: 6+2i vs 4+3i
rT, rS = ad_sqrt(T), ad_sqrt(S)
print("sqrt T =", rT.matrix[0, 0], " sqrt S =", rS.matrix[0, 0])
print("sqrt T vs sqrt S:", compare_extended_order(rT, rS))
