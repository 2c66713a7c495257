"""Unit split biquaternions and the double cover of SO(4).

Every unit element q of H(S) gives an orthogonal 4x4 matrix with
determinant one. q and -q give the same matrix, bit for bit.
"""

import numpy as np

from quatspace import I1, SPLIT, Minquat, apply, make_translator, matrix_of, sampling
from quatspace.jsonio import dumps

rng = np.random.default_rng(3)
q = sampling.unit_elements(rng, SPLIT, 5)
m = matrix_of(q)
for k in range(5):
    mk = m[k]
    print(f"sample {k}: |M^T M - I| = {np.abs(mk.T @ mk - np.eye(4)).max():.1e}, det = {np.linalg.det(mk):.15f}")

print("\nq and -q serialise to identical matrices:", dumps(matrix_of(-q)) == dumps(m))

# a split translator by pi/2 sends 1 to u i1: a quarter turn in the (v0, v1) plane
quarter = make_translator(SPLIT, I1, np.pi / 2)
print("quarter turn of (1; 0, 0, 0):", np.round(apply(quarter, Minquat(SPLIT, [1.0, 0, 0, 0])).coords, 15))
