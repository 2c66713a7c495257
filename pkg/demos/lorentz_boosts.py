"""Lorentz boosts as unit biquaternions acting on Minkowski space.

A boost with rapidity phi along i1 is cosh(phi/2) + i i1 sinh(phi/2).
Acting on the event (t; x, y, z) = (1; 0, 0, 0) it produces
(cosh phi; sinh phi, 0, 0): the worldline of an observer moving at
velocity tanh(phi).
"""

import math

import numpy as np

from quatspace import COMPLEX, I1, Minquat, apply, make_translator, matrix_of, metric

rest = Minquat(COMPLEX, [1.0, 0.0, 0.0, 0.0])
boost = make_translator(COMPLEX, I1, math.log(2))
moving = apply(boost, rest)
print("rest event           ", rest.coords)
print("boosted by ln 2      ", moving.coords, "(expected 1.25, 0.75)")
print("velocity             ", moving.coords[1] / moving.coords[0], "= tanh(ln 2) =", math.tanh(math.log(2)))
print("interval t^2 - |x|^2 ", moving.qform())

m = matrix_of(make_translator(COMPLEX, I1, 1.0))
print("\nboost matrix at rapidity 1:\n", np.round(m, 10))
g = metric(COMPLEX)
print("M^T G M == G:", np.allclose(m.T @ g @ m, g))

# rapidities add along a common axis, velocities do not
a, b = 0.4, 0.9
both = apply(make_translator(COMPLEX, I1, a) * make_translator(COMPLEX, I1, b), rest)
print("\nrapidity 0.4 then 0.9 -> v =", both.coords[1] / both.coords[0])
print("relativistic sum of velocities:",
      (math.tanh(a) + math.tanh(b)) / (1 + math.tanh(a) * math.tanh(b)))
