"""One distance formula, three geometries.

For points v, w of the unit level set Q = 1 the scalar part of v bar(w) is
cos(u gamma). Reading gamma off gives hyperbolic distance on H^3,
Euclidean distance on E^3 and great-circle distance on S^3.
"""

import math

import numpy as np

from quatspace import KINDS, I1, I2, closed_form_distance, distance, law_of_cosines_check, lift, sampling
from quatspace.spaceform import basepoint, polar_coords

for kind in KINDS:
    a, b = lift(kind, 0.8, I1), lift(kind, 0.8, I2)
    (r1, a1), (r2, a2) = polar_coords(a), polar_coords(b)
    print(f"{kind.label:8s} d(0.8 i1, 0.8 i2) = {distance(a, b):.12f}",
          f"closed form {closed_form_distance(kind, r1, a1, r2, a2):.12f}")

print("\nright triangle with legs 0.8 at the origin:")
for kind in KINDS:
    res = law_of_cosines_check(lift(kind, 0.8, I1), basepoint(kind), lift(kind, 0.8, I2))
    print(f"  {kind.label:8s} lhs {res.lhs:.12f} rhs {res.rhs:.12f}")
print("  Euclidean hypotenuse:", 0.8 * math.sqrt(2))

rng = np.random.default_rng(11)
for kind in KINDS:
    u, v, w = (sampling.points(rng, kind, 1000) for _ in range(3))
    slack = distance(u, v) + distance(v, w) - distance(u, w)
    print(f"{kind.label:8s} smallest triangle slack over 1000 triples: {slack.min():.3e}")
