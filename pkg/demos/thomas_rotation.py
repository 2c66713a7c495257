"""Two boosts in different directions are not a boost.

Composing boosts along i1 and i2 and splitting the product as
q = q_r q_b leaves a rotor q_r != 1: the Thomas rotation. For perpendicular
boosts of rapidities a and b its half-angle satisfies
tan(eps/2) = tanh(a/2) tanh(b/2).
"""

import math

import numpy as np

from quatspace import COMPLEX, I1, I2, compose, decompose, make_translator

for a, b in [(0.1, 0.1), (0.5, 0.5), (1.0, 2.0), (3.0, 3.0)]:
    q = compose(make_translator(COMPLEX, I1, a), make_translator(COMPLEX, I2, b))
    d = decompose(q)
    vec = d.q_r.alpha.vec
    angle = 2 * math.asin(min(1.0, np.linalg.norm(vec)))
    expected = 2 * math.atan(math.tanh(a / 2) * math.tanh(b / 2))
    axis = vec / np.linalg.norm(vec)
    print(f"a={a:.1f} b={b:.1f}: rotation {math.degrees(angle):8.4f} deg about {np.round(axis, 6)}"
          f"  (expected {math.degrees(expected):8.4f}), residual boost rapidity {2 * d.theta:.6f}")
