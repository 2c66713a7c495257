"""Dual quaternions: rotations and translations of the plane v0 = 1.

On the dual ring the translator 1 + eps i1 phi/2 is a Galilean shear of
(t; x) space. Restricted to t = 1 it is an ordinary translation of R^3,
and composed with rotors it gives every rigid motion.
"""

import math

import numpy as np

from quatspace import DUAL, I1, I3, act, compose, decompose, distance, lift, make_rotor, make_translator

p = lift(DUAL, [1.0, 0.0, 0.0])
print("point                ", p.coords)

shift = make_translator(DUAL, I1, 2.5)
print("translated by 2.5 i1 ", act(shift, p).coords)

turn = make_rotor(DUAL, I3, math.pi / 2)
print("rotated 90 deg about i3", np.round(act(turn, p).coords, 12))

# rotate then translate; the decomposition recovers both parts
motion = compose(shift, turn)
d = decompose(motion)
print("\nmotion = q_r q_b with theta =", d.theta, "(half the translation length)")
print("q_r alpha", np.round(d.q_r.alpha.data, 12))

a, b = lift(DUAL, [3.0, 0.0, 0.0]), lift(DUAL, [0.0, 4.0, 0.0])
print("\nd(3 i1, 4 i2) =", distance(a, b))
print("after the motion:", distance(act(motion, a), act(motion, b)))
