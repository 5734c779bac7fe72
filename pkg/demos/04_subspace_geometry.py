"""Subspace geometry: the ellipse picture, principal angles, additive
splits, and energy portraits.

The unit sphere of span([A; B]) casts two shadows: onto the first m1
coordinates (the cosine ellipse, semi-axes c_i u_i) and onto the last m2
(the sine ellipse, semi-axes s_i v_i).
"""

import numpy as np

import gsvdkit as gk
from gsvdkit import matcore

np.set_printoptions(precision=6, suppress=True)

print("=" * 64)
print("1. Ellipse data for A = diag(3, 4), B = [1 1]")
print("=" * 64)
A = np.diag([3.0, 4.0])
B = np.array([[1.0, 1.0]])
data = gk.ellipse_data(gk.gsvd_decompose(A, B))
print(f"cosine semi-axis lengths: {data.cosine_lengths}")
print(f"sine semi-axis lengths:   {data.sine_lengths}")
print(f"angles toward the A side: {data.angles}")
print(f"unit-sphere hypotenuses (columns):\n{data.sphere_points}")
print("the first hypotenuse has nothing in its last coordinate: it lies")
print("in the X multiaxis, which is exactly the infinite value.")

print()
print("=" * 64)
print("2. Principal angles through the factorization")
print("=" * 64)
rng = np.random.default_rng(23)
a1 = rng.standard_normal((8, 3))
a2 = rng.standard_normal((8, 4))
result = gk.principal_angles(a1, a2)
print(f"cosines: {result.cosines}")
print(f"angles:  {result.angles}")
print("coincident and orthogonal subspaces come out exactly 1 and 0:")
print(f"  same span:  {gk.principal_angles(a1, 2 * a1).cosines}")
e = np.eye(6)
print(f"  orthogonal: {gk.principal_angles(e[:, :2], e[:, 3:]).cosines}")

print()
print("=" * 64)
print("3. One matrix, one reference subspace: M = P + Q")
print("=" * 64)
M = rng.standard_normal((7, 4))
y1 = np.linalg.qr(rng.standard_normal((7, 3)))[0]
split, f = gk.additive_split(M, y1)
print(f"||M - P - Q||  = {np.linalg.norm(M - split.p_part - split.q_part):.2e}")
print(f"||P' Q||       = {np.linalg.norm(split.p_part.T @ split.q_part):.2e}")
print(f"multislope of M against span(Y1): {f.cotangents()}")

print()
print("=" * 64)
print("4. Energy portraits and their lemniscate identity")
print("=" * 64)
A4 = np.diag([2.0, 1.0])
for e_dir in ([1.0, 0.0], [0.0, 1.0], [np.sqrt(0.5), np.sqrt(0.5)]):
    point = gk.energy_point(A4, e_dir)
    _, _, v = matcore.full_svd(A4)
    resid = gk.lemniscate_residual(A4, v.T @ point)
    print(f"  e = {np.asarray(e_dir)}: point {point}, residual {resid:.2e}")

B4 = np.eye(2)
f4 = gk.gsvd_decompose(np.diag([3.0, 4.0]), B4)
for e_dir in ([1.0, 0.0], [0.0, 1.0]):
    point = gk.energy_point2(np.diag([3.0, 4.0]), B4, e_dir)
    resid = gk.lemniscate_residual2(f4, point)
    print(f"  pair form, e = {np.asarray(e_dir)}: point {point}, "
          f"residual {resid:.2e}")
print("every energy-set point satisfies a degree-six algebraic identity,")
print("the lemniscate generalization of the classical ellipse equation.")
