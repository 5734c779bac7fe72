"""From planar trigonometry to matrix trigonometry.

A stacked vector [a; b] is a hypotenuse: [a; b] = [u*c; v*s] * h with
c = |a|/h, s = |b|/h.  The factorization [A; B] = [U C; V S] H does the
same for a pair of matrices, one right triangle per direction.
"""

import numpy as np

import gsvdkit as gk

np.set_printoptions(precision=6, suppress=True)

print("=" * 64)
print("1. The scalar prelude: a = 3, b = 4")
print("=" * 64)
f = gk.gsvd_decompose([[3.0]], [[4.0]])
print(f"c = {f.c[0]}, s = {f.s[0]}, h = {f.h[0, 0]}")
print(f"slope (cotangent) c/s = {f.cotangents()[0]}")

print()
print("=" * 64)
print("2. A pair of matrices: A = diag(3, 4), B = [1 1]")
print("=" * 64)
A = np.diag([3.0, 4.0])
B = np.array([[1.0, 1.0]])
f = gk.gsvd_decompose(A, B)
print(f"ranks: r = {f.r}, rank(A) = {f.r_a}, rank(B) = {f.r_b}")
print(f"cosines: {f.c}")
print(f"sines:   {f.s}")
print(f"generalized singular values (cotangents): {f.cotangents()}")
print("one value is infinite: the span of [A; B] contains a horizontal")
print("direction [u; 0], so that triangle has no vertical leg at all.")

counts = gk.structure_counts(f)
print(f"\nstructure counts: infinite = {counts.n_infinite}, "
      f"finite = {counts.n_finite}, zero = {counts.n_zero}")

print(f"\nH (coordinates of [A; B] in the [UC; VS] basis):\n{f.h}")
resid = np.linalg.norm(f.reconstruct() - np.vstack([A, B]))
print(f"reconstruction residual: {resid:.2e}")

print()
print("=" * 64)
print("3. The trigonometry table: svd(A H^+) = cosines, etc.")
print("=" * 64)
table = gk.trig_table(f, A, B)
for row in table.rows:
    if row.applicable:
        print(f"  {row.name}: computed {row.computed}, max dev {row.max_dev:.2e}")
    else:
        print(f"  {row.name}: not applicable ({row.note})")

print()
print("=" * 64)
print("4. Parameter counts: the factors carry exactly m*n numbers")
print("=" * 64)
for (m1, m2, n, r) in [(2, 2, 2, 2), (1, 3, 4, 2), (4, 5, 8, 7)]:
    counts = gk.parameter_count(m1, m2, n, r)
    print(f"  m1={m1} m2={m2} n={n} r={r}: total={counts['total']} "
          f"= (m1+m2)*n = {(m1 + m2) * n}  [{counts['regime']}]")

print()
print("=" * 64)
print("5. Format conversions")
print("=" * 64)
a5 = np.array([[1.0, 0.0]])
f5 = gk.gsvd_decompose(a5, a5)
print(f"A = B = [1 0]: r = {f5.r}, common nullspace dim = {f5.n - f5.r}")
c_exp, s_exp, h_exp = gk.expand(f5)
print(f"expanded H (square, nonsingular):\n{h_exp}")
r_tri, q_orth = gk.rq_drilldown(f5)
print(f"RQ drilldown: first column of Q spans the common nullspace: "
      f"{q_orth[:, 0]}")
