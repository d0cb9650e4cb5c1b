"""The digamma function at rationals, and the identities it satisfies."""
import math

from dirichlet_l1 import EULER_GAMMA, digamma, digamma_row
from dirichlet_l1.specfun import gauss_identity_residual

for z in (1.0, 0.5, 2.0, 1 / 3, 1e-3):
    d = digamma(z)
    print(f"psi({z:.4g}) = {d.value:+.15f}   (error bound {d.abs_error:.1e})")

print("\npsi(1/2) should be -gamma - 2 log 2 =", -EULER_GAMMA - 2 * math.log(2))

print("\nsum_{k<=m} psi(k/m) + m(gamma + log m), which should vanish:")
for m in (2, 10, 100, 500):
    print(f"  m = {m:4d}: {gauss_identity_residual(m):+.2e}")

row = digamma_row(6)
print("\n-psi(k/6) - gamma for k = 1..5 is positive:", [round(float(-v - EULER_GAMMA), 4) for v in row[:-1]])
