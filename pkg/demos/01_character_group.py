"""Building the characters modulo q and looking at their values."""
import numpy as np

from dirichlet_l1 import build_group, enumerate_characters, partial_sum, sup_tail_sum

spacer = "_" * 60

g = build_group(24)
print("(Z/24Z)^* has components (generator, order):", g.components)
print("phi(24) =", g.phi)

print(spacer)
print("\nEvery unit is a product of generator powers; dlog(5) =", g.dlog(5))

print(spacer)
chars = enumerate_characters(g)
print(f"\n{len(chars)} characters, principal first:")
np.set_printoptions(precision=2, suppress=True, linewidth=120)
for chi in chars:
    print(chi.exponents, chi.values().real)

print(spacer)
chi = build_group(7).character((1,))
print("\nA complex character mod 7, chi(3) =", chi(3))
print("partial sums over one period vanish:", partial_sum(chi, 0, 7))
print("largest tail sum |sum_{x<k<=n} chi(k)| =", sup_tail_sum(chi))
