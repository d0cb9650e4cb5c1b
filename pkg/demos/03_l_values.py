"""L(1, chi) two ways: the digamma formula and the truncated series."""
import math

from dirichlet_l1 import build_group, enumerate_characters, l1_cross_validated, l1_digamma, l1_truncated

(chi4,) = enumerate_characters(build_group(4))[1:]
print("L(1, chi_4) via digamma:", l1_digamma(chi4).value, " pi/4 =", math.pi / 4)
for x in (2, 100, 10**4):
    est = l1_truncated(chi4, x)
    print(f"  truncated at x = {x:>6}: {est.value.real:.10f} +- {est.abs_error:.1e}")

print("\nAll characters mod 7 (conjugate characters give conjugate values):")
for chi in enumerate_characters(build_group(7))[1:]:
    est = l1_cross_validated(chi)
    print(f"  {chi.exponents}  L = {est.value:.10f}  |L| = {abs(est.value):.10f}")
