"""Coprime harmonic sums against their main term, with the error made explicit."""
from dirichlet_l1 import coprime_harmonic, lemma2_main_term, lemma2_radical_gap, tau

print(" q      x        sum        main      residual   tau(q)/x")
for q in (6, 12, 30, 210):
    for x in (q, 10 * q, 100 * q):
        lhs = coprime_harmonic(x, q)
        main = lemma2_main_term(q, x)
        print(f"{q:3d} {x:6d}  {lhs:.8f}  {main:.8f}  {lhs - main:+.2e}  {tau(q) / x:.2e}")

print("\nsum_{p|q} log p/(p-1) - log log rad(q) stays small:")
for q in (6, 30, 210, 2310, 30030, 510510):
    print(f"  q = {q:7d}: {lemma2_radical_gap(q):+.4f}")
