"""Per-modulus bound reports for a range of moduli."""
from dirichlet_l1 import verify_modulus

print("  q   max|L|   corollary  margin   truncation-bound margin   PV ratio")
for q in list(range(3, 16)) + [30, 60, 97, 210, 420]:
    r = verify_modulus(q)
    print(
        f"{q:4d}  {r.max_abs_l1:.4f}   {r.corollary_bound:.4f}   {r.corollary_margin_min:.4f}"
        f"   {r.theorem_margin_min:.4f}                    {r.pv_ratio_max:.4f}"
    )
