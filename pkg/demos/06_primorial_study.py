"""max |L(1, chi)| over primorial moduli, normalised by log q / log log q.

The asymptotic statements concern q -> infinity and cannot be checked here;
the table only shows how the finite ratios sit against the two references.
"""
from dirichlet_l1 import primorial_study

rows = primorial_study(13)
print("    q    phi(q)/q  e^-g/log x   max|L|    ratio   main-term ratio")
for r in rows:
    print(
        f"{r.q:6d}  {r.phi_ratio:.5f}   {r.mertens_reference:.5f}    {r.max_abs_l1:.5f}  "
        f"{r.ratio:.5f}   {r.theorem_main_ratio:.5f}"
    )
print(f"\nreferences: (1/2)e^-gamma = {rows[0].theorem_reference:.5f}, e^-gamma = {rows[0].corollary_reference:.5f}")
