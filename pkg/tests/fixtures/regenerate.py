"""Rebuild the committed fixtures from exhaustive scans.

Run from the repository root:  python tests/fixtures/regenerate.py
"""
import json
import math
from pathlib import Path

from dirichlet_l1.bounds import lemma2_radical_gap, primorial_growth_constant, primorial_study
from dirichlet_l1.arith import radical
from dirichlet_l1.chargroup import build_group, enumerate_characters, sup_tail_sum_from_values

HERE = Path(__file__).parent


def pv_scan(q_max=500):
    best, arg = 0.0, None
    for q in range(3, q_max + 1):
        g = build_group(q)
        scale = math.sqrt(q) * math.log(q)
        for chi in enumerate_characters(g)[1:]:
            r = sup_tail_sum_from_values(chi.values()) / scale
            if r > best:
                best, arg = r, (q, list(chi.exponents))
    return {"q_max": q_max, "r_max": best, "argmax_q": arg[0], "argmax_exponents": arg[1]}


def radical_gap_scan(q_max=10**5):
    best, arg = -math.inf, None
    for q in range(3, q_max + 1):
        if radical(q) <= 2:
            continue
        gap = lemma2_radical_gap(q)
        if gap > best:
            best, arg = gap, q
    return {"q_max": q_max, "gap_max": best, "argmax_q": arg}


def main():
    rows = [r.as_dict() for r in primorial_study(13)]
    (HERE / "primorial_13.json").write_text(json.dumps(rows, indent=2) + "\n")
    scans = {
        "pv_ratio": pv_scan(),
        "radical_gap": radical_gap_scan(),
        "primorial_growth": {"x_max": 47, "c_max": primorial_growth_constant(47)},
    }
    (HERE / "scans.json").write_text(json.dumps(scans, indent=2) + "\n")


if __name__ == "__main__":
    main()
