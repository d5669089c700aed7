"""How much membrane-bending coupling can an isotropic plate carry?

Starts from the 18-ply glass-epoxy sequence whose extension and bending
tensors are both isotropic, then inflates its coupling tensor until the bound
set says no.  The eigenvalue oracle is consulted at every step.
"""

import math

from polarbounds import PolarElastic4, Stacking, compute_abd_polar, plate_law_matrix
from polarbounds.bounds import Verdict, dispatch_check, feasibility_general
from polarbounds.oracle import kelvin_pd_check

PLY = PolarElastic4(T0=92.38, T1=86.97, R0=44.86, R1=43.82)
ANGLES = [0, 60, -60, -60, 60, 60, -60, 0, 60, 60, 0, -60, 0, -60, 0, 0, -60, 60]


def main():
    lp = compute_abd_polar(Stacking.from_degrees(PLY, ANGLES))
    print(f"A: R0={lp.A.R0:.2e} R1={lp.A.R1:.2e}   D: R0={lp.D.R0:.2e} R1={lp.D.R1:.2e}")
    print(f"B: R0={lp.B.R0:.4f} R1={lp.B.R1:.4f}")
    report = dispatch_check(lp, verify=True)
    print(f"dispatch -> {report.case_used}, {report.verdict.value}")

    threshold = math.sqrt(PLY.T0 * PLY.T1 / 6)
    print(f"\nclosed-form limit on R1(B) with R0(B) = 0: {threshold:.4f}")
    print(f"{'R1(B)':>10} {'bounds':>12} {'oracle':>12} {'min eig':>12}")
    for frac in (0.5, 0.9, 0.99, 1.01, 1.1, 1.5):
        r1 = frac * threshold
        probe = lp.with_B(R0=0.0, R1=r1)
        g = feasibility_general(probe)
        o = kelvin_pd_check(plate_law_matrix(probe))
        mark = "" if g.verdict == o.verdict else "  <- differ"
        print(f"{r1:10.4f} {g.verdict.value:>12} {o.verdict.value:>12} {o.min_eigenvalue:12.4g}{mark}")

    # with the stack's own R0(B) the limit moves; bisect on the general verdict
    lo, hi = 0.0, 2 * threshold
    for _ in range(50):
        mid = 0.5 * (lo + hi)
        scaled = lp.with_B(R1=mid)
        if feasibility_general(scaled).verdict is Verdict.INFEASIBLE:
            hi = mid
        else:
            lo = mid
    print(f"\nkeeping R0(B) = {lp.B.R0:.4f}, the limit on R1(B) drops to {lo:.4f}")


if __name__ == "__main__":
    main()
