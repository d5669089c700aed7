"""Character map of the feasible coupling moduli for a [0/90] glass-epoxy plate.

A and D are kept from the real stack; R0(B) and R1(B) sweep a grid.  Each
cell shows the verdict of the closed-form aligned bounds: '.' feasible,
'#' infeasible, '~' marginal.  Cells where the general (minimised) bounds
disagree would be shown as '!'.
"""

import numpy as np

from polarbounds import PolarElastic4, Stacking, compute_abd_polar
from polarbounds.bounds import Verdict, feasibility_aligned, feasibility_general

GLYPH = {Verdict.FEASIBLE: ".", Verdict.INFEASIBLE: "#", Verdict.MARGINAL: "~"}


def main(n=25):
    ply = PolarElastic4(T0=92.38, T1=86.97, R0=44.86, R1=43.82)
    lp = compute_abd_polar(Stacking.from_degrees(ply, [0, 90]))
    r0 = np.linspace(0, 80, n)
    r1 = np.linspace(0, 60, n)
    print(f"actual stack: R0(B)={lp.B.R0:.2f}, R1(B)={lp.B.R1:.2f}")
    print("rows: R1(B) from 60 down to 0; columns: R0(B) from 0 to 80")
    disagreements = 0
    for b1 in r1[::-1]:
        line = []
        for b0 in r0:
            p = lp.with_B(R0=float(b0), R1=float(b1))
            a = feasibility_aligned(p).verdict
            if a != feasibility_general(p).verdict:
                disagreements += 1
                line.append("!")
            else:
                line.append(GLYPH[a])
        print(f"{b1:6.1f} " + "".join(line))
    print(f"aligned vs general disagreements: {disagreements}")


if __name__ == "__main__":
    main()
