"""The tangent law for short parts of the second moment.

The increment I(T+U) - I(T) over a short interval equals
(U ln(phi(T)/2) - aU) tan(alpha), where alpha is the angle of the chord of
y = phi/2 over [T, T+U]. The law is an identity up to the accuracy of the
ladder, so the interesting part is watching the error budget track the
actual residual across widths from 1e-3 up to T^(1/3).

Runs in about a minute on one core.
"""

import numpy as np

from jacobsladder import (LadderContext, build_integral_table, chord,
                          verify_tangent_law)
from jacobsladder.verify import asymptotic_tan

T_MAX = 3200.0

print(f"building integral table to {T_MAX:.0f} ...")
table = build_integral_table(T_MAX)
ctx = LadderContext(table=table)

T = 3000.0
print(f"\ntangent law at T = {T:.0f}:")
print("      U           lhs           rhs      residual      bound   pass")
for U in (1e-3, 1e-2, 0.1, 1.0, 3.0, 10.0, T ** (1.0 / 3.0)):
    rep = verify_tangent_law(ctx, table, T, U)
    print(f"{U:9.4f}  {rep.lhs:12.6f}  {rep.rhs:12.6f}  {rep.residual:+.2e}"
          f"  {rep.bound:.2e}   {rep.passed}")

# the limit form of the chord slope is 1 - (1-c)/ln T; a single chord at
# this height fluctuates hard around it, so look at a batch
print("\nchord slope vs the limit form, U = T^(1/3):")
print("     T       tan(alpha)    1-(1-c)/lnT")
slopes = []
for T in np.linspace(1000.0, 3000.0, 25):
    T = float(T)
    tan = chord(ctx, T, T ** (1.0 / 3.0)).tan_alpha
    slopes.append(tan)
    if T in (1000.0, 1500.0, 2000.0, 2500.0, 3000.0):
        print(f"{T:7.0f}   {tan:.6f}     {asymptotic_tan(T):.6f}")
print(f"median over 25 anchors in [1000, 3000]: {np.median(slopes):.4f}")

print("""
The residual stays orders of magnitude inside the budget for every width:
the law is exact geometry, only quadrature and inversion noise remain.
The slopes are another story. Individual chords at this height swing far
around the limit form, overshooting 1 whenever the window catches a Z^2
spike; only in median, and only slowly (the correction decays like 1/ln T),
do they settle under it. The acceptance campaign measures that median at
T ~ 1e4..2e4 and records the still-open gap honestly.""")
