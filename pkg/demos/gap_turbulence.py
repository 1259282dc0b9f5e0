"""Zero-gap statistics at desk height.

Normalized gaps (gamma' - gamma) / mean_gap fluctuate hard: clusters of
close zeros against occasional wide gaps. This is the environment the
in-gap chord machinery has to survive, so the demo measures the
distribution at a few heights and then shows the single most extreme
close pair it found.

Runs in about half a minute on one core.
"""

from jacobsladder import gap_statistics, mean_gap, scan_zeros

print("normalized gap statistics over windows of 200 units:")
print("    T      zeros   mean    min     max    frac < 0.5")
for T in (100.0, 1000.0, 5000.0, 10000.0):
    rep = gap_statistics(T, eps=0.5, A=200.0)
    print(f"{T:7.0f}  {rep.count:5d}   {rep.mean_normalized:.3f}  "
          f"{rep.min_normalized:.3f}  {rep.max_normalized:.3f}    "
          f"{rep.fraction_below_eps:.3f}")

# hunt the tightest pair in [10000, 10200]
scan = scan_zeros(10000.0, 10200.0)
best = None
for a, b in zip(scan, scan[1:]):
    norm = (b.gamma - a.gamma) / mean_gap(0.5 * (a.gamma + b.gamma))
    if best is None or norm < best[0]:
        best = (norm, a.gamma, b.gamma)
norm, ga, gb = best
print(f"\ntightest pair in [10000, 10200]:")
print(f"  gamma        = {ga:.6f}")
print(f"  gamma'       = {gb:.6f}")
print(f"  gap          = {gb - ga:.6f}  ({norm:.3f} of the local mean)")

print("""
The mean normalized gap sits near 1 as the counting formula demands, but
the spread is wide at every height; microscopic chords are solved inside
gaps of this full range, including pairs a few percent of the mean apart.""")
