"""
Peaks at multiples of C/2
=========================

With one long boundary (C = 5) the short-word spectrum clusters near
multiples of C/2 = 2.5.  The comb score measures how much heavier the bins
at those multiples are than the typical central bin; it fades as L grows.
"""
from pathlib import Path

from pants_spectrum import BoundaryLengths, ExperimentConfig, comb_score, emit_svg, run, sweep
from pants_spectrum.report import histogram_csv, svg_title

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

metric = BoundaryLengths(1, 1, 5)

# every conjugacy class at L = 14, exactly once
exact = run(ExperimentConfig(metric, L=14, mode="enumerated", bin_width=0.5))
print("L=14 enumerated, N =", exact.N, "comb =", comb_score(exact.histogram, 2.5))
emit_svg(exact.histogram, out / "comb_115_L14.svg", svg_title(metric, 14, "enumerated"))
(out / "comb_115_L14.csv").write_text(histogram_csv(exact.histogram))

# in between the score can even go negative: the old clusters have smeared
# out and the bins at multiples of 2.5 sit in the dips between new ones
for r in sweep(ExperimentConfig(metric, L=14, N=20_000, master_seed=1, bin_width=0.5), [30, 50, 100]):
    print(f"L={r.config.L} sampled comb = {comb_score(r.histogram, 2.5):.4f}")

# the bin width matters: peaks at L = 14 are about one unit wide, so very
# narrow bins cut them into pieces and the score drops
for w in (0.1, 0.25, 0.5):
    h = run(ExperimentConfig(metric, L=14, mode="enumerated", bin_width=w)).histogram
    print(f"width {w}: comb = {comb_score(h, 2.5):.4f}")
