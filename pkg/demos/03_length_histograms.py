"""
Length histograms at growing word length
========================================

For a random cyclically reduced word of length L the geodesic length is
roughly kappa * L with fluctuations of order sqrt(L).  The histogram starts
out lumpy and looks more and more normal as L grows.

SVG figures are written to demos/out/.
"""
from pathlib import Path

from pants_spectrum import BoundaryLengths, ExperimentConfig, emit_svg, sweep
from pants_spectrum.report import svg_title

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

metric = BoundaryLengths(1, 1, 1)
config = ExperimentConfig(metric, L=10, N=20_000, master_seed=1)

results = sweep(config, [10, 20, 50, 100, 200])
print(" L     mean      std   skew    kurt     ks  kappa_hat")
for r in results:
    s = r.stats
    print(f"{r.config.L:3d} {s.mean:8.3f} {s.sample_std:8.3f} {s.skewness:6.3f} "
          f"{s.excess_kurtosis:7.3f} {s.ks_statistic:6.4f} {r.scaling.kappa_hat:8.5f}")
    emit_svg(r.histogram, out / f"hist_111_L{r.config.L}.svg", svg_title(metric, r.config.L, "sampled"))

# skewness shrinks roughly like 1/sqrt(L): compare skew * sqrt(L)
print([round(r.stats.skewness * r.config.L ** 0.5, 2) for r in results])
