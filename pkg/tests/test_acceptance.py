"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line; the lines are printed together at the end
of the pytest session (see conftest.py).
"""
import itertools
import time
from collections import Counter
from dataclasses import replace
from pathlib import Path

import numpy as np
from scipy.stats import chi2

from conftest import ACCEPTANCE_LINES
from pants_spectrum import (
    BoundaryLengths,
    ExperimentConfig,
    comb_score,
    count_classes,
    count_strings,
    enumerate_class_codes,
    geodesic_length,
    length_direct,
    parse_word,
    representation,
    run,
    sample_codes,
    sample_word,
    sweep,
)
from pants_spectrum.cli import main
from pants_spectrum.words import format_codes

GOLDEN = Path(__file__).parent / "golden"

# comb-score regression pin for (1,1,5), enumerated L=14, bin width 0.5, spacing 2.5
COMB_L14_PIN = 0.396792029027
COMB_BIN_WIDTH = 0.5


def record(number, name, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] AC{number:<2d} {name}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_ac01_boundary_identities():
    start = time.perf_counter()
    rng = np.random.default_rng(101)
    worst = 0.0
    for A, B, C in rng.uniform(0.05, 12, size=(50, 3)):
        rep = representation((A, B, C))
        for text, expected in (("a", A), ("b", B), ("ab", C)):
            got = geodesic_length(parse_word(text), rep).value
            worst = max(worst, abs(got / expected - 1))
    elapsed = time.perf_counter() - start
    record(1, "boundary identities", worst <= 1e-9 and elapsed < 1.0,
           f"max rel err {worst:.2e} (<= 1e-9), {elapsed:.2f}s (< 1s)")


def test_ac02_log_space_matches_naive_product():
    start = time.perf_counter()
    worst = 0.0
    for metric in ((1, 1, 1), (1, 10, 0.1)):
        rep = representation(metric)
        rng = np.random.default_rng(202)
        for _ in range(1000):
            w = sample_word(int(rng.integers(1, 31)), rng)
            a = geodesic_length(w, rep).value
            b = length_direct(w, rep).value
            worst = max(worst, abs(a / b - 1))
    elapsed = time.perf_counter() - start
    record(2, "oracle equivalence", worst <= 1e-9 and elapsed < 5.0,
           f"max rel err {worst:.2e} (<= 1e-9) over 2x1000 words, {elapsed:.2f}s (< 5s)")


def test_ac03_conjugacy_inversion_power():
    rep = representation((1, 1, 1))
    rng = np.random.default_rng(303)
    worst_rot = worst_inv = 0.0
    for _ in range(500):
        w = sample_word(int(rng.integers(1, 101)), rng)
        ref = geodesic_length(w, rep).value
        for k in range(1, len(w)):
            worst_rot = max(worst_rot, abs(geodesic_length(w.rotate(k), rep).value / ref - 1))
        worst_inv = max(worst_inv, abs(geodesic_length(w.inverse(), rep).value / ref - 1))
    worst_pow = 0.0
    for _ in range(500):
        w = sample_word(int(rng.integers(1, 11)), rng)
        n = int(rng.integers(1, 11))
        ref = geodesic_length(w, rep).value
        worst_pow = max(worst_pow, abs(geodesic_length(w.power(n), rep).value / (n * ref) - 1))
    ok = worst_rot <= 1e-9 and worst_inv <= 1e-9 and worst_pow <= 1e-8
    record(3, "conjugacy/inversion/power", ok,
           f"rotation {worst_rot:.1e}, inversion {worst_inv:.1e} (<= 1e-9); power {worst_pow:.1e} (<= 1e-8)")


def _brute_counts(L):
    inv = (1, 0, 3, 2)
    strings = classes = 0
    seen = set()
    for t in itertools.product(range(4), repeat=L):
        if any(t[(i + 1) % L] == inv[t[i]] for i in range(L)):
            continue
        strings += 1
        key = min(t[k:] + t[:k] for k in range(L))
        if key not in seen:
            seen.add(key)
            classes += 1
    return strings, classes


def test_ac04_counting():
    start = time.perf_counter()
    mismatches = []
    for L in range(1, 11):
        s, c = _brute_counts(L)
        if (s, c) != (count_strings(L), count_classes(L)):
            mismatches.append(L)
    n14 = len(enumerate_class_codes(14))
    elapsed = time.perf_counter() - start
    ok = not mismatches and n14 == count_classes(14) and elapsed < 120
    record(4, "counting", ok,
           f"brute force L<=10 mismatches {mismatches}; enumerate(14) = {n14} vs count_classes(14) = "
           f"{count_classes(14)}; {elapsed:.1f}s (< 120s)")


def test_ac05_sampler():
    codes = sample_codes(3, 280_000, np.random.default_rng(505))
    counts = Counter(format_codes(r) for r in codes)
    observed = np.array(list(counts.values()))
    expected = codes.shape[0] / count_strings(3)
    stat = float(((observed - expected) ** 2 / expected).sum())
    critical = chi2.ppf(1 - 0.001, df=27)
    cfg = ExperimentConfig(BoundaryLengths(1, 1, 1), L=100, N=100_000, master_seed=1)
    one = run(cfg, keep_lengths=True)
    eight = run(replace(cfg, chunks=8), keep_lengths=True)
    same = np.array_equal(one.lengths, eight.lengths) and one.stats == eight.stats
    ok = len(counts) == 28 and stat < critical and same
    record(5, "sampler", ok,
           f"{len(counts)} strings, chi2 = {stat:.1f} < {critical:.1f} (27 dof, alpha 0.001); "
           f"chunks 1 vs 8 bit-identical: {same}")


def test_ac06_peaks_fade():
    start = time.perf_counter()
    metric = BoundaryLengths(1, 1, 5)
    r14 = run(ExperimentConfig(metric, L=14, mode="enumerated", bin_width=COMB_BIN_WIDTH))
    r50, r100 = sweep(
        ExperimentConfig(metric, L=14, N=20_000, master_seed=1, bin_width=COMB_BIN_WIDTH), [50, 100]
    )
    s14, s50, s100 = (comb_score(r.histogram, 2.5) for r in (r14, r50, r100))
    elapsed = time.perf_counter() - start
    ok = s14 > s50 > s100 and s14 > 0.25 and abs(s14 - COMB_L14_PIN) < 1e-9 and elapsed < 180
    record(6, "peaks at multiples of C/2 fade", ok,
           f"comb(L=14) {s14:.4f} > comb(L=50) {s50:.4f} > comb(L=100) {s100:.4f}; "
           f"L=14 > 0.25, pinned {COMB_L14_PIN}; {elapsed:.1f}s (< 180s)")


def test_ac07_normality_improves():
    start = time.perf_counter()
    r20, r100 = sweep(ExperimentConfig(BoundaryLengths(1, 1, 1), L=20, N=20_000, master_seed=1), [20, 100])
    ks20, ks100 = r20.stats.ks_statistic, r100.stats.ks_statistic
    skew = r100.stats.skewness
    elapsed = time.perf_counter() - start
    ok = ks100 < ks20 and abs(skew) < 0.15 and elapsed < 120
    record(7, "normality trend", ok,
           f"ks(L=100) {ks100:.4f} < ks(L=20) {ks20:.4f}; |skew(L=100)| {abs(skew):.4f} < 0.15; "
           f"{elapsed:.1f}s (< 120s)")


def test_ac08_kappa_converges():
    metric = BoundaryLengths(1, 1, 1)
    r50, r100 = sweep(ExperimentConfig(metric, L=50, N=50_000, master_seed=1), [50, 100])
    gap_L = abs(r50.scaling.kappa_hat - r100.scaling.kappa_hat)
    tol_L = 4 * (r50.scaling.se_kappa + r100.scaling.se_kappa)
    a = run(ExperimentConfig(metric, L=100, N=50_000, master_seed=1))
    b = run(ExperimentConfig(metric, L=100, N=50_000, master_seed=2))
    gap_s = abs(a.scaling.kappa_hat - b.scaling.kappa_hat)
    tol_s = 4 * (a.scaling.se_kappa + b.scaling.se_kappa)
    record(8, "kappa convergence", gap_L < tol_L and gap_s < tol_s,
           f"|k50 - k100| = {gap_L:.2e} < {tol_L:.2e}; seeds 1 vs 2 at L=100: {gap_s:.2e} < {tol_s:.2e}; "
           f"kappa_hat(100) = {r100.scaling.kappa_hat:.5f}")


def test_ac09_desk_scale_capacity():
    start = time.perf_counter()
    res = run(ExperimentConfig(BoundaryLengths(1, 1, 1), L=100, N=100_000, master_seed=1), workers=1)
    elapsed = time.perf_counter() - start
    record(9, "desk-scale capacity", res.N == 100_000 and elapsed < 60,
           f"N=100000, L=100, metric (1,1,1) in {elapsed:.2f}s (< 60s), single process")


GOLDEN_RUNS = {
    "run_115_L14_enumerated": ["--boundary", "1,1,5", "-L", "14", "--mode", "enumerated", "--bins", "0.5"],
    "run_111_L20_seed3": ["--boundary", "1,1,1", "-L", "20", "-n", "5000", "--seed", "3"],
}


def test_ac10_golden_files(tmp_path, capsys):
    problems = []
    for name, flags in GOLDEN_RUNS.items():
        outputs = []
        for attempt in range(2):
            svg = tmp_path / f"{name}_{attempt}.svg"
            assert main(["run", *flags, "--svg", str(svg)]) == 0
            outputs.append((capsys.readouterr().out.encode(), svg.read_bytes()))
        if outputs[0] != outputs[1]:
            problems.append(f"{name}: reruns differ")
        if outputs[0][0] != (GOLDEN / f"{name}.json").read_bytes():
            problems.append(f"{name}.json differs from golden")
        if outputs[0][1] != (GOLDEN / f"{name}.svg").read_bytes():
            problems.append(f"{name}.svg differs from golden")
    record(10, "determinism golden files", not problems,
           "; ".join(problems) or f"{len(GOLDEN_RUNS)} configs, JSON + SVG byte-identical to tests/golden")
