"""
Building the pair of pants from three boundary lengths
======================================================

A hyperbolic pair of pants is pinned down by the lengths (A, B, C) of its
three boundary curves.  We turn those lengths into two matrices a, b in
SL(2, R) and check that the geodesics for a, b and ab come back with the
lengths we asked for.
"""
import numpy as np

from pants_spectrum import (
    BoundaryLengths,
    fenchel_params,
    geodesic_length,
    half_traces,
    parse_word,
    representation,
)

metric = BoundaryLengths(1.0, 1.0, 5.0)

# half traces x = cosh(A/2) etc; everything downstream is built from these
ht = half_traces(metric)
print("half traces:", ht)

# the three Fenchel parameters must come out ordered 0 < alpha < 1 < beta < gamma
fp = fenchel_params(ht)
print("fenchel parameters:", fp, "ordered:", fp.satisfies_ordering())

rep = representation(metric)
print("a =\n", rep.mat_a)
print("b =\n", rep.mat_b)

# trace(ab) is negative for this normalisation; only its absolute value matters
print("trace(ab)/2 =", rep.signed_trace_ab() / 2, " -cosh(C/2) =", -np.cosh(2.5))

for text, target in (("a", metric.A), ("b", metric.B), ("ab", metric.C)):
    got = geodesic_length(parse_word(text), rep).value
    print(f"length({text}) = {got:.12f}   target {target}")

# the same identities hold for lopsided metrics too, where gamma gets large
for m in [(0.1, 1.0, 10.0), (12.0, 0.05, 3.0)]:
    rep = representation(m)
    errs = [geodesic_length(parse_word(t), rep).value / v - 1 for t, v in zip(("a", "b", "ab"), m)]
    print(m, "max rel err", max(map(abs, errs)))
