"""
Uniform over strings or uniform over classes?
=============================================

Sampled mode draws cyclically reduced strings uniformly, so a class with
period p (the number of distinct rotations) is drawn with weight p.
Enumerated mode lists each class once.  Only classes that are proper
powers have p < L, and they are rare, so the two populations barely differ.
Here we weigh the exact L = 14 spectrum both ways.
"""
import numpy as np

from pants_spectrum import batch_lengths, enumerate_class_codes, representation, summarize

L = 14
codes = enumerate_class_codes(L)

# period of each class: the least d dividing L with the word equal to its rotation by d
period = np.full(len(codes), L)
for d in sorted(d for d in range(1, L) if L % d == 0)[::-1]:
    same = np.all(codes == np.roll(codes, -d, axis=1), axis=1)
    period[same] = d
print("classes:", len(codes), " strings:", period.sum(), " proper powers:", np.count_nonzero(period < L))

for metric in [(1, 1, 1), (1, 1, 5)]:
    lengths = batch_lengths(codes, representation(metric))
    by_class = summarize(lengths)
    w = period / period.sum()
    mean_s = float(np.dot(w, lengths))
    std_s = float(np.sqrt(np.dot(w, (lengths - mean_s) ** 2)))
    print(metric, f"mean {by_class.mean:.6f} (classes) vs {mean_s:.6f} (strings); "
          f"std {by_class.sample_std:.6f} vs {std_s:.6f}")
