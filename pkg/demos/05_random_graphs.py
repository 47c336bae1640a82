"""
The index of a random graph
===========================

For G(n, 1/2) the index tends to sit near 2 - p = 3/2. The experiment only
reports what it sees.
"""

import numpy as np

from curvex.census import gnp_experiment

sample = gnp_experiment(30, "1/2", 200, seed=2024)
values = np.array([float(i) for i in sample.indices])
print("median %.4f, mean %.4f, std %.4f" % (np.median(values), values.mean(), values.std()))
print("diameter <= 2 in %.1f%% of samples" % (100 * sample.diam2_fraction))
print("within 0.1 of 3/2: %.1f%%" % (100 * sample.near_target_fraction))

# a handful of diameter-3 samples land far away; bin only the bulk
inside = (values >= 1) & (values <= 2)
print("%d samples outside [1, 2], largest %.2f" % ((~inside).sum(), values.max()))
hist, edges = np.histogram(values[inside], bins=20, range=(1, 2))
for count, lo in zip(hist, edges):
    print("%5.2f %s" % (lo, "#" * count))
