"""A tour of the building blocks: the kernel-induced metric, the bandwidth
rule, and the determinant-based diversity signal that makes the learner
parameter-free.

Run:  python3 demos/similarity_math.py
"""

import numpy as np

from topostream import StreamClusterer, cim, diversity, estimate_bandwidth

# 1. The metric saturates: far points all look "maximally different",
#    which is what gives it outlier tolerance.
print("CIM between [0,0] and [t,t] at sigma=1:")
for t in [0.0, 0.5, 1.0, 2.0, 5.0, 50.0]:
    print(f"  t={t:>5}: {cim([0, 0], [t, t], 1.0):.4f}")

# 2. The bandwidth rule adapts to sample spread and count.
rng = np.random.default_rng(0)
for n in [10, 100, 1000]:
    tight = rng.normal(0, 0.05, size=(n, 2))
    wide = rng.normal(0, 0.50, size=(n, 2))
    print(f"n={n:>4}: sigma tight={estimate_bandwidth(tight):.4f}  "
          f"wide={estimate_bandwidth(wide):.4f}")

# 3. The diversity determinant collapses as soon as prototypes crowd
#    together; that collapse is what fixes the learner's budget.
spread = rng.uniform(0, 1, size=(6, 2))
crowded = np.vstack([spread, spread[0] + 1e-9])
sigma = estimate_bandwidth(spread)
print(f"\ndiversity of 6 spread prototypes:      {diversity(spread, sigma):.3e}")
print(f"diversity after adding a near-duplicate: "
      f"{diversity(crowded, sigma):.3e}")

# 4. Watch the budget lock in on a live stream.
learner = StreamClusterer()
stream = rng.normal([0.3, 0.7], 0.03, size=(500, 2))
for i, x in enumerate(stream):
    learner.train_point(x)
    if learner.lam is not None:
        print(f"\nbudget locked after {i + 1} points: "
              f"lambda={learner.lam}, "
              f"vigilance threshold={learner.v_threshold:.4f}")
        break
