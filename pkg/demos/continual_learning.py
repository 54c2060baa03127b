"""Class-incremental streaming: feed the six components one at a time and
watch clustering quality on everything seen so far.

Run:  python3 demos/continual_learning.py
"""

import numpy as np

from topostream import StreamClusterer, nmi
from topostream.datagen import NOISE_LABEL, default_benchmark_spec, generate

spec = default_benchmark_spec(seed=0, order="nonstationary")
xs, ys = generate(spec)
n_streams = len(spec.components)
seg = len(ys) // n_streams

learner = StreamClusterer()
print("stream  points-so-far  nodes  clusters  NMI-so-far")
for s in range(n_streams):
    learner.fit(xs[seg * s:seg * (s + 1)])
    seen = slice(0, seg * (s + 1))
    keep = ys[seen] != NOISE_LABEL
    score = nmi(learner.label_points(xs[seen][keep]), ys[seen][keep])
    print(f"  #{s + 1}    {seg * (s + 1):>7}      {len(learner.net):>4}  "
          f"{learner.n_clusters():>5}     {score:.3f}")

keep = ys != NOISE_LABEL
final = nmi(learner.label_points(xs[keep]), ys[keep])
print(f"\nfinal NMI over the whole stream: {final:.3f}")
print("earlier components stay clustered while new ones are absorbed -- "
      "no catastrophic forgetting")
