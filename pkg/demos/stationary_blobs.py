"""Train on a shuffled six-blob stream and inspect the resulting topology.

Run:  python3 demos/stationary_blobs.py
Writes stationary_blobs.png next to this script if matplotlib is available.
"""

import pathlib

import numpy as np

from topostream import StreamClusterer, ari, nmi
from topostream.datagen import NOISE_LABEL, default_benchmark_spec, generate

spec = default_benchmark_spec(seed=0)
xs, ys = generate(spec)
print(f"stream: {len(xs)} points, {len(spec.components)} components + noise")

learner = StreamClusterer().fit(xs)
print(f"learned: {len(learner.net)} nodes, {learner.n_clusters()} clusters, "
      f"active-node budget {learner.lam}, "
      f"vigilance threshold {learner.v_threshold:.4f}")

pred = learner.label_points(xs)
keep = ys != NOISE_LABEL
print(f"NMI {nmi(pred[keep], ys[keep]):.3f}  ARI {ari(pred[keep], ys[keep]):.3f}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("matplotlib not installed; skipping the figure")
else:
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, 5))
    ax1.scatter(xs[:, 0], xs[:, 1], s=2, c=ys, cmap="tab10")
    ax1.set_title("input stream (true components)")

    comp = learner.net.connected_components()
    weights = {nid: n.weight for nid, n in learner.net.nodes.items()}
    for k, l, _ in learner.net.edges():
        wa, wb = weights[k], weights[l]
        ax2.plot([wa[0], wb[0]], [wa[1], wb[1]], "k-", lw=0.5, zorder=1)
    w = np.array(list(weights.values()))
    colors = [comp[nid] for nid in weights]
    ax2.scatter(w[:, 0], w[:, 1], s=14, c=colors, cmap="tab20", zorder=2)
    ax2.set_title(f"learned topology ({len(w)} nodes)")
    for ax in (ax1, ax2):
        ax.set_xlim(0, 1)
        ax.set_ylim(0, 1)
    out = pathlib.Path(__file__).with_name("stationary_blobs.png")
    fig.savefig(out, dpi=130, bbox_inches="tight")
    print(f"wrote {out}")
