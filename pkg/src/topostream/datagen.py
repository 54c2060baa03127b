"""Synthetic 2-D stream generation: shaped components plus uniform noise,
presented shuffled (stationary) or class-by-class (non-stationary)."""

from dataclasses import dataclass

import numpy as np

NOISE_LABEL = -1

SHAPES = ("gaussian-blob", "ring", "rectangle")


@dataclass
class Component:
    """One generating distribution clipped to the unit square.

    scale means: blob -> isotropic std; ring -> (radius, radial std);
    rectangle -> (half width, half height).
    """

    shape: str
    center: tuple
    scale: tuple
    n_points: int

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise ValueError(f"unknown shape {self.shape!r}")
        if self.n_points < 0:
            raise ValueError("negative point count")
        self.center = tuple(float(c) for c in self.center)
        if np.isscalar(self.scale):
            self.scale = (float(self.scale),)
        else:
            self.scale = tuple(float(s) for s in self.scale)


@dataclass
class StreamSpec:
    components: list
    noise_fraction: float = 0.1
    order: str = "stationary"
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.noise_fraction < 1.0:
            raise ValueError("noise_fraction must be in [0, 1)")
        if self.order not in ("stationary", "nonstationary"):
            raise ValueError(f"unknown order {self.order!r}")


def default_benchmark_spec(seed, points_per_component=1500, noise_fraction=0.1,
                           order="stationary"):
    """Six isotropic blobs (std 0.05) on a 3x2 grid with 0.3 spacing."""
    centers = [(0.2, 0.35), (0.5, 0.35), (0.8, 0.35),
               (0.2, 0.65), (0.5, 0.65), (0.8, 0.65)]
    comps = [Component("gaussian-blob", c, (0.05,), points_per_component)
             for c in centers]
    return StreamSpec(comps, noise_fraction=noise_fraction, order=order, seed=seed)


def _sample_component(comp, rng):
    n = comp.n_points
    cx, cy = comp.center
    if comp.shape == "gaussian-blob":
        std = comp.scale[0]
        pts = rng.normal(loc=(cx, cy), scale=std, size=(n, 2))
    elif comp.shape == "ring":
        radius = comp.scale[0]
        rstd = comp.scale[1] if len(comp.scale) > 1 else radius * 0.1
        theta = rng.uniform(0.0, 2.0 * np.pi, size=n)
        r = radius + rng.normal(0.0, rstd, size=n)
        pts = np.column_stack([cx + r * np.cos(theta), cy + r * np.sin(theta)])
    else:  # rectangle
        hw = comp.scale[0]
        hh = comp.scale[1] if len(comp.scale) > 1 else hw
        pts = rng.uniform((cx - hw, cy - hh), (cx + hw, cy + hh), size=(n, 2))
    return np.clip(pts, 0.0, 1.0)


def generate(spec):
    """Produce (points, labels) for a StreamSpec, deterministically per seed.

    Each component contributes its own points plus round(noise_fraction *
    n_points) uniform noise points labelled NOISE_LABEL.  Non-stationary
    order keeps components in listed order (noise interleaved within its
    component's segment); stationary order is one global shuffle.
    """
    rng = np.random.default_rng(spec.seed)
    segments = []
    for label, comp in enumerate(spec.components):
        pts = _sample_component(comp, rng)
        labels = np.full(comp.n_points, label, dtype=int)
        n_noise = int(round(spec.noise_fraction * comp.n_points))
        if n_noise:
            noise = rng.uniform(0.0, 1.0, size=(n_noise, 2))
            pts = np.vstack([pts, noise])
            labels = np.concatenate([labels, np.full(n_noise, NOISE_LABEL, dtype=int)])
        perm = rng.permutation(len(labels))
        segments.append((pts[perm], labels[perm]))

    xs = np.vstack([s[0] for s in segments])
    ys = np.concatenate([s[1] for s in segments])
    if spec.order == "stationary":
        perm = rng.permutation(len(ys))
        xs, ys = xs[perm], ys[perm]
    return xs, ys
