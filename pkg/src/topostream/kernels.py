"""Gaussian-kernel similarity math: correntropy-induced metric and bandwidth estimation."""

import numpy as np

# Fallback bandwidth when every attribute of the sample is constant.
SIGMA_MIN = 1e-6


def gaussian_kernel(x, y, sigma):
    """Scalar Gaussian kernel exp(-(x - y)^2 / (2 sigma^2)), in (0, 1].

    Note the kernel carries no 1/(sqrt(2 pi) sigma) coefficient, so the
    derived metric stays inside [0, 1].
    """
    if not (np.isfinite(x) and np.isfinite(y)):
        raise ValueError("non-finite kernel input")
    if not (np.isfinite(sigma) and sigma > 0):
        raise ValueError(f"bandwidth must be positive and finite, got {sigma}")
    d = x - y
    return float(np.exp(-(d * d) / (2.0 * sigma * sigma)))


def cim(x, y, sigma):
    """Correntropy-induced metric between two vectors, in [0, 1].

    CIM(x, y, sigma) = sqrt(1 - mean_i k_sigma(x_i, y_i)).  Zero iff x == y;
    approaches 1 as the points move far apart relative to sigma.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise ValueError(f"dimension mismatch: {x.shape} vs {y.shape}")
    if not (np.isfinite(x).all() and np.isfinite(y).all()):
        raise ValueError("non-finite input vector")
    if not (np.isfinite(sigma) and sigma > 0):
        raise ValueError(f"bandwidth must be positive and finite, got {sigma}")
    d = x - y
    c = np.mean(np.exp(-(d * d) / (2.0 * sigma * sigma)))
    return float(np.sqrt(max(0.0, 1.0 - c)))


def cim_to_many(x, weights, sigma):
    """CIM from one vector to each row of ``weights``; returns a 1-D array."""
    x = np.asarray(x, dtype=float)
    d = weights - x
    c = np.mean(np.exp(-(d * d) / (2.0 * sigma * sigma)), axis=1)
    return np.sqrt(np.maximum(0.0, 1.0 - c))


def estimate_bandwidth(samples):
    """Silverman-style plug-in bandwidth from a set of sample vectors.

    Per-attribute bandwidths H = (4 / (2 + d))^(1 / (4 + d)) * std * n^(-1 / (4 + d)),
    using the population standard deviation of each attribute; the returned
    scalar bandwidth is median(H).  Degenerate (all-identical) samples fall
    back to SIGMA_MIN so downstream kernels stay defined.
    """
    samples = np.atleast_2d(np.asarray(samples, dtype=float))
    if samples.size == 0:
        raise ValueError("empty sample list")
    n, d = samples.shape
    gamma = np.std(samples, axis=0)
    # constant attributes must yield an exactly-zero spread despite fp noise
    gamma[samples.max(axis=0) == samples.min(axis=0)] = 0.0
    h = (4.0 / (2.0 + d)) ** (1.0 / (4.0 + d)) * gamma * n ** (-1.0 / (4.0 + d))
    sigma = float(np.median(h))
    if sigma <= 0.0:
        return SIGMA_MIN
    return sigma
