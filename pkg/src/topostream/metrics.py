"""External clustering-quality indices computed from the contingency table."""

import numpy as np


def _contingency(a, b):
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.shape} vs {b.shape}")
    if a.size == 0:
        raise ValueError("empty labelings")
    _, ai = np.unique(a, return_inverse=True)
    _, bi = np.unique(b, return_inverse=True)
    table = np.zeros((ai.max() + 1, bi.max() + 1), dtype=np.int64)
    np.add.at(table, (ai, bi), 1)
    return table


def _entropy(counts, n):
    p = counts[counts > 0] / n
    return float(-np.sum(p * np.log(p)))


def nmi(predicted, truth):
    """Normalized mutual information with geometric-mean normalization.

    Conventions for degenerate partitions: 1.0 when both labelings are a
    single identical cluster, 0.0 when either side carries no information
    and the partitions differ.
    """
    table = _contingency(predicted, truth)
    n = table.sum()
    row = table.sum(axis=1)
    col = table.sum(axis=0)
    hu = _entropy(row, n)
    hv = _entropy(col, n)
    if hu == 0.0 and hv == 0.0:
        return 1.0
    if hu == 0.0 or hv == 0.0:
        return 0.0
    nz = table > 0
    p = table[nz] / n
    mi = float(np.sum(p * (np.log(n * table[nz]) - np.log(np.outer(row, col)[nz]))))
    return mi / np.sqrt(hu * hv)


def ari(predicted, truth):
    """Adjusted Rand index via pair counting on the contingency table."""
    table = _contingency(predicted, truth)
    n = int(table.sum())
    if n < 2:
        raise ValueError("need at least 2 points")

    def comb2(x):
        return x * (x - 1) / 2.0

    sum_ij = comb2(table.astype(float)).sum()
    sum_a = comb2(table.sum(axis=1).astype(float)).sum()
    sum_b = comb2(table.sum(axis=0).astype(float)).sum()
    total = comb2(float(n))
    expected = sum_a * sum_b / total
    maximum = (sum_a + sum_b) / 2.0
    if maximum == expected:
        return 1.0
    return float((sum_ij - expected) / (maximum - expected))
