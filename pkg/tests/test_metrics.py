import itertools
import math

import numpy as np
import pytest

from topostream.metrics import ari, nmi


def oracle_nmi(a, b):
    """Independent contingency-table computation with explicit loops."""
    n = len(a)
    ua, ub = sorted(set(a)), sorted(set(b))
    table = {(i, j): 0 for i in ua for j in ub}
    for x, y in zip(a, b):
        table[(x, y)] += 1
    row = {i: sum(table[(i, j)] for j in ub) for i in ua}
    col = {j: sum(table[(i, j)] for i in ua) for j in ub}
    hu = -sum((c / n) * math.log(c / n) for c in row.values() if c)
    hv = -sum((c / n) * math.log(c / n) for c in col.values() if c)
    if hu == 0.0 and hv == 0.0:
        return 1.0
    if hu == 0.0 or hv == 0.0:
        return 0.0
    mi = 0.0
    for i in ua:
        for j in ub:
            nij = table[(i, j)]
            if nij:
                mi += (nij / n) * math.log(n * nij / (row[i] * col[j]))
    return mi / math.sqrt(hu * hv)


def oracle_ari(a, b):
    """Pair-counting over all C(n, 2) pairs."""
    n = len(a)
    ss = sd = ds = dd = 0
    for i, j in itertools.combinations(range(n), 2):
        same_a = a[i] == a[j]
        same_b = b[i] == b[j]
        if same_a and same_b:
            ss += 1
        elif same_a:
            sd += 1
        elif same_b:
            ds += 1
        else:
            dd += 1
    total = n * (n - 1) / 2
    index = ss
    expected = (ss + sd) * (ss + ds) / total
    maximum = ((ss + sd) + (ss + ds)) / 2
    if maximum == expected:
        return 1.0
    return (index - expected) / (maximum - expected)


class TestNmi:
    def test_identical(self):
        assert nmi([0, 0, 1, 1], [5, 5, 9, 9]) == pytest.approx(1.0, abs=1e-9)

    def test_single_cluster_vs_multiclass(self):
        assert nmi([0, 0, 0, 0], [0, 0, 1, 1]) == 0.0

    def test_both_single_cluster(self):
        assert nmi([3, 3, 3], [7, 7, 7]) == 1.0

    def test_hand_built_contingency(self):
        a, b = [0, 0, 1, 1], [0, 0, 0, 1]
        assert nmi(a, b) == pytest.approx(oracle_nmi(a, b), abs=1e-9)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            nmi([0, 1], [0, 1, 2])


class TestAri:
    def test_identical(self):
        assert ari([0, 0, 1, 1], [5, 5, 9, 9]) == 1.0

    def test_one_cluster_vs_balanced(self):
        assert ari([0, 0, 0, 0], [0, 0, 1, 1]) == pytest.approx(0.0, abs=1e-12)

    def test_pair_counting_oracle_40_points(self):
        rng = np.random.default_rng(8)
        a = rng.integers(0, 4, size=40)
        b = rng.integers(0, 3, size=40)
        assert ari(a, b) == pytest.approx(oracle_ari(list(a), list(b)), abs=1e-9)

    def test_too_few_points(self):
        with pytest.raises(ValueError):
            ari([0], [0])


class TestProperties:
    @pytest.mark.parametrize("seed", range(20))
    def test_match_oracles_random(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(2, 51))
        a = list(rng.integers(0, 5, size=n))
        b = list(rng.integers(0, 5, size=n))
        assert nmi(a, b) == pytest.approx(oracle_nmi(a, b), abs=1e-9)
        assert ari(a, b) == pytest.approx(oracle_ari(a, b), abs=1e-9)

    def test_symmetry(self):
        rng = np.random.default_rng(1)
        a = rng.integers(0, 4, size=30)
        b = rng.integers(0, 4, size=30)
        assert nmi(a, b) == pytest.approx(nmi(b, a), abs=1e-12)
        assert ari(a, b) == pytest.approx(ari(b, a), abs=1e-12)

    def test_permutation_invariance(self):
        rng = np.random.default_rng(2)
        a = rng.integers(0, 4, size=30)
        b = rng.integers(0, 4, size=30)
        remap = {0: 17, 1: -3, 2: 99, 3: 0}
        a2 = np.array([remap[v] for v in a])
        assert nmi(a2, b) == pytest.approx(nmi(a, b), abs=1e-12)
        assert ari(a2, b) == pytest.approx(ari(a, b), abs=1e-12)
