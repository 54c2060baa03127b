"""Parameter-free streaming topological clusterer.

The learner bootstraps itself: early points become nodes directly until the
determinant of their pairwise-similarity matrix collapses (the node set has
stopped being diverse), which fixes the active-node budget and the vigilance
threshold.  From then on each point either spawns a node, nudges its nearest
node, or additionally links the two nearest nodes, while an adaptive age
threshold prunes stale edges.
"""

import numpy as np

from .kernels import cim, cim_to_many, estimate_bandwidth
from .network import TopoNetwork

DIVERSITY_EPS = 1e-6

CASE_I = 1
CASE_II = 2
CASE_III = 3


def diversity(weights, sigma):
    """Determinant of R with R_ij = exp(1 - CIM(w_i, w_j, sigma)).

    Near-duplicate rows drive the determinant to zero, signalling that the
    node set has stopped gaining diversity.  Computed via slogdet so large
    networks cannot overflow.
    """
    weights = np.atleast_2d(np.asarray(weights, dtype=float))
    n = weights.shape[0]
    r = np.empty((n, n))
    for i in range(n):
        r[i, :] = np.exp(1.0 - cim_to_many(weights[i], weights, sigma))
    sign, logdet = np.linalg.slogdet(r)
    if sign == 0.0:
        return 0.0
    with np.errstate(over="ignore"):
        return float(sign * np.exp(logdet))


def vigilance_case(v_s1, v_s2, v_threshold):
    """Three-way vigilance outcome; v_s2 is None for a single-node network."""
    if v_threshold < v_s1:
        return CASE_I
    if v_s2 is None or v_threshold < v_s2:
        return CASE_II
    return CASE_III


def estimate_edge_threshold(alpha, deleted_count, deleted_mean):
    """Adaptive edge-age cutoff blending current ages with deletion history.

    a_thr = P75(alpha) + IQR(alpha); the cutoff is the deletion-history mean
    and a_thr weighted by their sample counts.  Percentiles interpolate
    linearly at fractional rank p * (n - 1).
    """
    alpha = np.asarray(alpha, dtype=float)
    if alpha.size == 0:
        raise ValueError("no incident edges")
    p25, p75 = np.percentile(alpha, [25.0, 75.0])
    a_thr = p75 + (p75 - p25)
    w = deleted_count / (deleted_count + alpha.size)
    return float(deleted_mean * w + a_thr * (1.0 - w))


class DeletedEdgeStats:
    """Running count and mean of the ages of every edge ever deleted."""

    def __init__(self, count=0, mean_age=0.0):
        self.count = count
        self.mean_age = mean_age

    def record(self, age):
        self.count += 1
        self.mean_age += (age - self.mean_age) / self.count


class ActiveNodeSet:
    """Recency buffer of node ids with a fixed capacity.

    Re-adding a member refreshes its recency without evicting anyone; a
    genuinely new id evicts the oldest entry once the buffer is full.
    """

    def __init__(self, capacity):
        self.capacity = capacity
        self.entries = []

    def __len__(self):
        return len(self.entries)

    def __contains__(self, nid):
        return nid in self.entries

    def add(self, nid):
        if nid in self.entries:
            self.entries.remove(nid)
            self.entries.append(nid)
            return
        self.entries.append(nid)
        if len(self.entries) > self.capacity:
            self.entries.pop(0)

    def discard(self, nid):
        if nid in self.entries:
            self.entries.remove(nid)


class StreamClusterer:
    """Online topological clustering with no user-tuned parameters.

    Feed points one at a time with :meth:`train_point` (or in bulk with
    :meth:`fit`); read clusters back with :meth:`label_points`.  Training is
    deterministic: the same point sequence always yields the same state.
    """

    def __init__(self, dimension=None):
        self.net = TopoNetwork()
        self.active = None
        self.lam = None
        self.v_threshold = None
        self.deleted_stats = DeletedEdgeStats()
        self.presented_count = 0
        self.dimension = dimension

    # -- derived quantities -------------------------------------------------

    def _mean_sigma(self):
        return float(np.mean([n.sigma for n in self.net.nodes.values()]))

    def _all_weights(self):
        return np.array([n.weight for n in self.net.nodes.values()])

    def _node_ids(self):
        return list(self.net.nodes)

    def compute_similarity_threshold(self):
        """Mean over active nodes of the minimum CIM to any other active node."""
        ids = self.active.entries
        if len(ids) < 2:
            raise ValueError("need at least 2 active nodes")
        weights = np.array([self.net.nodes[i].weight for i in ids])
        sigma = float(np.mean([self.net.nodes[i].sigma for i in ids]))
        minima = []
        for i in range(len(ids)):
            vals = cim_to_many(weights[i], weights, sigma)
            vals[i] = np.inf
            minima.append(float(vals.min()))
        return float(np.mean(minima))

    def select_winners(self, x):
        """First and second winner ids and their CIM values; ties go to the
        lower id, and the runner-up is None for a single-node network."""
        if len(self.net) == 0:
            raise ValueError("empty network")
        ids = self._node_ids()
        vals = cim_to_many(x, self._all_weights(), self._mean_sigma())
        i1 = int(np.argmin(vals))
        s1, v_s1 = ids[i1], float(vals[i1])
        if len(ids) == 1:
            return s1, v_s1, None, None
        vals[i1] = np.inf
        i2 = int(np.argmin(vals))
        return s1, v_s1, ids[i2], float(vals[i2])

    # -- learning steps -----------------------------------------------------

    def estimate_lambda(self):
        """Re-derive the active-node budget from current node diversity.

        When the diversity determinant drops below DIVERSITY_EPS the budget
        locks to twice the node count, every node receives the common
        bandwidth, the active set is seeded with all nodes, and the
        vigilance threshold is computed.  Otherwise the budget stays open.
        """
        weights = self._all_weights()
        sigma = estimate_bandwidth(weights)
        d = diversity(weights, sigma)
        if abs(d) < DIVERSITY_EPS:
            self.lam = 2 * len(self.net)
            for node in self.net.nodes.values():
                node.sigma = sigma
            self.active = ActiveNodeSet(self.lam)
            for nid in self._node_ids():
                self.active.add(nid)
            self.v_threshold = self.compute_similarity_threshold()
        else:
            self.lam = None
            self.v_threshold = None

    def _apply_case(self, x, s1, s2, case):
        if case == CASE_I:
            active_weights = [self.net.nodes[i].weight for i in self.active.entries]
            sigma = estimate_bandwidth(active_weights)
            nid = self.net.add_node(x, sigma)
            self.active.add(nid)
            return
        node = self.net.nodes[s1]
        node.win_count += 1
        node.weight = node.weight + (x - node.weight) / node.win_count
        self.active.add(s1)
        self.net.increment_edge_ages(s1)
        if case == CASE_III:
            for k in sorted(self.net.neighbors(s1)):
                nk = self.net.nodes[k]
                nk.weight = nk.weight + (x - nk.weight) / (10.0 * nk.win_count)
            self.net.set_edge(s1, s2)

    def delete_over_age_edges(self, s1, a_max):
        """Drop every edge at s1 strictly older than a_max; returns the count."""
        deleted = 0
        for k in sorted(self.net.neighbors(s1)):
            if self.net.edge_age(s1, k) > a_max:
                age = self.net.delete_edge(s1, k)
                self.deleted_stats.record(age)
                deleted += 1
        return deleted

    def train_point(self, x):
        """Consume one point of the stream."""
        x = np.asarray(x, dtype=float)
        if not np.isfinite(x).all():
            raise ValueError("non-finite data point")
        if self.dimension is None:
            self.dimension = x.shape[0]
        elif x.shape[0] != self.dimension:
            raise ValueError(f"dimension mismatch: {x.shape[0]} vs {self.dimension}")
        self.presented_count += 1

        if self.lam is None or len(self.net) < self.lam / 2 or self.v_threshold is None:
            # Bootstrap: the point becomes a node outright.  Bandwidths are
            # provisional until the budget locks and assigns a common one.
            sigma = self._mean_sigma() if len(self.net) else 1.0
            self.net.add_node(x, sigma)
            self.estimate_lambda()
        else:
            s1, v_s1, s2, v_s2 = self.select_winners(x)
            case = vigilance_case(v_s1, v_s2, self.v_threshold)
            self._apply_case(x, s1, s2, case)
            alpha = self.net.incident_ages(s1)
            if alpha:
                a_max = estimate_edge_threshold(
                    alpha, self.deleted_stats.count, self.deleted_stats.mean_age
                )
                self.delete_over_age_edges(s1, a_max)

        if self.lam is not None and self.presented_count % self.lam == 0:
            for nid in self.net.delete_isolated_nodes():
                if self.active is not None:
                    self.active.discard(nid)

    def fit(self, xs):
        """Train on an iterable of points, in order."""
        for x in xs:
            self.train_point(x)
        return self

    # -- inference ----------------------------------------------------------

    def label_points(self, xs):
        """Cluster label for each point: the connected-component label of its
        nearest node under CIM."""
        if len(self.net) == 0:
            raise ValueError("empty network")
        xs = np.atleast_2d(np.asarray(xs, dtype=float))
        ids = self._node_ids()
        weights = self._all_weights()
        sigma = self._mean_sigma()
        comp = self.net.connected_components()
        labels = np.empty(xs.shape[0], dtype=int)
        for i, x in enumerate(xs):
            vals = cim_to_many(x, weights, sigma)
            labels[i] = comp[ids[int(np.argmin(vals))]]
        return labels

    def n_clusters(self):
        return len(set(self.net.connected_components().values()))
