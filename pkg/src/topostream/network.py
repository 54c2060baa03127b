"""Topological network: prototype nodes joined by undirected, aged edges."""

from dataclasses import dataclass

import numpy as np


@dataclass
class Node:
    """A prototype vector with its winning count and kernel bandwidth."""

    id: int
    weight: np.ndarray
    win_count: int
    sigma: float


class TopoNetwork:
    """Undirected graph of prototype nodes with integer edge ages.

    Node ids are issued sequentially and never reused, so external
    references (active sets, serialized models) stay valid across
    deletions.  Single writer; concurrent reads are fine between
    mutations.
    """

    def __init__(self):
        self.nodes = {}
        self._ages = {}
        self._adj = {}
        self.next_id = 0

    def __len__(self):
        return len(self.nodes)

    @property
    def dimension(self):
        for node in self.nodes.values():
            return node.weight.shape[0]
        return None

    def add_node(self, weight, sigma):
        weight = np.asarray(weight, dtype=float)
        if not np.isfinite(weight).all():
            raise ValueError("non-finite node weight")
        dim = self.dimension
        if dim is not None and weight.shape[0] != dim:
            raise ValueError(f"dimension mismatch: {weight.shape[0]} vs {dim}")
        nid = self.next_id
        self.next_id += 1
        self.nodes[nid] = Node(id=nid, weight=weight.copy(), win_count=1, sigma=sigma)
        self._adj[nid] = set()
        return nid

    def _check(self, k):
        if k not in self.nodes:
            raise KeyError(f"unknown node id {k}")

    def neighbors(self, k):
        self._check(k)
        return set(self._adj[k])

    @staticmethod
    def _key(k, l):
        return (k, l) if k < l else (l, k)

    def set_edge(self, k, l):
        """Create the edge (k, l) or reset its age to 1 if it already exists."""
        if k == l:
            raise ValueError("self-edges are not allowed")
        self._check(k)
        self._check(l)
        self._ages[self._key(k, l)] = 1
        self._adj[k].add(l)
        self._adj[l].add(k)

    def edge_age(self, k, l):
        key = self._key(k, l)
        if key not in self._ages:
            raise KeyError(f"no edge between {k} and {l}")
        return self._ages[key]

    def increment_edge_ages(self, k):
        """Age every edge incident to k by one; returns [(neighbor, new age)]."""
        self._check(k)
        touched = []
        for l in sorted(self._adj[k]):
            key = self._key(k, l)
            self._ages[key] += 1
            touched.append((l, self._ages[key]))
        return touched

    def delete_edge(self, k, l):
        """Remove the edge (k, l); returns its age at deletion time."""
        key = self._key(k, l)
        if key not in self._ages:
            raise KeyError(f"no edge between {k} and {l}")
        age = self._ages.pop(key)
        self._adj[k].discard(l)
        self._adj[l].discard(k)
        return age

    def edges(self):
        """All edges as (k, l, age) with k < l, sorted."""
        return [(k, l, self._ages[(k, l)]) for (k, l) in sorted(self._ages)]

    def incident_ages(self, k):
        self._check(k)
        return [self._ages[self._key(k, l)] for l in sorted(self._adj[k])]

    def delete_isolated_nodes(self):
        """Drop every node with no incident edges; returns the removed ids."""
        removed = [nid for nid in self.nodes if not self._adj[nid]]
        for nid in removed:
            del self.nodes[nid]
            del self._adj[nid]
        return removed

    def connected_components(self):
        """Map node id -> component label (the smallest id in its component)."""
        labels = {}
        for start in sorted(self.nodes):
            if start in labels:
                continue
            stack = [start]
            members = []
            seen = {start}
            while stack:
                nid = stack.pop()
                members.append(nid)
                for l in self._adj[nid]:
                    if l not in seen:
                        seen.add(l)
                        stack.append(l)
            root = min(members)
            for nid in members:
                labels[nid] = root
        return labels
