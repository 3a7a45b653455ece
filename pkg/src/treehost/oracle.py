"""Exhaustive optimum over all degree-<=3 host trees on small vertex sets.

The feasible hosts are exactly the labeled trees with maximum degree 3 (root
any such tree at a leaf and every node has at most two children).  They are
enumerated through Prüfer sequences in which no label occurs more than twice;
each qualifying sequence decodes to a distinct tree and vice versa.

``opt_cost`` scans every host.  For n <= 9 a cached bank of all-pairs
distances (one int8 row per host) turns each instance into a single
vectorized sum+argmin; n = 10 falls back to streaming chunks and is slow but
exact.  Anything larger is rejected.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .cost import evaluate
from .model import DemandTree, HostTree, ResourceCapError, UnrootedTree, root_at

MAX_N = 10
BANK_MAX_N = 9
_CHUNK = 1 << 18
_INF = 100


def _decode_prufer(seq: list[int], n: int) -> list[tuple[int, int]]:
    """Edges of the tree encoded by a Prüfer sequence (smallest-leaf rule)."""
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if deg[v] == 1)
        edges.append((leaf, x))
        deg[leaf] -= 1
        deg[x] -= 1
    u, v = (v for v in range(n) if deg[v] == 1)
    edges.append((u, v))
    return edges


def enumerate_hosts(n: int) -> Iterator[list[tuple[int, int]]]:
    """Yield every labeled tree on 0..n-1 with maximum degree <= 3.

    Trees come out as edge lists, one per qualifying Prüfer sequence in
    lexicographic order, each exactly once.
    """
    if n > MAX_N:
        raise ResourceCapError(f"host enumeration capped at n={MAX_N}, got {n}")
    if n < 2:
        raise ValueError("host enumeration needs n >= 2")
    if n == 2:
        yield [(0, 1)]
        return
    seq = [0] * (n - 2)
    counts = [0] * n

    def rec(pos: int) -> Iterator[list[tuple[int, int]]]:
        if pos == n - 2:
            yield _decode_prufer(seq, n)
            return
        for label in range(n):
            if counts[label] == 2:
                continue
            counts[label] += 1
            seq[pos] = label
            yield from rec(pos + 1)
            counts[label] -= 1

    yield from rec(0)


def _pair_columns(n: int) -> tuple[np.ndarray, np.ndarray]:
    iu, iv = np.triu_indices(n, k=1)
    return iu.astype(np.int64), iv.astype(np.int64)


def _pair_index(u: int, v: int, n: int) -> int:
    if u > v:
        u, v = v, u
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def _seq_chunk(start: int, stop: int, n: int) -> np.ndarray:
    """Sequences with indices [start, stop) in lexicographic order."""
    idx = np.arange(start, stop, dtype=np.int64)
    k = n - 2
    seqs = np.empty((stop - start, k), dtype=np.int8)
    for pos in range(k - 1, -1, -1):
        seqs[:, pos] = idx % n
        idx //= n
    return seqs


def _label_counts(seqs: np.ndarray, n: int) -> np.ndarray:
    """Occurrences of each label per sequence row, shape (m, n) int8."""
    return (seqs[:, :, None] == np.arange(n, dtype=np.int8)).sum(
        axis=1, dtype=np.int8)


def _decode_chunk(seqs: np.ndarray, counts: np.ndarray, n: int) -> np.ndarray:
    """Vectorized Prüfer decode: (m, n-1, 2) edge array per row."""
    m = seqs.shape[0]
    rows = np.arange(m)
    deg = counts + 1
    labels = np.arange(n, dtype=np.int8)
    big = np.int8(n)
    edges = np.empty((m, n - 1, 2), dtype=np.int8)
    for t in range(n - 2):
        leaf = np.where(deg == 1, labels, big).min(axis=1)
        other = seqs[:, t]
        edges[:, t, 0] = leaf
        edges[:, t, 1] = other
        deg[rows, leaf.astype(np.int64)] -= 1
        deg[rows, other.astype(np.int64)] -= 1
    is_leaf = deg == 1
    first = is_leaf.argmax(axis=1)
    is_leaf[rows, first] = False
    second = is_leaf.argmax(axis=1)
    edges[:, n - 2, 0] = first
    edges[:, n - 2, 1] = second
    return edges


def _all_pairs_dist(edges: np.ndarray, n: int) -> np.ndarray:
    """Per-host distance matrices via batched Floyd-Warshall (int16)."""
    m = edges.shape[0]
    rows = np.arange(m)
    dist = np.full((m, n, n), _INF, dtype=np.int16)
    diag = np.arange(n)
    dist[:, diag, diag] = 0
    for t in range(n - 1):
        u = edges[:, t, 0].astype(np.int64)
        v = edges[:, t, 1].astype(np.int64)
        dist[rows, u, v] = 1
        dist[rows, v, u] = 1
    for k in range(n):
        np.minimum(dist, dist[:, :, k, None] + dist[:, None, k, :], out=dist)
    return dist


@dataclass
class _HostBank:
    n: int
    seqs: np.ndarray        # (M, n-2) int8, lexicographic order
    pair_dists: np.ndarray  # (M, n*(n-1)//2) int8

    @property
    def count(self) -> int:
        return self.seqs.shape[0]


@lru_cache(maxsize=None)
def _bank(n: int) -> _HostBank:
    iu, iv = _pair_columns(n)
    total = n ** (n - 2)
    seq_blocks = []
    dist_blocks = []
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        seqs = _seq_chunk(start, stop, n)
        counts = _label_counts(seqs, n)
        keep = (counts <= 2).all(axis=1)
        seqs = seqs[keep]
        if not seqs.shape[0]:
            continue
        edges = _decode_chunk(seqs, counts[keep], n)
        dist = _all_pairs_dist(edges, n)
        seq_blocks.append(seqs)
        dist_blocks.append(dist[:, iu, iv].astype(np.int8))
    return _HostBank(n, np.concatenate(seq_blocks),
                     np.concatenate(dist_blocks))


def _host_from_edges(edges: list[tuple[int, int]], n: int,
                     labels: list[str] | None) -> HostTree:
    """Root a degree-<=3 tree at its smallest leaf to get a binary host."""
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    root = min(v for v in range(n) if deg[v] == 1) if n > 1 else 0
    rooted = root_at(UnrootedTree.from_edges(edges, n=n, labels=labels), root)
    host = HostTree.empty(n, root)
    for u, w in rooted.edges():
        host.link(u, w)
    return host


def _demand_pair_cols(demand: DemandTree) -> np.ndarray:
    n = demand.n
    return np.asarray([_pair_index(u, v, n) for u, v in demand.edges()],
                      dtype=np.int64)


def opt_cost(demand: DemandTree) -> tuple[int, HostTree]:
    """Exact minimum cost over all binary hosts on V(G), plus one argmin host.

    Deterministic: returns the first minimum in enumeration order.
    """
    n = demand.n
    if n > MAX_N:
        raise ResourceCapError(
            f"exhaustive optimum capped at n={MAX_N}, got {n}")
    if n == 1:
        return 0, _host_from_edges([], 1, demand.labels)
    if n == 2:
        return 1, _host_from_edges([(0, 1)], 2, demand.labels)

    if n <= BANK_MAX_N:
        bank = _bank(n)
        cols = _demand_pair_cols(demand)
        costs = bank.pair_dists[:, cols].sum(axis=1, dtype=np.int32)
        best = int(costs.argmin())
        opt = int(costs[best])
        edges = _decode_prufer(bank.seqs[best].tolist(), n)
    else:
        cols = np.asarray(list(demand.edges()), dtype=np.int64)
        total = n ** (n - 2)
        opt = None
        best_seq = None
        for start in range(0, total, _CHUNK):
            stop = min(start + _CHUNK, total)
            seqs = _seq_chunk(start, stop, n)
            counts = _label_counts(seqs, n)
            keep = (counts <= 2).all(axis=1)
            seqs = seqs[keep]
            if not seqs.shape[0]:
                continue
            dist = _all_pairs_dist(_decode_chunk(seqs, counts[keep], n), n)
            costs = dist[:, cols[:, 0], cols[:, 1]].sum(axis=1, dtype=np.int32)
            i = int(costs.argmin())
            if opt is None or costs[i] < opt:
                opt = int(costs[i])
                best_seq = seqs[i].tolist()
        assert opt is not None and best_seq is not None
        edges = _decode_prufer(best_seq, n)

    host = _host_from_edges(edges, n, demand.labels)
    breakdown = evaluate(demand, host)
    assert breakdown.total == opt, "argmin host disagrees with scanned cost"
    return opt, host
