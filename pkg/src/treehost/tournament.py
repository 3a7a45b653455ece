"""Phase 2: remove every steiner node by running knockout matches.

Each steiner node hosts a match between its two children once both are real
vertices.  The child with fewer demand-tree children wins (ties go to the
configured tiebreak); it replaces the steiner node, keeps the loser as its
single child, and the loser inherits the winner's previous subtree.  A vertex
loses at most once, and a match raises only the winner's distances to its own
children, so the total cost increase is bounded by n-1.

Three structural facts hold after phase 1 and survive every rewrite:

  (i)   every steiner node has exactly two children;
  (ii)  each vertex's demand-tree parent stays one of its host ancestors;
  (iii) a vertex that is the child of a steiner node belongs to the bracket
        of its demand parent and has at most one host child.

``check_invariants`` verifies all three on a full tree; ``debug=True`` adds
local checks after every single rewrite.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .model import (DEAD, NONE, DemandTree, HostTree, InvariantViolation,
                    TreeHostError)


def _label_rank(demand: DemandTree, mode: str) -> list[int]:
    """Rank of each vertex under the tiebreak order.

    "lex" sorts labels lexicographically with numeric awareness (all-digit
    labels compare as integers and before non-numeric ones); "id" keeps the
    input id order.  With default labels both coincide.
    """
    n = demand.n
    if mode == "id" or demand.labels is None:
        return list(range(n))
    if mode != "lex":
        raise ValueError(f"unknown tiebreak {mode!r}")

    def sort_key(v: int):
        lbl = demand.labels[v]
        return (0, int(lbl), "") if lbl.isdigit() else (1, 0, lbl)

    rank = [0] * n
    for r, v in enumerate(sorted(range(n), key=sort_key)):
        rank[v] = r
    return rank


def match_keys(demand: DemandTree, tiebreak: str = "lex") -> list[int]:
    """Single-integer match priority per vertex: child count, then tiebreak."""
    n = demand.n
    rank = _label_rank(demand, tiebreak)
    off = demand.child_off
    return [(off[v + 1] - off[v]) * n + rank[v] for v in range(n)]


def _keys_numpy(demand: DemandTree, tiebreak: str) -> np.ndarray:
    n = demand.n
    c = np.diff(demand.np_views()[0])
    if tiebreak == "id" or demand.labels is None:
        if tiebreak not in ("id", "lex"):
            raise ValueError(f"unknown tiebreak {tiebreak!r}")
        rank = np.arange(n, dtype=np.int64)
    else:
        rank = np.asarray(_label_rank(demand, tiebreak), dtype=np.int64)
    return c * n + rank


@dataclass(frozen=True)
class MatchRewrite:
    """Record of one applied match: the removed steiner node, the player
    that advanced, the eliminated player, and the charge c_loser."""

    steiner: int
    winner: int
    loser: int
    charge: int


@dataclass
class TournamentResult:
    """Steiner-free host plus the charge ledger (one entry per match)."""

    host: HostTree
    losers: list[int] = field(default_factory=list)
    charges: list[int] = field(default_factory=list)

    @property
    def total_charge(self) -> int:
        return sum(self.charges)


def _rewrite(host: HostTree, s: int, x: int, y: int) -> None:
    """Apply one match at steiner node s with winner x, loser y."""
    par, left, right = host.parent, host.left, host.right
    q = par[s]
    a = left[x]
    b = left[y]
    if left[q] == s:
        left[q] = x
    else:
        right[q] = x
    par[x] = q
    left[x] = y
    par[y] = x
    if a != NONE:
        left[y] = a
        right[y] = b
        par[a] = y
    par[s] = DEAD
    left[s] = NONE
    right[s] = NONE


def match(host: HostTree, demand: DemandTree, s: int,
          tiebreak: str = "lex", keys: list[int] | None = None) -> MatchRewrite:
    """Apply the single match at steiner node ``s`` in place.

    Requires both children of ``s`` to be demand vertices already (matches
    fire bottom-up within a bracket).
    """
    if not host.is_live(s) or not host.is_steiner(s):
        raise TreeHostError(f"node {s} is not a live steiner node")
    xl, yr = host.left[s], host.right[s]
    if xl == NONE or yr == NONE:
        raise InvariantViolation("(i) steiner-degree",
                                 f"steiner node {s} lacks two children")
    if host.is_steiner(xl) or host.is_steiner(yr):
        raise TreeHostError(
            f"match at {s} not ready: a child is still a steiner node")
    if keys is None:
        keys = match_keys(demand, tiebreak)
    if keys[xl] <= keys[yr]:
        x, y = xl, yr
    else:
        x, y = yr, xl
    _rewrite(host, s, x, y)
    return MatchRewrite(s, x, y, demand.child_count(y))


def _check_after_match(host: HostTree, demand: DemandTree, s: int,
                       x: int, y: int, a: int, b: int, q: int) -> None:
    """Local invariant checks for the region touched by one rewrite."""
    par, left, right = host.parent, host.left, host.right
    if par[s] != DEAD:
        raise InvariantViolation("(i) steiner-degree",
                                 f"steiner {s} still live after its match")
    if par[x] != q or left[x] != y or right[x] != NONE:
        raise InvariantViolation("(iii) single-child",
                                 f"winner {x} not in expected post-match shape")
    expected = (a, b) if a != NONE else (b, NONE)
    if (left[y], right[y]) != expected:
        raise InvariantViolation("(iii) single-child",
                                 f"loser {y} did not inherit children {expected}")
    if q >= 0 and host.is_steiner(q):
        if left[q] == NONE or right[q] == NONE:
            raise InvariantViolation("(i) steiner-degree",
                                     f"parent steiner {q} lost a child")
        if demand.parent[x] != host.owner[q]:
            raise InvariantViolation(
                "(iii) bracket-membership",
                f"vertex {x} advanced into a bracket not owned by its parent")
    # Ancestry: the demand parent of every relocated vertex must still sit
    # above it.  Walks are short because the parent owns the local bracket.
    for v in (x, y, a, b):
        if v == NONE or host.is_steiner(v):
            continue
        target = demand.parent[v]
        if target == NONE:
            continue
        node = par[v]
        while node != NONE and node != target:
            node = par[node]
        if node != target:
            raise InvariantViolation(
                "(ii) ancestry", f"demand parent of {v} is no longer above it")


def _run_numpy(host: HostTree, demand: DemandTree,
               tiebreak: str) -> TournamentResult:
    """Vectorized elimination: replay every bracket analytically.

    The winner of a whole bracket is simply its key-minimal player, and each
    match outcome depends only on static keys, so the final links can be
    assembled layer by layer over all brackets at once.  Produces exactly the
    arrays of the sequential sweep (verified by tests), in O(n) numpy work.
    """
    from .bracket import _bracket_slots

    n = demand.n
    off, flat = demand.np_views()
    c = np.diff(off)
    keys = _keys_numpy(demand, tiebreak)
    total = host.num_nodes()
    par = np.full(total, NONE, dtype=np.int64)
    left = np.full(total, NONE, dtype=np.int64)
    right = np.full(total, NONE, dtype=np.int64)
    if total > n:
        par[n:] = DEAD

    # key-minimal child of every vertex: its host child before it plays,
    # and the eventual winner of its own bracket
    base = np.full(n, NONE, dtype=np.int64)
    has = np.nonzero(c > 0)[0]
    if has.size:
        krank = np.empty(n, dtype=np.int64)
        krank[np.argsort(keys, kind="stable")] = np.arange(n, dtype=np.int64)
        combo = krank[flat] * n + flat
        winners = np.minimum.reduceat(combo, off[has]) % n
        base[has] = winners
        left[has] = winners
        par[winners] = has

    loser_parts: list[np.ndarray] = []
    verts, rep, gs_entry, slot, cc, node, _bases = _bracket_slots(demand)
    if verts.size:
        current = node.copy()
        loser_at = np.full(node.size, NONE, dtype=np.int64)
        int_pos = np.nonzero(slot < cc)[0]
        sdepth = np.frexp(slot[int_pos].astype(np.float64))[1] - 1
        for d in range(int(sdepth.max()), -1, -1):
            pos = int_pos[sdepth == d]
            if not pos.size:
                continue
            pl = gs_entry[pos] + 2 * slot[pos] - 1
            pr = pl + 1
            wl = current[pl]
            wr = current[pr]
            takeleft = keys[wl] <= keys[wr]
            x = np.where(takeleft, wl, wr)
            y = np.where(takeleft, wr, wl)
            px = np.where(takeleft, pl, pr)
            py = np.where(takeleft, pr, pl)
            x_slot = 2 * slot[pos] + np.where(takeleft, 0, 1)
            y_slot = 2 * slot[pos] + np.where(takeleft, 1, 0)
            a = np.where(x_slot < cc[pos], loser_at[px], base[x])
            b = np.where(y_slot < cc[pos], loser_at[py], base[y])
            left[x] = y
            par[y] = x
            got_a = a != NONE
            ya = y[got_a]
            left[ya] = a[got_a]
            right[ya] = b[got_a]
            par[a[got_a]] = ya
            left[y[~got_a]] = b[~got_a]
            got_b = b != NONE
            par[b[got_b]] = y[got_b]
            current[pos] = x
            loser_at[pos] = y
            loser_parts.append(y)

    host.parent = par
    host.left = left
    host.right = right
    if loser_parts:
        losers_arr = np.concatenate(loser_parts)
        losers = losers_arr.tolist()
        charges = c[losers_arr].tolist()
    else:
        losers, charges = [], []
    return TournamentResult(host, losers, charges)


def run_tournament(host: HostTree, demand: DemandTree, tiebreak: str = "lex",
                   debug: bool = False) -> TournamentResult:
    """Eliminate every steiner node of a phase-1 host tree, in place.

    Steiner ids are allocated bracket-by-bracket in heap order, so sweeping
    them in reverse id order fires every match only when both children are
    already vertices.  The win rule depends only on static child counts,
    hence any valid firing order yields this same tree.

    Hosts carrying numpy arrays (large instances) take a vectorized path
    with identical results; ``debug=True`` always uses the sequential sweep
    with per-match checks.
    """
    n = host.n_vertices
    if isinstance(host.parent, np.ndarray):
        untouched = (host.num_nodes() == n
                     or not (host.parent[n:] == DEAD).any())
        if not debug and untouched:
            return _run_numpy(host, demand, tiebreak)
        host.parent = host.parent.tolist()
        host.left = host.left.tolist()
        host.right = host.right.tolist()
        host.owner = host.owner.tolist()
    par, left, right = host.parent, host.left, host.right
    keys = match_keys(demand, tiebreak)
    counts = demand.child_counts()
    losers: list[int] = []
    charges: list[int] = []
    for s in range(len(par) - 1, n - 1, -1):
        if par[s] == DEAD:
            continue
        xl = left[s]
        yr = right[s]
        if debug:
            if xl == NONE or yr == NONE:
                raise InvariantViolation("(i) steiner-degree",
                                         f"steiner {s} lacks two children")
            if host.is_steiner(xl) or host.is_steiner(yr):
                raise TreeHostError(f"match at {s} fired before its children")
            if right[xl] != NONE or right[yr] != NONE:
                raise InvariantViolation("(iii) single-child",
                                         f"player below {s} has two children")
        if keys[xl] <= keys[yr]:
            x, y = xl, yr
        else:
            x, y = yr, xl
        q = par[s]
        a = left[x]
        b = left[y]
        if left[q] == s:
            left[q] = x
        else:
            right[q] = x
        par[x] = q
        left[x] = y
        par[y] = x
        if a != NONE:
            left[y] = a
            right[y] = b
            par[a] = y
        par[s] = DEAD
        left[s] = NONE
        right[s] = NONE
        losers.append(y)
        charges.append(counts[y])
        if debug:
            _check_after_match(host, demand, s, x, y, a, b, q)
    if debug:
        check_invariants(demand, host)
    return TournamentResult(host, losers, charges)


def direct_build(demand: DemandTree, tiebreak: str = "lex") -> HostTree:
    """Build the eliminated tree directly, without materializing steiner nodes.

    Children of each vertex are seeded into their bracket in ascending match
    priority (fewest children first), then the matches are replayed locally.
    Same rewrite semantics as :func:`run_tournament`, but the seeding differs
    from the input-order brackets of phase 1, so the resulting tree (and
    occasionally its cost) may differ from the simulated pipeline; it obeys
    the same per-match charge bounds.
    """
    n = demand.n
    keys = match_keys(demand, tiebreak)
    par = [NONE] * n
    left = [NONE] * n
    right = [NONE] * n
    cur = [NONE] * n          # current single host child of a live player
    eliminated = [False] * n
    from .bracket import leaf_slots_in_order

    for v in reversed(demand.bfs_order()):
        ch = sorted(demand.children(v), key=keys.__getitem__)
        c = len(ch)
        if c == 0:
            continue
        slot_nodes = [NONE] * (2 * c)
        for j, s in enumerate(leaf_slots_in_order(c)):
            slot_nodes[s] = ch[j]
        for i in range(c - 1, 0, -1):
            wl = slot_nodes[2 * i]
            wr = slot_nodes[2 * i + 1]
            if keys[wl] <= keys[wr]:
                x, y = wl, wr
            else:
                x, y = wr, wl
            a = cur[x]
            b = cur[y]
            if a != NONE:
                left[y] = a
                right[y] = b
                par[a] = y
                if b != NONE:
                    par[b] = y
            else:
                left[y] = b
                right[y] = NONE
            eliminated[y] = True
            cur[x] = y
            par[y] = x
            slot_nodes[i] = x
        winner = slot_nodes[1]
        par[winner] = v
        cur[v] = winner
    for v in range(n):
        if not eliminated[v]:
            left[v] = cur[v]
    return HostTree(n, demand.root, par, left, right, [NONE] * n)


def _euler_intervals(host: HostTree) -> tuple[dict[int, int], dict[int, int]]:
    tin: dict[int, int] = {}
    tout: dict[int, int] = {}
    clock = 0
    stack: list[tuple[int, bool]] = [(host.root, False)]
    left, right = host.left, host.right
    while stack:
        node, done = stack.pop()
        if done:
            tout[node] = clock
            continue
        tin[node] = clock
        clock += 1
        stack.append((node, True))
        for ch in (right[node], left[node]):
            if ch != NONE:
                stack.append((ch, False))
    return tin, tout


def check_invariants(demand: DemandTree, host: HostTree) -> None:
    """Full structural check of invariants (i)-(iii) against the demand tree.

    Works on phase-1 output, any mid-tournament state, and the final tree
    (where the steiner clauses are vacuous).  Raises
    :class:`InvariantViolation` naming the violated invariant.
    """
    host.validate()
    n = demand.n
    left, right = host.left, host.right
    for s in host.steiner_nodes():
        if left[s] == NONE or right[s] == NONE:
            raise InvariantViolation("(i) steiner-degree",
                                     f"steiner node {s} has < 2 children")
        u = host.owner[s]
        if u == NONE:
            raise InvariantViolation("(iii) bracket-membership",
                                     f"steiner node {s} has no owner vertex")
        for ch in (left[s], right[s]):
            if host.is_steiner(ch):
                continue
            if demand.parent[ch] != u:
                raise InvariantViolation(
                    "(iii) bracket-membership",
                    f"vertex {ch} sits in the bracket of {u}, not of its parent")
            if right[ch] != NONE:
                raise InvariantViolation(
                    "(iii) single-child",
                    f"vertex {ch} under a steiner node has two children")
    tin, tout = _euler_intervals(host)
    for v in range(n):
        u = demand.parent[v]
        if u == NONE:
            continue
        if not (tin[u] < tin[v] <= tout[u]):
            raise InvariantViolation(
                "(ii) ancestry",
                f"demand parent {u} of vertex {v} is not a host ancestor")
