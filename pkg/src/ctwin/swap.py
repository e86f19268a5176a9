"""Backtracking search for a vertex permutation of Delta_m that swaps the
red and blue subgraphs while preserving non-edges.

The search assigns images phi[a] in natural vertex order with phi[0]
pinned to 0 (any colour-swapping permutation can be translated to one
fixing vertex 0 without changing pair differences, so the pin loses no
generality).  A candidate image for vertex a must satisfy
kappa[phi[a] ^ phi[b]] = -kappa[a ^ b] against every previously assigned
b; candidates are drawn in ascending order from a bitset of unused
vertices, which makes serial runs fully deterministic.

Per-vertex constraint sets are precomputed as bitmasks, so the filter at
depth a costs a - 1 big-int ANDs instead of a Python loop per candidate;
the accepted candidates and their order are identical to the plain
pairwise check.
"""

from __future__ import annotations

import multiprocessing
import sys
import time
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .graphs import build_delta

_SEARCH_ALL_MAX_M = 2
_DEADLINE_STRIDE = 1024  # nodes between wall-clock checks


class SearchStatus(Enum):
    FOUND = "found"
    EXHAUSTED = "exhausted"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class SwapMap:
    """A vertex permutation of Delta_m, phi[a] = image of vertex a."""

    m: int
    phi: tuple[int, ...]

    def __post_init__(self):
        v = 1 << (2 * self.m)
        if len(self.phi) != v or sorted(self.phi) != list(range(v)):
            raise ValueError(f"phi is not a permutation of 0..{v - 1}")


@dataclass(frozen=True)
class SearchOutcome:
    status: SearchStatus
    witness: SwapMap | None
    nodes: int
    max_depth: int
    elapsed: float


class _BudgetExceeded(Exception):
    pass


@lru_cache(maxsize=None)
def _tables(m: int):
    """kappa of Delta_m plus, per colour, the image-constraint bitmasks.

    masks[t + 1][y] packs every x with kappa[x ^ y] = t, so the image of
    a new vertex constrained against an assigned image y is one AND away.
    """
    kappa = build_delta(m).kappa
    v = len(kappa)
    masks = [[0] * v for _ in range(3)]
    for y in range(v):
        for x in range(v):
            masks[kappa[x ^ y] + 1][y] |= 1 << x
    return kappa, masks


def verify_swap(swap: SwapMap) -> bool:
    """Exhaustive pair check: every red edge must land on a blue one and
    vice versa, and non-edges must stay non-edges."""
    kappa, _ = _tables(swap.m)
    v = len(kappa)
    phi = swap.phi
    for a in range(v):
        pa = phi[a]
        for b in range(a + 1, v):
            if kappa[pa ^ phi[b]] != -kappa[a ^ b]:
                return False
    return True


def normalize(swap: SwapMap) -> SwapMap:
    """Translate a verified swap so that vertex 0 is fixed.

    XOR by phi[0] preserves every pair difference, so the result still
    verifies.
    """
    if not verify_swap(swap):
        raise ValueError("map does not swap the colours")
    t = swap.phi[0]
    return SwapMap(swap.m, tuple(p ^ t for p in swap.phi))


def _iter_witnesses(kappa, masks, phi, unused, counters, node_budget, deadline):
    """Depth-first generator over completed assignments, natural order.

    counters is [nodes, max_depth]; raises _BudgetExceeded when a budget
    trips, leaving counters valid.
    """
    v = len(kappa)
    a = len(phi)
    if a == v:
        yield tuple(phi)
        return
    cand = unused
    for b in range(a):
        cand &= masks[1 - kappa[a ^ b]][phi[b]]
        if not cand:
            return
    while cand:
        bit = cand & -cand
        cand ^= bit
        counters[0] += 1
        if node_budget is not None and counters[0] > node_budget:
            raise _BudgetExceeded
        if deadline is not None and counters[0] % _DEADLINE_STRIDE == 0:
            if time.monotonic() > deadline:
                raise _BudgetExceeded
        if a + 1 > counters[1]:
            counters[1] = a + 1
        phi.append(bit.bit_length() - 1)
        yield from _iter_witnesses(
            kappa, masks, phi, unused ^ bit, counters, node_budget, deadline
        )
        phi.pop()


def _iter_witnesses_mcv(kappa, masks, phi, unused, counters, node_budget, deadline):
    """Variant choosing the most constrained unassigned vertex next.

    Traversal order changes but the set of completable assignments does
    not, so Found/Exhausted outcomes agree with the natural order.
    """
    v = len(kappa)
    assigned = [a for a in range(v) if phi[a] is not None]
    if len(assigned) == v:
        yield tuple(phi)
        return
    best = None
    best_cand = None
    for a in range(v):
        if phi[a] is not None:
            continue
        cand = unused
        for b in assigned:
            cand &= masks[1 - kappa[a ^ b]][phi[b]]
            if not cand:
                break
        count = cand.bit_count()
        if best is None or count < best_cand.bit_count():
            best, best_cand = a, cand
            if count == 0:
                break
    cand = best_cand
    while cand:
        bit = cand & -cand
        cand ^= bit
        counters[0] += 1
        if node_budget is not None and counters[0] > node_budget:
            raise _BudgetExceeded
        if deadline is not None and counters[0] % _DEADLINE_STRIDE == 0:
            if time.monotonic() > deadline:
                raise _BudgetExceeded
        counters[1] = max(counters[1], len(assigned) + 1)
        phi[best] = bit.bit_length() - 1
        yield from _iter_witnesses_mcv(
            kappa, masks, phi, unused ^ bit, counters, node_budget, deadline
        )
        phi[best] = None


def _run_serial(m, prefix, node_budget, time_budget, order="natural"):
    """Search below a fixed assignment prefix; returns a SearchOutcome
    whose witness (if any) is the first in deterministic order."""
    kappa, masks = _tables(m)
    v = len(kappa)
    # one generator frame per assigned vertex
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * v + 200))
    start = time.monotonic()
    deadline = start + time_budget if time_budget is not None else None
    counters = [len(prefix), len(prefix)]
    unused = ((1 << v) - 1) ^ sum(1 << p for p in prefix)
    if order == "mcv":
        phi = [None] * v
        for a, p in enumerate(prefix):
            phi[a] = p
        gen = _iter_witnesses_mcv(
            kappa, masks, phi, unused, counters, node_budget, deadline
        )
    else:
        gen = _iter_witnesses(
            kappa, masks, list(prefix), unused, counters, node_budget, deadline
        )
    try:
        for phi in gen:
            witness = SwapMap(m, phi)
            return SearchOutcome(
                SearchStatus.FOUND,
                witness,
                counters[0],
                counters[1],
                time.monotonic() - start,
            )
        status = SearchStatus.EXHAUSTED
    except _BudgetExceeded:
        status = SearchStatus.INCONCLUSIVE
    return SearchOutcome(
        status, None, counters[0], counters[1], time.monotonic() - start
    )


def _branch_task(args):
    m, branch, node_budget, time_budget = args
    out = _run_serial(m, (0, branch), node_budget, time_budget)
    return (
        out.status.value,
        None if out.witness is None else out.witness.phi,
        out.nodes,
        out.max_depth,
    )


def _run_parallel(m, workers, node_budget, time_budget):
    """Split the candidate list of vertex 1 across worker processes.

    Branch results are consumed in candidate order, so the reported
    witness is the lowest-branch one; Exhausted requires every branch to
    be exhausted.  Budgets apply per branch.
    """
    kappa, masks = _tables(m)
    v = len(kappa)
    start = time.monotonic()
    cand = (((1 << v) - 1) ^ 1) & masks[1 - kappa[1]][0]
    branches = []
    while cand:
        bit = cand & -cand
        cand ^= bit
        branches.append(bit.bit_length() - 1)
    nodes = 1  # the pinned assignment of vertex 0
    max_depth = 1
    status = SearchStatus.EXHAUSTED
    witness = None
    tasks = [(m, b, node_budget, time_budget) for b in branches]
    if tasks:
        with multiprocessing.Pool(min(workers, len(tasks))) as pool:
            for st, phi, n, d in pool.imap(_branch_task, tasks):
                nodes += n - 1  # branch counters start at the shared pin
                max_depth = max(max_depth, d)
                if st == SearchStatus.FOUND.value:
                    witness = SwapMap(m, phi)
                    status = SearchStatus.FOUND
                    break
                if st == SearchStatus.INCONCLUSIVE.value:
                    status = SearchStatus.INCONCLUSIVE
            pool.terminate()
    return SearchOutcome(status, witness, nodes, max_depth, time.monotonic() - start)


def search_swap(
    m: int,
    *,
    threads: int = 1,
    node_budget: int | None = None,
    time_budget: float | None = None,
    order: str = "natural",
) -> SearchOutcome:
    """Find a colour-swapping permutation of Delta_m or exhaust the tree.

    Serial runs are the reference semantics: deterministic witness and
    node count.  threads > 1 distributes the top-level branches over
    worker processes; a witness is still reported from the lowest branch
    that produced one.  Exceeding node_budget or time_budget yields
    status INCONCLUSIVE, never EXHAUSTED.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if threads < 1:
        raise ValueError("threads must be >= 1")
    if node_budget is not None and node_budget < 1:
        raise ValueError("node budget must be >= 1")
    if time_budget is not None and time_budget <= 0:
        raise ValueError("time budget must be positive")
    if order not in ("natural", "mcv"):
        raise ValueError(f"unknown assignment order {order!r}")
    if threads > 1 and order == "natural":
        outcome = _run_parallel(m, threads, node_budget, time_budget)
    else:
        outcome = _run_serial(m, (0,), node_budget, time_budget, order=order)
    if outcome.status is SearchStatus.FOUND and not verify_swap(outcome.witness):
        raise RuntimeError("search produced a map that fails verification")
    return outcome


def search_all(m: int, limit: int, *, force: bool = False) -> list[SwapMap]:
    """All normalized colour-swapping maps in lexicographic phi order,
    truncated at `limit`.  Guarded to m <= 2 unless force=True."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if m < 1:
        raise ValueError("m must be >= 1")
    if m > _SEARCH_ALL_MAX_M and not force:
        raise ValueError(
            f"enumeration is guarded to m <= {_SEARCH_ALL_MAX_M}; pass force=True to override"
        )
    kappa, masks = _tables(m)
    v = len(kappa)
    counters = [1, 1]
    out = []
    for phi in _iter_witnesses(kappa, masks, [0], ((1 << v) - 1) ^ 1, counters, None, None):
        witness = SwapMap(m, phi)
        if not verify_swap(witness):
            raise RuntimeError("enumeration produced a map that fails verification")
        out.append(witness)
        if len(out) == limit:
            break
    return out


def witness_payload(swap: SwapMap) -> dict:
    """Wire form of a witness: {"m": ..., "phi": [...]}."""
    return {"m": swap.m, "phi": list(swap.phi)}


def certificate_payload(m: int, outcome: SearchOutcome) -> dict:
    """Wire form of a non-witness outcome, e.g. an exhaustion certificate."""
    return {"m": m, "status": outcome.status.value, "nodes": outcome.nodes}
