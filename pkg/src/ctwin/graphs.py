"""The two-colour difference graph Delta_m, Cayley graphs of Boolean
functions, strong-regularity verification, and graph export.

Adjacency is never stored as a v x v structure: a graph on Z_2^n is a
length-2^n colour table indexed by vertex difference, and packed
adjacency rows (one int bitmask per vertex) are generated on demand for
the common-neighbour counts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .algebra import SymmetryClass, classify, gamma
from .bent import BoolFunc, sigma_function, tau_function

RED = -1
BLUE = 1
COLOUR_NAMES = {RED: "red", BLUE: "blue"}

_ORACLE_MAX_M = 4
_GRAPH6_MAX_VERTICES = 1 << 16


@dataclass(frozen=True)
class DifferenceGraph:
    """Edge-coloured graph on Z_2^n_bits with colour(a, b) = kappa[a ^ b].

    kappa values are -1 (red), +1 (blue) or 0 (no edge); kappa[0] is a
    structural zero since vertices carry no loops.
    """

    n_bits: int
    kappa: tuple[int, ...]

    def __post_init__(self):
        if self.n_bits < 1:
            raise ValueError("n_bits must be >= 1")
        if len(self.kappa) != 1 << self.n_bits:
            raise ValueError("kappa length must be 2^n_bits")
        if self.kappa[0] != 0:
            raise ValueError("difference 0 cannot carry an edge")
        if any(c not in (-1, 0, 1) for c in self.kappa):
            raise ValueError("colours must be -1, 0 or +1")

    @property
    def v(self) -> int:
        return 1 << self.n_bits

    def colour(self, a: int, b: int) -> int:
        if not (0 <= a < self.v and 0 <= b < self.v):
            raise ValueError("vertex out of range")
        if a == b:
            raise ValueError("no loops: vertices must differ")
        return self.kappa[a ^ b]

    def differences(self, colour: int) -> tuple[int, ...]:
        """All nonzero differences carrying the given colour."""
        return tuple(d for d in range(1, self.v) if self.kappa[d] == colour)

    def degree(self, colour: int) -> int:
        return len(self.differences(colour))

    def edges(self, colour: int) -> list[tuple[int, int]]:
        """Sorted list of edges (a, b) with a < b in the given colour."""
        diffs = self.differences(colour)
        out = []
        for a in range(self.v):
            for d in diffs:
                b = a ^ d
                if a < b:
                    out.append((a, b))
        out.sort()
        return out

    def adjacency_rows(self, colour: int) -> list[int]:
        """Packed neighbour bitmasks, one int per vertex."""
        diffs = self.differences(colour)
        rows = []
        for a in range(self.v):
            row = 0
            for d in diffs:
                row |= 1 << (a ^ d)
            rows.append(row)
        return rows


def build_delta(m: int) -> DifferenceGraph:
    """Delta_m from the bit rules: difference d is red where sigma_m(d) = 1,
    blue where tau_m(d) = 1, absent where the basis matrix is diagonal."""
    if m < 1:
        raise ValueError("m must be >= 1")
    sig = sigma_function(m).table()
    tav = tau_function(m).table()
    kappa = tuple(t - s for s, t in zip(sig, tav))
    return DifferenceGraph(2 * m, kappa)


def oracle_build_delta(m: int) -> DifferenceGraph:
    """Delta_m rebuilt pair by pair from the matrices themselves.

    A pair is joined iff the permutation parts of its basis matrices
    disagree in every column (disjoint support); the colour is read off
    the symmetry class of gamma(a) * gamma(b)^T.  All pairs with equal
    difference must agree before the colour table is accepted.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if m > _ORACLE_MAX_M:
        raise ValueError(f"oracle path is guarded to m <= {_ORACLE_MAX_M}")
    v = 1 << (2 * m)
    basis = [gamma(m, i) for i in range(v)]
    seen: dict[int, int] = {0: 0}
    for a in range(v):
        pa = basis[a].perm
        for b in range(a + 1, v):
            pb = basis[b].perm
            disjoint = all(ra != rb for ra, rb in zip(pa, pb))
            if not disjoint:
                colour = 0
            else:
                cls = classify(basis[a] * basis[b].transpose())
                colour = RED if cls is SymmetryClass.SKEW else BLUE
            d = a ^ b
            if seen.setdefault(d, colour) != colour:
                raise RuntimeError(
                    f"pairs with difference {d} disagree on colour"
                )
    return DifferenceGraph(2 * m, tuple(seen[d] for d in range(v)))


def cayley_graph(f: BoolFunc) -> DifferenceGraph:
    """Single-colour graph with a ~ b iff f(a ^ b) = 1; edges carry +1."""
    if f(0):
        raise ValueError("f(0) = 1 would create loops")
    return DifferenceGraph(f.n, tuple(f.table()))


# --- strong regularity -------------------------------------------------------

@dataclass(frozen=True)
class SrgParams:
    """(v, k, lam, mu) with the standard counting identity enforced."""

    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        if (self.v - self.k - 1) * self.mu != self.k * (self.k - 1 - self.lam):
            raise ValueError("(v-k-1)*mu must equal k*(k-1-lam)")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.v, self.k, self.lam, self.mu)


def srg_params_from_rows(rows: list[int]) -> SrgParams:
    """Verify strong regularity of an arbitrary adjacency-row list.

    Exhaustive over all vertex pairs; common neighbours are counted by
    intersecting packed rows.
    """
    v = len(rows)
    k = rows[0].bit_count()
    for a in range(1, v):
        if rows[a].bit_count() != k:
            raise ValueError(
                f"degree not constant: vertex 0 has {k}, "
                f"vertex {a} has {rows[a].bit_count()}"
            )
    if k == 0:
        raise ValueError("graph is empty in this colour")
    lam = mu = None
    for a in range(v):
        row_a = rows[a]
        for b in range(a + 1, v):
            common = (row_a & rows[b]).bit_count()
            if (row_a >> b) & 1:
                if lam is None:
                    lam = common
                elif common != lam:
                    raise ValueError(
                        f"lambda not constant: adjacent pair ({a}, {b}) "
                        f"has {common} common neighbours, expected {lam}"
                    )
            else:
                if mu is None:
                    mu = common
                elif common != mu:
                    raise ValueError(
                        f"mu not constant: non-adjacent pair ({a}, {b}) "
                        f"has {common} common neighbours, expected {mu}"
                    )
    if lam is None:
        raise ValueError("graph has no adjacent pairs")
    if mu is None:
        raise ValueError("graph has no non-adjacent pairs")
    return SrgParams(v, k, lam, mu)


def verify_srg(graph: DifferenceGraph, colour: int) -> SrgParams:
    """Exhaustively verify that one colour class of the graph is strongly
    regular and return its parameters."""
    return srg_params_from_rows(graph.adjacency_rows(colour))


def predicted_srg_params(m: int) -> SrgParams:
    """Closed form (4^m, 2^{2m-1}-2^{m-1}, lam, lam) with lam = 2^{2m-2}-2^{m-1}."""
    if m < 1:
        raise ValueError("m must be >= 1")
    lam = (1 << (2 * m - 2)) - (1 << (m - 1))
    return SrgParams(1 << (2 * m), (1 << (2 * m - 1)) - (1 << (m - 1)), lam, lam)


# --- export -------------------------------------------------------------------

def to_graph6(graph: DifferenceGraph, colour: int) -> bytes:
    """Standard graph6 bytes (no ">>graph6<<" header) for one colour class."""
    n = graph.v
    if n > _GRAPH6_MAX_VERTICES:
        raise ValueError(f"graph6 export supports at most {_GRAPH6_MAX_VERTICES} vertices")
    if n <= 62:
        head = bytes([n + 63])
    else:
        head = bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    rows = graph.adjacency_rows(colour)
    out = bytearray(head)
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = rows[j]
        for i in range(j):
            acc = (acc << 1) | ((row >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def from_graph6(data: bytes) -> tuple[int, list[tuple[int, int]]]:
    """Decode graph6 bytes into (vertex count, sorted edge list)."""
    if not data:
        raise ValueError("empty graph6 payload")
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise ValueError("unsupported graph6 size header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {need}")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[pos // 6] - 63
            if (byte >> (5 - pos % 6)) & 1:
                edges.append((i, j))
            pos += 1
    return n, sorted(edges)


def to_json_edges(graph: DifferenceGraph, colour: int) -> bytes:
    payload = {
        "v": graph.v,
        "colour": COLOUR_NAMES.get(colour, str(colour)),
        "edges": [[a, b] for a, b in graph.edges(colour)],
    }
    return json.dumps(payload).encode()


def export_graph(graph: DifferenceGraph, colour: int, fmt: str) -> bytes:
    """Serialize one colour class; fmt is "graph6" or "json-edges"."""
    if fmt == "graph6":
        return to_graph6(graph, colour)
    if fmt == "json-edges":
        return to_json_edges(graph, colour)
    raise ValueError(f"unknown export format {fmt!r}")
