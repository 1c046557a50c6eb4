"""Proper colorings plus the exact combinatorial solvers feeding the bounds.

Max clique and chromatic number are branch-and-bound over bitset adjacency
(Python ints), deterministic given the vertex order: ties always go to the
lowest-index vertex and the lowest color.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .graphs import Graph, ParameterError, complement


class ImproperColoringError(ValueError):
    """Carries a monochromatic edge as a certificate."""

    def __init__(self, edge):
        self.edge = edge
        super().__init__("monochromatic edge %r" % (edge,))


@dataclass(frozen=True)
class Coloring:
    colors: tuple
    k: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.colors and max(self.colors) >= self.k:
            raise ParameterError("color index exceeds k")
        if any(c < 0 for c in self.colors):
            raise ParameterError("negative color")


def coloring_from_list(colors):
    colors = list(colors)
    k = (max(colors) + 1) if colors else 0
    return Coloring(tuple(colors), k)


def check_proper(g, c):
    """Return the first monochromatic edge in sorted order, or None."""
    for u, v in g.sorted_edges():
        if c.colors[u] == c.colors[v]:
            return (u, v)
    return None


def require_proper(g, c):
    bad = check_proper(g, c)
    if bad is not None:
        raise ImproperColoringError(bad)


def write_coloring(c, path):
    with open(path, "w") as fh:
        for v, col in enumerate(c.colors):
            fh.write("%d %d\n" % (v, col))


def read_coloring(path):
    pairs = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            v, col = line.split()
            pairs.append((int(v), int(col)))
    pairs.sort()
    return coloring_from_list([col for _, col in pairs])


# ---------------------------------------------------------------------------
# Bitset helpers


def _adjacency_bits(g):
    bits = [0] * g.n
    for u, v in g.edges:
        bits[u] |= 1 << v
        bits[v] |= 1 << u
    return bits


def _bit_indices(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# ---------------------------------------------------------------------------
# Maximum clique


def max_clique(g):
    """A maximum clique as a sorted vertex list.

    Branch and bound: candidates are greedily colored and the color count
    bounds the clique extension, pruning subtrees that cannot beat the
    incumbent.
    """
    if g.n == 0:
        return []
    adj = _adjacency_bits(g)
    best = []

    def color_sort(cand_mask):
        # Greedy coloring of the candidate set; returns vertices ordered so
        # that the color number (1-based) is an upper bound on the clique
        # size achievable from that vertex onward.
        order, bounds = [], []
        color = 0
        rest = cand_mask
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~((1 << v) | adj[v])
                rest &= ~(1 << v)
                order.append(v)
                bounds.append(color)
        return order, bounds

    def expand(clique, cand_mask):
        nonlocal best
        order, bounds = color_sort(cand_mask)
        for i in range(len(order) - 1, -1, -1):
            if len(clique) + bounds[i] <= len(best):
                return
            v = order[i]
            clique.append(v)
            sub = cand_mask & adj[v]
            if sub:
                expand(clique, sub)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            cand_mask &= ~(1 << v)

    expand([], (1 << g.n) - 1)
    return sorted(best)


# ---------------------------------------------------------------------------
# Chromatic number


@dataclass(frozen=True)
class ChromaticResult:
    lower: int
    upper: int
    coloring: Coloring          # witness for the upper bound
    exact: bool

    @property
    def chi(self):
        return self.upper if self.exact else None


def greedy_dsatur(g):
    """DSATUR heuristic coloring; deterministic."""
    if g.n == 0:
        return coloring_from_list([])
    adj = g.adjacency()
    colors = [-1] * g.n
    sat = [set() for _ in range(g.n)]
    for _ in range(g.n):
        v = max((w for w in range(g.n) if colors[w] < 0),
                key=lambda w: (len(sat[w]), len(adj[w]), -w))
        c = 0
        while c in sat[v]:
            c += 1
        colors[v] = c
        for w in adj[v]:
            sat[w].add(c)
    return coloring_from_list(colors)


class _Timeout(Exception):
    pass


def _exact_chromatic(g, lower, upper_coloring, deadline):
    """DSATUR-ordered branch and bound; may raise _Timeout."""
    n = g.n
    adj = _adjacency_bits(g)
    best_k = upper_coloring.k
    best_colors = list(upper_coloring.colors)
    colors = [-1] * n
    # forbidden[v] = bitmask of colors unusable at v
    forbidden = [0] * n

    def choose():
        pick, key = -1, None
        for v in range(n):
            if colors[v] >= 0:
                continue
            k = (bin(forbidden[v]).count("1"), bin(adj[v]).count("1"), -v)
            if key is None or k > key:
                pick, key = v, k
        return pick

    calls = 0

    def branch(used):
        nonlocal best_k, best_colors, calls
        calls += 1
        if calls % 2048 == 0 and time.monotonic() > deadline:
            raise _Timeout
        if used >= best_k:
            return
        v = choose()
        if v < 0:
            best_k = used
            best_colors = list(colors)
            return
        limit = min(used + 1, best_k - 1)
        for c in range(limit):
            if forbidden[v] >> c & 1:
                continue
            colors[v] = c
            touched = []
            for w in _bit_indices(adj[v]):
                if colors[w] < 0 and not (forbidden[w] >> c & 1):
                    forbidden[w] |= 1 << c
                    touched.append(w)
            branch(max(used, c + 1))
            for w in touched:
                forbidden[w] &= ~(1 << c)
            colors[v] = -1
            if best_k <= lower:
                return

    branch(0)
    return best_k, best_colors


def chromatic_number(g, budget=10.0):
    """Exact chromatic number within a time budget.

    Universal vertices are peeled first (each adds exactly one color).  The
    lower bound is max(clique size, ceil(n / independence number)).  On
    timeout the result carries the best (lower, upper) pair plus a witness
    coloring for the upper bound.
    """
    if g.n == 0:
        return ChromaticResult(0, 0, coloring_from_list([]), True)
    if g.m == 0:
        return ChromaticResult(1, 1, coloring_from_list([0] * g.n), True)

    # peel universal vertices
    adj = g.adjacency()
    universal = [v for v in range(g.n) if len(adj[v]) == g.n - 1]
    if universal:
        keep = [v for v in range(g.n) if v not in set(universal)]
        relabel = {v: i for i, v in enumerate(keep)}
        core_pairs = [(relabel[u], relabel[v]) for u, v in g.edges
                      if u in relabel and v in relabel]
        core = Graph(len(keep), frozenset(core_pairs))
        sub = chromatic_number(core, budget)
        shift = len(universal)
        colors = [0] * g.n
        for i, v in enumerate(universal):
            colors[v] = i
        for v in keep:
            colors[v] = shift + sub.coloring.colors[relabel[v]]
        witness = Coloring(tuple(colors), shift + sub.coloring.k)
        return ChromaticResult(sub.lower + shift, sub.upper + shift,
                               witness, sub.exact)

    clique = max_clique(g)
    alpha = len(max_clique(complement(g)))
    lower = max(len(clique), math.ceil(g.n / alpha) if alpha else 1)
    greedy = greedy_dsatur(g)
    if greedy.k <= lower:
        return ChromaticResult(greedy.k, greedy.k, greedy, True)

    deadline = time.monotonic() + budget
    try:
        best_k, best_colors = _exact_chromatic(g, lower, greedy, deadline)
        return ChromaticResult(best_k, best_k,
                               Coloring(tuple(best_colors), best_k), True)
    except _Timeout:
        return ChromaticResult(lower, greedy.k, greedy, False)
