"""Exact ground truth: coloring validation, maximum clique, chromatic number.

These routines know nothing about fractional powers; they work on any
:class:`~fracpower.graph.Graph` and are what every construction is checked
against.
"""

from __future__ import annotations

import random
import time
from typing import Mapping, Sequence

from .graph import Graph

MAX_CLIQUE_VERTICES = 500
MAX_CHI_VERTICES = 400


class PartialColoringError(ValueError):
    """A coloring that leaves some vertex uncolored."""


class OracleUnknown(RuntimeError):
    """The exact search gave up; carries the budget that was exceeded."""

    def __init__(self, reason: str, *, time_limit: float | None = None, vertex_count: int | None = None):
        super().__init__(reason)
        self.reason = reason
        self.time_limit = time_limit
        self.vertex_count = vertex_count


def validate_coloring(g: Graph, colors: Sequence[int] | Mapping[int, int]) -> tuple[int, int] | None:
    """Return ``None`` for a proper coloring, else the first monochromatic edge.

    Edges are scanned in sorted order, so the reported violation is
    deterministic.
    """
    if isinstance(colors, Mapping):
        missing = [v for v in range(g.vertex_count) if v not in colors]
        lookup = colors
    else:
        missing = list(range(len(colors), g.vertex_count))
        lookup = colors
    if missing:
        raise PartialColoringError(f"{len(missing)} uncolored vertices, first {missing[0]}")
    for u, v in sorted(g.edges):
        if lookup[u] == lookup[v]:
            return (u, v)
    return None


def derangement(items: Sequence) -> list:
    """Cyclic shift by one, which moves every position."""
    if len(items) < 2:
        raise ValueError("a derangement needs at least two items")
    items = list(items)
    return items[1:] + items[:1]


def _bitsets(g: Graph) -> list[int]:
    out = []
    for nb in g.adjacency:
        mask = 0
        for w in nb:
            mask |= 1 << w
        out.append(mask)
    return out


def max_clique_vertices(g: Graph) -> list[int]:
    """A maximum clique, by Bron-Kerbosch with Tomita pivoting and size bound."""
    n = g.vertex_count
    if n > MAX_CLIQUE_VERTICES:
        raise OracleUnknown(f"max clique guard: {n} > {MAX_CLIQUE_VERTICES} vertices", vertex_count=n)
    if n == 0:
        return []
    nbr = _bitsets(g)
    best: list[int] = [0]

    def expand(r: list[int], p: int, x: int) -> None:
        if p == 0:
            if len(r) > len(best):
                best[:] = r
            return
        if len(r) + p.bit_count() <= len(best):
            return
        px = p | x
        pivot = -1
        pivot_cover = -1
        while px:
            low = px & -px
            u = low.bit_length() - 1
            px ^= low
            cover = (p & nbr[u]).bit_count()
            if cover > pivot_cover:
                pivot, pivot_cover = u, cover
        cand = p & ~nbr[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            r.append(v)
            expand(r, p & nbr[v], x & nbr[v])
            r.pop()
            p &= ~low
            x |= low
            if len(r) + p.bit_count() <= len(best):
                return

    expand([], (1 << n) - 1, 0)
    return sorted(best)


def max_clique_exact(g: Graph) -> int:
    return len(max_clique_vertices(g))


def dsatur_coloring(g: Graph) -> list[int]:
    """Greedy DSATUR: most saturated vertex first, ties by degree then index."""
    n = g.vertex_count
    adj = g.adjacency
    colors = [-1] * n
    sat = [0] * n
    for _ in range(n):
        best_v, best_key = -1, None
        for v in range(n):
            if colors[v] >= 0:
                continue
            key = (sat[v].bit_count(), len(adj[v]), -v)
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        used = sat[best_v]
        c = 0
        while used >> c & 1:
            c += 1
        colors[best_v] = c
        for w in adj[best_v]:
            sat[w] |= 1 << c
    return colors


class _Deadline:
    __slots__ = ("limit", "t_end", "ticks")

    def __init__(self, limit: float | None):
        self.limit = limit
        self.t_end = None if limit is None else time.monotonic() + limit
        self.ticks = 0

    def check(self) -> None:
        self.ticks += 1
        if self.t_end is not None and self.ticks & 1023 == 0 and time.monotonic() > self.t_end:
            raise OracleUnknown(f"time budget of {self.limit}s exhausted", time_limit=self.limit)


def cliques_of_size(g: Graph, size: int, limit: int = 20000) -> list[list[int]] | None:
    """All cliques with exactly ``size`` vertices, or ``None`` past ``limit``."""
    nbr = _bitsets(g)
    out: list[list[int]] = []

    def expand(r: list[int], p: int) -> bool:
        if len(r) == size:
            out.append(list(r))
            return len(out) < limit
        while p:
            if len(r) + p.bit_count() < size:
                return True
            low = p & -p
            v = low.bit_length() - 1
            p ^= low
            r.append(v)
            if not expand(r, p & nbr[v]):
                return False
            r.pop()
        return True

    if size <= 0:
        return []
    return out if expand([], (1 << g.vertex_count) - 1) else None


def k_coloring(g: Graph, k: int, seed_clique: Sequence[int] = (), time_limit: float | None = None,
               _deadline: _Deadline | None = None) -> list[int] | None:
    """Find a proper coloring with colors ``0..k-1`` or prove none exists.

    ``seed_clique`` vertices are pre-colored ``0, 1, ...``; beyond them a
    branch may open at most one previously unused color, which removes color
    permutation symmetry.

    Every clique of exactly ``k`` vertices must show each color once, so the
    search also branches on "which vertex of clique Q takes color c" when
    that has fewer alternatives than the most constrained vertex.
    """
    n = g.vertex_count
    if n == 0:
        return []
    if k <= 0 or len(seed_clique) > k:
        return None
    deadline = _deadline or _Deadline(time_limit)
    adj = g.adjacency
    colors = [-1] * n
    count = [[0] * k for _ in range(n)]
    sat = [0] * n
    full_cliques = cliques_of_size(g, k) if len(seed_clique) == k else None
    full_cliques = full_cliques or []

    def assign(v: int, c: int) -> None:
        colors[v] = c
        for w in adj[v]:
            cw = count[w]
            cw[c] += 1
            if cw[c] == 1:
                sat[w] |= 1 << c

    def unassign(v: int) -> None:
        c = colors[v]
        colors[v] = -1
        for w in adj[v]:
            cw = count[w]
            cw[c] -= 1
            if cw[c] == 0:
                sat[w] &= ~(1 << c)

    for a, u in enumerate(seed_clique):
        for v in seed_clique[a + 1:]:
            if not g.has_edge(u, v):
                raise ValueError("seed_clique is not a clique")
    for c, v in enumerate(seed_clique):
        assign(v, c)
    remaining = n - len(seed_clique)
    full = (1 << k) - 1

    def clique_branch(dom: int):
        """Smallest (color, candidates) over full cliques; ``False`` on a dead end."""
        best = None
        for q in full_cliques:
            present = 0
            open_ = []
            for v in q:
                if colors[v] >= 0:
                    present |= 1 << colors[v]
                else:
                    open_.append(v)
            if not open_:
                continue
            missing = full & ~present
            while missing:
                low = missing & -missing
                c = low.bit_length() - 1
                missing ^= low
                cand = [v for v in open_ if not sat[v] >> c & 1]
                if not cand:
                    return False
                if len(cand) < dom:
                    dom, best = len(cand), (c, cand)
                    if dom == 1:
                        return best
        return best

    def solve(remaining: int, used: int) -> bool:
        if remaining == 0:
            return True
        deadline.check()
        best_v, best_key = -1, None
        for v in range(n):
            if colors[v] < 0:
                s = sat[v]
                if s == full:
                    return False
                key = (s.bit_count(), len(adj[v]))
                if best_key is None or key > best_key:
                    best_v, best_key = v, key
        dom = k - best_key[0]
        if full_cliques and dom > 1:
            pick = clique_branch(dom)
            if pick is False:
                return False
            if pick is not None:
                c, cand = pick
                for v in cand:
                    assign(v, c)
                    if solve(remaining - 1, used):
                        return True
                    unassign(v)
                return False
        v = best_v
        s = sat[v]
        for c in range(min(used + 1, k)):
            if s >> c & 1:
                continue
            assign(v, c)
            if solve(remaining - 1, max(used, c + 1)):
                return True
            unassign(v)
        return False

    if solve(remaining, len(seed_clique)):
        return colors
    return None


def tabu_coloring(g: Graph, k: int, max_iters: int = 20000, seed: int = 0,
                  _deadline: _Deadline | None = None) -> list[int] | None:
    """Tabu search for a proper ``k``-coloring; ``None`` if none was found.

    Only ever used to tighten an upper bound, so a miss proves nothing.
    """
    n = g.vertex_count
    if n == 0:
        return []
    if k <= 0:
        return None
    rng = random.Random(seed)
    adj = g.adjacency
    colors = dsatur_coloring(g)
    colors = [c if c < k else rng.randrange(k) for c in colors]
    # gamma[v][c]: neighbors of v currently colored c
    gamma = [[0] * k for _ in range(n)]
    for v in range(n):
        for w in adj[v]:
            gamma[v][colors[w]] += 1
    conflicts = sum(gamma[v][colors[v]] for v in range(n)) // 2
    tabu: dict[tuple[int, int], int] = {}
    best = conflicts
    for it in range(max_iters):
        if conflicts == 0:
            return colors
        if _deadline is not None:
            _deadline.check()
        move = None
        move_delta = None
        ties = 0
        for v in range(n):
            gv = gamma[v]
            cv = colors[v]
            if gv[cv] == 0:
                continue
            for c in range(k):
                if c == cv:
                    continue
                delta = gv[c] - gv[cv]
                if tabu.get((v, c), -1) >= it and conflicts + delta >= best:
                    continue
                if move_delta is None or delta < move_delta:
                    move, move_delta, ties = (v, c), delta, 1
                elif delta == move_delta:
                    ties += 1
                    if rng.randrange(ties) == 0:
                        move = (v, c)
        if move is None:
            continue
        v, c = move
        old = colors[v]
        colors[v] = c
        for w in adj[v]:
            gamma[w][old] -= 1
            gamma[w][c] += 1
        conflicts += move_delta
        best = min(best, conflicts)
        tabu[(v, old)] = it + int(0.6 * conflicts) + rng.randrange(10)
    return colors if conflicts == 0 else None


def exact_coloring(g: Graph, time_limit: float | None = None) -> list[int]:
    """An optimal coloring. Raises :class:`OracleUnknown` past the budget.

    Lower bound: a maximum clique. Upper bound: DSATUR, tightened by tabu
    search. Whatever gap remains is closed by exhaustive backtracking.
    """
    n = g.vertex_count
    if n > MAX_CHI_VERTICES:
        raise OracleUnknown(f"chromatic guard: {n} > {MAX_CHI_VERTICES} vertices", vertex_count=n)
    if n == 0:
        return []
    deadline = _Deadline(time_limit)
    clique = max_clique_vertices(g)
    upper = dsatur_coloring(g)
    ub = max(upper) + 1
    while ub > len(clique):
        found = tabu_coloring(g, ub - 1, _deadline=deadline)
        if found is None or validate_coloring(g, found) is not None:
            break
        upper, ub = found, ub - 1
    for k in range(len(clique), ub):
        found = k_coloring(g, k, clique, _deadline=deadline)
        if found is not None:
            return found
    return upper


def chi_exact(g: Graph, time_limit: float | None = None) -> int:
    """Exact chromatic number; raises :class:`OracleUnknown` rather than guess."""
    colors = exact_coloring(g, time_limit)
    return max(colors) + 1 if colors else 0
