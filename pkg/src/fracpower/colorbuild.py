"""Constructive colorings of fractional powers.

Every builder returns a :class:`Coloring` keyed by subdivision vertex
names. None of them trust themselves: :func:`verify` materializes the
target power and runs the independent validator, and the lifting steps
validate their input and output by default.

Hyperedge colors are handled as lists indexed by distance from the
smaller endpoint (position 0 is the terminal ``i``, position ``n`` is ``j``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .formulas import chi_cycle_power, chi_path_power, cycle_block_plan
from .graph import Graph, coloring_order, distinct_representatives, is_bipartite, is_connected, max_degree
from .oracles import derangement, exact_coloring, validate_coloring
from .power import Internal, PowerGraph, SubVertex, Terminal, canonical, fractional_power


class ConstructionError(RuntimeError):
    """A construction could not complete; no coloring is returned."""


@dataclass(frozen=True, eq=False)
class Coloring:
    """Total assignment of colors to the vertices of ``G^(m/n)``."""

    m: int
    n: int
    assignment: dict
    palette: frozenset

    @property
    def palette_size(self) -> int:
        return len(self.palette)

    def used_colors(self) -> set[int]:
        return set(self.assignment.values())

    def color(self, v: SubVertex) -> int:
        return self.assignment[v]

    def along(self, i: int, j: int) -> list[int]:
        """Colors of hyperedge ``i-j`` from position 0 (``i``) to ``n`` (``j``)."""
        n = self.n
        return [self.assignment[canonical(i, l, j, n)] for l in range(n + 1)]

    def as_index_list(self, pg: PowerGraph) -> list[int]:
        return [self.assignment[v] for v in pg.names]


@dataclass(frozen=True)
class EdgeColoring:
    colors: dict
    palette: frozenset

    def __getitem__(self, edge: tuple[int, int]) -> int:
        u, v = edge
        return self.colors[(u, v) if u < v else (v, u)]


# -- helpers ---------------------------------------------------------------

def _from_hyperedges(g: Graph, m: int, n: int, terminal: list[int], inner: dict, palette: Iterable[int]) -> Coloring:
    """Assemble a coloring from terminal colors and per-edge position lists.

    ``inner[(i, j)]`` lists the colors of positions ``1..n-1`` from ``i < j``.
    """
    assignment: dict = {Terminal(v): terminal[v] for v in range(g.vertex_count)}
    for (i, j), seq in inner.items():
        if len(seq) != n - 1:
            raise ConstructionError(f"hyperedge {i}-{j} has {len(seq)} internal colors, expected {n - 1}")
        for pos, c in enumerate(seq, start=1):
            assignment[Internal(i, pos, j)] = c
    return Coloring(m=m, n=n, assignment=assignment, palette=frozenset(palette))


def _respine(g: Graph, c: Coloring, m: int, n: int, rebuild) -> Coloring:
    """New coloring whose hyperedge ``i-j`` reads ``rebuild(old positions)``."""
    terminal = [c.assignment[Terminal(v)] for v in range(g.vertex_count)]
    inner = {}
    for i, j in g.sorted_edges():
        seq = rebuild(c.along(i, j), i, j)
        if seq[0] != terminal[i] or seq[-1] != terminal[j]:
            raise ConstructionError("hyperedge rebuild changed a terminal color")
        inner[(i, j)] = seq[1:-1]
    return _from_hyperedges(g, m, n, terminal, inner, c.palette)


def verify(g: Graph, c: Coloring, pg: PowerGraph | None = None) -> tuple[SubVertex, SubVertex] | None:
    """First monochromatic edge of ``G^(c.m/c.n)`` under ``c``, or ``None``."""
    if pg is None:
        pg = fractional_power(g, c.m, c.n)
    colors = c.as_index_list(pg)
    bad = validate_coloring(pg.materialized, colors)
    if bad is not None:
        return pg.names[bad[0]], pg.names[bad[1]]
    if not set(colors) <= c.palette:
        raise ConstructionError("coloring uses colors outside its palette")
    return None


def _require_proper(g: Graph, c: Coloring, what: str) -> None:
    bad = verify(g, c)
    if bad is not None:
        raise ConstructionError(f"{what}: improper at {bad[0].name()}-{bad[1].name()}")


def _require_connected_delta(g: Graph, min_delta: int) -> int:
    if not is_connected(g):
        raise ValueError("construction requires a connected graph")
    delta = max_degree(g)
    if delta < min_delta:
        raise ValueError(f"construction requires max degree >= {min_delta}, got {delta}")
    return delta


# -- subdivisions, cycles, paths -------------------------------------------

def color_subdivision(g: Graph, n: int) -> Coloring:
    """2 colors for ``G^(1/n)``, or 3 when ``n`` is odd and ``G`` is not bipartite.

    For even ``n`` a position's color is its parity, so terminals are all 0.
    """
    if n < 2:
        raise ValueError("subdivision coloring needs n >= 2")
    if g.edge_count == 0 or not is_connected(g):
        raise ValueError("subdivision coloring needs a connected graph with an edge")
    if n % 2 == 0:
        terminal = [0] * g.vertex_count
        inner = {e: [l % 2 for l in range(1, n)] for e in g.sorted_edges()}
        return _from_hyperedges(g, 1, n, terminal, inner, {0, 1})
    depth = [-1] * g.vertex_count
    depth[0] = 0
    queue = [0]
    for u in queue:
        for w in g.adjacency[u]:
            if depth[w] < 0:
                depth[w] = depth[u] + 1
                queue.append(w)
    terminal = [d % 2 for d in depth]
    inner = {}
    third = False
    for i, j in g.sorted_edges():
        seq = [(terminal[i] + l) % 2 for l in range(1, n)]
        if terminal[i] == terminal[j]:
            seq[-1] = 2
            third = True
        inner[(i, j)] = seq
    return _from_hyperedges(g, 1, n, terminal, inner, {0, 1, 2} if third else {0, 1})


def color_cycle_power(k: int, m: int) -> list[int]:
    """Colors ``1..χ`` for the cycle vertices ``0..k-1`` of ``C_k^m``."""
    chi = chi_cycle_power(k, m)
    if 2 * m >= k - (k % 2) or chi == k:
        return list(range(1, k + 1))
    if k % (m + 1) == 0:
        return [v % (m + 1) + 1 for v in range(k)]
    plan = cycle_block_plan(k, m)
    out = []
    for size in plan.block_sizes:
        out.extend(range(1, size + 1))
    return out


def color_path_power(k: int, m: int) -> list[int]:
    """Colors ``1..min(m+1, k)`` for path vertices ``0..k-1`` of ``P_k^m``."""
    chi_path_power(k, m)
    return [v % (m + 1) + 1 for v in range(k)]


def _walk_low_degree(g: Graph) -> tuple[list[int], bool]:
    """Vertex sequence of a connected graph with Δ <= 2, and whether it is a cycle."""
    if g.vertex_count == 1:
        return [0], False
    ends = [v for v in range(g.vertex_count) if g.degree(v) == 1]
    cyclic = not ends
    start = 0 if cyclic else ends[0]
    seq = [start]
    prev = -1
    cur = start
    while True:
        nxt = [w for w in g.adjacency[cur] if w != prev]
        if not nxt or (cyclic and nxt[0] == start):
            break
        if cyclic and len(seq) == 1:
            nxt = [min(nxt)]
        prev, cur = cur, nxt[0]
        seq.append(cur)
    return seq, cyclic


def color_low_degree(g: Graph, m: int, n: int) -> Coloring:
    """Optimal coloring of ``G^(m/n)`` for a connected path or cycle ``G``.

    The subdivision of a path or cycle is again a path or cycle, so the
    block colorings of cycle and path powers apply directly.
    """
    if not is_connected(g) or max_degree(g) > 2:
        raise ValueError("low-degree construction needs a connected path or cycle")
    seq, cyclic = _walk_low_degree(g)
    names: list[SubVertex] = []
    hops = list(zip(seq, seq[1:] + ([seq[0]] if cyclic else [])))
    for a, b in hops:
        names.extend(canonical(a, l, b, n) for l in range(n))
    if not cyclic:
        names.append(Terminal(seq[-1]))
    colors = color_cycle_power(len(names), m) if cyclic else color_path_power(len(names), m)
    assignment = dict(zip(names, colors))
    return Coloring(m=m, n=n, assignment=assignment, palette=frozenset(colors))


# -- edge coloring ---------------------------------------------------------

def misra_gries_edge_coloring(g: Graph) -> EdgeColoring:
    """Proper edge coloring with colors ``0..Δ`` (fan rotation and cd-path flips)."""
    delta = max_degree(g)
    palette = range(delta + 1)
    at: list[dict[int, int]] = [dict() for _ in range(g.vertex_count)]
    color: dict[tuple[int, int], int] = {}

    def key(a: int, b: int) -> tuple[int, int]:
        return (a, b) if a < b else (b, a)

    def free(v: int) -> int:
        taken = at[v]
        for c in palette:
            if c not in taken:
                return c
        raise ConstructionError(f"no free edge color at vertex {v}")

    def set_color(a: int, b: int, c: int) -> None:
        color[key(a, b)] = c
        at[a][c] = b
        at[b][c] = a

    def clear(a: int, b: int) -> int:
        c = color.pop(key(a, b))
        del at[a][c]
        del at[b][c]
        return c

    for u, v in g.sorted_edges():
        fan = [v]
        in_fan = {v}
        grown = True
        while grown:
            grown = False
            last = fan[-1]
            for x in g.adjacency[u]:
                if x in in_fan:
                    continue
                cx = color.get(key(u, x))
                if cx is not None and cx not in at[last]:
                    fan.append(x)
                    in_fan.add(x)
                    grown = True
                    break
        c = free(u)
        d = free(fan[-1])
        if c != d:
            path = []
            cur, want = u, d
            prev = None
            while want in at[cur]:
                nxt = at[cur][want]
                if nxt == prev:
                    break
                path.append((cur, nxt))
                prev, cur = cur, nxt
                want = c if want == d else d
            old = [clear(a, b) for a, b in path]
            for (a, b), oc in zip(path, old):
                set_color(a, b, c if oc == d else d)
        w_index = None
        for idx, w in enumerate(fan):
            if idx > 0:
                ce = color.get(key(u, w))
                if ce is None or ce in at[fan[idx - 1]]:
                    break
            if d not in at[w]:
                w_index = idx
                break
        if w_index is None:
            raise ConstructionError(f"fan rotation failed on edge {u}-{v}")
        shifted = [clear(u, fan[idx + 1]) for idx in range(w_index)]
        for idx, sc in enumerate(shifted):
            set_color(u, fan[idx], sc)
        set_color(u, fan[w_index], d)
    return EdgeColoring(colors=color, palette=frozenset(palette))


# -- G^(2/3), G^(2/4), G^(2/5) ---------------------------------------------

def color_2_3(g: Graph) -> Coloring:
    """``Δ+1`` colors for ``G^(2/3)``: terminals 0, internal vertices ``1..Δ``.

    Internal vertex ``v(1)u`` is written ``half[(v, u)]``. Vertices are
    processed in a coloring order; each step picks distinct colors for the
    half-edges at one vertex by matching, avoiding the colors of their
    partners ``u(1)v``. The last vertex uses a derangement of the partner
    colors, after a two-color chain swap if all partners agree.
    """
    delta = _require_connected_delta(g, 3)
    colors = range(1, delta + 1)
    half: dict[tuple[int, int], int] = {}
    order = coloring_order(g)

    for v in order[:-1]:
        nbrs = g.adjacency[v]
        avail = [[c for c in colors if c != half.get((u, v))] for u in nbrs]
        pick = distinct_representatives(avail, colors)
        if pick is None:
            raise ConstructionError(f"no distinct representatives at vertex {v}")
        for u, c in zip(nbrs, pick):
            half[(v, u)] = c

    last = order[-1]
    nbrs = list(g.adjacency[last])
    opposite = [half[(u, last)] for u in nbrs]
    distinct = sorted(set(opposite))
    if len(distinct) == 1 and len(nbrs) == delta:
        a = distinct[0]
        for b in colors:
            if b == a:
                continue
            chain = _two_color_chain(g, half, (nbrs[0], last), a, b)
            for h in chain:
                half[h] = b if half[h] == a else a
            if len({half[(u, last)] for u in nbrs}) >= 2:
                break
            for h in chain:
                half[h] = b if half[h] == a else a
        else:
            raise ConstructionError(f"no two-color chain swap frees vertex {last}")
        opposite = [half[(u, last)] for u in nbrs]
        distinct = sorted(set(opposite))

    assigned: dict[int, int] = {}
    if len(distinct) >= 2:
        shifted = dict(zip(distinct, derangement(distinct)))
        for idx, oc in enumerate(opposite):
            if oc in shifted:
                assigned[idx] = shifted.pop(oc)
    spare = iter(c for c in colors if c not in distinct)
    for idx in range(len(nbrs)):
        if idx not in assigned:
            c = next(spare, None)
            if c is None:
                raise ConstructionError(f"ran out of colors at vertex {last}")
            assigned[idx] = c
    for idx, u in enumerate(nbrs):
        half[(last, u)] = assigned[idx]

    assignment: dict = {Terminal(v): 0 for v in range(g.vertex_count)}
    for (v, u), c in half.items():
        assignment[canonical(v, 1, u, 3)] = c
    return Coloring(m=2, n=3, assignment=assignment, palette=frozenset(range(delta + 1)))


def _two_color_chain(g: Graph, half: dict, start: tuple[int, int], a: int, b: int) -> list[tuple[int, int]]:
    """Component of the ``{a, b}``-colored internal vertices of ``G^(2/3)`` at ``start``.

    In ``G^(2/3)`` the half-edge ``p(1)q`` sees the other half-edges at ``p``
    and its partner ``q(1)p``; terminals carry color 0 and never join.
    """
    seen = {start}
    stack = [start]
    while stack:
        p, q = stack.pop()
        around = [(p, r) for r in g.adjacency[p] if r != q]
        around.append((q, p))
        for h in around:
            if h not in seen and half.get(h) in (a, b):
                seen.add(h)
                stack.append(h)
    return sorted(seen)


def color_2_4(g: Graph) -> Coloring:
    """Insert a middle vertex on each hyperedge of the ``G^(2/3)`` coloring,
    colored with the smallest color absent from that hyperedge."""
    base = color_2_3(g)

    def rebuild(old: list[int], i: int, j: int) -> list[int]:
        missing = min(base.palette - set(old))
        return [old[0], old[1], missing, old[2], old[3]]

    return _respine(g, base, 2, 4, rebuild)


def color_2_5(g: Graph) -> Coloring:
    """``Δ+1`` colors for ``G^(2/5)`` from a proper ``Δ+1`` edge coloring."""
    delta = _require_connected_delta(g, 3)
    ec = misra_gries_edge_coloring(g)
    palette = list(range(delta + 1))
    terminal = []
    for v in range(g.vertex_count):
        around = {ec[(v, u)] for u in g.adjacency[v]}
        terminal.append(next(c for c in palette if c not in around))
    inner = {}
    for i, j in g.sorted_edges():
        e = ec[(i, j)]
        if terminal[i] == terminal[j]:
            x, y = [c for c in palette if c not in (terminal[i], e)][:2]
        else:
            x, y = terminal[j], terminal[i]
        inner[(i, j)] = [e, x, y, e]
    return _from_hyperedges(g, 2, 5, terminal, inner, palette)


# -- lifts -----------------------------------------------------------------

def lift_coloring(g: Graph, m: int, n: int, c: Coloring, check: bool = True) -> Coloring:
    """Carry a coloring of ``G^(m/n)`` to ``G^(m/(n+m+1))`` with the same palette.

    Next to the smaller endpoint ``i`` of each hyperedge, ``m+1`` new
    vertices repeat the colors of positions ``1..m+1``.
    """
    if not m < n:
        raise ValueError("lift needs m < n")
    if (c.m, c.n) != (m, n):
        raise ValueError(f"coloring is for G^({c.m}/{c.n}), not G^({m}/{n})")
    if check:
        _require_proper(g, c, "lift input")

    def rebuild(old: list[int], i: int, j: int) -> list[int]:
        return old[: m + 2] + old[1:]

    out = _respine(g, c, m, n + m + 1, rebuild)
    if check:
        _require_proper(g, out, "lift output")
    return out


def extend_by_one(g: Graph, m: int, n: int, c: Coloring, check: bool = True) -> Coloring:
    """Carry a coloring of ``G^(m/n)`` to ``G^(m/(n+1))`` for ``n >= 2m+2``.

    The new vertex sits between positions ``m`` and ``m+1`` (from the
    smaller endpoint) and takes the smallest palette color missing from
    positions ``1..2m``.
    """
    if n < 2 * m + 2:
        raise ValueError(f"extension needs n >= 2m+2, got n={n}, m={m}")
    if (c.m, c.n) != (m, n):
        raise ValueError(f"coloring is for G^({c.m}/{c.n}), not G^({m}/{n})")
    if len(c.palette) < 2 * m + 1:
        raise ConstructionError(
            f"palette of {len(c.palette)} colors is too small to extend (needs {2 * m + 1})")
    if check:
        _require_proper(g, c, "extension input")

    def rebuild(old: list[int], i: int, j: int) -> list[int]:
        missing = sorted(c.palette - set(old[1: 2 * m + 1]))
        if not missing:
            raise ConstructionError(f"no color missing near {i} on hyperedge {i}-{j}")
        return old[: m + 1] + [missing[0]] + old[m + 1:]

    out = _respine(g, c, m, n + 1, rebuild)
    if check:
        _require_proper(g, out, "extension output")
    return out


def color_2_n(g: Graph, n: int, check: bool = True) -> Coloring:
    """``Δ+1`` colors for ``G^(2/n)``, ``n >= 3``."""
    if n < 3:
        raise ValueError("needs n >= 3")
    if n == 3:
        return color_2_3(g)
    if n == 4:
        return color_2_4(g)
    if n == 5:
        return color_2_5(g)
    return lift_coloring(g, 2, n - 3, color_2_n(g, n - 3, check), check)


def color_m_m1(g: Graph, m: int) -> Coloring:
    """``ω`` colors for ``G^(m/(m+1))``, built by induction on ``m``.

    From ``G^(2k/(2k+1))`` the odd case adds a fresh color at the center of
    every hyperedge; the even case splits the central edge in three and
    colors the two new vertices (together with the terminals, which carry
    color 0) as a shifted copy of the ``G^(2/3)`` coloring. The terminals
    keep color 0 alone throughout.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if m == 1:
        return color_subdivision(g, 2)
    delta = _require_connected_delta(g, 3)
    if m == 2:
        return color_2_3(g)
    k = (m - 1) // 2
    base = color_m_m1(g, 2 * k)
    if m % 2 == 1:
        fresh = k * delta + 1

        def rebuild(old: list[int], i: int, j: int) -> list[int]:
            return old[: k + 1] + [fresh] + old[k + 1:]

        out = _respine(g, base, m, m + 1, rebuild)
        return Coloring(m=m, n=m + 1, assignment=out.assignment, palette=base.palette | {fresh})

    k = m // 2 - 1
    core = color_2_3(g)
    shift = k * delta

    def rebuild_even(old: list[int], i: int, j: int) -> list[int]:
        near, far = core.along(i, j)[1:3]
        return old[: k + 1] + [near + shift, far + shift] + old[k + 1:]

    out = _respine(g, base, m, m + 1, rebuild_even)
    extra = {c + shift for c in core.palette if c != 0}
    return Coloring(m=m, n=m + 1, assignment=out.assignment, palette=base.palette | extra)


def color_m_k_m1(g: Graph, m: int, k: int, check: bool = True) -> Coloring:
    """``ω`` colors for ``G^(m/(k(m+1)))``: ``k-1`` lifts of :func:`color_m_m1`."""
    if k < 1:
        raise ValueError("k must be positive")
    c = color_m_m1(g, m)
    n = m + 1
    for _ in range(k - 1):
        c = lift_coloring(g, m, n, c, check)
        n += m + 1
    return c


# -- dispatcher ------------------------------------------------------------

FALLBACK = "fallback-exact"


def extension_applies(delta: int, m: int) -> bool:
    """Whether the one-step extension is guaranteed a free color for this ``(Δ, m)``."""
    if m < 2:
        return False
    return delta >= 4 if m % 2 == 0 else delta >= 5


def color_fractional(g: Graph, m: int, n: int, time_limit: float | None = None,
                     check: bool = True) -> tuple[Coloring, str]:
    """Color ``G^(m/n)`` with the shortest applicable construction.

    Returns the coloring and a method tag. When no construction covers
    ``(G, m, n)`` the exact oracle colors the materialized power under
    ``time_limit`` (and may raise :class:`~fracpower.oracles.OracleUnknown`).
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    connected = is_connected(g)
    delta = max_degree(g)
    if connected and g.vertex_count > 0 and delta <= 2:
        return color_low_degree(g, m, n), "path-cycle-power"
    if connected and delta >= 3:
        if m == 1 and n >= 2:
            return color_subdivision(g, n), "subdivision"
        if m < n:
            if m == 2:
                return color_2_n(g, n, check), "two-over-n"
            if n % (m + 1) == 0:
                k = n // (m + 1)
                tag = "m-over-m+1" if k == 1 else "lifted-m-over-m+1"
                return color_m_k_m1(g, m, k, check), tag
            if n >= 2 * m + 2 and extension_applies(delta, m):
                k = n // (m + 1)
                c = color_m_k_m1(g, m, k, check)
                for nn in range(k * (m + 1), n):
                    c = extend_by_one(g, m, nn, c, check)
                return c, "extend-by-one"
    pg = fractional_power(g, m, n)
    colors = exact_coloring(pg.materialized, time_limit)
    assignment = dict(zip(pg.names, colors))
    return Coloring(m=m, n=n, assignment=assignment, palette=frozenset(colors)), FALLBACK


# -- coloring files --------------------------------------------------------

def format_coloring(pg: PowerGraph, c: Coloring) -> str:
    lines = [f"palette {c.palette_size}"]
    for v in pg.names:
        lines.append(f"{v.name()} {c.assignment[v]}")
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, m: int, n: int) -> Coloring:
    from .power import parse_subvertex

    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("palette "):
        raise ValueError("coloring file must start with 'palette <size>'")
    size = int(lines[0].split()[1])
    assignment = {}
    for ln in lines[1:]:
        name, col = ln.split()
        assignment[parse_subvertex(name)] = int(col)
    used = set(assignment.values())
    palette = used if len(used) == size else set(range(size)) | used
    return Coloring(m=m, n=n, assignment=assignment, palette=frozenset(palette))
