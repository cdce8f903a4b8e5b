"""Simple undirected graphs on dense integer vertices, graph6 codec, and
structural predicates.

Vertices are always 0..n-1 and adjacency is stored as one integer bitmask per
vertex, which keeps set intersection (triangle tests, traversals) cheap for
the exhaustive searches built on top.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

MAX_GRAPH6_ORDER = 62  # short-form header only


class Graph6Error(ValueError):
    """Malformed graph6 record; ``offset`` is the byte position at fault."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def pair_order(n: int) -> list[tuple[int, int]]:
    """Upper-triangle vertex pairs in column-major order, the graph6 bit order."""
    return [(i, j) for j in range(1, n) for i in range(j)]


class Graph:
    """Immutable simple graph: no loops, no multi-edges, vertices 0..n-1."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {n!r}")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range [0, {n})")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.adj = tuple(masks)

    @classmethod
    def from_masks(cls, n: int, masks: tuple[int, ...]) -> "Graph":
        """Wrap prevalidated adjacency bitmasks (hot path for enumerators)."""
        g = object.__new__(cls)
        g.n = n
        g.adj = masks
        return g

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        """Degrees in vertex order (not sorted)."""
        return tuple(a.bit_count() for a in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        mask = self.adj[v]
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            mask = self.adj[u] >> (u + 1) << (u + 1)
            while mask:
                low = mask & -mask
                yield (u, low.bit_length() - 1)
                mask ^= low

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


@dataclass(frozen=True)
class DegreeStats:
    """Degree sequence summary: sorted degrees plus the derived scalars."""

    degrees: tuple[int, ...]  # non-increasing
    n: int
    m: int
    max_degree: int
    min_degree: int
    max_degree_count: int
    mean_degree: Fraction


def degree_stats(g: Graph) -> DegreeStats:
    """Sorted degree sequence with n, m, max/min degree, max-degree
    multiplicity and the exact mean 2m/n."""
    degs = sorted(g.degrees(), reverse=True)
    total = sum(degs)
    return DegreeStats(
        degrees=tuple(degs),
        n=g.n,
        m=total // 2,
        max_degree=degs[0],
        min_degree=degs[-1],
        max_degree_count=degs.count(degs[0]),
        mean_degree=Fraction(total, g.n),
    )


# ---------------------------------------------------------------------------
# graph6 codec (short form, n <= 62)
#
# Layout: one header byte chr(n + 63), then the C(n,2) upper-triangle bits in
# column-major order packed into 6-bit groups (first bit = high bit of the
# group), each group offset by 63. Trailing pad bits must be zero.
# ---------------------------------------------------------------------------

_HEADER_PREFIX = ">>graph6<<"


def encode_graph6(g: Graph) -> str:
    if g.n > MAX_GRAPH6_ORDER:
        raise Graph6Error(f"short-form graph6 supports n <= 62, got n={g.n}")
    out = [chr(g.n + 63)]
    group = 0
    filled = 0
    for i, j in pair_order(g.n):
        group = group << 1 | (g.adj[i] >> j & 1)
        filled += 1
        if filled == 6:
            out.append(chr(group + 63))
            group, filled = 0, 0
    if filled:
        out.append(chr((group << (6 - filled)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record; tolerates the optional '>>graph6<<' prefix."""
    s = text.strip()
    if s.startswith(_HEADER_PREFIX):
        s = s[len(_HEADER_PREFIX):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("non-ASCII byte in record", offset=exc.start) from None
    if not data:
        raise Graph6Error("empty record")
    head = data[0]
    if head == 126:
        raise Graph6Error("long-form header (n > 62) not supported")
    if not 63 <= head <= 125:
        raise Graph6Error(f"invalid header byte {head}")
    n = head - 63
    if n < 1:
        raise Graph6Error("graph order must be at least 1")
    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(data) - 1 != expect:
        raise Graph6Error(
            f"expected {expect} payload bytes for n={n}, got {len(data) - 1}",
            offset=len(data),
        )
    masks = [0] * n
    pairs = pair_order(n)
    bit = 0
    for k in range(expect):
        byte = data[1 + k]
        if not 63 <= byte <= 126:
            raise Graph6Error(f"invalid payload byte {byte}", offset=1 + k)
        group = byte - 63
        for t in range(6):
            if group >> (5 - t) & 1:
                if bit >= nbits:
                    raise Graph6Error("nonzero padding bits", offset=1 + k)
                i, j = pairs[bit]
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            bit += 1
    return Graph.from_masks(n, tuple(masks))


# ---------------------------------------------------------------------------
# structural predicates
# ---------------------------------------------------------------------------

def is_connected(g: Graph) -> bool:
    """True when every vertex is reachable from vertex 0."""
    full = (1 << g.n) - 1
    seen = 1
    frontier = g.adj[0]
    while frontier:
        seen |= frontier
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= g.adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
    return seen == full


def is_regular(g: Graph) -> bool:
    degs = g.degrees()
    return min(degs) == max(degs)


def find_triangle(g: Graph) -> tuple[int, int, int] | None:
    """A 3-clique (u, v, w) if one exists, else None."""
    for u in range(g.n):
        rest = g.adj[u] >> (u + 1) << (u + 1)
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            common = g.adj[u] & g.adj[v]
            if common:
                return (u, v, (common & -common).bit_length() - 1)
            rest ^= low
    return None


def is_triangle_free(g: Graph) -> bool:
    return find_triangle(g) is None


def two_coloring(g: Graph) -> tuple[int, ...] | None:
    """Per-vertex colors 0/1 of a proper 2-coloring, or None if not bipartite.

    Isolated vertices and the first vertex of every component get color 0.
    """
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            mask = g.adj[u]
            while mask:
                low = mask & -mask
                v = low.bit_length() - 1
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    stack.append(v)
                elif color[v] == color[u]:
                    return None
                mask ^= low
    return tuple(color)


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def is_complete_bipartite(g: Graph) -> bool:
    """True when some bipartition (A, B) has edge set exactly A x B.

    Edgeless graphs qualify with one empty side; with any edge present the
    graph must be connected, bipartite, and have all |A|*|B| cross edges.
    """
    degs = g.degrees()
    m2 = sum(degs)
    if m2 == 0:
        return True
    colors = two_coloring(g)
    if colors is None or not is_connected(g):
        return False
    a = colors.count(0)
    return m2 // 2 == a * (g.n - a)


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def is_path_graph(g: Graph) -> bool:
    """Connected with degree multiset {1, 1, 2, ..., 2} (P_1 and P_2 included)."""
    if not is_tree(g):
        return False
    if g.n <= 2:
        return True
    degs = sorted(g.degrees())
    return degs[0] == degs[1] == 1 and degs[2] == degs[-1] == 2


def is_star_graph(g: Graph) -> bool:
    """Connected with one center adjacent to all n-1 leaves (K_2 included)."""
    if not is_tree(g) or g.n < 2:
        return False
    degs = sorted(g.degrees())
    return degs[-1] == g.n - 1 and (g.n == 2 or degs[-2] == 1)
