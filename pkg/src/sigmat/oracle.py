"""Exhaustive labeled enumeration of small graphs and trees, extremal
search, and conjecture verification.

Enumeration is labeled, not isomorphism-reduced: every quantity tested is
isomorphism-invariant, so scanning all 2^C(n,2) edge subsets (or all n^(n-2)
labeled trees) proves the same statements while avoiding canonical forms.
Internal limits are n <= 7 for graphs and n <= 9 for trees; larger orders
arrive through graph6 line streams produced by external generators.

Searches over the edge-subset space can be split into shards by the
high-order edge bits. Shards are independent, may run concurrently, and are
merged in mask order, so results are identical for any shard count.
"""

from __future__ import annotations

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Iterator

from . import bulk
from .extremal import max_bipartite_split
from .graph import Graph, Graph6Error, encode_graph6, is_connected, is_triangle_free, pair_order, parse_graph6
from .invariants import degree_variance, sigma, sigma_t_pairsum, zagreb_m1

log = logging.getLogger("sigmat.oracle")

MAX_ENUM_ORDER = 7
MAX_TREE_ORDER = 9
WITNESS_CAP = 16


class LimitError(ValueError):
    """Requested order is beyond the internal enumeration limits."""


def graph_from_mask(n: int, mask: int, pairs: list[tuple[int, int]] | None = None) -> Graph:
    """Graph for one edge-subset mask (bits in graph6 column-major order)."""
    if pairs is None:
        pairs = pair_order(n)
    masks = [0] * n
    mm = int(mask)
    while mm:
        low = mm & -mm
        i, j = pairs[low.bit_length() - 1]
        masks[i] |= 1 << j
        masks[j] |= 1 << i
        mm ^= low
    return Graph.from_masks(n, tuple(masks))


def enumerate_connected_graphs(n: int, mask_range: tuple[int, int] | None = None) -> Iterator[Graph]:
    """Every labeled simple connected graph on n vertices, exactly once, in
    ascending edge-mask order."""
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise LimitError(
            f"internal enumeration covers 1 <= n <= {MAX_ENUM_ORDER}; "
            f"for n={n} feed a graph6 stream through ingest_graph6"
        )
    pairs = pair_order(n)
    lo, hi = mask_range if mask_range is not None else (0, 1 << len(pairs))
    full = (1 << n) - 1
    for mask in range(lo, hi):
        masks = [0] * n
        mm = mask
        while mm:
            low = mm & -mm
            i, j = pairs[low.bit_length() - 1]
            masks[i] |= 1 << j
            masks[j] |= 1 << i
            mm ^= low
        seen = 1
        frontier = masks[0]
        while frontier:
            seen |= frontier
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= masks[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
        if seen == full:
            yield Graph.from_masks(n, tuple(masks))


def prufer_edges(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    """Edges of the labeled tree encoded by a length n-2 sequence over 0..n-1."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    edges = []
    for x in seq:
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return edges


def enumerate_trees(n: int) -> Iterator[Graph]:
    """All n^(n-2) labeled trees via Prüfer decoding, in sequence order."""
    if not 2 <= n <= MAX_TREE_ORDER:
        raise LimitError(f"tree enumeration covers 2 <= n <= {MAX_TREE_ORDER}, got n={n}")
    for seq in product(range(n), repeat=n - 2):
        yield Graph(n, prufer_edges(seq, n))


def random_graphs(n: int, count: int, seed: int) -> Iterator[Graph]:
    """``count`` uniform random graphs (edge probability 1/2) from an
    explicit seed; the stream is reproducible."""
    pairs = pair_order(n)
    rng = random.Random(seed)
    nbits = len(pairs)
    for _ in range(count):
        yield graph_from_mask(n, rng.getrandbits(nbits), pairs)


def ingest_graph6(
    lines: Iterable[str],
    skip_bad: bool = False,
    on_bad: Callable[[int, str, Graph6Error], None] | None = None,
) -> Iterator[Graph]:
    """Decode a line-oriented graph6 stream in order.

    Malformed lines raise with the 1-based line number, or, under
    ``skip_bad``, are reported to ``on_bad`` and dropped.
    """
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield parse_graph6(line)
        except Graph6Error as exc:
            if skip_bad:
                if on_bad is not None:
                    on_bad(lineno, line, exc)
                continue
            raise Graph6Error(f"line {lineno}: {exc}", offset=exc.offset) from None


# ---------------------------------------------------------------------------
# extremal search
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchResult:
    """Extremal value of sigma_t over a graph family with labeled witnesses.

    ``witnesses`` is capped at WITNESS_CAP entries; ``tie_count`` is always
    the exact number of graphs attaining the value.
    """

    family_description: str
    n: int
    objective: str
    extreme_value: int
    witnesses: tuple[str, ...]
    tie_count: int
    graphs_visited: int

    def to_json_dict(self) -> dict:
        return {
            "familyDescription": self.family_description,
            "n": self.n,
            "objective": self.objective,
            "extremeValue": self.extreme_value,
            "witnesses": list(self.witnesses),
            "tieCount": self.tie_count,
            "graphsVisited": self.graphs_visited,
        }


def _better(objective: str, new: int, best: int) -> bool:
    return new > best if objective == "max" else new < best


def search_extremal(
    graphs: Iterable[Graph],
    objective: str,
    predicate: Callable[[Graph], bool] | None = None,
    description: str = "stream",
) -> SearchResult:
    """Scan a graph stream for the max or min sigma_t; deterministic given
    the stream order."""
    if objective not in ("max", "min"):
        raise ValueError(f"objective must be 'max' or 'min', got {objective!r}")
    best: int | None = None
    witnesses: list[str] = []
    ties = 0
    visited = 0
    n_seen: int | None = None
    for g in graphs:
        if predicate is not None and not predicate(g):
            continue
        if n_seen is None:
            n_seen = g.n
        elif g.n != n_seen:
            raise ValueError(f"mixed graph orders in stream: {n_seen} and {g.n}")
        visited += 1
        val = n_seen * zagreb_m1(g) - 4 * g.m * g.m
        if best is None or _better(objective, val, best):
            best = val
            ties = 1
            witnesses = [encode_graph6(g)]
        elif val == best:
            ties += 1
            if len(witnesses) < WITNESS_CAP:
                witnesses.append(encode_graph6(g))
    if best is None:
        raise ValueError("empty family: no graphs left after filtering")
    return SearchResult(
        family_description=description,
        n=n_seen,
        objective=f"{objective}-sigma-t",
        extreme_value=best,
        witnesses=tuple(witnesses),
        tie_count=ties,
        graphs_visited=visited,
    )


GRAPH_FILTERS = ("none", "triangle-free", "nonregular", "tree")


def shard_ranges(n: int, shards: int) -> list[tuple[int, int]]:
    """Split the edge-subset mask space by fixed high-order bits into
    ``shards`` equal contiguous ranges (shards must be a power of two)."""
    nbits = n * (n - 1) // 2
    if shards < 1 or shards & (shards - 1):
        raise ValueError(f"shard count must be a power of two, got {shards}")
    if shards > 1 << nbits:
        raise ValueError(f"{shards} shards exceed the {1 << nbits} edge subsets at n={n}")
    width = (1 << nbits) // shards
    return [(k * width, (k + 1) * width) for k in range(shards)]


def _shard_scan(n: int, objective: str, graph_filter: str, lo: int, hi: int):
    """One shard of a labeled connected search: local extreme, capped
    witness masks, exact tie count, and the family size scanned."""
    table = bulk.connected_table(n, lo, hi)
    if graph_filter == "triangle-free":
        keep = table.triangle_free
    elif graph_filter == "nonregular":
        keep = table.max_deg != table.min_deg
    elif graph_filter == "tree":
        keep = table.m == n - 1
    else:
        keep = slice(None)
    values = table.sigma_t[keep]
    masks = table.masks[keep]
    if values.size == 0:
        return None
    best = int(values.max() if objective == "max" else values.min())
    hits = masks[values == best]
    return (best, [int(x) for x in hits[:WITNESS_CAP]], int(hits.size), int(values.size))


def search_connected(
    n: int,
    objective: str,
    graph_filter: str = "none",
    shards: int = 1,
) -> SearchResult:
    """Extremal sigma_t over all labeled connected graphs on n vertices
    (optionally filtered), via the vectorized mask tables.

    With ``shards`` > 1 the mask space is partitioned by high-order edge
    bits and the shards are scanned concurrently; the merge keeps mask
    order, so the result is identical for every shard count.
    """
    if objective not in ("max", "min"):
        raise ValueError(f"objective must be 'max' or 'min', got {objective!r}")
    if graph_filter not in GRAPH_FILTERS:
        raise ValueError(f"unknown filter {graph_filter!r}; expected one of {GRAPH_FILTERS}")
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise LimitError(
            f"internal search covers 1 <= n <= {MAX_ENUM_ORDER}; "
            f"for n={n} use search_extremal on a graph6 stream"
        )
    ranges = shard_ranges(n, shards)
    if shards == 1:
        partials = [_shard_scan(n, objective, graph_filter, lo, hi) for lo, hi in ranges]
    else:
        with ThreadPoolExecutor(max_workers=min(shards, 8)) as pool:
            partials = list(
                pool.map(lambda r: _shard_scan(n, objective, graph_filter, r[0], r[1]), ranges)
            )
    best: int | None = None
    witness_masks: list[int] = []
    ties = 0
    visited = 0
    for part in partials:
        if part is None:
            continue
        value, masks, count, seen = part
        visited += seen
        if best is None or _better(objective, value, best):
            best = value
            ties = count
            witness_masks = list(masks)
        elif value == best:
            ties += count
            witness_masks.extend(masks)
    if best is None:
        raise ValueError(f"empty family: no {graph_filter} connected graphs at n={n}")
    pairs = pair_order(n)
    witnesses = tuple(
        encode_graph6(graph_from_mask(n, mask, pairs)) for mask in witness_masks[:WITNESS_CAP]
    )
    label = "connected" if graph_filter == "none" else f"connected {graph_filter}"
    return SearchResult(
        family_description=f"{label} graphs on {n} vertices",
        n=n,
        objective=f"{objective}-sigma-t",
        extreme_value=best,
        witnesses=witnesses,
        tie_count=ties,
        graphs_visited=visited,
    )


# ---------------------------------------------------------------------------
# labeled tree sweep
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TreeSweep:
    """Everything one exhaustive pass over the labeled trees establishes."""

    n: int
    trees: int
    max_value: int
    max_count: int
    max_all_stars: bool
    max_witnesses: tuple[str, ...]
    min_value: int
    min_count: int
    min_all_paths: bool
    min_witnesses: tuple[str, ...]
    ratio_violations: int          # trees with sigma_t > (n-2) * sigma
    ratio_violation_witnesses: tuple[str, ...]
    ratio_equality_count: int      # trees with sigma_t == (n-2) * sigma
    ratio_equality_all_paths: bool
    ratio_equality_witnesses: tuple[str, ...]
    sigma_eq_count: int            # trees with sigma == sigma_t
    sigma_eq_all_stars: bool
    star_count: int


@lru_cache(maxsize=None)
def tree_sweep(n: int) -> TreeSweep:
    """Single pass over all n^(n-2) labeled trees collecting the extremal
    values, the sigma_t <= (n-2)*sigma comparison, and the sigma == sigma_t
    set. Results are cached per order; the Prüfer decode is inlined for
    speed and cross-validated against :func:`enumerate_trees` in the test
    suite."""
    if not 2 <= n <= MAX_TREE_ORDER:
        raise LimitError(f"tree sweep covers 2 <= n <= {MAX_TREE_ORDER}, got n={n}")
    factor = n - 2
    four_m2 = 4 * (n - 1) * (n - 1)
    max_value = -1
    max_count = 0
    max_all_stars = True
    max_seqs: list[tuple[int, ...]] = []
    min_value = 1 << 62
    min_count = 0
    min_all_paths = True
    min_seqs: list[tuple[int, ...]] = []
    violations = 0
    violation_seqs: list[tuple[int, ...]] = []
    eq_count = 0
    eq_all_paths = True
    eq_seqs: list[tuple[int, ...]] = []
    sig_eq_count = 0
    sig_eq_all_stars = True
    star_count = 0
    trees = 0

    for seq in product(range(n), repeat=n - 2):
        trees += 1
        deg = [1] * n
        for x in seq:
            deg[x] += 1
        m1 = 0
        for d in deg:
            m1 += d * d
        st = n * m1 - four_m2

        # Prüfer decode, accumulating sigma over the edges as they appear
        work = deg[:]
        ptr = 0
        while work[ptr] != 1:
            ptr += 1
        leaf = ptr
        sig = 0
        for x in seq:
            d = deg[leaf] - deg[x]
            sig += d * d
            work[x] -= 1
            if work[x] == 1 and x < ptr:
                leaf = x
            else:
                ptr += 1
                while work[ptr] != 1:
                    ptr += 1
                leaf = ptr
        d = deg[leaf] - deg[n - 1]
        sig += d * d

        is_star = deg.count(n - 1) == 1 or n == 2
        if is_star:
            star_count += 1
        if st > max_value:
            max_value, max_count, max_all_stars = st, 1, is_star
            max_seqs = [seq]
        elif st == max_value:
            max_count += 1
            max_all_stars = max_all_stars and is_star
            if len(max_seqs) < WITNESS_CAP:
                max_seqs.append(seq)
        is_path = max(deg) <= 2
        if st < min_value:
            min_value, min_count, min_all_paths = st, 1, is_path
            min_seqs = [seq]
        elif st == min_value:
            min_count += 1
            min_all_paths = min_all_paths and is_path
            if len(min_seqs) < WITNESS_CAP:
                min_seqs.append(seq)

        bound = factor * sig
        if st > bound:
            violations += 1
            if len(violation_seqs) < WITNESS_CAP:
                violation_seqs.append(seq)
        elif st == bound:
            eq_count += 1
            eq_all_paths = eq_all_paths and is_path
            if len(eq_seqs) < WITNESS_CAP:
                eq_seqs.append(seq)

        if sig == st:
            sig_eq_count += 1
            sig_eq_all_stars = sig_eq_all_stars and is_star

    def witness(seqs):
        return tuple(encode_graph6(Graph(n, prufer_edges(s, n))) for s in seqs)

    return TreeSweep(
        n=n,
        trees=trees,
        max_value=max_value,
        max_count=max_count,
        max_all_stars=max_all_stars,
        max_witnesses=witness(max_seqs),
        min_value=min_value,
        min_count=min_count,
        min_all_paths=min_all_paths,
        min_witnesses=witness(min_seqs),
        ratio_violations=violations,
        ratio_violation_witnesses=witness(violation_seqs),
        ratio_equality_count=eq_count,
        ratio_equality_all_paths=eq_all_paths,
        ratio_equality_witnesses=witness(eq_seqs),
        sigma_eq_count=sig_eq_count,
        sigma_eq_all_stars=sig_eq_all_stars,
        star_count=star_count,
    )


def search_trees(n: int, objective: str) -> SearchResult:
    """Extremal sigma_t over all labeled trees on n vertices."""
    if objective not in ("max", "min"):
        raise ValueError(f"objective must be 'max' or 'min', got {objective!r}")
    sweep = tree_sweep(n)
    if objective == "max":
        value, count, witnesses = sweep.max_value, sweep.max_count, sweep.max_witnesses
    else:
        value, count, witnesses = sweep.min_value, sweep.min_count, sweep.min_witnesses
    return SearchResult(
        family_description=f"labeled trees on {n} vertices",
        n=n,
        objective=f"{objective}-sigma-t",
        extreme_value=value,
        witnesses=witnesses,
        tie_count=count,
        graphs_visited=sweep.trees,
    )


# ---------------------------------------------------------------------------
# conjecture harnesses
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConjectureReport:
    """Outcome of one conjecture run; any counterexample listed violates the
    conjectured statement when re-checked."""

    conjecture_id: int
    n_range: tuple[int, int]
    status: str                       # "verified" | "counterexample"
    counterexamples: tuple[str, ...]
    extremal_witnesses: tuple[str, ...]
    max_value: int | None = None
    reference_value: int | None = None
    tie_count: int | None = None
    graphs_visited: int | None = None
    equality_count: int | None = None
    equality_all_paths: bool | None = None

    def to_json_dict(self) -> dict:
        out = {
            "conjectureId": self.conjecture_id,
            "nRange": list(self.n_range),
            "status": self.status,
            "counterexamples": list(self.counterexamples),
            "extremalWitnesses": list(self.extremal_witnesses),
        }
        if self.max_value is not None:
            out["maxValue"] = self.max_value
        if self.reference_value is not None:
            out["referenceValue"] = self.reference_value
        if self.tie_count is not None:
            out["tieCount"] = self.tie_count
        if self.graphs_visited is not None:
            out["graphsVisited"] = self.graphs_visited
        if self.equality_count is not None:
            out["equalityWitnesses"] = list(self.extremal_witnesses)
            out["equalityCount"] = self.equality_count
            out["equalityAllPaths"] = self.equality_all_paths
        return out


def _triangle_free_shard(n: int, reference: int, lo: int, hi: int):
    """One shard of the internal triangle-free scan: local max, capped
    witness masks, exact tie count, capped offender masks, family size."""
    table = bulk.connected_table(n, lo, hi)
    keep = table.triangle_free
    values = table.sigma_t[keep]
    masks = table.masks[keep]
    if values.size == 0:
        return None
    best = int(values.max())
    hits = masks[values == best]
    bad = masks[values > reference]
    return (
        best,
        [int(x) for x in hits[:WITNESS_CAP]],
        int(hits.size),
        [int(x) for x in bad[:WITNESS_CAP]],
        int(values.size),
    )


def verify_conjecture1(
    n: int,
    graphs: Iterable[Graph] | None = None,
    shards: int = 1,
) -> ConjectureReport:
    """Check that no connected triangle-free graph on n vertices beats the
    best complete bipartite sigma_t.

    Without an external stream the check enumerates internally (n <= 7),
    optionally split into mask-range shards that scan concurrently; a
    stream is filtered to connected triangle-free graphs of order n.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    reference = max_bipartite_split(n).value
    if graphs is None:
        if n > MAX_ENUM_ORDER:
            raise LimitError(
                f"internal enumeration covers n <= {MAX_ENUM_ORDER}; "
                f"pass a graph6 stream for n={n}"
            )
        ranges = shard_ranges(n, shards)
        if shards == 1:
            parts = [_triangle_free_shard(n, reference, lo, hi) for lo, hi in ranges]
        else:
            with ThreadPoolExecutor(max_workers=min(shards, 8)) as pool:
                parts = list(pool.map(
                    lambda r: _triangle_free_shard(n, reference, r[0], r[1]), ranges
                ))
        best = -1
        ties = 0
        visited = 0
        witness_masks: list[int] = []
        bad_masks: list[int] = []
        for part in parts:
            if part is None:
                continue
            value, hits, count, bad, seen = part
            visited += seen
            bad_masks.extend(bad)
            if value > best:
                best = value
                ties = count
                witness_masks = list(hits)
            elif value == best:
                ties += count
                witness_masks.extend(hits)
        pairs = pair_order(n)
        witnesses = tuple(
            encode_graph6(graph_from_mask(n, mask, pairs))
            for mask in witness_masks[:WITNESS_CAP]
        )
        counterexamples = tuple(
            encode_graph6(graph_from_mask(n, mask, pairs))
            for mask in bad_masks[:WITNESS_CAP]
        )
    else:
        best = -1
        ties = 0
        visited = 0
        witness_list: list[str] = []
        counter_list: list[str] = []
        for g in graphs:
            if g.n != n:
                raise ValueError(f"stream graph has order {g.n}, expected {n}")
            if not is_connected(g) or not is_triangle_free(g):
                continue
            visited += 1
            val = n * zagreb_m1(g) - 4 * g.m * g.m
            if val > best:
                best = val
                ties = 1
                witness_list = [encode_graph6(g)]
            elif val == best:
                ties += 1
                if len(witness_list) < WITNESS_CAP:
                    witness_list.append(encode_graph6(g))
            if val > reference and len(counter_list) < WITNESS_CAP:
                counter_list.append(encode_graph6(g))
        if visited == 0:
            raise ValueError("stream contained no connected triangle-free graphs")
        witnesses = tuple(witness_list)
        counterexamples = tuple(counter_list)
    log.debug("conjecture 1 at n=%d: max %d vs bipartite %d over %d graphs",
              n, best, reference, visited)
    return ConjectureReport(
        conjecture_id=1,
        n_range=(n, n),
        status="verified" if not counterexamples else "counterexample",
        counterexamples=counterexamples,
        extremal_witnesses=witnesses,
        max_value=best,
        reference_value=reference,
        tie_count=ties,
        graphs_visited=visited,
    )


def verify_conjecture2(n: int) -> ConjectureReport:
    """Check sigma_t(T) <= (n-2) * sigma(T) over every labeled tree, with
    equality exactly on paths."""
    if not 3 <= n <= MAX_TREE_ORDER:
        raise LimitError(f"conjecture 2 runs for 3 <= n <= {MAX_TREE_ORDER}, got n={n}")
    sweep = tree_sweep(n)
    ok = sweep.ratio_violations == 0 and sweep.ratio_equality_all_paths
    counterexamples = sweep.ratio_violation_witnesses
    if sweep.ratio_violations == 0 and not sweep.ratio_equality_all_paths:
        # equality on a non-path falsifies the characterization half
        counterexamples = sweep.ratio_equality_witnesses
    return ConjectureReport(
        conjecture_id=2,
        n_range=(n, n),
        status="verified" if ok else "counterexample",
        counterexamples=counterexamples,
        extremal_witnesses=sweep.ratio_equality_witnesses,
        graphs_visited=sweep.trees,
        equality_count=sweep.ratio_equality_count,
        equality_all_paths=sweep.ratio_equality_all_paths,
    )


# ---------------------------------------------------------------------------
# identity suite
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IdentitySummary:
    checked: int
    passed: int
    failed: int
    first_failure: str | None
    seed: int | None = None

    def to_json_dict(self) -> dict:
        out = {
            "checked": self.checked,
            "passed": self.passed,
            "failed": self.failed,
            "firstFailure": self.first_failure,
        }
        if self.seed is not None:
            out["seed"] = self.seed
        return out


def verify_identity_suite(graphs: Iterable[Graph], seed: int | None = None) -> IdentitySummary:
    """Assert the index identities on every stream graph, all exactly:
    pair-sum sigma_t vs n*M1 - 4m^2, vs n^2 * variance, and the sigma
    edge-sum vs F - 2*M2 decomposition."""
    checked = passed = failed = 0
    first_failure = None
    for g in graphs:
        checked += 1
        n, m = g.n, g.m
        degs = g.degrees()
        by_pairs = sigma_t_pairsum(g)
        by_formula = n * zagreb_m1(g) - 4 * m * m
        by_variance = n * n * degree_variance(g)
        by_edges = sigma(g)
        decomposed = sum(d ** 3 for d in degs) - 2 * sum(
            degs[u] * degs[v] for u, v in g.edges()
        )
        if by_pairs == by_formula == by_variance and by_edges == decomposed:
            passed += 1
        else:
            failed += 1
            if first_failure is None:
                first_failure = encode_graph6(g)
    return IdentitySummary(
        checked=checked, passed=passed, failed=failed,
        first_failure=first_failure, seed=seed,
    )
