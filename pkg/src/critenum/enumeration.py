"""Exhaustive generation of k-vertex-critical family-free graphs.

The search grows graphs one vertex at a time from seed graphs.  A graph
whose chromatic number is still below k is extended by a new vertex with
every allowed neighborhood; a graph that reached chromatic number k is
emitted iff it is k-vertex-critical, and never extended (no supergraph of a
non-critical chi >= k graph can be vertex-critical).  Canonical forms keep
a global seen-set so no graph is expanded twice, regardless of how many
seeds or paths reach it.

Pruning rests on one fact about any vertex-critical completion G of the
working graph I: G contains no comparable vertices and, more generally, no
disjoint nonempty X, Y that are anticomplete with chi(G[X]) <= chi(G[Y])
and Y complete to N(X).  If I currently contains such a pair (X, Y), some
future vertex must be adjacent to X while missing part of Y, and it may as
well be the next one: extensions that do not repair the recorded
obstruction are skipped.  Every vertex-critical supergraph survives some
addition order, so the output set is unchanged (the no-pruning run is the
differential oracle for this).

Workers share nothing but the seen-set, which the round-based driver owns;
results are merged in deterministic submission order, so output is
byte-identical for any job count.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterator

from .canon import canonical_form
from .coloring import is_k_colorable
from .critical import find_comparable_pair, find_xy_obstruction
from .graphs import Graph, _graph, complement, complete, cycle, delete_vertex
from .patterns import Pattern, free_after_extension, is_family_free, parse_pattern


@dataclass(frozen=True)
class PruningFlags:
    comparable_pair: bool = True
    xy_obstruction: bool = True

    @property
    def any_enabled(self) -> bool:
        return self.comparable_pair or self.xy_obstruction


NO_PRUNING = PruningFlags(comparable_pair=False, xy_obstruction=False)


@dataclass(frozen=True)
class SearchConfig:
    k: int
    family: tuple[Pattern, ...]
    max_order: int
    seeds: tuple[Graph, ...] = ()
    pruning: PruningFlags = PruningFlags()

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be positive")
        if not 1 <= self.max_order <= 64:
            raise ValueError("max_order must be within 1..64")


@dataclass(frozen=True)
class ExpansionObligation:
    """An obstruction the next added vertex must repair.

    ``x`` and ``y`` are vertex bitmasks of the working graph; a new vertex
    is allowed only if it is adjacent to some vertex of ``x`` and
    nonadjacent to some vertex of ``y``.  The singleton case records a
    comparable pair (u, v) with N(u) subset of N(v).
    """

    x: int
    y: int

    @classmethod
    def from_pair(cls, u: int, v: int) -> "ExpansionObligation":
        return cls(1 << u, 1 << v)


@dataclass
class EnumerationResult:
    graphs: list[Graph]
    per_order_counts: dict[int, int]
    nodes_visited: int
    complete: bool


def one_vertex_extensions(g: Graph) -> Iterator[Graph]:
    """All 2^n one-vertex extensions, in ascending neighborhood-mask order."""
    n = g.n
    rows = g.rows
    newbit = 1 << n
    for s in range(1 << n):
        yield _graph(
            n + 1,
            tuple((r | newbit) if (s >> i) & 1 else r for i, r in enumerate(rows)) + (s,),
        )


def find_obligations(g: Graph, flags: PruningFlags) -> list[ExpansionObligation]:
    """The first obstruction present in ``g`` under the enabled rules (at most one).

    The subset rule subsumes the comparable-pair rule (singletons are its
    (1, 1) case), so with both flags on a single scan suffices.
    """
    if flags.xy_obstruction:
        ob = find_xy_obstruction(g, 2)
        return [ExpansionObligation(*ob)] if ob else []
    if flags.comparable_pair:
        pair = find_comparable_pair(g)
        return [ExpansionObligation.from_pair(*pair)] if pair else []
    return []


def pruning_allows(g_extended: Graph, obligations: list[ExpansionObligation],
                   cfg: SearchConfig | None = None) -> bool:
    """Whether the newest vertex of ``g_extended`` repairs every recorded obligation."""
    s = g_extended.rows[g_extended.n - 1]
    return all(s & ob.x and ob.y & ~s for ob in obligations)


# Node outcomes for the search driver.
_OUT = 0        # emitted as k-vertex-critical
_DEAD = 1       # chi >= k but not critical: no supergraph can be critical
_TRUNCATED = 2  # chi < k at the order cap: open branch
_EXPAND = 3


def _process_node(g: Graph, cfg: SearchConfig):
    k = cfg.k
    if is_k_colorable(g, k - 1) is None:
        for v in sorted(range(g.n), key=lambda u: -g.rows[u].bit_count()):
            if is_k_colorable(delete_vertex(g, v), k - 1) is None:
                return (_DEAD, None)
        return (_OUT, None)
    if g.n >= cfg.max_order:
        return (_TRUNCATED, None)
    return (_EXPAND, _allowed_free_extensions(g, cfg))


def _allowed_free_extensions(g: Graph, cfg: SearchConfig) -> list[Graph]:
    n = g.n
    rows = g.rows
    newbit = 1 << n
    family = cfg.family
    obligations = find_obligations(g, cfg.pruning)
    if obligations:
        xm, ym = obligations[0].x, obligations[0].y
    children = []
    for s in range(1 << n):
        if obligations and not (s & xm and ym & ~s):
            continue
        child = _graph(
            n + 1,
            tuple((r | newbit) if (s >> i) & 1 else r for i, r in enumerate(rows)) + (s,),
        )
        if free_after_extension(child, family, n):
            children.append(child)
    return children


def recursively_enumerate(
    cfg: SearchConfig,
    seed: Graph,
    seen: set[bytes],
    out: list[Graph],
    jobs: int = 1,
    progress: Callable[[int, int], None] | None = None,
) -> EnumerationResult:
    """Enumerate all k-vertex-critical family-free graphs above ``seed``.

    Every such graph of order <= max_order that contains ``seed`` as an
    induced subgraph ends up in ``out`` (union over the configured seed
    calls).  ``seen`` holds canonical forms and is shared by the caller
    across seeds; a graph reached twice is expanded once.  Truncation (an
    extendable graph stopped by the order cap) is reported through
    ``complete=False``, never silently.
    """
    if not is_family_free(seed, cfg.family):
        raise ValueError("seed is not family-free")
    counts: Counter[int] = Counter()
    visited = 0
    truncated = False
    emitted: list[Graph] = []

    pool = None
    if jobs > 1:
        import multiprocessing

        pool = multiprocessing.get_context("fork").Pool(jobs)
    try:
        pending = [seed]
        while pending:
            if pool is not None:
                chunk = max(1, len(pending) // (jobs * 4))
                forms = pool.map(canonical_form, pending, chunk)
            else:
                forms = [canonical_form(g) for g in pending]
            batch = []
            for g, cf in zip(pending, forms):
                if cf not in seen:
                    seen.add(cf)
                    batch.append(g)
            if pool is not None:
                from functools import partial

                chunk = max(1, len(batch) // (jobs * 4))
                outcomes = pool.map(partial(_process_node, cfg=cfg), batch, chunk)
            else:
                outcomes = [_process_node(g, cfg) for g in batch]
            pending = []
            for g, (kind, children) in zip(batch, outcomes):
                visited += 1
                if kind == _OUT:
                    emitted.append(g)
                    counts[g.n] += 1
                elif kind == _TRUNCATED:
                    truncated = True
                elif kind == _EXPAND:
                    pending.extend(children)
            if progress is not None and batch:
                progress(batch[0].n, len(batch))
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    out.extend(emitted)
    return EnumerationResult(
        graphs=emitted,
        per_order_counts=dict(sorted(counts.items())),
        nodes_visited=visited,
        complete=not truncated,
    )


# Defaults for the three named companions of P5.  Every 5-vertex-critical
# P5-free graph is K5 or the complement of C9, or contains the complement of
# C5 or of C7 as an induced subgraph, and the largest critical graphs in
# these three classes are known to have the orders below.
NAMED_H_MAX_ORDER = {
    "k1,3+p1": 13,
    "k1,4+p1": 17,
    "co(k3+2p1)": 23,
}


def default_max_order_for(h: Pattern) -> int | None:
    """Known maximum critical order when ``h`` is one of the named companions."""
    from .canon import are_isomorphic

    for name, cap in NAMED_H_MAX_ORDER.items():
        if are_isomorphic(h.graph, parse_pattern(name).graph):
            return cap
    return None


def seed_graphs() -> list[Graph]:
    return [complement(cycle(5)), complement(cycle(7))]


def sporadic_graphs() -> list[Graph]:
    return [complete(5), complement(cycle(9))]


def enumerate_5vc(
    h: Pattern,
    max_order: int | None = None,
    pruning: PruningFlags = PruningFlags(),
    jobs: int = 1,
    progress: Callable[[int, int], None] | None = None,
) -> EnumerationResult:
    """All 5-vertex-critical {P5, h}-free graphs up to ``max_order``.

    Merges the two sporadic graphs (each checked for family-freeness and
    criticality) with the runs seeded at the complements of C5 and C7,
    deduplicates, and sorts by (order, canonical form).  Exhaustiveness of
    the seed set is guaranteed whenever P5 is in the family; the three named
    companions additionally have known maximum orders (the defaults).
    """
    from .critical import is_k_vertex_critical

    family = (parse_pattern("p5"), h)
    if max_order is None:
        max_order = default_max_order_for(h)
        if max_order is None:
            raise ValueError(f"no default max_order for pattern {h.name!r}; pass one")
    cfg = SearchConfig(k=5, family=family, max_order=max_order,
                       seeds=tuple(seed_graphs()), pruning=pruning)
    seen: set[bytes] = set()
    out: list[Graph] = []
    visited = 0
    complete = True
    for sp in sporadic_graphs():
        if sp.n <= max_order and is_family_free(sp, family):
            if is_k_vertex_critical(sp, 5).is_vertex_critical:
                cf = canonical_form(sp)
                if cf not in seen:
                    seen.add(cf)
                    out.append(sp)
    for seed in cfg.seeds:
        if seed.n > max_order or not is_family_free(seed, family):
            continue
        res = recursively_enumerate(cfg, seed, seen, out, jobs=jobs, progress=progress)
        visited += res.nodes_visited
        complete = complete and res.complete
    ordered = sort_graphs(out)
    counts = Counter(g.n for g in ordered)
    return EnumerationResult(
        graphs=ordered,
        per_order_counts=dict(sorted(counts.items())),
        nodes_visited=visited,
        complete=complete,
    )


def sort_graphs(graphs: list[Graph]) -> list[Graph]:
    """Deterministic output order: by order, then canonical form bytes."""
    return sorted(graphs, key=lambda g: (g.n, canonical_form(g)))


def all_graphs(max_order: int) -> dict[int, list[Graph]]:
    """Every isomorphism class of order 1..max_order, one representative each.

    Brute-force reference generator: canonical-form-deduplicated exhaustive
    one-vertex extension, no pruning of any kind.  Exponential; meant for
    small orders where it serves as the completeness oracle for the pruned
    search.
    """
    levels: dict[int, list[Graph]] = {1: [Graph(1, (0,))]}
    for n in range(1, max_order):
        seen: set[bytes] = set()
        nxt: list[Graph] = []
        for g in levels[n]:
            for child in one_vertex_extensions(g):
                cf = canonical_form(child)
                if cf not in seen:
                    seen.add(cf)
                    nxt.append(child)
        levels[n + 1] = nxt
    return levels
