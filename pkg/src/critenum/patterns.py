"""Forbidden patterns: a small construction DSL and induced-subgraph search.

Pattern grammar (case-insensitive, spaces ignored)::

    expr := term ("+" term)*          disjoint union
    term := [multiplier] atom         "2p1" = two isolated vertices
    atom := "p"N                      path on N vertices
          | "c"N                      cycle on N vertices
          | "k"N                      complete graph
          | "k"R","S                  complete bipartite
          | "co(" expr ")"            complement

Containment is always *induced*: a pattern embeds only if edges and
non-edges are both preserved.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

from .graphs import (
    Graph,
    complement,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    path,
)


class PatternSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class Pattern:
    """A named forbidden graph built from the DSL."""

    def __init__(self, name: str, graph: Graph):
        self.name = name
        self.graph = graph

    def __repr__(self):
        return f"Pattern({self.name!r}, n={self.graph.n})"

    def __eq__(self, other):
        return isinstance(other, Pattern) and self.name == other.name and self.graph == other.graph

    def __hash__(self):
        return hash((self.name, self.graph))


PatternLike = Union[Pattern, Graph]


def _pattern_graph(p: PatternLike) -> Graph:
    return p.graph if isinstance(p, Pattern) else p


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def error(self, message: str):
        raise PatternSyntaxError(message, self.i)

    def peek(self) -> str:
        return self.text[self.i] if self.i < len(self.text) else ""

    def integer(self) -> int:
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if self.i == start:
            self.error("expected a number")
        return int(self.text[start : self.i])

    def expr(self) -> Graph:
        g = self.term()
        while self.peek() == "+":
            self.i += 1
            g = self._union(g, self.term())
        return g

    def term(self) -> Graph:
        mult = 1
        if self.peek().isdigit():
            mult = self.integer()
            if mult < 1:
                self.error("multiplier must be positive")
        g = self.atom()
        out = g
        for _ in range(mult - 1):
            out = self._union(out, g)
        return out

    def _union(self, a: Graph, b: Graph) -> Graph:
        try:
            return disjoint_union(a, b)
        except ValueError as exc:
            self.error(str(exc))

    def atom(self) -> Graph:
        start = self.i
        ch = self.peek()
        if self.text.startswith("co(", self.i):
            self.i += 3
            g = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.i += 1
            return complement(g)
        if ch not in ("p", "c", "k"):
            self.error("expected 'p', 'c', 'k' or 'co('")
        self.i += 1
        first = self.integer()
        try:
            if ch == "p":
                return path(first)
            if ch == "c":
                return cycle(first)
            if self.peek() == ",":
                self.i += 1
                return complete_bipartite(first, self.integer())
            return complete(first)
        except ValueError as exc:
            self.i = start
            self.error(str(exc))


def parse_pattern(text: str) -> Pattern:
    """Parse a DSL string into a named Pattern."""
    normalized = "".join(text.split()).lower()
    parser = _Parser(normalized)
    g = parser.expr()
    if parser.i != len(normalized):
        parser.error("unexpected trailing input")
    if g.n < 1:
        parser.error("pattern must have at least one vertex")
    return Pattern(normalized, g)


@dataclass(frozen=True)
class Embedding:
    """Injective map pattern vertex -> host vertex preserving (non-)edges."""

    map: tuple[int, ...]


def embedding_is_induced(host: Graph, pattern: PatternLike, emb: Embedding) -> bool:
    """Independent re-check that ``emb`` is a valid induced embedding."""
    pg = _pattern_graph(pattern)
    m = emb.map
    if len(m) != pg.n or len(set(m)) != pg.n:
        return False
    if any(not 0 <= h < host.n for h in m):
        return False
    for a in range(pg.n):
        for b in range(a + 1, pg.n):
            if pg.has_edge(a, b) != host.has_edge(m[a], m[b]):
                return False
    return True


def _match_order(pg: Graph, anchor: int | None) -> tuple[int, ...]:
    """Assignment order: anchor first, then by placed-neighbor count and degree."""
    order = []
    placed = 0
    if anchor is not None:
        order.append(anchor)
        placed = 1 << anchor
    while len(order) < pg.n:
        pick = -1
        best = (-1, -1)
        for v in range(pg.n):
            if (placed >> v) & 1:
                continue
            key = ((pg.rows[v] & placed).bit_count(), pg.rows[v].bit_count())
            if key > best:
                best = key
                pick = v
        order.append(pick)
        placed |= 1 << pick
    return tuple(order)


@lru_cache(maxsize=512)
def _match_plan(pg: Graph, anchor: int | None):
    order = _match_order(pg, anchor)
    prev = []
    for s, v in enumerate(order):
        prev.append(tuple((t, bool((pg.rows[v] >> order[t]) & 1)) for t in range(s)))
    degs = tuple(pg.rows[v].bit_count() for v in order)
    return order, tuple(prev), degs


def _degree_masks(host: Graph, thresholds: tuple[int, ...]) -> list[int]:
    hdegs = [r.bit_count() for r in host.rows]
    out = []
    for d in thresholds:
        m = 0
        for v, hd in enumerate(hdegs):
            if hd >= d:
                m |= 1 << v
        out.append(m)
    return out


def _search(host: Graph, pg: Graph, anchor_pvert: int | None, anchor_hvert: int | None):
    if pg.n > host.n:
        return None
    order, prev, degs = _match_plan(pg, anchor_pvert)
    degmasks = _degree_masks(host, degs)
    if anchor_hvert is not None:
        if not (degmasks[0] >> anchor_hvert) & 1:
            return None
        degmasks[0] = 1 << anchor_hvert
    hrows = host.rows
    pn = pg.n
    assigned = [-1] * pn

    def dfs(s: int, used: int) -> bool:
        if s == pn:
            return True
        cand = degmasks[s] & ~used
        for t, is_edge in prev[s]:
            h = assigned[t]
            cand &= hrows[h] if is_edge else ~hrows[h]
            if not cand:
                return False
        while cand:
            b = cand & -cand
            cand ^= b
            assigned[s] = b.bit_length() - 1
            if dfs(s + 1, used | b):
                return True
        assigned[s] = -1
        return False

    if not dfs(0, 0):
        return None
    emb = [0] * pn
    for s, v in enumerate(order):
        emb[v] = assigned[s]
    return Embedding(tuple(emb))


def find_induced(host: Graph, pattern: PatternLike) -> Embedding | None:
    """Some induced embedding of ``pattern`` into ``host``, or None."""
    return _search(host, _pattern_graph(pattern), None, None)


def is_family_free(host: Graph, family: Iterable[PatternLike]) -> bool:
    """True iff no family member occurs in ``host`` as an induced subgraph."""
    return all(find_induced(host, p) is None for p in family)


@lru_cache(maxsize=512)
def _anchor_roles(pg: Graph) -> tuple[int, ...]:
    """One pattern vertex per automorphism orbit."""
    n = pg.n
    rep = list(range(n))

    def find(x):
        while rep[x] != x:
            rep[x] = rep[rep[x]]
            x = rep[x]
        return x

    degs = [r.bit_count() for r in pg.rows]
    assigned = [-1] * n

    def all_autos(s: int, used: int):
        if s == n:
            for v in range(n):
                a, b = find(v), find(assigned[v])
                if a != b:
                    rep[max(a, b)] = min(a, b)
            return
        for h in range(n):
            if (used >> h) & 1 or degs[h] != degs[s]:
                continue
            ok = True
            for t in range(s):
                if ((pg.rows[s] >> t) & 1) != ((pg.rows[h] >> assigned[t]) & 1):
                    ok = False
                    break
            if ok:
                assigned[s] = h
                all_autos(s + 1, used | (1 << h))
        assigned[s] = -1

    all_autos(0, 0)
    return tuple(sorted({find(v) for v in range(n)}))


def free_after_extension(host: Graph, family: Iterable[PatternLike], new_vertex: int) -> bool:
    """Freeness of ``host`` given it was family-free before ``new_vertex`` was added.

    Only embeddings through the new vertex can exist, so each pattern is
    searched anchored at one representative of every automorphism orbit.
    """
    for p in family:
        pg = _pattern_graph(p)
        for role in _anchor_roles(pg):
            if _search(host, pg, role, new_vertex) is not None:
                return False
    return True
