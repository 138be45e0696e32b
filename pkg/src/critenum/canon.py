"""Canonical labeling and isomorphism testing.

The canonical form is computed by iterated degree refinement (color
refinement to an equitable ordered partition) followed by backtracking over
the orderings of the first non-singleton cell, keeping the lexicographically
smallest relabeled adjacency encoding.  Automorphisms discovered along the
way (two leaves with identical encodings) prune equivalent branches, which
keeps highly symmetric graphs cheap.

The returned form is the graph6 encoding of the canonically relabeled
graph, so it doubles as a ready-to-write output line and as the hash key
for enumeration seen-sets.
"""

from __future__ import annotations

from .graph6 import decode_graph6, encode_graph6
from .graphs import Graph, _graph

CanonicalForm = bytes

_AUTO_CAP = 200
_LEAF_CAP = 300


def _refined(rows, cells):
    """Refine an ordered partition to equitability.

    Cells split by the profile of edge counts into every current cell;
    sub-cells are ordered by profile, vertices inside stay in ascending
    index order.  Both choices are relabeling-invariant.
    """
    cells = list(cells)
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        for ci, cell in enumerate(cells):
            if len(cell) == 1:
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                rv = rows[v]
                sig = tuple((rv & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                cells[ci : ci + 1] = [groups[s] for s in sorted(groups)]
                break
        else:
            return cells


def _canonical_rows(g: Graph) -> tuple[int, ...]:
    n = g.n
    if n <= 1:
        return g.rows
    rows = g.rows
    best: list[int] | None = None
    autos: list[tuple[int, ...]] = []
    leaf_seen: dict[tuple[int, ...], list[int]] = {}

    def visit_leaf(cells):
        nonlocal best
        perm = [c[0] for c in cells]
        pos = [0] * n
        for i, v in enumerate(perm):
            pos[v] = i
        new_rows = []
        for i in range(n):
            r = rows[perm[i]]
            m = 0
            while r:
                b = r & -r
                m |= 1 << pos[b.bit_length() - 1]
                r ^= b
            new_rows.append(m)
        key = tuple(new_rows)
        prev = leaf_seen.get(key)
        if prev is None:
            if len(leaf_seen) < _LEAF_CAP:
                leaf_seen[key] = perm
        elif len(autos) < _AUTO_CAP:
            sigma = [0] * n
            for i in range(n):
                sigma[prev[i]] = perm[i]
            autos.append(tuple(sigma))
        if best is None or new_rows < best:
            best = new_rows

    def descend(cells, fixed):
        for ci, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            visit_leaf(cells)
            return
        processed: set[int] = set()
        for v in cell:
            if processed:
                skip = False
                for sg in autos:
                    if sg[v] in processed and all(sg[f] == f for f in fixed):
                        skip = True
                        break
                if skip:
                    continue
            rest = [w for w in cell if w != v]
            sub = cells[:ci] + [[v], rest] + cells[ci + 1 :]
            descend(_refined(rows, sub), fixed + (v,))
            processed.add(v)

    descend(_refined(rows, [list(range(n))]), ())
    assert best is not None
    return tuple(best)


def canonical_graph(g: Graph) -> Graph:
    """A canonically labeled copy: identical for all isomorphic inputs."""
    return _graph(g.n, _canonical_rows(g))


def canonical_form(g: Graph) -> CanonicalForm:
    """Order-prefixed byte fingerprint of the isomorphism class of ``g``."""
    return encode_graph6(canonical_graph(g)).encode("ascii")


def graph_from_canonical_form(form: CanonicalForm) -> Graph:
    """Decode a canonical form back to its representative graph."""
    return decode_graph6(form.decode("ascii"))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    return _canonical_rows(g) == _canonical_rows(h)
