"""Directed simplicial complexes (ordered tuple complexes).

A simplex is an ordered tuple of vertex indices; repetitions are allowed and
meaningful, e.g. ``(3, 3)`` is a loop at vertex 3.  A complex is a family of
tuples closed under deleting any single position.  Vertices are dense integer
indices; external labels belong to the I/O layer.
"""

from __future__ import annotations

from itertools import groupby
from typing import Iterable, Iterator

Simplex = tuple[int, ...]


def simplex_dim(s: Simplex) -> int:
    return len(s) - 1


def faces(s: Simplex) -> list[Simplex]:
    """All codimension-1 faces of ``s`` in position order.

    Faces of a tuple with repeated vertices may coincide as tuples; they are
    still emitted once per deleted position.

    >>> faces((1, 2, 3))
    [(2, 3), (1, 3), (1, 2)]
    >>> faces((7, 7))
    [(7,), (7,)]
    """
    if len(s) < 2:
        raise ValueError(f"a vertex has no faces: {s!r}")
    return [s[:i] + s[i + 1 :] for i in range(len(s))]


def validate_simplex(s: Simplex) -> Simplex:
    if not isinstance(s, tuple) or len(s) == 0:
        raise ValueError(f"a simplex is a non-empty tuple of vertex indices: {s!r}")
    for v in s:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ValueError(f"vertex indices are non-negative integers: {s!r}")
    return s


class DirectedComplex:
    """An immutable face-closed family of ordered tuples.

    Simplices are stored per dimension in lexicographic order, so iteration
    is deterministic.  ``vertex_count`` is one plus the largest vertex index;
    every index below it must occur in some simplex.
    """

    __slots__ = ("_by_dim", "_members", "vertices")

    def __init__(self, simplices: Iterable[Simplex]):
        seen: set[Simplex] = set()
        for s in simplices:
            seen.add(validate_simplex(s))
        for s in seen:
            if len(s) > 1:
                for f in faces(s):
                    if f not in seen:
                        raise ValueError(f"not face-closed: {s!r} lacks face {f!r}")
        by_dim: dict[int, tuple[Simplex, ...]] = {}
        for d, group in groupby(sorted(seen, key=lambda s: (len(s), s)), key=simplex_dim):
            by_dim[d] = tuple(group)
        self._by_dim = by_dim
        self._members = frozenset(seen)
        # the vertex set is determined by the simplices: every vertex must
        # belong to at least one tuple
        self.vertices: tuple[int, ...] = tuple(sorted({v for s in seen for v in s}))

    def simplices(self, dim: int) -> tuple[Simplex, ...]:
        return self._by_dim.get(dim, ())

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def dimension(self) -> int:
        return max(self._by_dim, default=-1)

    def __contains__(self, s: Simplex) -> bool:
        return s in self._members

    def __iter__(self) -> Iterator[Simplex]:
        for d in sorted(self._by_dim):
            yield from self._by_dim[d]

    def __len__(self) -> int:
        return sum(len(v) for v in self._by_dim.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DirectedComplex):
            return NotImplemented
        return self._by_dim == other._by_dim

    def __repr__(self) -> str:
        counts = {d: len(v) for d, v in self._by_dim.items()}
        return f"DirectedComplex(vertex_count={self.vertex_count}, simplices_by_dim={counts})"


def close(generators: Iterable[Simplex]) -> DirectedComplex:
    """Smallest face-closed family containing the generators.

    >>> sorted(close({(0, 1, 2)}))
    [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)]
    """
    closure: set[Simplex] = set()
    stack = [validate_simplex(s) for s in generators]
    while stack:
        s = stack.pop()
        if s in closure:
            continue
        closure.add(s)
        if len(s) > 1:
            stack.extend(faces(s))
    return DirectedComplex(closure)


def weak_components(x: DirectedComplex) -> list[tuple[int, ...]]:
    """Partition of the vertices into weakly connected components.

    Two vertices belong to the same block exactly when they are joined by a
    path of 1-simplices traversed in either direction.  Blocks are returned
    sorted by their minimum vertex.
    """
    adjacency: dict[int, set[int]] = {v: set() for v in x.vertices}
    for a, b in x.simplices(1):
        adjacency[a].add(b)
        adjacency[b].add(a)
    unvisited = set(x.vertices)
    blocks: list[tuple[int, ...]] = []
    while unvisited:
        root = min(unvisited)
        component = {root}
        frontier = [root]
        while frontier:
            v = frontier.pop()
            for w in adjacency[v]:
                if w not in component:
                    component.add(w)
                    frontier.append(w)
        unvisited -= component
        blocks.append(tuple(sorted(component)))
    return blocks
