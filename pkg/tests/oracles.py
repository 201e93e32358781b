"""Independent verification machinery for the test suite.

Everything here recomputes results along a different route than the code
under test: union-find instead of graph search, dense Gaussian elimination
instead of column reduction, exhaustive matchings instead of threshold
search, and depth-first circuit enumeration instead of Johnson's algorithm.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from dirph.chains import signed_face_coefficients
from dirph.complexes import Simplex, simplex_dim
from dirph.diagram import PersistenceDiagram, Point
from dirph.rips import FilteredComplex


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def component_count(self) -> int:
        return len({self.find(x) for x in self.parent})


def components_by_union_find(complex_) -> int:
    uf = UnionFind(complex_.vertices)
    for a, b in complex_.simplices(1):
        uf.union(a, b)
    return uf.component_count()


def gauss_rank(rows: list[list[Fraction]]) -> int:
    m = [list(r) for r in rows]
    rank = 0
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = m[rank][col]
        for r in range(n_rows):
            if r != rank and m[r][col] != 0:
                factor = m[r][col] / inv
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == n_rows:
            break
    return rank


def _stage_simplices(filtration: FilteredComplex, delta: Fraction) -> list[Simplex]:
    return [s for s, v in filtration.simplices if v <= delta]


def _boundary_rows(
    k_simplices: list[Simplex], faces_index: dict[Simplex, int], higher: list[Simplex]
) -> list[list[Fraction]]:
    rows = []
    for s in higher:
        row = [Fraction(0)] * len(faces_index)
        for face, c in signed_face_coefficients(s).items():
            row[faces_index[face]] += c
        rows.append(row)
    return rows


def homology_rank_at(filtration: FilteredComplex, k: int, delta: Fraction) -> int:
    """dim H_k at one stage, from ranks of dense signed boundary matrices."""
    present = _stage_simplices(filtration, delta)
    by_dim: dict[int, list[Simplex]] = {}
    for s in present:
        by_dim.setdefault(simplex_dim(s), []).append(s)
    k_simplices = by_dim.get(k, [])
    if not k_simplices:
        return 0
    lower = by_dim.get(k - 1, [])
    lower_index = {s: i for i, s in enumerate(lower)}
    if k == 0:
        rank_dk = 0
    else:
        rank_dk = gauss_rank(_boundary_rows(lower, lower_index, k_simplices)) if lower else 0
    k_index = {s: i for i, s in enumerate(k_simplices)}
    higher = by_dim.get(k + 1, [])
    rank_dk1 = gauss_rank(_boundary_rows(k_simplices, k_index, higher)) if higher else 0
    cycles = len(k_simplices) - rank_dk
    return cycles - rank_dk1


def persistence_rank(filtration: FilteredComplex, k: int, d_i: Fraction, d_j: Fraction) -> int:
    """Rank of H_k(stage d_i) -> H_k(stage d_j): dim(Z_k(i) + B_k(j)) - dim B_k(j)."""
    final_k = [s for s, _ in filtration.of_dimension(k)]
    index = {s: i for i, s in enumerate(final_k)}
    n = len(final_k)

    def cycle_space(delta: Fraction) -> list[list[Fraction]]:
        present = [s for s in final_k if filtration.entrance(s) <= delta]
        if k == 0:
            basis = []
            for s in present:
                row = [Fraction(0)] * n
                row[index[s]] = Fraction(1)
                basis.append(row)
            return basis
        lower = [s for s, v in filtration.of_dimension(k - 1) if v <= delta]
        lower_index = {s: i for i, s in enumerate(lower)}
        rows = _boundary_rows(lower, lower_index, present)
        return _kernel_basis(rows, [index[s] for s in present], n)

    def boundary_space(delta: Fraction) -> list[list[Fraction]]:
        higher = [s for s, v in filtration.of_dimension(k + 1) if v <= delta]
        rows = []
        for s in higher:
            row = [Fraction(0)] * n
            for face, c in signed_face_coefficients(s).items():
                row[index[face]] += c
            rows.append(row)
        return rows

    z_i = cycle_space(d_i)
    b_j = boundary_space(d_j)
    return gauss_rank(z_i + b_j) - gauss_rank(b_j)


def _kernel_basis(rows: list[list[Fraction]], column_embedding: list[int], n: int):
    """Kernel of the boundary map restricted to the given chains.

    ``rows[r]`` is the signed boundary of the r-th chain; the kernel vectors
    are embedded back into an n-dimensional ambient space at the positions
    listed in ``column_embedding``.
    """
    n_cols = len(column_embedding)
    if n_cols == 0:
        return []
    matrix = [list(row) for row in rows]
    width = len(matrix[0]) if matrix else 0
    pivots: dict[int, int] = {}
    reduced: list[list[Fraction]] = []
    combos: list[list[Fraction]] = []
    kernel: list[list[Fraction]] = []
    for r, row in enumerate(matrix):
        combo = [Fraction(0)] * n_cols
        combo[r] = Fraction(1)
        current = list(row)
        for col, owner in sorted(pivots.items()):
            if current[col] != 0:
                factor = current[col] / reduced[owner][col]
                current = [a - factor * b for a, b in zip(current, reduced[owner])]
                combo = [a - factor * b for a, b in zip(combo, combos[owner])]
        lead = next((c for c in range(width) if current[c] != 0), None)
        if lead is None:
            vector = [Fraction(0)] * n
            for local, coeff in enumerate(combo):
                vector[column_embedding[local]] = coeff
            kernel.append(vector)
        else:
            pivots[lead] = len(reduced)
            reduced.append(current)
            combos.append(combo)
    return kernel


def diagram_from_ranks(filtration: FilteredComplex, k: int) -> PersistenceDiagram:
    """Persistence diagram recomputed purely from the rank function of the
    degree-k homology (no column reduction involved)."""
    critical = filtration.critical_values()
    m = len(critical)
    table: dict[tuple[int, int], int] = {}
    for i in range(m):
        for j in range(i, m):
            table[(i, j)] = persistence_rank(filtration, k, critical[i], critical[j])

    def rank(i: int, j: int) -> int:
        if i < 0:
            return 0
        return table[(i, j)]

    points: list[Point] = []
    for i in range(m):
        for j in range(i, m - 1):
            mult = rank(i, j) - rank(i, j + 1) - rank(i - 1, j) + rank(i - 1, j + 1)
            assert mult >= 0
            points.extend([(critical[i], critical[j + 1])] * mult)
        mult = rank(i, m - 1) - rank(i - 1, m - 1)
        points.extend([(critical[i], None)] * mult)
    return PersistenceDiagram(k, points)


def brute_circuits(edges: list[Simplex]) -> set[tuple[Simplex, ...]]:
    """All elementary circuits by depth-first search, as sorted arc tuples."""
    arcs = sorted(set(edges))
    out: set[tuple[Simplex, ...]] = set()
    adjacency: dict[int, list[int]] = {}
    for a, b in arcs:
        adjacency.setdefault(a, []).append(b)

    def walk(start: int, current: int, path: list[int]) -> None:
        for nxt in adjacency.get(current, []):
            if nxt == start and len(path) >= 1:
                cycle = path + [start]
                arc_list = tuple(sorted((cycle[i], cycle[i + 1]) for i in range(len(cycle) - 1)))
                out.add(arc_list)
            elif nxt > start and nxt not in path:
                walk(start, nxt, path + [nxt])

    vertices = sorted({v for arc in arcs for v in arc})
    for start in vertices:
        if (start, start) in set(arcs):
            out.add(((start, start),))
        walk(start, start, [start])
    return out


def brute_bottleneck(a: PersistenceDiagram, b: PersistenceDiagram) -> Fraction | None:
    """Exhaustive minimax matching for small diagrams."""
    from dirph.metrics import _diagonal_cost, _linf

    a_pts = a.expand()
    b_pts = b.expand()

    best: list[Fraction | None] = [None]

    def assign(i: int, used: set[int], cost: Fraction) -> None:
        if best[0] is not None and cost > best[0]:
            return
        if i == len(a_pts):
            remaining = Fraction(0)
            for j, q in enumerate(b_pts):
                if j in used:
                    continue
                d = _diagonal_cost(q)
                if d is None:
                    return
                remaining = max(remaining, d)
            total = max(cost, remaining)
            if best[0] is None or total < best[0]:
                best[0] = total
            return
        p = a_pts[i]
        for j, q in enumerate(b_pts):
            if j in used:
                continue
            c = _linf(p, q)
            if c is None:
                continue
            assign(i + 1, used | {j}, max(cost, c))
        d = _diagonal_cost(p)
        if d is not None:
            assign(i + 1, used, max(cost, d))

    assign(0, set(), Fraction(0))
    return best[0]


def natural_cycles_by_enumeration(complex_, dim: int, bound: int):
    """All nonzero natural cycles with coefficients <= bound, brute force."""
    from dirph.chains import Chain, is_cycle

    carriers = complex_.simplices(dim)
    found = []
    for coeffs in product(range(bound + 1), repeat=len(carriers)):
        if not any(coeffs):
            continue
        c = Chain(dim, dict(zip(carriers, coeffs)))
        if is_cycle(c):
            found.append(c)
    return found
