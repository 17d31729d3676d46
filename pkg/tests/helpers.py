"""Independent brute-force oracles used to pin expected values in tests.

Everything here recomputes results straight from multiplication tables or
edge sets, deliberately avoiding the package's cached/derived structures.
"""

from __future__ import annotations

import itertools
import math

from epgraph import SimpleGraph


def table_of(group) -> list[list[int]]:
    return [list(row) for row in group.table.tolist()]


def order_by_table_scan(table: list[list[int]], x: int) -> int:
    """Order of x by repeated multiplication, independent of any cache."""
    k, y = 1, x
    while y != 0:
        y = table[y][x]
        k += 1
    return k


def orders_multiset(group) -> list[int]:
    table = table_of(group)
    return sorted(order_by_table_scan(table, x) for x in range(len(table)))


def brute_cyclic_subgroups(group) -> set[frozenset[int]]:
    """All distinct <x> as element sets, from the table alone."""
    table = table_of(group)
    subs = set()
    for x in range(len(table)):
        members = {x}
        y = x
        while y != 0:
            y = table[y][x]
            members.add(y)
        subs.add(frozenset(members))
    return subs


def brute_center(group) -> set[int]:
    table = table_of(group)
    n = len(table)
    return {z for z in range(n) if all(table[z][g] == table[g][z] for g in range(n))}


def brute_totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def fixed_point_closure(degree: int, generators) -> set[tuple[int, ...]]:
    """Permutation closure by repeated all-pairs composition (not BFS)."""
    current = {tuple(range(degree))} | {tuple(g) for g in generators}
    while True:
        grown = set(current)
        for p in current:
            for q in current:
                grown.add(tuple(p[v] for v in q))
        if grown == current:
            return current
        current = grown


def brute_prime_order_subgroups(group, max_sets: int = 2_000_000) -> set[frozenset[int]]:
    """All prime-order subgroups by testing every candidate subset.

    Exhaustively enumerates identity-containing subsets of size p for each
    prime p dividing the order and keeps the ones closed under the table.
    """
    table = table_of(group)
    n = len(table)
    primes = [p for p in range(2, n + 1) if n % p == 0 and _is_prime(p)]
    found = set()
    for p in primes:
        if math.comb(n - 1, p - 1) > max_sets:
            raise ValueError(f"subset enumeration too large for p={p}, n={n}")
        for rest in itertools.combinations(range(1, n), p - 1):
            members = frozenset((0,) + rest)
            if all(table[a][b] in members for a in members for b in members):
                found.add(members)
    return found


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def graph_from_edges(n: int, edges) -> SimpleGraph:
    g = SimpleGraph(n)
    for u, v in edges:
        g.add_edge(u, v)
    return g


def complete_graph(n: int) -> SimpleGraph:
    g = SimpleGraph(n)
    g.add_clique(range(n))
    return g


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    g = SimpleGraph(a + b)
    for u in range(a):
        for v in range(a, a + b):
            g.add_edge(u, v)
    return g


# -- tiny-graph planarity oracle ----------------------------------------------
# On at most 6 vertices the only Kuratowski subdivisions that fit are K5,
# K33, and K5 with a single subdivided edge; subgraph containment of those
# three patterns therefore decides planarity exactly.


def _has_k5(rows, verts) -> bool:
    for sub in itertools.combinations(verts, 5):
        if all(rows[a] >> b & 1 for a, b in itertools.combinations(sub, 2)):
            return True
    return False


def _has_k33(rows, verts) -> bool:
    for left in itertools.combinations(verts, 3):
        rest = [v for v in verts if v not in left]
        for right in itertools.combinations(rest, 3):
            if all(rows[a] >> b & 1 for a in left for b in right):
                return True
    return False


def _has_k5_one_subdivision(rows, verts) -> bool:
    for sub in itertools.combinations(verts, 6):
        for s in sub:
            branch = [v for v in sub if v != s]
            for a, b in itertools.combinations(branch, 2):
                others = [
                    (x, y)
                    for x, y in itertools.combinations(branch, 2)
                    if (x, y) != (a, b)
                ]
                if (
                    all(rows[x] >> y & 1 for x, y in others)
                    and rows[s] >> a & 1
                    and rows[s] >> b & 1
                ):
                    return True
    return False


def tiny_planarity_oracle(graph: SimpleGraph) -> bool:
    if graph.n > 6:
        raise ValueError("oracle only valid up to 6 vertices")
    verts = range(graph.n)
    rows = graph.rows
    return not (
        _has_k5(rows, verts)
        or _has_k33(rows, verts)
        or _has_k5_one_subdivision(rows, verts)
    )


# -- non-associative loop search ------------------------------------------------


def find_nonassociative_loop(order: int = 5) -> list[list[int]]:
    """Smallest (lexicographically) Latin square with two-sided identity 0
    that violates associativity, found by backtracking row search."""
    n = order
    rows: list[list[int]] = [list(range(n))]

    def columns_ok(candidate: list[int]) -> bool:
        i = len(rows)
        return all(candidate[j] != rows[r][j] for r in range(i) for j in range(n))

    def associative(table: list[list[int]]) -> bool:
        rng = range(n)
        return all(
            table[table[i][j]][k] == table[i][table[j][k]]
            for i in rng
            for j in rng
            for k in rng
        )

    def search() -> list[list[int]] | None:
        if len(rows) == n:
            table = [row[:] for row in rows]
            return None if associative(table) else table
        i = len(rows)
        for perm in itertools.permutations(range(n)):
            if perm[0] != i:
                continue
            candidate = list(perm)
            if columns_ok(candidate):
                rows.append(candidate)
                result = search()
                if result is not None:
                    return result
                rows.pop()
        return None

    result = search()
    if result is None:
        raise ValueError(f"no non-associative loop of order {order} found")
    return result


def cayley_file_text(table: list[list[int]], comment: str = "") -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(str(len(table)))
    lines.extend(" ".join(str(v) for v in row) for row in table)
    return "\n".join(lines) + "\n"
