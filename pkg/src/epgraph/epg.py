"""Enhanced power graph construction plus a brute-force adjacency oracle.

Vertices are element indices; two distinct elements are adjacent iff some
cyclic subgroup contains both, so the graph is the union of cliques over
the distinct cyclic subgroups. The pairwise oracle re-derives adjacency
straight from the definition (some z has both x and y among its powers)
and exists purely to cross-check the clique-union construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclic import CyclicLattice, build_lattice
from .groups import FiniteGroup
from .simplegraph import SimpleGraph


@dataclass(frozen=True)
class EpgBundle:
    """A group with its lattice, enhanced power graph, and deleted variant.

    ``deleted`` is the enhanced power graph with the identity vertex
    removed; deleted vertex i corresponds to element i + 1.
    """

    group: FiniteGroup
    lattice: CyclicLattice
    epg: SimpleGraph
    deleted: SimpleGraph
    deleted_elements: tuple[int, ...]


def build_epg(group: FiniteGroup, lattice: CyclicLattice) -> SimpleGraph:
    """Union of cliques over the distinct cyclic subgroups."""
    name = group.spec.display() if group.spec is not None else f"order-{group.order}"
    graph = SimpleGraph(
        group.order,
        labels=[(x, group.orders[x]) for x in range(group.order)],
        name=name,
    )
    for members in lattice.subgroups:
        graph.add_clique(members)
    return graph


def build_deleted(epg: SimpleGraph) -> SimpleGraph:
    """The graph with the identity vertex (vertex 0) removed."""
    out = epg.without_vertex(0)
    out.name = f"{epg.name}*" if epg.name else "*"
    return out


def build_bundle(group: FiniteGroup) -> EpgBundle:
    lattice = build_lattice(group)
    epg = build_epg(group, lattice)
    deleted = build_deleted(epg)
    return EpgBundle(group, lattice, epg, deleted, tuple(range(1, group.order)))


def adjacent_oracle(group: FiniteGroup, x: int, y: int) -> bool:
    """Brute force: is there a z whose powers include both x and y?

    Deliberately ignores the lattice so it can serve as an independent
    cross-check of the clique-union construction.
    """
    group._check_index(x)
    group._check_index(y)
    if x == y:
        raise ValueError(f"adjacency is defined for distinct elements, got {x} twice")
    rows = group.rows()
    for z in range(group.order):
        found_x = found_y = False
        t = z
        while True:
            if t == x:
                found_x = True
            if t == y:
                found_y = True
            if found_x and found_y:
                return True
            if t == 0:
                break
            t = rows[t][z]
    return False
