"""Machine checks for the characterization theorems, run over group rosters.

Every check pairs a graph-side predicate (computed on the enhanced power
graph or its deleted variant) with a group-side predicate (computed from
the multiplication table), and asserts either their equivalence or a
one-way implication for every roster group passing the check's filter.
A counterexample on any roster group signals an implementation bug, never
new mathematics: each check encodes a proved statement.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

from . import analysis
from .epg import EpgBundle, build_bundle
from .errors import GroupParameterError
from .groups import (
    DEFAULT_MAX_ORDER,
    abelian_shape,
    has_cyclic_sylow,
    has_unique_minimal_subgroup,
    is_generalized_quaternion,
    is_simple,
    prime_factors,
)
from .specs import GroupSpec

FAMILY_NAMES = ("cyclic", "product", "dihedral", "dicyclic", "metacyclic", "perm")

# (order, degree, generators) for the fixed permutation-closure roster members
_PERM_ROSTER = (
    (6, 3, ((1, 0, 2), (1, 2, 0))),            # S3: (0 1), (0 1 2)
    (12, 4, ((1, 2, 0, 3), (0, 2, 3, 1))),     # A4: (0 1 2), (1 2 3)
    (24, 4, ((1, 0, 2, 3), (1, 2, 3, 0))),     # S4: (0 1), (0 1 2 3)
    (60, 5, ((1, 2, 0, 3, 4), (1, 2, 3, 4, 0))),  # A5: (0 1 2), (0 1 2 3 4)
)


def _abelian_noncyclic_shapes(max_order: int) -> list[tuple[int, ...]]:
    """Non-decreasing multisets of prime powers with a repeated prime.

    Shapes whose primes are pairwise distinct are isomorphic to a cyclic
    group and are left to the cyclic roster.
    """
    prime_powers = [
        q for q in range(2, max_order // 2 + 1) if len(prime_factors(q)) == 1
    ]
    shapes: list[tuple[int, ...]] = []

    def grow(start: int, prod: int, shape: list[int]) -> None:
        if len(shape) >= 2:
            primes = [min(prime_factors(q)) for q in shape]
            if len(set(primes)) < len(primes):
                shapes.append(tuple(shape))
        for i in range(start, len(prime_powers)):
            q = prime_powers[i]
            if prod * q > max_order:
                continue
            shape.append(q)
            grow(i, prod * q, shape)
            shape.pop()

    grow(0, 1, [])
    return sorted(set(shapes), key=lambda s: (math.prod(s), s))


def roster_generate(
    max_order: int, families: Optional[Sequence[str] | str] = None
) -> list[GroupSpec]:
    """Deterministic roster of group specs with orders up to max_order.

    Families: all cyclic groups; abelian products of prime-power cyclic
    factors (deduplicated by shape, cyclic shapes omitted); dihedral,
    dicyclic, and a fixed metacyclic family (semidihedral 2-groups plus a
    few non-abelian odd-order and 3-group members); S3, A4, S4, A5 as
    permutation closures. Sorted by (order, family, parameters).
    """
    if max_order < 1:
        raise GroupParameterError(f"max_order must be >= 1, got {max_order}")
    if families is None:
        wanted = set(FAMILY_NAMES)
    elif isinstance(families, str):
        wanted = {families}
    else:
        wanted = set(families)
    unknown = wanted - set(FAMILY_NAMES)
    if unknown:
        raise GroupParameterError(f"unknown roster families: {sorted(unknown)}")

    entries: list[tuple[int, str, tuple, GroupSpec]] = []
    if "cyclic" in wanted:
        for n in range(1, max_order + 1):
            entries.append((n, "cyclic", (n,), GroupSpec.cyclic(n)))
    if "product" in wanted:
        for shape in _abelian_noncyclic_shapes(max_order):
            spec = GroupSpec.product([GroupSpec.cyclic(q) for q in shape])
            entries.append((math.prod(shape), "product", shape, spec))
    if "dihedral" in wanted:
        for m in range(3, max_order // 2 + 1):
            entries.append((2 * m, "dihedral", (m,), GroupSpec.dihedral(m)))
    if "dicyclic" in wanted:
        for m in range(2, max_order // 4 + 1):
            entries.append((4 * m, "dicyclic", (m,), GroupSpec.dicyclic(m)))
    if "metacyclic" in wanted:
        params: list[tuple[int, int, int]] = []
        size = 16
        while size <= max_order:  # semidihedral 2-groups
            params.append((size // 2, 2, size // 4 - 1))
            size *= 2
        if max_order >= 20:
            params.append((5, 4, 2))
        if max_order >= 21:
            params.append((7, 3, 2))
        if max_order >= 27:
            params.append((9, 3, 4))
        for m, n, k in params:
            entries.append((m * n, "metacyclic", (m, n, k), GroupSpec.metacyclic(m, n, k)))
    if "perm" in wanted:
        for order, degree, gens in _PERM_ROSTER:
            if order <= max_order:
                entries.append((order, "perm", (degree, gens), GroupSpec.perm(degree, gens)))

    entries.sort(key=lambda e: (e[0], e[1], e[2]))
    return [spec for _, _, _, spec in entries]


class BundleCache:
    """Realize-and-analyze cache keyed by serialized spec."""

    def __init__(self, max_order: int = DEFAULT_MAX_ORDER, validate: str = "auto"):
        self.max_order = max_order
        self.validate = validate
        self._bundles: dict[str, EpgBundle] = {}

    def get(self, spec: GroupSpec) -> EpgBundle:
        key = spec.serialize()
        bundle = self._bundles.get(key)
        if bundle is None:
            group = spec.realize(validate=self.validate, max_order=self.max_order)
            bundle = build_bundle(group)
            self._bundles[key] = bundle
        return bundle


@dataclass(frozen=True)
class TheoremCheck:
    """One checkable statement: filter, two sides, and a direction.

    ``direction`` is "iff" (sides must agree) or "implies" (the group side
    holding forces the graph side). ``agrees`` overrides the comparison
    for checks whose sides are not plain booleans.
    """

    check_id: str
    direction: str
    summary: str
    applies: Callable[[EpgBundle], bool]
    graph_side: Callable[[EpgBundle], Any]
    group_side: Callable[[EpgBundle], Any]
    agrees: Optional[Callable[[Any, Any], bool]] = None
    roster: Optional[Callable[[int], list[GroupSpec]]] = None

    def holds(self, graph_value: Any, group_value: Any) -> bool:
        if self.agrees is not None:
            return self.agrees(graph_value, group_value)
        if self.direction == "iff":
            return bool(graph_value) == bool(group_value)
        return bool(graph_value) or not bool(group_value)


@dataclass
class Counterexample:
    spec: str
    graph_side: Any
    group_side: Any
    witness: Any = None

    def to_dict(self) -> dict:
        return {
            "spec": self.spec,
            "graph_side": self.graph_side,
            "group_side": self.group_side,
            "witness": self.witness,
        }


@dataclass
class TheoremReport:
    theorem: str
    tested: int
    passed: int
    vacuous: bool
    counterexamples: list[Counterexample] = field(default_factory=list)
    ms: float = 0.0

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "tested": self.tested,
            "passed": self.passed,
            "vacuous": self.vacuous,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "ms": self.ms,
        }


# -- predicate helpers --------------------------------------------------------


def _always(_bundle: EpgBundle) -> bool:
    return True


def _const_true(_bundle: EpgBundle) -> bool:
    return True


def _is_cyclic(bundle: EpgBundle) -> bool:
    return bundle.group.order in bundle.lattice.pi_e


def _orders_at_most_2(bundle: EpgBundle) -> bool:
    return all(o <= 2 for o in bundle.group.orders)


def _has_cone(bundle: EpgBundle) -> bool:
    return bool(analysis.cone_vertices(bundle.epg))


def _cone_empty(bundle: EpgBundle) -> bool:
    return not analysis.cone_vertices(bundle.epg)

def _primes_of(n: int) -> set[int]:
    return set(prime_factors(n)) if n > 1 else set()


def _no_cross_edges_between_equal_order_classes(bundle: EpgBundle) -> bool:
    """No adjacency between generator classes of equal order but distinct subgroups."""
    lattice, epg = bundle.lattice, bundle.epg
    sizes = [len(s) for s in lattice.subgroups]
    by_size: dict[int, list[int]] = {}
    for c, size in enumerate(sizes):
        by_size.setdefault(size, []).append(c)
    for classes in by_size.values():
        for i, c1 in enumerate(classes):
            for c2 in classes[i + 1:]:
                for x in lattice.generator_sets[c1]:
                    for y in lattice.generator_sets[c2]:
                        if epg.has_edge(x, y):
                            return False
    return True


def _deleted_connected(bundle: EpgBundle) -> bool:
    return analysis.is_connected(bundle.deleted)


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _t53_applies(bundle: EpgBundle) -> bool:
    group = bundle.group
    if len(_primes_of(group.order)) < 2:
        return False
    z = len(group.center())
    return z > 1 and len(_primes_of(z)) == 1


def _t53_group_side(bundle: EpgBundle) -> bool:
    """Every non-central order-p element touches a non-p-element (p from the center)."""
    group = bundle.group
    p = next(iter(_primes_of(len(group.center()))))
    central = set(group.center())
    epg = bundle.epg
    for x in range(1, group.order):
        if group.orders[x] != p or x in central:
            continue
        if not any(
            g != 0 and not _is_power_of(group.orders[g], p)
            for g in epg.neighbors(x)
        ):
            return False
    return True


def _t31_roster(max_order: int) -> list[GroupSpec]:
    """Coprime pairs: non-cyclic roster groups of order <= 24 times Z_n."""
    out: list[GroupSpec] = []
    for base in roster_generate(min(24, max_order)):
        if base.family == "cyclic":
            continue
        base_order = base.known_order()
        if base_order is None:
            base_order = next(o for o, d, g in _PERM_ROSTER if base.params == (d, g))
        for n in (3, 5, 7, 9):
            if math.gcd(base_order, n) == 1 and base_order * n <= max_order:
                out.append(GroupSpec.product([base, GroupSpec.cyclic(n)]))
    return out


def _t31_graph_side(bundle: EpgBundle) -> bool:
    # the product packs (identity, generator of the appended Z_n) at index 1
    return 1 in analysis.cone_vertices(bundle.epg)


def _t42_graph_side(bundle: EpgBundle) -> dict:
    degrees = bundle.epg.degrees()
    return {
        "eulerian": analysis.is_eulerian(bundle.epg),
        "all_degrees_even": all(d % 2 == 0 for d in degrees),
    }


def _t42_agrees(graph_value: dict, group_value: bool) -> bool:
    if graph_value["eulerian"] != group_value:
        return False
    return not group_value or graph_value["all_degrees_even"]


def _c23_graph_side(bundle: EpgBundle) -> list[bool]:
    report_graph = bundle.epg
    return [
        analysis.is_bipartite(report_graph),
        analysis.is_tree(report_graph),
        analysis.is_star(report_graph),
    ]


def _c23_agrees(graph_value: list[bool], group_value: bool) -> bool:
    return all(v == group_value for v in graph_value)


CHECKS: tuple[TheoremCheck, ...] = (
    TheoremCheck(
        "T2.1", "iff",
        "equal-order generator classes with distinct subgroups have no cross edges",
        _always, _no_cross_edges_between_equal_order_classes, _const_true,
    ),
    TheoremCheck(
        "T2.2", "iff",
        "the enhanced power graph has a cycle iff some element has order >= 3",
        _always,
        lambda b: analysis.has_cycle(b.epg),
        lambda b: any(o >= 3 for o in b.group.orders),
    ),
    TheoremCheck(
        "C2.3", "iff",
        "bipartite = tree = star = every non-identity element has order 2",
        _always, _c23_graph_side, _orders_at_most_2, agrees=_c23_agrees,
    ),
    TheoremCheck(
        "T2.4", "iff",
        "the enhanced power graph is complete iff the group is cyclic",
        _always, lambda b: analysis.is_complete(b.epg), _is_cyclic,
    ),
    TheoremCheck(
        "T3.1", "implies",
        "G x Z_n with gcd(|G|, n) = 1 makes (identity, generator) a cone vertex",
        _always, _t31_graph_side, _const_true, roster=_t31_roster,
    ),
    TheoremCheck(
        "T3.2", "iff",
        "abelian: cone vertex exists iff some Sylow subgroup is cyclic",
        lambda b: b.group.order >= 2 and b.group.is_abelian(),
        _has_cone,
        lambda b: has_cyclic_sylow(abelian_shape(b.group)),
    ),
    TheoremCheck(
        "T3.3", "iff",
        "non-abelian p-group: cone vertex exists iff generalized quaternion",
        lambda b: not b.group.is_abelian() and b.group.is_p_group() is not None,
        _has_cone,
        lambda b: is_generalized_quaternion(b.group),
    ),
    TheoremCheck(
        "T3.4", "implies",
        "non-abelian simple groups have no cone vertex",
        lambda b: b.group.order >= 2 and not b.group.is_abelian() and is_simple(b.group),
        _cone_empty, _const_true,
    ),
    TheoremCheck(
        "T4.1", "iff",
        "planar iff every element order lies in {1, 2, 3, 4}",
        _always,
        lambda b: analysis.is_planar(b.epg),
        lambda b: b.lattice.pi_e <= {1, 2, 3, 4},
    ),
    TheoremCheck(
        "T4.2", "iff",
        "Eulerian iff the group order is odd (with even degrees throughout)",
        _always, _t42_graph_side, lambda b: b.group.order % 2 == 1, agrees=_t42_agrees,
    ),
    TheoremCheck(
        "T5.1", "iff",
        "p-group: deleted graph connected iff the minimal subgroup is unique",
        lambda b: b.group.is_p_group() is not None,
        _deleted_connected,
        lambda b: has_unique_minimal_subgroup(b.group),
    ),
    TheoremCheck(
        "T5.2", "implies",
        "two or more primes in |Z(G)| force the deleted graph connected",
        lambda b: len(_primes_of(len(b.group.center()))) >= 2,
        _deleted_connected, _const_true,
    ),
    TheoremCheck(
        "T5.3", "iff",
        "p-power center, composite order: deleted graph connected iff every "
        "non-central order-p element touches a non-p-element",
        _t53_applies, _deleted_connected, _t53_group_side,
    ),
    TheoremCheck(
        "T5.4", "iff",
        "deleted graph is a forest iff every element order is below 4",
        _always,
        lambda b: analysis.is_forest(b.deleted),
        lambda b: all(o < 4 for o in b.group.orders),
    ),
)

CHECKS_BY_ID: dict[str, TheoremCheck] = {c.check_id: c for c in CHECKS}


def run_check(
    check: TheoremCheck,
    roster: Sequence[GroupSpec],
    *,
    cache: Optional[BundleCache] = None,
    max_order: int = DEFAULT_MAX_ORDER,
) -> TheoremReport:
    """Evaluate one check over a roster, recording any disagreements."""
    if cache is None:
        cache = BundleCache(max_order=max_order)
    start = time.perf_counter()
    tested = passed = 0
    counterexamples: list[Counterexample] = []
    for spec in roster:
        bundle = cache.get(spec)
        if not check.applies(bundle):
            continue
        tested += 1
        graph_value = check.graph_side(bundle)
        group_value = check.group_side(bundle)
        if check.holds(graph_value, group_value):
            passed += 1
        else:
            counterexamples.append(
                Counterexample(spec.serialize(), graph_value, group_value)
            )
    ms = (time.perf_counter() - start) * 1000.0
    return TheoremReport(
        theorem=check.check_id,
        tested=tested,
        passed=passed,
        vacuous=tested == 0,
        counterexamples=counterexamples,
        ms=round(ms, 3),
    )


def run_all(
    max_order: int,
    *,
    check_ids: Optional[Sequence[str]] = None,
    cache: Optional[BundleCache] = None,
) -> list[TheoremReport]:
    """Run every registered check (or a subset) with its default roster."""
    if cache is None:
        cache = BundleCache(max_order=max(max_order, DEFAULT_MAX_ORDER))
    checks = CHECKS if check_ids is None else tuple(CHECKS_BY_ID[i] for i in check_ids)
    standard = roster_generate(max_order)
    reports = []
    for check in checks:
        roster = check.roster(max_order) if check.roster is not None else standard
        reports.append(run_check(check, roster, cache=cache, max_order=max_order))
    return reports
