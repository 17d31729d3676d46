"""Enhanced power graphs of finite groups.

Construct finite groups from explicit multiplication tables, build their
enhanced power graphs (x ~ y iff some cyclic subgroup contains both),
decide the graph properties the characterization theorems talk about, and
verify those theorems over rosters of concrete groups.
"""

from .analysis import (
    PropertyReport,
    analyze,
    bipartite_coloring,
    cone_vertices,
    connected_components,
    degree_sequence,
    find_cycle,
    has_cycle,
    is_bipartite,
    is_complete,
    is_connected,
    is_eulerian,
    is_forest,
    is_star,
    is_tree,
)
from .cayley_io import ingest_cayley, parse_cayley_text
from .cyclic import CyclicLattice, build_lattice
from .epg import EpgBundle, adjacent_oracle, build_bundle, build_deleted, build_epg
from .errors import (
    CayleyParseError,
    CayleyValidationError,
    GroupError,
    GroupParameterError,
    GroupSizeError,
    SpecSyntaxError,
)
from .groups import (
    DEFAULT_MAX_ORDER,
    AbelianShape,
    FiniteGroup,
    abelian_shape,
    closure_from_generators,
    has_cyclic_sylow,
    has_unique_minimal_subgroup,
    is_generalized_quaternion,
    is_simple,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    make_direct_product,
    make_metacyclic,
    normal_closure,
    prime_order_subgroup_count,
    totient,
)
from .planarity import is_planar, planarity_verdict
from .simplegraph import SimpleGraph, to_dot, to_edgelist_lines, to_json_dict
from .specs import GroupSpec, parse_spec
from .theorems import (
    CHECKS,
    CHECKS_BY_ID,
    BundleCache,
    TheoremCheck,
    TheoremReport,
    roster_generate,
    run_all,
    run_check,
)

__all__ = [
    "AbelianShape",
    "BundleCache",
    "CHECKS",
    "CHECKS_BY_ID",
    "CayleyParseError",
    "CayleyValidationError",
    "CyclicLattice",
    "DEFAULT_MAX_ORDER",
    "EpgBundle",
    "FiniteGroup",
    "GroupError",
    "GroupParameterError",
    "GroupSizeError",
    "GroupSpec",
    "PropertyReport",
    "SimpleGraph",
    "SpecSyntaxError",
    "TheoremCheck",
    "TheoremReport",
    "abelian_shape",
    "adjacent_oracle",
    "analyze",
    "bipartite_coloring",
    "build_bundle",
    "build_deleted",
    "build_epg",
    "build_lattice",
    "closure_from_generators",
    "cone_vertices",
    "connected_components",
    "degree_sequence",
    "find_cycle",
    "has_cycle",
    "has_cyclic_sylow",
    "has_unique_minimal_subgroup",
    "ingest_cayley",
    "is_bipartite",
    "is_complete",
    "is_connected",
    "is_eulerian",
    "is_forest",
    "is_generalized_quaternion",
    "is_planar",
    "is_simple",
    "is_star",
    "is_tree",
    "make_cyclic",
    "make_dicyclic",
    "make_dihedral",
    "make_direct_product",
    "make_metacyclic",
    "normal_closure",
    "parse_cayley_text",
    "parse_spec",
    "planarity_verdict",
    "prime_order_subgroup_count",
    "roster_generate",
    "run_all",
    "run_check",
    "to_dot",
    "to_edgelist_lines",
    "to_json_dict",
    "totient",
]
