"""Minimal separators in graphs: enumeration, the zeta invariant, creature and
skinny-ladder witnesses, reconstruction certificates, and exact maximum
weight independent set through potential maximal cliques."""

from .families import LabeledGraph, creature_graph, prism, random_interval_graph, skinny_ladder, theta
from .graph import (
    Graph,
    GraphInputError,
    components,
    induced_subgraph,
    is_anti_adjacent,
    is_connected,
    neighborhood,
)
from .mwis import WeightedGraph, brute_mwis, enumerate_pmcs, is_pmc, solve_mwis
from .reconstruction import (
    DominatedCase,
    ReconstructionCertificate,
    build_certificate,
    count_by_reconstruction,
    minimal_connected_dominator,
)
from .separators import (
    MinimalSeparator,
    brute_force_separators,
    enumerate_minimal_separators,
    is_minimal_separator,
    minimal_uv_separator_within,
    separator_traces,
)
from .structures import (
    CreatureWitness,
    LadderModel,
    Status,
    creature_separators,
    find_creature,
    find_skinny_ladder_minor,
    verify_creature,
)
from .zeta import ZetaCertificate, zeta, zeta_brute

__version__ = "0.1.0"
