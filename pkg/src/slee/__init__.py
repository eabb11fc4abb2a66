"""Signless Laplacian Estrada index toolkit.

Graphs, signless Laplacian spectra and SLEE, exact semi-edge-walk
combinatorics, neighbor-transfer machinery, isomorphism-free unicyclic
enumeration, and an extremal verification harness, with a CLI front end.
"""

from .canonical import CanonicalForm, are_isomorphic, canonical_form, count_automorphisms
from .enumeration import (
    EnumerationResult,
    enumerate_unicyclic,
    enumerate_unicyclic_labeled_oracle,
    filter_by_diameter,
    load_enumeration,
    save_enumeration,
)
from .errors import (
    ArgumentError,
    ContractError,
    LimitError,
    ParseError,
    SleeError,
    TransferMonotonicityError,
)
from .families import FamilySpec, family_roles, make, parse_family_spec
from .graph6 import graph6_decode, graph6_encode, read_graph6_file, write_graph6_file
from .graphs import (
    INFINITY,
    Graph,
    degree,
    diameter,
    distance,
    is_connected,
    is_unicyclic,
    non_pendent_neighbors,
    to_dot,
    unique_cycle,
)
from .semiwalk import (
    DominanceVerdict,
    Relation,
    WalkCountTable,
    compare_s,
    compare_s_pair,
    count_semi_edge_walks,
    enumerate_semi_edge_walks,
    walk_counts,
)
from .spectral import (
    SpectralSummary,
    q_spectrum,
    signless_laplacian,
    slee,
    slee_series,
    spectral_moment,
    spectral_summary,
)
from .transforms import TransferCheck, TransferPlan, check_transfer_lemma, transfer
from .verify import (
    ReplayChain,
    ReplayStep,
    TheoremReport,
    max_chain,
    min_chain,
    replay_proof_steps,
    verify_diameter_max,
    verify_max,
    verify_min,
)

__version__ = "0.1.0"
