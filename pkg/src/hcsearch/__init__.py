"""Proof search for Hadwiger's Conjecture on graphs with no stable set of size three.

The core objects are :class:`LabeledGraph` (an immutable labelled graph),
:class:`PropertySpec` (a monotone "contains one of these" property) and
:func:`run_full`, which runs the extension search and reports how many
graphs it touched and their total weight.
"""

from .catalog_io import FormatError, ProofEdge, ReportLine, load_catalog, load_expected, load_forest
from .cliquecover import (
    AuxiliaryCliqueGraph,
    CoverCertificate,
    CoverContext,
    algorithm2,
    algorithm3,
    assemble_auxiliary,
    build_apex_links,
    build_completion_pairs,
    build_neighborhood_classes,
    cover_exists,
    validate_certificate,
)
from .constructions import catalog_graph, catalog_names, core_feasibility, core_of, dom_set, join, make_fk
from .forest import VerificationError, schedule_discovery, verify_edge, verify_forest
from .graph import (
    EdgeKey,
    LabeledGraph,
    MatchKind,
    choose_dominating_edge,
    classify_matching,
    complement,
    dominating_edges,
    extend_with_vertex,
    extension_order,
    has_stable_triple,
)
from .iso import contains_induced, is_set_free
from .properties import PropertySpec
from .ramsey import ClassificationTally, classify_dataset, parse_graph6
from .search import SearchOutcome, SearchState, Status, run_basic, run_full, step

__version__ = "0.1.0"
