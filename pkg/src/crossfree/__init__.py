"""Steiner triple systems with large cross-free sets, and the colorings they give."""

from .colorings import (
    AffinePlane,
    ColoredSTS,
    affine_plane,
    bose_sts,
    direct_product,
    iterated_product_coloring,
    plane_substitution_coloring,
    skolem_sts,
)
from .construct import Construction, construct_cross_free_sts
from .design import (
    FANO,
    BlockColoring,
    ComponentReport,
    CrossFreePartition,
    DesignError,
    NotCrossFreeError,
    PairCoverage,
    TripleSystem,
    ValidityReport,
    audit_lower_bound,
    color_components,
    lemma_gn_coloring,
    sharpness_arithmetic,
    transversal_blocks,
    validate_sts,
)
from .factorization import (
    LemmaPartition,
    build_zk,
    classify_edge_factor,
    lemma_part_partition,
    standard_factorization,
    verify_lemma_part,
)
from .fields import FieldTable, field_table
from .search import SearchResult, cross_free_search, enumerate_sts, exhaustive_f

__version__ = "0.1.0"
