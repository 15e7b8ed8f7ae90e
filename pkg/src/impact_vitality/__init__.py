"""Citation analytics around the Impact Vitality indicator.

Computes Impact Vitality profiles over time from author-centric citation
datasets, alongside the h-index and AR-index, with filtering (self-citations,
single-paper citers, document types) and cohort comparison statistics.
"""

from .cohort import (
    CandidateProfile,
    CohortStats,
    RangeStat,
    all_above,
    cohort_summary,
    profile_fluctuation,
    profile_min,
)
from .filters import FilterSet, apply_filters, cites_only, is_self_citing, most_cited_publication
from .indicators import (
    FixedStart,
    IVPoint,
    IVProfile,
    MovingWindow,
    WindowSpec,
    ar_index,
    default_window_spec,
    h_index,
    impact_vitality,
    iv_profile,
    iv_upper_bound,
    select_h_core,
)
from .io import (
    FormatError,
    emit_counts,
    emit_dataset,
    emit_report,
    parse_counts,
    parse_dataset,
    parse_manifest,
)
from .model import (
    AuthorKey,
    CitationDataset,
    CitingRecord,
    Finding,
    Publication,
    Severity,
    TargetAuthor,
    YearlyCitingCounts,
    citation_counts_per_publication,
    validate_dataset,
    yearly_citing_counts,
)

__version__ = "0.1.0"

__all__ = [
    "AuthorKey",
    "CandidateProfile",
    "CitationDataset",
    "CitingRecord",
    "CohortStats",
    "FilterSet",
    "Finding",
    "FixedStart",
    "FormatError",
    "IVPoint",
    "IVProfile",
    "MovingWindow",
    "Publication",
    "RangeStat",
    "Severity",
    "TargetAuthor",
    "WindowSpec",
    "YearlyCitingCounts",
    "all_above",
    "apply_filters",
    "ar_index",
    "citation_counts_per_publication",
    "cites_only",
    "cohort_summary",
    "default_window_spec",
    "emit_counts",
    "emit_dataset",
    "emit_report",
    "h_index",
    "impact_vitality",
    "is_self_citing",
    "iv_profile",
    "iv_upper_bound",
    "most_cited_publication",
    "parse_counts",
    "parse_dataset",
    "parse_manifest",
    "profile_fluctuation",
    "profile_min",
    "select_h_core",
    "validate_dataset",
    "yearly_citing_counts",
]
