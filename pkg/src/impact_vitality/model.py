"""Domain types for author-centric citation data.

A CitationDataset holds one target author, their verified publications, and
the deduplicated set of records that cite them. Reductions to yearly citing
counts and per-publication citation counts live here; the indicator math
lives in `indicators`.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from .filters import FilterSet

YEAR_MIN = 1800


def _year_max() -> int:
    import datetime

    return datetime.date.today().year + 1


def _strip_diacritics(s: str) -> str:
    decomposed = unicodedata.normalize("NFKD", s)
    return "".join(ch for ch in decomposed if not unicodedata.combining(ch))


def normalize_surname(surname: str) -> str:
    """Lowercase, diacritics stripped, surrounding whitespace removed."""
    return _strip_diacritics(surname).strip().lower()


def normalize_initials(initials: str) -> str:
    """Lowercase, diacritics stripped, periods and spaces removed."""
    return _strip_diacritics(initials).lower().replace(".", "").replace(" ", "")


@dataclass(frozen=True, order=True)
class AuthorKey:
    """Normalized (surname, initials) pair used for author matching.

    Inputs are normalized on construction, so constructing from an already
    normalized key is a no-op (normalization is idempotent).
    """

    surname: str
    initials: str = ""

    def __post_init__(self):
        surname = normalize_surname(self.surname)
        if not surname:
            raise ValueError("AuthorKey surname must be non-empty")
        object.__setattr__(self, "surname", surname)
        object.__setattr__(self, "initials", normalize_initials(self.initials))


@dataclass(frozen=True)
class TargetAuthor:
    """The author under evaluation, with their accepted name variants."""

    key: AuthorKey
    name_variants: frozenset[AuthorKey] = frozenset()
    career_start_year: Optional[int] = None  # e.g. PhD year
    first_citation_year: Optional[int] = None  # derived when building a dataset

    def __post_init__(self):
        variants = frozenset(self.name_variants) | {self.key}
        object.__setattr__(self, "name_variants", variants)


@dataclass(frozen=True)
class Publication:
    """A verified publication of the target author."""

    id: str
    year: int
    doc_type: str = "article"
    label: Optional[str] = None


@dataclass(frozen=True)
class CitingRecord:
    """One deduplicated citing document.

    A record counts once per year regardless of how many target publications
    it cites. Records citing no verified target work must not enter the
    dataset (homonym screening happens at ingestion).
    """

    id: str
    year: int
    authors: frozenset[AuthorKey] = frozenset()
    cited_target_pub_ids: frozenset[str] = frozenset()
    doc_type: str = "article"

    def __post_init__(self):
        object.__setattr__(self, "authors", frozenset(self.authors))
        object.__setattr__(
            self, "cited_target_pub_ids", frozenset(self.cited_target_pub_ids)
        )


@dataclass(frozen=True)
class CitationDataset:
    """Immutable container: target author, publications, citing records."""

    target: TargetAuthor
    publications: tuple[Publication, ...] = ()
    citing_records: tuple[CitingRecord, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "publications", tuple(self.publications))
        object.__setattr__(self, "citing_records", tuple(self.citing_records))
        if self.target.first_citation_year is None and self.citing_records:
            derived = min(r.year for r in self.citing_records)
            target = TargetAuthor(
                key=self.target.key,
                name_variants=self.target.name_variants,
                career_start_year=self.target.career_start_year,
                first_citation_year=derived,
            )
            object.__setattr__(self, "target", target)

    def publication_by_id(self, pub_id: str) -> Optional[Publication]:
        for pub in self.publications:
            if pub.id == pub_id:
                return pub
        return None


@dataclass(frozen=True)
class YearlyCitingCounts:
    """Distinct citing-record counts per calendar year; missing years mean 0."""

    counts: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        for year, count in self.counts.items():
            if count < 0:
                raise ValueError(f"negative count {count} for year {year}")

    def get(self, year: int) -> int:
        return self.counts.get(year, 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def min_year(self) -> Optional[int]:
        return min(self.counts) if self.counts else None

    def max_year(self) -> Optional[int]:
        return max(self.counts) if self.counts else None


class Severity(Enum):
    ERROR = "ERROR"
    WARNING = "WARNING"


@dataclass(frozen=True)
class Finding:
    severity: Severity
    message: str


def validate_dataset(ds: CitationDataset) -> list[Finding]:
    """Check dataset invariants; returns an empty list iff all hold.

    ERROR findings break the contracts the computations rely on (referential
    integrity, duplicate ids, empty cited-id sets). WARNING findings are
    data-quality oddities the indicator tolerates, e.g. a citing year earlier
    than the earliest cited publication year.
    """
    findings: list[Finding] = []
    err = lambda msg: findings.append(Finding(Severity.ERROR, msg))
    warn = lambda msg: findings.append(Finding(Severity.WARNING, msg))

    year_max = _year_max()
    seen_pub_ids: set[str] = set()
    for pub in ds.publications:
        if pub.id in seen_pub_ids:
            err(f"duplicate publication id {pub.id!r}")
        seen_pub_ids.add(pub.id)
        if not (YEAR_MIN <= pub.year <= year_max):
            err(f"publication {pub.id!r} year {pub.year} outside [{YEAR_MIN}, {year_max}]")

    pub_years = {pub.id: pub.year for pub in ds.publications}

    seen_rec_ids: set[str] = set()
    for rec in ds.citing_records:
        if rec.id in seen_rec_ids:
            err(f"duplicate citing record id {rec.id!r}")
        seen_rec_ids.add(rec.id)
        if not rec.cited_target_pub_ids:
            err(f"citing record {rec.id!r} cites no target publication")
        for pub_id in sorted(rec.cited_target_pub_ids):
            if pub_id not in pub_years:
                err(f"citing record {rec.id!r} references unknown publication {pub_id!r}")
            elif rec.year < pub_years[pub_id]:
                warn(
                    f"citing record {rec.id!r} dated {rec.year} cites "
                    f"{pub_id!r} published {pub_years[pub_id]}"
                )

    start = ds.target.career_start_year
    if start is not None and ds.citing_records:
        earliest_citing = min(r.year for r in ds.citing_records)
        if start > earliest_citing + 1:
            warn(
                f"career_start_year {start} is after the earliest citing year "
                f"{earliest_citing}"
            )

    return findings


def has_errors(findings: list[Finding]) -> bool:
    return any(f.severity is Severity.ERROR for f in findings)


def yearly_citing_counts(ds: CitationDataset, fs: "FilterSet") -> YearlyCitingCounts:
    """Count distinct surviving citing records per year.

    A record citing several target publications still contributes exactly 1
    to its year.
    """
    from .filters import apply_filters

    surviving = apply_filters(ds, fs)
    counts: dict[int, int] = {}
    for rec in ds.citing_records:
        if rec.id in surviving:
            counts[rec.year] = counts.get(rec.year, 0) + 1
    return YearlyCitingCounts(counts)


def citation_counts_per_publication(ds: CitationDataset, fs: "FilterSet") -> dict[str, int]:
    """Per-publication counts of distinct surviving citing records.

    A record citing three publications contributes 1 to each of the three.
    Every dataset publication appears in the result, possibly with 0.
    """
    from .filters import apply_filters

    surviving = apply_filters(ds, fs)
    counts = {pub.id: 0 for pub in ds.publications}
    for rec in ds.citing_records:
        if rec.id in surviving:
            for pub_id in rec.cited_target_pub_ids:
                counts[pub_id] += 1
    return counts
