"""Profile-level and cohort-level statistics.

Summarizes groups of candidates (selected vs not selected in a call) by
their IV profiles: per-profile minima, threshold compliance, fluctuation
over the years leading up to the call, and average citing volumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from statistics import fmean
from typing import Optional

from .indicators import IVProfile
from .model import YearlyCitingCounts

FLUCTUATION_SPAN = 5  # observation years counted back from the call, inclusive


@dataclass(frozen=True)
class CandidateProfile:
    candidate_id: str
    selected: bool
    call_year: int
    profile: IVProfile
    yearly_counts: YearlyCitingCounts
    career_start_year: Optional[int] = None

    def __post_init__(self):
        late = [p for p in self.profile.points if p.observation_year > self.call_year]
        if late:
            raise ValueError(
                f"candidate {self.candidate_id!r} has IV points after call year "
                f"{self.call_year}"
            )


@dataclass(frozen=True)
class RangeStat:
    min: float
    max: float
    mean: float

    def __post_init__(self):
        if not (self.min <= self.mean <= self.max):
            raise ValueError("range statistic must satisfy min <= mean <= max")


@dataclass(frozen=True)
class CohortStats:
    group_size: int
    min_iv_range: Optional[RangeStat]
    share_all_above_one: Optional[float]
    fluctuation_range: Optional[RangeStat]  # over candidates with a defined fluctuation
    citing_per_year_last5: Optional[RangeStat]
    citing_per_year_since_start: Optional[RangeStat]  # candidates with a career start only


def profile_min(p: IVProfile) -> float:
    if not p.points:
        raise ValueError("profile is empty")
    return min(pt.value for pt in p.points)


def all_above(p: IVProfile, threshold: float) -> bool:
    """True iff every profile value is strictly above the threshold."""
    if not p.points:
        raise ValueError("profile is empty")
    return all(pt.value > threshold for pt in p.points)


def profile_fluctuation(
    p: IVProfile, call_year: int, k: int = FLUCTUATION_SPAN
) -> Optional[float]:
    """Max minus min IV over the k years up to the call, else None.

    Defined only when exactly k observation years in
    [call_year - k + 1, call_year] carry an IV value.
    """
    if k < 2:
        raise ValueError(f"fluctuation span must be >= 2, got {k}")
    in_span = [
        pt.value
        for pt in p.points
        if call_year - k + 1 <= pt.observation_year <= call_year
    ]
    if len(in_span) != k:
        return None
    return max(in_span) - min(in_span)


def _range_stat(values: list[float]) -> Optional[RangeStat]:
    if not values:
        return None
    return RangeStat(min=min(values), max=max(values), mean=fmean(values))


def _mean_citing(counts: YearlyCitingCounts, first_year: int, last_year: int) -> float:
    span = range(first_year, last_year + 1)
    return fmean(counts.get(y) for y in span)


def _group_stats(group: list[CandidateProfile]) -> CohortStats:
    if not group:
        return CohortStats(0, None, None, None, None, None)
    minima = [profile_min(c.profile) for c in group]
    above = [all_above(c.profile, 1.0) for c in group]
    fluctuations = [
        f
        for c in group
        if (f := profile_fluctuation(c.profile, c.call_year)) is not None
    ]
    last5 = [_mean_citing(c.yearly_counts, c.call_year - 4, c.call_year) for c in group]
    since_start = [
        _mean_citing(c.yearly_counts, c.career_start_year, c.call_year)
        for c in group
        if c.career_start_year is not None
    ]
    return CohortStats(
        group_size=len(group),
        min_iv_range=_range_stat(minima),
        share_all_above_one=sum(above) / len(group),
        fluctuation_range=_range_stat(fluctuations),
        citing_per_year_last5=_range_stat(last5),
        citing_per_year_since_start=_range_stat(since_start),
    )


def cohort_summary(candidates: list[CandidateProfile]) -> dict[str, CohortStats]:
    """Group summaries for selected vs not-selected candidates.

    Candidates whose fluctuation is undefined are excluded from the
    fluctuation aggregate but contribute to every other statistic; the
    since-start citing average covers only candidates with a known career
    start year.
    """
    if not candidates:
        raise ValueError("candidate set is empty")
    for c in candidates:
        if not c.profile.points:
            raise ValueError(f"candidate {c.candidate_id!r} has an empty profile")
    return {
        "selected": _group_stats([c for c in candidates if c.selected]),
        "not_selected": _group_stats([c for c in candidates if not c.selected]),
    }
