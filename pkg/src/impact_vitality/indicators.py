"""Impact Vitality and comparison indicators (h-index, AR-index).

Impact Vitality measures how the yearly volume of publications citing an
author's work trends over a window of n years. Citing counts are weighted by
inverse age (the observation year has age 1, weight 1; the oldest window
year has age n, weight 1/n) and normalized so that a constant yearly volume
yields exactly 1. Values above 1 mean the citing volume is growing, below 1
shrinking; the value is invariant under scaling all counts by a common
factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .model import YearlyCitingCounts

DEFAULT_MIN_WINDOW = 4  # growing windows shorter than this are not reported


def harmonic(n: int) -> float:
    return sum(1.0 / i for i in range(1, n + 1))


def iv_upper_bound(n: int) -> float:
    """Largest attainable value for a window of n years.

    Reached when all citing mass sits in the newest year: (n-1)/(H_n - 1).
    """
    if n < 2:
        raise ValueError(f"window length must be >= 2, got {n}")
    return (n - 1) / (harmonic(n) - 1.0)


def impact_vitality(counts: Sequence[int]) -> float:
    """Impact Vitality of a citing-count window, newest year first.

    counts[0] is the observation year (age 1), counts[-1] the oldest window
    year (age n). Requires n >= 2 and a positive total.
    """
    n = len(counts)
    if n < 2:
        raise ValueError(f"window length must be >= 2, got {n}")
    if any(c < 0 for c in counts):
        raise ValueError("citing counts must be non-negative")
    total = sum(counts)
    if total <= 0:
        raise ValueError("window total must be positive")
    weighted = sum(c / i for i, c in enumerate(counts, start=1))
    return (n * (weighted / total) - 1.0) / (harmonic(n) - 1.0)


@dataclass(frozen=True)
class MovingWindow:
    """Fixed-length window of n years sliding with the observation year."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"moving window length must be >= 2, got {self.n}")


@dataclass(frozen=True)
class FixedStart:
    """Window growing from a fixed origin (PhD year or first-citation year)."""

    start_year: int
    min_length: int = DEFAULT_MIN_WINDOW

    def __post_init__(self):
        if self.min_length < 2:
            raise ValueError(f"minimum window length must be >= 2, got {self.min_length}")


WindowSpec = Union[MovingWindow, FixedStart]


@dataclass(frozen=True)
class IVPoint:
    observation_year: int
    window_length: int
    value: float
    total_citing: int
    zero_year_flag: bool  # some window year had zero citing publications


@dataclass(frozen=True)
class IVProfile:
    """IV values across observation years, ascending, no duplicates."""

    points: tuple[IVPoint, ...]
    window_spec: WindowSpec

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        years = [p.observation_year for p in self.points]
        if any(a >= b for a, b in zip(years, years[1:])):
            raise ValueError("profile observation years must be strictly increasing")

    def __len__(self) -> int:
        return len(self.points)

    def values(self) -> list[float]:
        return [p.value for p in self.points]


def iv_profile(
    counts: YearlyCitingCounts,
    spec: WindowSpec,
    first_year: int,
    last_year: int,
) -> IVProfile:
    """Compute one IVPoint per admissible observation year in the range.

    Years missing from `counts` contribute 0 inside a window. Observation
    years whose window total is 0 are skipped entirely (the formula is
    undefined there); windows containing an individual zero year are still
    reported but flagged, since the indicator is unreliable when counts
    fluctuate between zero and non-zero.
    """
    if first_year > last_year:
        raise ValueError(f"empty observation range [{first_year}, {last_year}]")
    if isinstance(spec, FixedStart) and spec.start_year > last_year:
        raise ValueError(
            f"window start {spec.start_year} is after the last observation year {last_year}"
        )

    points: list[IVPoint] = []
    for y_t in range(first_year, last_year + 1):
        if isinstance(spec, MovingWindow):
            n = spec.n
            window_start = y_t - n + 1
        else:
            n = y_t - spec.start_year + 1
            window_start = spec.start_year
            if n < spec.min_length:
                continue
        window = [counts.get(y) for y in range(y_t, window_start - 1, -1)]
        total = sum(window)
        if total == 0:
            continue
        points.append(
            IVPoint(
                observation_year=y_t,
                window_length=n,
                value=impact_vitality(window),
                total_citing=total,
                zero_year_flag=any(c == 0 for c in window),
            )
        )
    return IVProfile(points=tuple(points), window_spec=spec)


def h_index(citation_counts: Sequence[int]) -> int:
    """Largest h such that at least h values are >= h."""
    ranked = sorted(citation_counts, reverse=True)
    h = 0
    for rank, cites in enumerate(ranked, start=1):
        if cites >= rank:
            h = rank
        else:
            break
    return h


def ar_index(h_core: Sequence[tuple[int, int]]) -> float:
    """Square root of the summed citations-per-age over the h-core.

    h_core holds (citations, age) pairs for exactly the h publications that
    realize the h-index; selecting them is the caller's duty. Ages are >= 1
    (a same-year publication has age 1).
    """
    for cites, age in h_core:
        if age < 1:
            raise ValueError(f"publication age must be >= 1, got {age}")
        if cites < 0:
            raise ValueError(f"citation count must be >= 0, got {cites}")
    return math.sqrt(sum(cites / age for cites, age in h_core))


def select_h_core(
    pubs: Sequence[tuple[str, int, int]], observation_year: int
) -> list[tuple[int, int]]:
    """Pick the h-core as (citations, age) pairs for ar_index.

    `pubs` holds (publication id, citations, publication year) triples. Ties
    at the h-th citation count are broken toward the more recent publication
    (smaller age), then by id for determinism.
    """
    ranked = sorted(pubs, key=lambda p: (-p[1], -p[2], p[0]))
    h = h_index([cites for _, cites, _ in pubs])
    return [
        (cites, observation_year - year + 1) for _, cites, year in ranked[:h]
    ]


def default_window_spec(
    career_start_year: Optional[int],
    first_citation_year: Optional[int],
    min_length: int = DEFAULT_MIN_WINDOW,
) -> FixedStart:
    """Fixed-start window anchored at the career start, else first citation."""
    start = career_start_year if career_start_year is not None else first_citation_year
    if start is None:
        raise ValueError("no career start or first citation year to anchor the window")
    return FixedStart(start_year=start, min_length=min_length)
