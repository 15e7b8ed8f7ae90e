"""Hypothesis property tests for the indicator math and dataset reductions."""

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from impact_vitality import (
    FilterSet,
    FixedStart,
    MovingWindow,
    YearlyCitingCounts,
    apply_filters,
    h_index,
    impact_vitality,
    iv_profile,
    iv_upper_bound,
    parse_dataset,
    emit_dataset,
    yearly_citing_counts,
)

from conftest import make_dataset, make_target

window_counts = st.lists(
    st.integers(min_value=0, max_value=10**6), min_size=2, max_size=30
).filter(lambda xs: sum(xs) > 0)


@given(window_counts, st.integers(min_value=1, max_value=1000))
def test_multiplier_invariance(counts, factor):
    scaled = [factor * c for c in counts]
    assert abs(impact_vitality(scaled) - impact_vitality(counts)) <= 1e-12


@given(window_counts)
def test_bounds(counts):
    value = impact_vitality(counts)
    assert 0.0 <= value <= iv_upper_bound(len(counts)) + 1e-12


@given(st.integers(min_value=2, max_value=30), st.integers(min_value=1, max_value=10**6))
def test_constant_counts_give_one(n, level):
    assert abs(impact_vitality([level] * n) - 1.0) <= 1e-12


@given(window_counts, st.data())
def test_moving_mass_newer_strictly_increases(counts, data):
    donors = [i for i, c in enumerate(counts) if c > 0 and i > 0]
    assume(donors)
    src = data.draw(st.sampled_from(donors))
    dst = data.draw(st.integers(min_value=0, max_value=src - 1))
    moved = list(counts)
    moved[src] -= 1
    moved[dst] += 1
    assert impact_vitality(moved) > impact_vitality(counts)


def test_reversal_swaps_growth_and_decline():
    # the canonical increasing/decreasing pair are reversals of each other
    assert impact_vitality([1, 2, 3, 4, 5]) == impact_vitality([5, 4, 3, 2, 1][::-1])


@given(window_counts)
def test_reversal_changes_monotone_sequences(counts):
    assume(sorted(counts) in (counts, counts[::-1]))  # monotone either way
    assume(counts != counts[::-1])
    assert impact_vitality(counts) != impact_vitality(counts[::-1])


@given(st.lists(st.integers(min_value=0, max_value=100), max_size=50))
def test_h_index_properties(citations):
    h = h_index(citations)
    assert 0 <= h <= len(citations)
    assert h == h_index(sorted(citations))
    assert sum(c >= h for c in citations) >= h
    if h < len(citations):
        assert sum(c >= h + 1 for c in citations) < h + 1


year_counts = st.dictionaries(
    st.integers(min_value=1980, max_value=2020),
    st.integers(min_value=0, max_value=10000),
    min_size=1,
    max_size=30,
)


@given(year_counts, st.integers(min_value=2, max_value=8))
def test_profile_consistent_with_direct_formula(counts_map, n):
    counts = YearlyCitingCounts(counts_map)
    first, last = min(counts_map), max(counts_map)
    profile = iv_profile(counts, MovingWindow(n), first, last)
    for pt in profile.points:
        window = [counts.get(y) for y in range(pt.observation_year, pt.observation_year - n, -1)]
        assert pt.value == impact_vitality(window)
        assert pt.zero_year_flag == (0 in window)


@given(year_counts)
def test_fixed_start_profile_years_increase(counts_map):
    counts = YearlyCitingCounts(counts_map)
    first, last = min(counts_map), max(counts_map)
    profile = iv_profile(counts, FixedStart(first, 2), first, last)
    years = [p.observation_year for p in profile.points]
    assert years == sorted(set(years))


record_strategy = st.lists(
    st.tuples(
        st.integers(min_value=1995, max_value=2010),  # year
        st.sets(st.sampled_from(["pA", "pB", "pC"]), min_size=1),
        st.booleans(),  # self-citing
    ),
    min_size=1,
    max_size=40,
)


def dataset_from_tuples(tuples):
    recs = [
        (
            f"c{i}",
            year,
            cited,
            [("smith", "ja")] if selfcite else [("jones", "k")],
        )
        for i, (year, cited, selfcite) in enumerate(tuples)
    ]
    return make_dataset(
        [("pA", 1994), ("pB", 1995), ("pC", 1996)], recs, target=make_target("smith", "ja")
    )


@given(record_strategy)
def test_filter_relaxation_is_monotone(tuples):
    ds = dataset_from_tuples(tuples)
    strict = FilterSet(exclude_self_citations=True, exclude_citing_only="pA")
    relaxed = FilterSet(exclude_self_citations=True)
    strict_counts = yearly_citing_counts(ds, strict)
    relaxed_counts = yearly_citing_counts(ds, relaxed)
    for year in set(strict_counts.counts) | set(relaxed_counts.counts):
        assert relaxed_counts.get(year) >= strict_counts.get(year)


@given(record_strategy)
def test_counts_sum_to_survivors(tuples):
    ds = dataset_from_tuples(tuples)
    fs = FilterSet(exclude_self_citations=True)
    assert yearly_citing_counts(ds, fs).total() == len(apply_filters(ds, fs))


@given(record_strategy, st.none() | st.integers(min_value=1990, max_value=1996))
def test_dataset_round_trip(tuples, career_start):
    ds = dataset_from_tuples(tuples)
    target = make_target("smith", "ja", career_start_year=career_start)
    ds = make_dataset(
        [(p.id, p.year, p.doc_type) for p in ds.publications],
        [
            (r.id, r.year, set(r.cited_target_pub_ids),
             [(a.surname, a.initials) for a in r.authors])
            for r in ds.citing_records
        ],
        target=target,
    )
    assert parse_dataset(emit_dataset(ds)) == ds
