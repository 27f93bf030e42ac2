import pytest

from cases import BOUNDARIES, IDIOMS, LABELLED, apair, sized
from codemorph.dataset import (SplitMix64, bucket_by_size, bucket_of, build_dataset, dedup_split,
                               filter_expressible, filter_unchanged, is_expressible)


def test_labelled_pairs():
    for before, after, label in LABELLED:
        assert is_expressible(apair(before, after), IDIOMS) is label, (before, after)
    kept = filter_expressible([apair(b, a) for b, a, _ in LABELLED], IDIOMS)
    assert len(kept) == sum(label for *_, label in LABELLED)


@pytest.mark.parametrize("lengths,bucket", BOUNDARIES)
def test_bucket_boundaries(lengths, bucket):
    p = sized(*lengths)
    assert (len(p.am_b), len(p.am_a)) == lengths
    assert bucket_of(p) == bucket
    small, medium, discarded = bucket_by_size([p])
    assert {"small": small, "medium": medium, "discarded": discarded}[bucket] == [p]


def test_filter_unchanged():
    same = apair("a ;", "a ;")
    diff = apair("a ;", "b ;")
    assert filter_unchanged([same, diff]) == [diff]
    assert filter_unchanged([]) == []


def test_filters_commute():
    pairs = [apair(b, a) for b, a, _ in LABELLED] + [apair("VAR_0 ;", "VAR_0 ;")]
    one = filter_unchanged(filter_expressible(pairs, IDIOMS))
    two = filter_expressible(filter_unchanged(pairs), IDIOMS)
    assert one == two


def unique_pairs(n):
    return [apair(f"VAR_{i} = INT_0 ;", f"VAR_{i} = 0 ;") for i in range(n)]


def test_split_sizes():
    ds = dedup_split(unique_pairs(100), seed=1)
    assert ds.counts() == {"train": 80, "valid": 10, "test": 10}
    ds = dedup_split(unique_pairs(37), seed=1)
    assert ds.counts() == {"train": 31, "valid": 3, "test": 3}
    assert len(ds.train) >= 8 * len(ds.test) - 8


def test_duplicates_collapse():
    pairs = unique_pairs(12)
    pairs.append(apair(" ".join(pairs[0].am_b), " ".join(pairs[0].am_a)))
    ds = dedup_split(pairs, seed=3)
    assert ds.duplicates_removed == 1
    keys = [p.key() for p in ds.train + ds.valid + ds.test]
    assert keys.count(pairs[0].key()) == 1


def test_split_is_seeded():
    pairs = unique_pairs(50)
    a, b, c = (dedup_split(pairs, seed=s) for s in (5, 5, 6))
    assert [p.key() for p in a.test] == [p.key() for p in b.test]
    assert [p.key() for p in a.train] != [p.key() for p in c.train]


def test_too_few_pairs():
    with pytest.raises(ValueError):
        dedup_split(unique_pairs(9), seed=0)


def test_leakage_is_counted_not_filtered():
    pairs = [apair(f"VAR_{i % 5} ;", f"VAR_{i % 5} = INT_{i} ;") for i in range(40)]
    ds = dedup_split(pairs, seed=0)
    assert ds.leakage_warnings > 0
    assert sum(ds.counts().values()) == 40


def test_splitmix_reference_values():
    # first outputs for seed 1234567, from the published C reference implementation
    g = SplitMix64(1234567)
    assert [g.next() for _ in range(3)] == [6457827717110365317, 3203168211198807973,
                                            9817491932198370423]


def test_build_dataset_chain():
    pairs = unique_pairs(20) + [apair("VAR_0 ;", "VAR_0 ;"), apair("VAR_0 ;", "VAR_9 ;")]
    ds = build_dataset(pairs, IDIOMS, "small", seed=0)
    assert sum(ds.counts().values()) == 20
