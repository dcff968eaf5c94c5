import pytest

from sonlap import Partition, count, enumerate_upto, partitions_of


def brute_force_partitions(degree):
    """Independent enumeration: grow non-increasing tuples part by part."""
    if degree == 0:
        return {()}
    found = set()
    stack = [((), degree)]
    while stack:
        prefix, left = stack.pop()
        cap = prefix[-1] if prefix else left
        for nxt in range(1, min(cap, left) + 1):
            cand = prefix + (nxt,)
            if left - nxt == 0:
                found.add(cand)
            else:
                stack.append((cand, left - nxt))
    return found


def test_enumerate_upto_k0():
    assert enumerate_upto(0) == [Partition()]


def test_enumerate_upto_k2_order():
    expected = [Partition(()), Partition((1,)), Partition((2,)), Partition((1, 1))]
    assert enumerate_upto(2) == expected


def test_enumerate_upto_k4_length():
    # 1 + 1 + 2 + 3 + 5 partitions of degrees 0..4
    assert len(enumerate_upto(4)) == 12


@pytest.mark.parametrize("degree", range(9))
def test_partitions_of_matches_brute_force(degree):
    got = {p.parts for p in partitions_of(degree)}
    assert got == brute_force_partitions(degree)


def test_descending_lex_order_within_degree():
    parts4 = [p.parts for p in partitions_of(4)]
    assert parts4 == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


@pytest.mark.parametrize("k", [0, 4, 7])
def test_count_known_values(k):
    assert count(k) == len(brute_force_partitions(k))


def test_count_vs_enumeration_slices():
    for k in range(21):
        slice_size = sum(1 for p in enumerate_upto(k) if p.degree == k)
        assert count(k) == slice_size


def test_prefix_stability():
    previous = enumerate_upto(0)
    for k in range(1, 13):
        current = enumerate_upto(k)
        assert current[: len(previous)] == previous
        previous = current


def test_canonical_invariants_hold_for_all_emitted():
    for p in enumerate_upto(12):
        assert all(x >= 1 for x in p.parts)
        assert all(a >= b for a, b in zip(p.parts, p.parts[1:]))
        assert p.degree == sum(p.parts)


def test_of_strips_zeros_and_sorts():
    assert Partition.of(2, 1, 0).parts == (2, 1)
    assert Partition.of(1, 3, 2).parts == (3, 2, 1)
    assert Partition.of() == Partition()


def test_invalid_parts_rejected():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((0,))
    with pytest.raises(ValueError):
        Partition.of(-1)


def test_serialization_round_trip():
    for p in enumerate_upto(6):
        assert Partition.parse(p.serialize()) == p
    assert Partition.parse("0") == Partition()
    assert Partition.parse("2,1").parts == (2, 1)
    assert Partition().serialize() == "0"


def test_padded_display_form():
    assert Partition.of(2, 1).padded() == (2, 1, 0)
    assert Partition.of(4).padded() == (4, 0, 0, 0)
    assert Partition.of(1, 1).padded() == (1, 1)


def test_concat_merges_sorted():
    assert Partition.of(2).concat(Partition.of(3, 1)).parts == (3, 2, 1)
