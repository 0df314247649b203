import pytest

from beckpairs.partitions import (
    PartConstraint,
    Partition,
    PartitionError,
    enumerate_partitions,
    format_partition,
    iter_partitions,
    parse_partition,
    partition_to_pairs,
)


def P(text):
    return parse_partition(text)


def test_union_merges_all_parts():
    lam = Partition.from_values([5, 5, 3, 2, 2, 1])
    mu = Partition.from_values([7, 5, 3, 3])
    assert list(lam.union(mu).flat()) == [7, 5, 5, 5, 3, 3, 3, 2, 2, 1]


def test_union_with_empty_is_identity():
    lam = P("9,4^2,1")
    assert lam.union(Partition()) == lam
    assert Partition().union(lam) == lam


def test_union_merges_equal_values():
    assert P("3,1").union(P("3^2")) == P("3^3,1")


def test_union_commutative_associative():
    ps = enumerate_partitions(5)
    for a in ps:
        for b in ps:
            assert a.union(b) == b.union(a)
            for c in enumerate_partitions(3):
                assert a.union(b).union(c) == a.union(b.union(c))


def test_canonicalization_and_accessors():
    p = Partition([(1, 2), (5, 1), (1, 1), (3, 4)])
    assert p.parts == ((5, 1), (3, 4), (1, 3))
    assert p.size == 5 + 12 + 3
    assert p.length == 8
    assert p.distinct_count == 3
    assert p.values() == (5, 3, 1)
    assert p.multiplicity_of(3) == 4
    assert p.multiplicity_of(2) == 0


def test_rejects_bad_parts():
    with pytest.raises(PartitionError):
        Partition([(0, 1)])
    with pytest.raises(PartitionError):
        Partition([(-3, 1)])
    with pytest.raises(PartitionError):
        Partition([(3, -1)])
    # zero multiplicities are dropped, not an error
    assert Partition([(3, 0)]) == Partition()


def test_multiplicity_of_golden_values():
    lam = P("35,17^3,15^84,5^51,1^3")
    assert lam.multiplicity_of(15) == 84
    assert lam.multiplicity_of(8) == 0
    big = P("32805,3645^2,1215,135^2,45^320,25,9,3")
    assert big.multiplicity_of(45) == 320


def test_text_round_trip():
    for text in ["", "7", "5,1^2", "35,17^3,15^84,5^51,1^3",
                 "32805,3645^2,1215,135^2,45^320,25,9,3"]:
        assert format_partition(parse_partition(text)) == text


def test_parse_normalizes():
    assert parse_partition("1,3,3,5") == P("5,3^2,1")
    assert parse_partition(" 5 , 1^2 ") == P("5,1^2")
    assert parse_partition("5^1,5^1") == P("5^2")


def test_json_form():
    lam = P("35,17^3,1^3")
    pairs = partition_to_pairs(lam)
    assert pairs == [[35, 1], [17, 3], [1, 3]]
    assert parse_partition("[[17,3],[35,1],[1,3]]") == lam
    assert parse_partition("[]") == Partition()
    with pytest.raises(PartitionError):
        parse_partition("[[1,2,3]]")
    with pytest.raises(PartitionError):
        parse_partition("[1,2]][")


def test_parse_errors():
    with pytest.raises(PartitionError):
        parse_partition("3,,1")
    with pytest.raises(PartitionError):
        parse_partition("3^x")


ODD = PartConstraint(lambda v: v % 2 == 1)


def test_enumerate_odd_primitive_example():
    allowed = PartConstraint(lambda v: v % 2 == 1 and v % 6 in (1, 5))
    got = enumerate_partitions(7, allowed)
    assert got == [P("7"), P("5,1^2"), P("1^7")]


def test_enumerate_bounded_multiplicity_example():
    got = enumerate_partitions(7, PartConstraint(lambda v: v % 2 == 1, 2))
    assert got == [P("7"), P("5,1^2"), P("3^2,1")]


def test_enumerate_zero():
    assert enumerate_partitions(0) == [Partition()]
    assert enumerate_partitions(0, ODD) == [Partition()]


def test_enumerate_counts_unrestricted():
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    for n, count in enumerate(expected):
        assert len(enumerate_partitions(n)) == count


def test_enumerate_respects_constraints_and_size():
    c = PartConstraint(lambda v: v % 3 != 0, 2)
    for n in range(0, 13):
        for p in iter_partitions(n, c):
            assert p.size == n
            assert all(v % 3 != 0 and m <= 2 for v, m in p.parts)


def test_enumeration_order_is_flat_lex_decreasing():
    for n in (6, 8, 9):
        got = enumerate_partitions(n)
        flat = [tuple(p.flat()) for p in got]
        assert flat == sorted(flat, reverse=True)
        # Partition comparison agrees with the flat order
        assert got == sorted(got, reverse=True)


def test_max_multiplicity_zero_yields_nothing():
    assert enumerate_partitions(3, PartConstraint(lambda v: True, 0)) == []


def test_negative_size_rejected():
    with pytest.raises(PartitionError):
        list(iter_partitions(-1))
