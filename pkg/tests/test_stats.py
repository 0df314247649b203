import pytest

from beckpairs.bijections import glaisher_merge
from beckpairs.pairs import PairError
from beckpairs.partitions import PartConstraint, Partition, iter_partitions, parse_partition
from beckpairs.stats import (
    ClassId,
    beck_statistics,
    distinct_core_multiplicity,
    enumerate_class,
    iter_class,
    sweep,
)


def P(text):
    return parse_partition(text)


def as_set(ps):
    return set(ps)


def test_classes_at_7_example_pair(example_pair):
    assert as_set(enumerate_class(example_pair, 7, ClassId.O)) == {
        P("7"), P("5,1^2"), P("1^7")}
    assert as_set(enumerate_class(example_pair, 7, ClassId.D)) == {
        P("7"), P("5,1^2"), P("3^2,1")}
    assert as_set(enumerate_class(example_pair, 7, ClassId.O1)) == {
        P("3^2,1"), P("3,1^4")}
    assert as_set(enumerate_class(example_pair, 7, ClassId.D1)) == {
        P("1^7"), P("3,1^4")}
    assert as_set(enumerate_class(example_pair, 7, ClassId.T)) == {P("3,1^4")}


def test_classes_at_11_example_pair(example_pair):
    assert as_set(enumerate_class(example_pair, 11, ClassId.O)) == {
        P("11"), P("7,1^4"), P("5^2,1"), P("5,1^6"), P("1^11")}
    assert as_set(enumerate_class(example_pair, 11, ClassId.D)) == {
        P("11"), P("9,1^2"), P("7,3,1"), P("5^2,1"), P("5,3^2")}


def test_classes_at_7_order4(vii4_pair):
    assert as_set(enumerate_class(vii4_pair, 7, ClassId.O)) == {
        P("7"), P("6,1"), P("3^2,1"), P("3,2^2"), P("3,1^4"), P("3,2,1^2"),
        P("2^3,1"), P("2^2,1^3"), P("2,1^5"), P("1^7")}
    assert as_set(enumerate_class(vii4_pair, 7, ClassId.D)) == {
        P("7"), P("6,1"), P("3^2,1"), P("3,2^2"), P("4,3"), P("3,2,1^2"),
        P("2^3,1"), P("2^2,1^3"), P("4,2,1"), P("4,1^3")}
    assert as_set(enumerate_class(vii4_pair, 7, ClassId.O1)) == {
        P("4,1^3"), P("4,2,1"), P("4,3")}
    assert as_set(enumerate_class(vii4_pair, 7, ClassId.D1)) == {
        P("1^7"), P("2,1^5"), P("3,1^4")}
    assert as_set(enumerate_class(vii4_pair, 7, ClassId.T)) == {
        P("1^7"), P("2,1^5")}


def test_enumeration_order_lex_decreasing(example_pair):
    for cls in ClassId:
        for n in (7, 11, 14):
            got = enumerate_class(example_pair, n, cls)
            assert got == sorted(got, reverse=True)


def test_beck_statistics_golden(example_pair, vii4_pair):
    rep = beck_statistics(example_pair, 7)
    assert (rep.a, rep.b, rep.c) == (2, 4, 2)
    assert (rep.b_prime, rep.c_prime) == (1, 1)
    assert rep.ok_beck1 and rep.ok_beck2

    assert beck_statistics(example_pair, 11).b == 14

    rep4 = beck_statistics(vii4_pair, 7)
    assert (rep4.a, rep4.b, rep4.c) == (3, 9, 3)
    assert (rep4.b_prime, rep4.c_prime) == (2, 2)
    assert rep4.ok_beck1 and rep4.ok_beck2


def test_beck_statistics_degenerate(example_pair):
    rep = beck_statistics(example_pair, 0)
    assert rep.count_o == rep.count_d == 1
    assert rep.a == rep.b == rep.c == rep.b_prime == rep.c_prime == 0
    assert rep.ok_beck1 and rep.ok_beck2
    with pytest.raises(PairError):
        beck_statistics(example_pair, -1)


def test_report_serialization(example_pair):
    row = beck_statistics(example_pair, 7).to_dict()
    assert row == {"n": 7, "O_r": 3, "D_r": 3, "a_r": 2, "b_r": 4, "c_r": 2,
                   "b'_r": 1, "c'_r": 1, "ok_beck1": True, "ok_beck2": True}


def test_sweep_orders_by_n(example_pair):
    reports = sweep(example_pair, [5, 3, 4])
    assert [r.n for r in reports] == [3, 4, 5]


def test_invalid_pair_rejected():
    import beckpairs as bp
    bad = bp.EulerPair(2, bp.IntegerSet.from_elements([1, 2]), name="broken")
    with pytest.raises(PairError):
        beck_statistics(bad, 6)


def _filter_oracle_one_nonprimitive(pair, n):
    """Brute-force O1: filter all S1-partitions for exactly one
    non-primitive distinct value."""
    out = []
    for p in iter_partitions(n, PartConstraint(pair.s1.contains)):
        if sum(1 for v in p.values() if not pair.s2.contains(v)) == 1:
            out.append(p)
    return out


def _filter_oracle_one_heavy(pair, n, lo, hi):
    out = []
    for p in iter_partitions(n, PartConstraint(pair.s1.contains)):
        heavy = [m for _, m in p.parts if m >= pair.r]
        if len(heavy) == 1 and lo <= heavy[0] <= hi:
            out.append(p)
    return out


@pytest.mark.parametrize("family,r", [("example-odd-mod6", None), ("classical", 2)])
def test_class_enumeration_against_filter_oracle(family, r):
    import beckpairs as bp
    pair = bp.builtin_pair(family, r=r)
    top = 14 if family == "example-odd-mod6" else 12
    for n in range(0, top + 1):
        assert as_set(enumerate_class(pair, n, ClassId.O1)) == as_set(
            _filter_oracle_one_nonprimitive(pair, n))
        assert as_set(enumerate_class(pair, n, ClassId.D1)) == as_set(
            _filter_oracle_one_heavy(pair, n, pair.r, n))
        assert as_set(enumerate_class(pair, n, ClassId.T)) == as_set(
            _filter_oracle_one_heavy(pair, n, pair.r + 1, 2 * pair.r - 1))


def test_t_subset_of_d1(example_pair, vii4_pair):
    for pair in (example_pair, vii4_pair):
        for n in range(0, 21):
            d1 = as_set(enumerate_class(pair, n, ClassId.D1))
            assert as_set(enumerate_class(pair, n, ClassId.T)) <= d1


def test_distinct_core_multiplicity(example_pair):
    mu = P("9,1^2")
    assert distinct_core_multiplicity(example_pair, mu, 1) == 2  # parts 9=r^2 and 1
    assert distinct_core_multiplicity(example_pair, mu, 5) == 0
    mu2 = P("5,3^2")
    assert distinct_core_multiplicity(example_pair, mu2, 5) == 1
    assert distinct_core_multiplicity(example_pair, mu2, 1) == 1  # part 3 = r*1
    with pytest.raises(PairError):
        distinct_core_multiplicity(example_pair, mu, 3)  # 3 is not primitive
    assert distinct_core_multiplicity(example_pair, Partition(), 1) == 0


def test_b_prime_contribution_formula(example_pair, vii4_pair):
    # b'(n) equals the sum over D-class partitions of (m(core) - 1) over
    # the distinct primitive cores of their parts
    for pair in (example_pair, vii4_pair):
        for n in range(0, 19):
            total = 0
            for mu in iter_class(pair, n, ClassId.D):
                cores = {pair.decompose(v).core for v in mu.values()}
                total += sum(distinct_core_multiplicity(pair, mu, c) - 1
                             for c in cores)
            assert total == beck_statistics(pair, n).b_prime


def test_b_as_merge_length_deficit(example_pair, vii4_pair):
    # b(n) equals the total number of parts lost by merging each O-class
    # partition down to its D-class image
    for pair in (example_pair, vii4_pair):
        for n in range(0, 19):
            total = sum(lam.length - glaisher_merge(pair, lam).length
                        for lam in iter_class(pair, n, ClassId.O))
            assert total == beck_statistics(pair, n).b
