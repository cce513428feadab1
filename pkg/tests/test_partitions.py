import pytest

from bellbern.numeric import DomainError
from bellbern.partitions import PartitionMultiplicity, enumerate_partitions, partition_count, partition_weight
from oracles import brute_force_multiplicities, partition_count_dp


def k_of(r, **parts):
    k = [0] * r
    for name, v in parts.items():
        k[int(name[1:]) - 1] = v
    return tuple(k)


def test_zero_has_one_empty_partition():
    ps = list(enumerate_partitions(0))
    assert ps == [PartitionMultiplicity(0, ())]


def test_four():
    got = [p.k for p in enumerate_partitions(4)]
    expected = {k_of(4, k1=4), k_of(4, k1=2, k2=1), k_of(4, k2=2), k_of(4, k1=1, k3=1), k_of(4, k4=1)}
    assert set(got) == expected
    assert set(got) == set(brute_force_multiplicities(4))


def test_order_is_descending_lex():
    # matches the printed order of Y_4: x1^4, x1^2 x2, x1 x3, x2^2, x4
    got = [p.k for p in enumerate_partitions(4)]
    assert got == [(4, 0, 0, 0), (2, 1, 0, 0), (1, 0, 1, 0), (0, 2, 0, 0), (0, 0, 0, 1)]
    for r in range(12):
        ks = [p.k for p in enumerate_partitions(r)]
        assert ks == sorted(ks, reverse=True)


def test_five_has_seven():
    assert len(list(enumerate_partitions(5))) == 7


def test_counts_match_brute_force():
    for r in range(26):
        ps = list(enumerate_partitions(r))
        assert len(ps) == partition_count_dp(r) == partition_count(r)
        assert len({p.k for p in ps}) == len(ps)
        if r <= 11:
            assert {p.k for p in ps} == set(brute_force_multiplicities(r))
        for p in ps:
            assert sum(j * kj for j, kj in enumerate(p.k, 1)) == r


@pytest.mark.parametrize(
    "r, parts, weight",
    [(3, {"k1": 1, "k2": 1}, 3), (4, {"k2": 2}, 3), (4, {"k1": 2, "k2": 1}, 6)],
)
def test_weights_from_printed_polynomials(r, parts, weight):
    assert partition_weight(PartitionMultiplicity(r, k_of(r, **parts))) == weight


def test_weights_sum_to_bell_numbers():
    from oracles import bell_numbers_stirling

    bell = bell_numbers_stirling(15)
    for r in range(16):
        assert sum(partition_weight(p) for p in enumerate_partitions(r)) == bell[r]


def test_invalid_multiplicity_rejected():
    with pytest.raises(DomainError):
        PartitionMultiplicity(3, (1, 0, 1))
    with pytest.raises(DomainError):
        PartitionMultiplicity(2, (2,))
    with pytest.raises(DomainError):
        list(enumerate_partitions(-1))


def test_parts_view():
    assert PartitionMultiplicity(5, (1, 2, 0, 0, 0)).parts == (2, 2, 1)
