import math

import pytest

from glweights import (
    admissible_count,
    ascending_partitions,
    conjugate_partition,
    count_weight_monomials,
    dimension_bound_report,
    enumerate_params,
    estimate_partition_count,
    estimate_partition_count_min2,
    is_admissible,
    lower_bound_count,
    partition_count,
    partition_count_min2,
    to_admissible,
)
from oracles import (
    accel_asc,
    brute_adm2,
    brute_lower_bound,
    brute_p,
    brute_p2,
    brute_weight_monomials,
    partitions_min2,
)

LIMIT_RATE = math.pi * math.sqrt(2.0 / 3.0)


def test_partition_count_small_values():
    assert partition_count(0) == 1
    assert partition_count(1) == 1
    assert partition_count(5) == 7
    assert partition_count(6) == 11
    assert partition_count(-3) == 0


def test_partition_count_against_enumeration():
    for n in range(0, 45):
        assert partition_count(n) == brute_p(n)


def test_p100():
    assert partition_count(100) == 190569292


def test_min2_identity_and_enumeration():
    for n in range(1, 60):
        assert partition_count_min2(n) == partition_count(n) - partition_count(n - 1)
        assert partition_count_min2(n) == brute_p2(n)


def test_ascending_partitions_generator():
    assert list(ascending_partitions(0)) == [()]
    assert sorted(ascending_partitions(5)) == sorted(accel_asc(5))
    assert list(ascending_partitions(6, min_part=2)) == [(2, 2, 2), (2, 4), (3, 3), (6,)]
    for parts in ascending_partitions(9, min_part=2):
        assert sum(parts) == 9
        assert min(parts) >= 2


def test_admissible_count_values():
    assert admissible_count(0) == 1
    assert admissible_count(1) == 0
    assert admissible_count(5) == 2  # 5 and 2+3
    assert admissible_count(6) == 3  # 6, 2+4, 2+2+2 (3+3 excluded)


def test_admissible_count_against_enumeration():
    for n in range(0, 45):
        assert admissible_count(n) == brute_adm2(n)


def test_admissible_sandwich():
    for n in range(2, 501):
        adm = admissible_count(n)
        p2 = partition_count_min2(n)
        assert 2 * adm >= p2
        assert adm <= p2


def test_injection_examples():
    assert to_admissible((3, 3)) == (2, 4)
    assert to_admissible((2, 3, 4)) == (2, 2, 5)
    with pytest.raises(ValueError):
        to_admissible((2, 4))  # already admissible
    with pytest.raises(ValueError):
        to_admissible((1, 3))  # part below 2


def test_injection_is_injective_and_admissible_valued():
    for n in range(2, 61):
        images = set()
        domain_size = 0
        for parts in partitions_min2(n):
            if is_admissible(parts):
                continue
            domain_size += 1
            image = to_admissible(parts)
            assert sum(image) == n
            assert image[0] >= 2
            assert is_admissible(image)
            images.add(image)
        assert len(images) == domain_size
        assert domain_size == partition_count_min2(n) - admissible_count(n)


def test_injection_count_inequality_up_to_200():
    for n in range(0, 201):
        assert partition_count_min2(n) - admissible_count(n) <= admissible_count(n)


def test_conjugate_examples():
    assert conjugate_partition((1, 3, 4, 4)) == (2, 3, 3, 4)
    assert conjugate_partition((5,)) == (1, 1, 1, 1, 1)
    assert conjugate_partition(()) == ()


def test_conjugate_is_an_involution():
    for n in range(0, 31):
        for parts in accel_asc(n):
            assert conjugate_partition(conjugate_partition(parts)) == parts


def test_lower_bound_values():
    assert lower_bound_count(4) == 3
    assert lower_bound_count(7) == 6
    with pytest.raises(ValueError):
        lower_bound_count(0)


def test_lower_bound_against_enumeration():
    for n in range(1, 41):
        assert lower_bound_count(n) == brute_lower_bound(n)
        assert lower_bound_count(n) == admissible_count(n + 2)


def family_slot_partitions(n):
    """Shift-and-conjugate image of every family parameter tuple in degree n."""
    images = []
    for u in range(0, n + 1, 2):
        k = n - u
        if k == 0:
            # the wheel slot: two equal parts conjugate to all twos
            images.append(conjugate_partition((u // 2 + 1, u // 2 + 1)))
        else:
            for params in enumerate_params(k, u):
                shifted = tuple(sorted(tuple(x + 1 for x in params.a) + (params.b + 1, params.b + 1)))
                images.append(conjugate_partition(shifted))
    return images


def test_shift_conjugate_bijection_onto_lower_bound_set():
    for n in range(1, 31):
        target = sorted(
            parts for parts in partitions_min2(n + 2) if parts and (n - parts[-1]) % 2 == 0
        )
        images = sorted(family_slot_partitions(n))
        assert images == target


def test_estimate_ratios():
    assert 0.95 <= estimate_partition_count(100) / partition_count(100) <= 1.10
    ratios = [estimate_partition_count(n) / partition_count(n) for n in (50, 100, 200, 400)]
    deviations = [abs(r - 1.0) for r in ratios]
    assert deviations == sorted(deviations, reverse=True)
    assert 0.9 <= estimate_partition_count_min2(200) / partition_count_min2(200) <= 1.15


def test_lower_bound_growth_rate():
    # log LB(n)/sqrt(n) climbs toward pi*sqrt(2/3) from below
    rates = [math.log(lower_bound_count(n)) / math.sqrt(n) for n in (100, 200, 400)]
    assert rates == sorted(rates)
    assert all(r < LIMIT_RATE for r in rates)
    assert rates[-1] >= 0.75 * LIMIT_RATE


def test_weight_monomial_count():
    assert count_weight_monomials(0) == 1
    assert count_weight_monomials(1) == 3  # empty, (0), (1)
    assert count_weight_monomials(2) == 8
    for n in range(0, 9):
        assert count_weight_monomials(n) == brute_weight_monomials(n)


def test_dimension_bound_report():
    r1 = dimension_bound_report(1)
    assert r1.monomials == 3 and not r1.square_ok and not r1.cube_ok
    for n in range(2, 61):
        report = dimension_bound_report(n)
        assert report.square_ok
        assert report.cube_ok
