from itertools import combinations_with_replacement

import pytest

from radu_cert.oracle import (
    check_mod3_characterization,
    count_colored_regular,
    pentagonal_pair_sign_sum,
)
from radu_cert.series import euler_factor, power


def enumerate_partitions(n, ell, colours):
    """Count multisets of (size, colour) part types summing to n, by listing them."""
    types = [(s, c) for s in range(1, n + 1) if s % ell for c in range(colours)]
    total = 0
    for length in range(n + 1):
        for combo in combinations_with_replacement(types, length):
            if sum(s for s, _ in combo) == n:
                total += 1
    return total


def test_count_examples():
    assert count_colored_regular(3, 3, 3).counts == (1, 3, 9)
    assert count_colored_regular(2, 2, 1).counts == (1, 1)
    assert count_colored_regular(1, 3, 3).counts == (1,)


@pytest.mark.parametrize("ell,colours", [(3, 3), (2, 1), (2, 2), (5, 1)])
def test_count_matches_listing(ell, colours):
    table = count_colored_regular(9, ell, colours)
    assert list(table.counts) == [enumerate_partitions(n, ell, colours) for n in range(9)]


def test_ordinary_partitions():
    table = count_colored_regular(101, 101, 1)
    assert table[10] == 42
    assert table[20] == 627
    assert table[100] == 190569292


def test_count_invalid():
    with pytest.raises(ValueError):
        count_colored_regular(0, 3, 3)
    with pytest.raises(ValueError):
        count_colored_regular(5, 1, 3)


def test_pentagonal_sign_sum_examples():
    assert pentagonal_pair_sign_sum(0) == 1
    assert pentagonal_pair_sign_sum(1) == -2
    # (1,1) gives +1; (-1,0) and (0,-1) give -1 each
    assert pentagonal_pair_sign_sum(2) == -1
    # 3 = gp(1) + gp(-1) = gp(-1) + gp(1)
    assert pentagonal_pair_sign_sum(3) == 2
    # 4 = gp(-1) + gp(-1) only
    assert pentagonal_pair_sign_sum(4) == 1


def test_pentagonal_sign_sum_is_f1_squared():
    f1sq = power(euler_factor(1, 300), 2).tolist()
    assert [pentagonal_pair_sign_sum(n) for n in range(300)] == f1sq


def test_mod3_characterization():
    assert check_mod3_characterization(100)
    table = count_colored_regular(3, 3, 3)
    assert table[1] == 3
    assert table[0] % 3 == pentagonal_pair_sign_sum(0) % 3


def test_mod3_characterization_uses_sum_over_representations():
    # n = 3 has two ordered representations; counting the pair once would give 1
    p = count_colored_regular(10, 3, 3)
    assert p[9] % 3 == 2
    assert pentagonal_pair_sign_sum(3) % 3 == 2
