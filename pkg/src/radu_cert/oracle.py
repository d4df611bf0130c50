"""Brute-force ground truth, independent of the series engine.

Nothing here inverts or multiplies power series: partition counts come from
the classic coin-change style dynamic programme, and the pentagonal sums
from direct enumeration of pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt


@dataclass(frozen=True)
class PartitionCountTable:
    limit: int
    counts: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def __len__(self) -> int:
        return len(self.counts)


def count_colored_regular(limit: int, ell: int, colours: int) -> PartitionCountTable:
    """Count ell-regular partitions with ``colours`` colours per part size, for n < limit.

    Use ``ell >= limit`` to get unrestricted partitions.
    """
    if limit < 1 or ell < 2 or colours < 1:
        raise ValueError("need limit >= 1, ell >= 2, colours >= 1")
    counts = [0] * limit
    counts[0] = 1
    for size in range(1, limit):
        if size % ell == 0:
            continue
        for _colour in range(colours):
            for n in range(size, limit):
                counts[n] += counts[n - size]
    return PartitionCountTable(limit, tuple(counts))


def _gp(k: int) -> int:
    return k * (3 * k - 1) // 2


def pentagonal_pair_sign_sum(n: int) -> int:
    """Sum of (-1)^(k+l) over all integer pairs with gp(k) + gp(l) = n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    # gp(k) >= (3k^2 - |k|)/2 >= k^2 for |k| >= 1, so |k| <= isqrt(n) + 1 suffices
    bound = isqrt(n) + 1
    ks = range(-bound, bound + 1)
    index = {_gp(k): k for k in ks}
    total = 0
    for k in ks:
        rest = n - _gp(k)
        if rest in index:
            total += (-1) ** ((k + index[rest]) % 2)
    return total


def check_mod3_characterization(limit: int) -> bool:
    """Check the known mod-3 behaviour of 3-coloured 3-regular partitions for n < limit.

    Here n indexes the progressions, so p(3n), p(3n+1), p(3n+2) are all
    examined for every n < limit.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    table = count_colored_regular(3 * limit, 3, 3)
    for n in range(limit):
        if table[3 * n + 1] % 3 or table[3 * n + 2] % 3:
            return False
        if (table[3 * n] - pentagonal_pair_sign_sum(n)) % 3:
            return False
    return True
