"""Independent brute-force oracles and classical fixtures for the tests.

Everything here recomputes expected values from first principles with
logic that shares no code with the package implementations: permutations
come from deduplicated itertools permutations, chains from filtered
vertex sequences, partition counts from a direct recursive enumeration.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

# Classical Eulerian triangle rows, indexed by d (A008292).
EULERIAN_CLASSICAL = {
    1: (1,),
    2: (1, 1),
    3: (1, 4, 1),
    4: (1, 11, 11, 1),
    5: (1, 26, 66, 26, 1),
    6: (1, 57, 302, 302, 57, 1),
    7: (1, 120, 1191, 2416, 1191, 120, 1),
}

# Ordered Bell numbers: total ordered set partitions of d distinct items
# (A000670).
FUBINI = {1: 1, 2: 3, 3: 13, 4: 75, 5: 541, 6: 4683}


def weakly_decreasing_tuples(length: int, bound: int) -> list[tuple[int, ...]]:
    """All weakly decreasing tuples with entries 0..bound, brute force."""
    return [
        t
        for t in itertools.product(range(bound + 1), repeat=length)
        if all(a >= b for a, b in zip(t, t[1:]))
    ]


def brute_q_binomial_coeffs(n: int, k: int) -> tuple[int, ...]:
    """Coefficients of [n, k]_q from its lattice-point definition."""
    tally: dict[int, int] = {}
    for t in weakly_decreasing_tuples(k, n - k):
        s = sum(t)
        tally[s] = tally.get(s, 0) + 1
    if not tally:
        return ()
    out = [0] * (max(tally) + 1)
    for s, c in tally.items():
        out[s] = c
    return tuple(out)


@lru_cache(maxsize=None)
def stirling_second(n: int, k: int) -> int:
    """Classical S(n, k) by the standard recurrence."""
    if n == 0 and k == 0:
        return 1
    if n == 0 or k == 0:
        return 0
    return k * stirling_second(n - 1, k) + stirling_second(n - 1, k - 1)


def multiset_words(parts: tuple[int, ...]) -> set[tuple[int, ...]]:
    """Every distinct word of the multiset, by deduplication."""
    letters = [j for j, p in enumerate(parts, start=1) for _ in range(p)]
    return set(itertools.permutations(letters))


def brute_eulerian_row(parts: tuple[int, ...]) -> tuple[int, ...]:
    """Descent-count row from deduplicated permutations."""
    d = sum(parts)
    row = [0] * d
    for word in multiset_words(parts):
        row[sum(1 for a, b in zip(word, word[1:]) if a > b)] += 1
    return tuple(row)


@lru_cache(maxsize=None)
def _ordered_partitions(remaining: tuple[int, ...], blocks: int) -> int:
    if blocks == 0:
        return 1 if all(r == 0 for r in remaining) else 0
    total = 0
    for block in itertools.product(*[range(r + 1) for r in remaining]):
        if all(b == 0 for b in block):
            continue
        rest = tuple(r - b for r, b in zip(remaining, block))
        if sum(rest) >= blocks - 1:
            total += _ordered_partitions(rest, blocks - 1)
    return total


def ordered_partition_count(parts: tuple[int, ...], k: int) -> int:
    """Count ordered multiset partitions into k nonempty blocks directly."""
    return _ordered_partitions(tuple(parts), k)


def brute_chains(parts: tuple[int, ...], k: int) -> set[tuple[tuple[int, ...], ...]]:
    """All k-step chains of a tiny shape by filtering vertex sequences."""
    target = tuple(parts)
    origin = (0,) * len(parts)
    grid = list(itertools.product(*[range(p + 1) for p in parts]))
    internal = [v for v in grid if v not in (origin, target)]

    def increases(u: tuple[int, ...], v: tuple[int, ...]) -> bool:
        return u != v and all(a <= b for a, b in zip(u, v))

    chains = set()
    for combo in itertools.permutations(internal, k - 1):
        seq = (origin,) + combo + (target,)
        if all(increases(u, v) for u, v in zip(seq, seq[1:])):
            chains.add(seq)
    return chains
