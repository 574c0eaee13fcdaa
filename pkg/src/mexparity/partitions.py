"""Exhaustive partition enumeration and partition statistics.

Everything here works by direct combinatorics on explicit partitions, with
no generating functions involved, so these routines double as independent
oracles for the series pipeline.  A partition is represented as a tuple of
weakly decreasing positive parts; the empty tuple is the unique partition
of 0.

Enumeration is deliberately capped (see ENUMERATION_CEILING): p(45) is
89,134 partitions and the full sweep up to 45 is a few seconds of work,
but the count grows subexponentially and silently accepting much larger
weights would hang the caller.  Past the ceiling an EnumerationLimitError
is raised instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

__all__ = [
    "ENUMERATION_CEILING",
    "EnumerationLimitError",
    "MexSpec",
    "enumerate_partitions",
    "mex",
    "p_direct",
    "rank",
    "crank",
    "conjugate",
    "hook_lengths",
    "a_t_direct",
]

ENUMERATION_CEILING = 45


class EnumerationLimitError(ValueError):
    """Raised when a brute-force request exceeds the enumeration ceiling."""


@dataclass(frozen=True)
class MexSpec:
    """Parameters (A, a) of the minimal-excludant statistic mex_{A,a}.

    mex_{A,a} of a partition is the smallest member of the arithmetic
    progression a, a+A, a+2A, ... that does not occur among the parts;
    p_direct counts the partitions whose mex is congruent to a mod 2A.
    """

    A: int
    a: int

    def __post_init__(self):
        if self.A < 1:
            raise ValueError("modulus A must be a positive integer")
        if not 1 <= self.a <= self.A:
            raise ValueError(f"need 1 <= a <= A, got a={self.a}, A={self.A}")


def enumerate_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Yield every partition of n exactly once.

    Order: decreasing-first-part lexicographic, e.g. for n = 4:
    (4), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1).  n = 0 yields only the
    empty partition.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > ENUMERATION_CEILING:
        raise EnumerationLimitError(
            f"enumeration of p({n}) partitions exceeds the ceiling n <= {ENUMERATION_CEILING}"
        )
    return _descending_partitions(n, n, [])


def _descending_partitions(remaining: int, cap: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
    if remaining == 0:
        yield tuple(acc)
        return
    top = cap if cap < remaining else remaining
    for part in range(top, 0, -1):
        acc.append(part)
        yield from _descending_partitions(remaining - part, part, acc)
        acc.pop()


def mex(parts: Sequence[int], spec: MexSpec) -> int:
    """Smallest element of {a, a+A, a+2A, ...} that is not a part."""
    present = set(parts)
    candidate = spec.a
    while candidate in present:
        candidate += spec.A
    return candidate


def p_direct(spec: MexSpec, n: int) -> int:
    """Count partitions of n whose mex_{A,a} is congruent to a mod 2A.

    Pure enumeration; this is the ground truth the generating-function
    coefficients are checked against.
    """
    step = 2 * spec.A
    return sum(
        1 for parts in enumerate_partitions(n) if (mex(parts, spec) - spec.a) % step == 0
    )


def rank(parts: Sequence[int]) -> int:
    """Dyson rank: largest part minus number of parts."""
    if not parts:
        raise ValueError("rank of the empty partition is undefined")
    return parts[0] - len(parts)


def crank(parts: Sequence[int]) -> int:
    """Andrews-Garvan crank.

    With w the number of 1s: the largest part when w = 0, otherwise
    (number of parts greater than w) - w.
    """
    if not parts:
        raise ValueError("crank of the empty partition is undefined")
    ones = sum(1 for p in parts if p == 1)
    if ones == 0:
        return parts[0]
    bigger = sum(1 for p in parts if p > ones)
    return bigger - ones


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    """Transpose of the Young diagram (columns become rows)."""
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def hook_lengths(parts: Sequence[int]) -> tuple[int, ...]:
    """Multiset of hook lengths of the Young diagram, sorted descending.

    The hook of cell (i, j) covers the cell itself, the arm to its right
    and the leg below it: (parts[i] - j) + (conj[j] - i) - 1.
    """
    if not parts:
        raise ValueError("hook lengths of the empty partition are undefined")
    conj = conjugate(parts)
    hooks = [
        (row - j) + (conj[j] - i) - 1
        for i, row in enumerate(parts)
        for j in range(row)
    ]
    hooks.sort(reverse=True)
    return tuple(hooks)


def a_t_direct(t: int, n: int) -> int:
    """Count t-core partitions of n: no hook length divisible by t.

    The empty partition is a t-core, so a_t_direct(t, 0) = 1.
    """
    if t < 2:
        raise ValueError("t must be at least 2")
    count = 0
    for parts in enumerate_partitions(n):
        if not parts:
            count += 1
        elif all(h % t for h in hook_lengths(parts)):
            count += 1
    return count
