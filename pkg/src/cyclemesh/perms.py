"""Permutations in one-line notation, their cycle structure, and basic statistics.

Conventions used throughout the package:

- A permutation of size n is a rearrangement of {1, ..., n}; positions and
  values are both 1-based.  The empty permutation (n = 0) is valid input
  everywhere and has zero of every statistic.
- The canonical cycle form writes each cycle with its smallest element first
  and orders the cycles by decreasing first element.
- Text form: a bare digit string for n <= 9 (e.g. "213967548"), otherwise
  comma-separated values (e.g. "10,2,1,..."); the empty string denotes the
  empty permutation.

All types are immutable values and all functions are pure, so everything here
is safe to use from concurrent workers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

SYMMETRY_OPS = ("reverse", "inverse", "complement")


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n} in one-line notation.

    >>> Permutation((2, 1, 3))(1)
    2
    >>> Permutation.from_text("2,1,3").to_text()
    '213'
    """

    values: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        n = len(values)
        seen = set()
        for v in values:
            if not isinstance(v, int):
                raise ValueError(f"permutation entries must be integers, got {v!r}")
            if v < 1 or v > n:
                raise ValueError(f"value {v} out of range 1..{n}")
            if v in seen:
                raise ValueError(f"duplicate value {v}")
            seen.add(v)

    def __len__(self) -> int:
        return len(self.values)

    def __call__(self, position: int) -> int:
        """Value at a 1-based position."""
        if not 1 <= position <= len(self.values):
            raise ValueError(f"position {position} out of range 1..{len(self.values)}")
        return self.values[position - 1]

    @classmethod
    def from_text(cls, text: str) -> Permutation:
        """Parse the text form (bare digits, comma-separated, or empty)."""
        text = text.strip()
        if not text:
            return cls(())
        if "," in text:
            try:
                values = tuple(int(part) for part in text.split(","))
            except ValueError:
                raise ValueError(f"bad permutation text {text!r}") from None
        elif text.isdigit():
            values = tuple(int(ch) for ch in text)
        else:
            raise ValueError(f"bad permutation text {text!r}")
        return cls(values)

    def to_text(self) -> str:
        if len(self.values) <= 9:
            return "".join(str(v) for v in self.values)
        return ",".join(str(v) for v in self.values)


@dataclass(frozen=True)
class CycleDecomposition:
    """Disjoint cycles in canonical form: min first in each cycle, cycles by
    decreasing first element."""

    cycles: tuple[tuple[int, ...], ...]

    def to_text(self) -> str:
        return "".join("(" + ",".join(str(v) for v in c) + ")" for c in self.cycles)


@dataclass(frozen=True)
class QCycleProfile:
    """Adjacent q-cycle counts of one permutation; counts[q - 1] is the count
    for cycle length q, 1 <= q <= n."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.counts)
        # The counted cycles are disjoint, so their total length fits in n.
        if sum(q * c for q, c in enumerate(self.counts, start=1)) > n:
            raise ValueError("cycle lengths exceed the permutation size")

    def __getitem__(self, q: int) -> int:
        if q < 1:
            raise ValueError("cycle length q must be >= 1")
        if q > len(self.counts):
            return 0
        return self.counts[q - 1]

    def as_dict(self) -> dict[int, int]:
        return {q: self.counts[q - 1] for q in range(1, len(self.counts) + 1)}


def make_permutation(values: Iterable[int]) -> Permutation:
    """Validate an integer sequence as a permutation of {1, ..., n}."""
    return Permutation(tuple(values))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order of one-line notation."""
    for values in itertools.permutations(range(1, n + 1)):
        yield Permutation(values)


def cycle_decomposition(perm: Permutation) -> CycleDecomposition:
    """Canonical cycle form.

    >>> cycle_decomposition(Permutation.from_text("213967548")).to_text()
    '(5,6,7)(4,9,8)(3)(1,2)'
    """
    values = perm.values
    n = len(values)
    seen = [False] * (n + 1)
    cycles = []
    # Visiting unseen starts in increasing order guarantees each cycle begins
    # at its minimum; reversing then sorts first elements in decreasing order.
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        j = values[start - 1]
        while j != start:
            cycle.append(j)
            seen[j] = True
            j = values[j - 1]
        cycles.append(tuple(cycle))
    return CycleDecomposition(tuple(reversed(cycles)))


def permutation_from_cycles(cycles: Iterable[Sequence[int]]) -> Permutation:
    """Rebuild a permutation from disjoint cycles covering {1, ..., n}."""
    mapping: dict[int, int] = {}
    for cycle in cycles:
        if not cycle:
            raise ValueError("empty cycle")
        for a, b in zip(cycle, cycle[1:]):
            if a in mapping:
                raise ValueError(f"element {a} appears in more than one cycle")
            mapping[a] = b
        last = cycle[-1]
        if last in mapping:
            raise ValueError(f"element {last} appears in more than one cycle")
        mapping[last] = cycle[0]
    n = len(mapping)
    try:
        values = tuple(mapping[i] for i in range(1, n + 1))
    except KeyError as exc:
        raise ValueError(f"cycles do not cover element {exc.args[0]}") from None
    return Permutation(values)


def adjacent_q_cycle_count(perm: Permutation, q: int) -> int:
    """Number of cycles equal, as cyclic sequences, to (i, i+1, ..., i+q-1).

    q larger than the permutation size is allowed and yields 0.
    """
    if q < 1:
        raise ValueError("cycle length q must be >= 1")
    count = 0
    # Canonical cycles start at their minimum, so cyclic equality with
    # (i, i+1, ..., i+q-1) reduces to plain tuple equality.
    for cycle in cycle_decomposition(perm).cycles:
        if len(cycle) == q and cycle == tuple(range(cycle[0], cycle[0] + q)):
            count += 1
    return count


def q_cycle_profile(perm: Permutation) -> QCycleProfile:
    """Adjacent q-cycle counts for every q in 1..n, from one decomposition pass."""
    counts = [0] * len(perm)
    for cycle in cycle_decomposition(perm).cycles:
        q = len(cycle)
        if cycle == tuple(range(cycle[0], cycle[0] + q)):
            counts[q - 1] += 1
    return QCycleProfile(tuple(counts))


def left_to_right_minima(perm: Permutation) -> tuple[int, ...]:
    """Positions whose value is smaller than everything before them."""
    out = []
    best = len(perm) + 1
    for i, v in enumerate(perm.values, start=1):
        if v < best:
            out.append(i)
            best = v
    return tuple(out)


def strong_fixed_points(perm: Permutation) -> tuple[int, ...]:
    """Fixed points i with every earlier value below i and every later value above i."""
    values = perm.values
    n = len(values)
    suffix_min = [n + 1] * (n + 2)
    for i in range(n, 0, -1):
        suffix_min[i] = min(values[i - 1], suffix_min[i + 1])
    out = []
    prefix_max = 0
    for i in range(1, n + 1):
        v = values[i - 1]
        if v == i and prefix_max < i and suffix_min[i + 1] > i:
            out.append(i)
        if v > prefix_max:
            prefix_max = v
    return tuple(out)


def symmetry(perm: Permutation, op: str) -> Permutation:
    """Apply one of the three involutive symmetries.

    reverse flips positions, complement flips values, inverse swaps the two.
    """
    values = perm.values
    n = len(values)
    if op == "reverse":
        return Permutation(values[::-1])
    if op == "complement":
        return Permutation(tuple(n + 1 - v for v in values))
    if op == "inverse":
        inv = [0] * n
        for i, v in enumerate(values, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))
    raise ValueError(f"unknown symmetry {op!r}; expected one of {SYMMETRY_OPS}")


def direct_sum(left: Permutation, right: Permutation) -> Permutation:
    """Concatenate, shifting the right block's values above the left block."""
    shift = len(left)
    return Permutation(left.values + tuple(v + shift for v in right.values))
