"""Foata's fundamental transformation, forward and inverse.

The forward map sends a permutation with k cycles to a permutation with k
left-to-right minima: write the canonical cycle form and read the
concatenation as a word.  Cutting the word before each left-to-right minimum
recovers the cycles, so the map is a bijection on S_n.
"""

from __future__ import annotations

from .perms import (
    Permutation,
    cycle_decomposition,
    left_to_right_minima,
    permutation_from_cycles,
)


def foata_forward(perm: Permutation) -> Permutation:
    """Flatten the canonical cycle form into one word.

    >>> foata_forward(Permutation.from_text("213967548")).to_text()
    '567498312'
    """
    cycles = cycle_decomposition(perm).cycles
    return Permutation(tuple(v for cycle in cycles for v in cycle))


def foata_inverse(perm: Permutation) -> Permutation:
    """Cut before every left-to-right minimum and read the blocks as cycles.

    Every permutation is a valid image, so this never fails.
    """
    values = perm.values
    cuts = list(left_to_right_minima(perm)) + [len(values) + 1]
    cycles = [tuple(values[cuts[i] - 1 : cuts[i + 1] - 1]) for i in range(len(cuts) - 1)]
    return permutation_from_cycles(cycles)
