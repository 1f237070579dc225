"""Mesh patterns: representation, occurrence semantics, a small text DSL,
symmetries, and the built-in pattern families.

A mesh pattern is a classical pattern (a word of length k) together with a set
of shaded cells in the (k+1) x (k+1) grid.  An occurrence in a host
permutation sigma of size n is a strictly increasing position list i_1 < ... <
i_k whose value sequence is order-isomorphic to the word, subject to the
shading constraint: for every shaded cell (a, b) there is no host point at a
position strictly between i_a and i_{a+1} with a value strictly between the
b-th and (b+1)-th smallest selected values.  Boundaries are virtual: i_0 = 0,
i_{k+1} = n + 1, and likewise 0 and n + 1 on the value axis.

Equivalently, every non-selected host point lands in exactly one cell (a, b),
where a counts the selected positions to its left and b counts the selected
values below it; an occurrence is valid when no such point lands in a shaded
cell.  That reformulation is what the checker uses.

Pattern DSL:  ``pattern := builtin | word "|" cells`` where the builtins are
``r:INT``, ``s:INT``, ``p``, ``r2'``, ``s2'``, ``lrmin``, ``sfp``, ``ssfp``;
the word uses the permutation text form and cells are space-separated ``a,b``
pairs (possibly none).  Printing always uses the explicit form with cells
sorted, e.g. ``21|0,0 0,1 1,0 1,1 1,2``.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .perms import Permutation, symmetry

Cell = tuple[int, int]
Occurrence = tuple[int, ...]


@dataclass(frozen=True)
class MeshPattern:
    """A classical pattern word plus shaded cells of the (k+1) x (k+1) grid."""

    word: Permutation
    shaded: frozenset[Cell] = frozenset()

    def __post_init__(self) -> None:
        # Duplicate cells in the input collapse silently; out-of-range cells
        # are rejected.
        cells = set()
        k = len(self.word)
        for cell in self.shaded:
            a, b = cell
            if not (isinstance(a, int) and isinstance(b, int)):
                raise ValueError(f"cell {cell!r} must be a pair of integers")
            if not (0 <= a <= k and 0 <= b <= k):
                raise ValueError(f"cell ({a},{b}) out of range 0..{k}")
            cells.add((a, b))
        object.__setattr__(self, "shaded", frozenset(cells))

    def __len__(self) -> int:
        return len(self.word)

    def to_text(self) -> str:
        cells = " ".join(f"{a},{b}" for a, b in sorted(self.shaded))
        return f"{self.word.to_text()}|{cells}"


def parse_pattern(text: str) -> MeshPattern:
    """Parse DSL text into a pattern; builtins resolve to the families below."""
    text = text.strip()
    if "|" not in text:
        if text.startswith("r:") or text.startswith("s:"):
            head, _, tail = text.partition(":")
            try:
                q = int(tail)
            except ValueError:
                raise ValueError(f"bad pattern size in {text!r}") from None
            return r_pattern(q) if head == "r" else s_pattern(q)
        return named_pattern(text)
    word_text, _, cell_text = text.partition("|")
    if "|" in cell_text:
        raise ValueError("pattern text may contain only one '|'")
    word = Permutation.from_text(word_text)
    cells = []
    for token in cell_text.split():
        parts = token.split(",")
        if len(parts) != 2:
            raise ValueError(f"bad cell {token!r}, expected 'a,b'")
        try:
            cells.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"bad cell {token!r}, expected integers") from None
    return MeshPattern(word, frozenset(cells))


def _grid(k: int) -> frozenset[Cell]:
    return frozenset((a, b) for a in range(k + 1) for b in range(k + 1))


def r_pattern(q: int) -> MeshPattern:
    """Increasing word 12...q with every cell shaded except (0, q).

    An occurrence pins the last q positions and the q smallest values of the
    host, so any host contains at most one.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    word = Permutation(tuple(range(1, q + 1)))
    return MeshPattern(word, _grid(q) - {(0, q)})


def s_pattern(q: int) -> MeshPattern:
    """Word 2 3 ... q (q+1) 1 with every cell shaded except (0, q+1),
    (q+1, 0), (q+1, 1) and (q+1, q+1)."""
    if q < 1:
        raise ValueError("q must be >= 1")
    word = Permutation(tuple(range(2, q + 2)) + (1,))
    keep = {(0, q + 1), (q + 1, 0), (q + 1, 1), (q + 1, q + 1)}
    return MeshPattern(word, _grid(q + 1) - keep)


_NAMED: dict[str, MeshPattern] = {
    "p": MeshPattern(
        Permutation((1, 3, 2)),
        frozenset(
            {(0, 2), (0, 3), (1, 2), (1, 3), (2, 0), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2)}
        ),
    ),
    "r2'": MeshPattern(Permutation((2, 1)), _grid(2) - {(2, 2)}),
    "s2'": MeshPattern(
        Permutation((1, 3, 2)),
        frozenset(
            {(0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3),
             (2, 0), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2)}
        ),
    ),
    "lrmin": MeshPattern(Permutation((1,)), frozenset({(0, 0)})),
    "sfp": MeshPattern(Permutation((1,)), frozenset({(1, 0), (0, 1)})),
    "ssfp": MeshPattern(Permutation((1,)), frozenset({(0, 0), (1, 1)})),
}


def named_pattern(name: str) -> MeshPattern:
    """One of the built-in named patterns: p, r2', s2', lrmin, sfp, ssfp."""
    try:
        return _NAMED[name]
    except KeyError:
        raise ValueError(f"unknown pattern name {name!r}") from None


def transform_pattern(pattern: MeshPattern, op: str) -> MeshPattern:
    """Apply a symmetry to word and shading together.

    reverse maps cell (a, b) to (k-a, b), complement maps it to (a, k-b),
    inverse maps it to (b, a); the word transforms with the same symmetry.
    """
    k = len(pattern.word)
    word = symmetry(pattern.word, op)
    if op == "reverse":
        cells = frozenset((k - a, b) for a, b in pattern.shaded)
    elif op == "complement":
        cells = frozenset((a, k - b) for a, b in pattern.shaded)
    else:
        cells = frozenset((b, a) for a, b in pattern.shaded)
    return MeshPattern(word, cells)


def _regions_empty(shaded: frozenset[Cell], chosen: list[int], host: tuple[int, ...]) -> bool:
    """True when no non-selected host point lands in a shaded cell.

    chosen holds 0-based positions in increasing order.
    """
    if not shaded:
        return True
    selected_values = sorted(host[p] for p in chosen)
    k = len(chosen)
    a = 0
    for j, v in enumerate(host):
        if a < k and chosen[a] == j:
            a += 1
            continue
        if (a, bisect_right(selected_values, v)) in shaded:
            return False
    return True


def _find(pattern: MeshPattern, host: Permutation, first_only: bool) -> list[Occurrence]:
    """Depth-first extension over positions with order-isomorphism pruning;
    shading is checked per complete candidate.  Results come out in
    lexicographic position order."""
    word = pattern.word.values
    values = host.values
    shaded = pattern.shaded
    k = len(word)
    n = len(values)
    if k > n:
        return []
    # below[m][j] answers "must the j-th chosen value lie below the m-th?"
    below = [tuple(word[j] < word[m] for j in range(m)) for m in range(k)]
    found: list[Occurrence] = []
    chosen: list[int] = []
    chosen_values: list[int] = []

    def extend(start: int) -> bool:
        m = len(chosen)
        if m == k:
            if _regions_empty(shaded, chosen, values):
                found.append(tuple(p + 1 for p in chosen))
                return first_only
            return False
        relation = below[m]
        for i in range(start, n - (k - m) + 1):
            v = values[i]
            for j in range(m):
                if (chosen_values[j] < v) != relation[j]:
                    break
            else:
                chosen.append(i)
                chosen_values.append(v)
                stop = extend(i + 1)
                chosen.pop()
                chosen_values.pop()
                if stop:
                    return True
        return False

    extend(0)
    return found


def occurrences(pattern: MeshPattern, host: Permutation) -> list[Occurrence]:
    """All occurrences as 1-based position tuples, lexicographically sorted."""
    return _find(pattern, host, first_only=False)


def count_occurrences(pattern: MeshPattern, host: Permutation) -> int:
    return len(_find(pattern, host, first_only=False))


def avoids(pattern: MeshPattern, host: Permutation) -> bool:
    """True iff the host contains no occurrence (early-exit search)."""
    return not _find(pattern, host, first_only=True)
