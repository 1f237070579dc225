"""Exact counting and verification.

Everything here is exact big-integer arithmetic; there is no floating point.
The module provides the closed formula for adjacent q-cycle counts, a
brute-force census that serves as its independent oracle, the two truncated
power series tied together by the avoidance identity, and the two verification
drivers the CLI and service expose.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

from .foata import foata_forward
from .mesh import MeshPattern, avoids, count_occurrences, named_pattern, r_pattern, s_pattern
from .perms import Permutation, all_permutations, q_cycle_profile

DEFAULT_BRUTE_FORCE_BOUND = 9


def _check_brute_force(n: int, bound: int) -> None:
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > bound:
        raise ValueError(f"n={n} exceeds the brute-force bound {bound}")


@dataclass(frozen=True)
class CoefficientSeries:
    """Truncated power series; coeffs[i] is the exact x^i coefficient."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a series needs at least the x^0 coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise ValueError(f"coefficient index {n} outside 0..{self.order}")
        return self.coeffs[n]

    def to_text(self) -> str:
        return "\n".join(f"{i}\t{c}" for i, c in enumerate(self.coeffs))


@dataclass(frozen=True)
class CensusTable:
    """Exhaustive counts for S_n: rows[(q, k)] is the number of permutations
    with exactly k adjacent q-cycles."""

    n: int
    rows: Mapping[tuple[int, int], int]

    def count(self, q: int, k: int) -> int:
        if q < 1:
            raise ValueError("cycle length q must be >= 1")
        if k < 0:
            raise ValueError("k must be >= 0")
        if q > self.n:
            # No cycle can be longer than n, so every permutation has k = 0.
            return math.factorial(self.n) if k == 0 else 0
        return self.rows.get((q, k), 0)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    scanned: int
    detail: str = ""
    counterexample: dict[str, str] | None = None


@dataclass(frozen=True)
class VerificationReport:
    title: str
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


def a_formula(q: int, n: int, k: int) -> int:
    """Number of permutations of {1..n} with exactly k adjacent q-cycles.

    Evaluates sum_{j=k}^{floor(n/q)} (-1)^(k+j) C(j,k) (n-(q-1)j)!/j!.  The
    factorial ratio is taken as the product (j+1)(j+2)...(n-(q-1)j), which is
    an integer product because j <= n-(q-1)j whenever j <= floor(n/q).  An
    empty sum (k beyond floor(n/q)) is 0.
    """
    if q < 1:
        raise ValueError("cycle length q must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    if k < 0:
        raise ValueError("k must be >= 0")
    total = 0
    for j in range(k, n // q + 1):
        term = math.comb(j, k) * math.prod(range(j + 1, n - (q - 1) * j + 1))
        total += -term if (k + j) % 2 else term
    return total


def census(n: int, bound: int = DEFAULT_BRUTE_FORCE_BOUND) -> CensusTable:
    """Count all of S_n by adjacent q-cycle profile (oracle for a_formula)."""
    _check_brute_force(n, bound)
    rows: Counter[tuple[int, int]] = Counter()
    for perm in all_permutations(n):
        profile = q_cycle_profile(perm)
        for q in range(1, n + 1):
            rows[(q, profile[q])] += 1
    return CensusTable(n=n, rows=dict(rows))


def a2_series(order: int) -> CoefficientSeries:
    """Series counting permutations whose cycle form has no adjacent
    transposition.

    Coefficients satisfy a_n = n*a_{n-1} + (n-2)*a_{n-3} + a_{n-4}, adjusted
    by +1 at n=0 and -1 at n=2, with a_i = 0 for i < 0.  The recurrence comes
    from matching the x^n coefficient in
    x^2(1+x^2)A'(x) - (1+x^2)(1-x-x^2)A(x) + 1 - x^2 = 0 with A(0) = 1, and is
    cross-checked against a_formula(2, n, 0) by the test suite rather than
    trusted.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    coeffs: list[int] = []

    def at(i: int) -> int:
        return coeffs[i] if i >= 0 else 0

    for n in range(order + 1):
        value = n * at(n - 1) + (n - 2) * at(n - 3) + at(n - 4)
        if n == 0:
            value += 1
        elif n == 2:
            value -= 1
        coeffs.append(value)
    return CoefficientSeries(tuple(coeffs))


def _convolve(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return tuple(out)


def _poly_times_series(poly: Sequence[int], series: Sequence[int], size: int) -> list[int]:
    out = [0] * size
    for i, c in enumerate(poly):
        if c == 0:
            continue
        for j, s in enumerate(series):
            if i + j >= size:
                break
            out[i + j] += c * s
    return out


def ode_residual(series: CoefficientSeries) -> tuple[int, ...]:
    """Coefficients 0..N-1 of x^2(1+x^2)y' - (1+x^2)(1-x-x^2)y + 1 - x^2 for a
    truncated y of order N (degrees above N-1 would need coefficients past
    the truncation)."""
    y = series.coeffs
    size = series.order
    dy = tuple(i * y[i] for i in range(1, len(y)))
    t1 = _poly_times_series((0, 0, 1, 0, 1), dy, size)  # x^2(1+x^2) y'
    t2 = _poly_times_series(_convolve((1, 0, 1), (1, -1, -1)), y, size)
    residual = []
    for d in range(size):
        c = t1[d] - t2[d]
        if d == 0:
            c += 1
        elif d == 2:
            c -= 1
        residual.append(c)
    return tuple(residual)


def f_series(order: int) -> CoefficientSeries:
    """Series sum_{m>=0} m! * (x/(1+x^2))^m, truncated.

    Uses [x^n] (x/(1+x^2))^m = (-1)^k C(m+k-1, k) when n = m + 2k, else 0.
    The k = 0 binomial is 1 even at m = 0 (the constant term).
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    coeffs = []
    for n in range(order + 1):
        total = 0
        for m in range(n % 2, n + 1, 2):
            k = (n - m) // 2
            binom = 1 if k == 0 else math.comb(m + k - 1, k)
            term = math.factorial(m) * binom
            total += -term if k % 2 else term
        coeffs.append(total)
    return CoefficientSeries(tuple(coeffs))


def avoiding_permutations(
    pattern: MeshPattern, n: int, bound: int = DEFAULT_BRUTE_FORCE_BOUND
) -> list[Permutation]:
    """All of S_n avoiding the pattern, in lexicographic order."""
    _check_brute_force(n, bound)
    return [perm for perm in all_permutations(n) if avoids(pattern, perm)]


def avoider_series(
    pattern: MeshPattern, order: int, bound: int = DEFAULT_BRUTE_FORCE_BOUND
) -> CoefficientSeries:
    """Series whose x^n coefficient is the number of pattern avoiders in S_n."""
    _check_brute_force(order, bound)
    counts = []
    for n in range(order + 1):
        counts.append(sum(1 for perm in all_permutations(n) if avoids(pattern, perm)))
    return CoefficientSeries(tuple(counts))


def verify_theorem1(n_max: int, bound: int = DEFAULT_BRUTE_FORCE_BOUND) -> VerificationReport:
    """Exhaustively check, for every permutation of size <= n_max and every
    q <= n, that the adjacent q-cycle count equals the number of r_q plus s_q
    occurrences in the fundamental-transform image."""
    _check_brute_force(n_max, bound)
    patterns = {q: (r_pattern(q), s_pattern(q)) for q in range(1, n_max + 1)}
    scanned = 0
    cases = 0
    counterexample: dict[str, str] | None = None
    for n in range(n_max + 1):
        for perm in all_permutations(n):
            scanned += 1
            image = foata_forward(perm)
            profile = q_cycle_profile(perm)
            for q in range(1, n + 1):
                r_pat, s_pat = patterns[q]
                r_count = count_occurrences(r_pat, image)
                s_count = count_occurrences(s_pat, image)
                cases += 1
                if profile[q] != r_count + s_count:
                    counterexample = {
                        "pi": perm.to_text(),
                        "q": str(q),
                        "sigma": image.to_text(),
                        "adjacent_q_cycles": str(profile[q]),
                        "r_occurrences": str(r_count),
                        "s_occurrences": str(s_count),
                    }
                    break
            if counterexample:
                break
        if counterexample:
            break
    check = CheckResult(
        name="adjacent q-cycle count equals r_q + s_q occurrences",
        passed=counterexample is None,
        scanned=scanned,
        detail=f"{scanned} permutations, {cases} (pi, q) cases",
        counterexample=counterexample,
    )
    return VerificationReport(title=f"theorem1 (n <= {n_max})", checks=(check,))


def verify_conjecture(
    n_max: int, series_terms: int, bound: int = DEFAULT_BRUTE_FORCE_BOUND
) -> VerificationReport:
    """Five checks tying the p-avoider counts to the a2 and f series.

    (i) brute-force p-avoider counts match the f series; (ii) they equal
    a2(n,0) + a2(n-2,0) for n >= 2; (iii) the f series equals (1+x^2) times
    the a2 series; (iv) the a2 series has zero residual in its defining
    differential equation; (v) the avoidance sets of p and s2' coincide.
    """
    _check_brute_force(n_max, bound)
    if series_terms < 0:
        raise ValueError("series_terms must be >= 0")
    pattern_p = named_pattern("p")
    pattern_s2p = named_pattern("s2'")

    scanned = 0
    avoid_counts: list[int] = []
    sets_cex: dict[str, str] | None = None
    for n in range(n_max + 1):
        count_p = 0
        for perm in all_permutations(n):
            scanned += 1
            avoid_p = avoids(pattern_p, perm)
            avoid_s = avoids(pattern_s2p, perm)
            if avoid_p:
                count_p += 1
            if avoid_p != avoid_s and sets_cex is None:
                sets_cex = {
                    "n": str(n),
                    "sigma": perm.to_text(),
                    "avoids_p": str(avoid_p),
                    "avoids_s2'": str(avoid_s),
                }
        avoid_counts.append(count_p)

    f_small = f_series(n_max)
    cex_i: dict[str, str] | None = None
    for n in range(n_max + 1):
        if avoid_counts[n] != f_small.coeffs[n]:
            cex_i = {"n": str(n), "avoiders": str(avoid_counts[n]), "f": str(f_small.coeffs[n])}
            break

    cex_ii: dict[str, str] | None = None
    for n in range(2, n_max + 1):
        expected = a_formula(2, n, 0) + a_formula(2, n - 2, 0)
        if avoid_counts[n] != expected:
            cex_ii = {"n": str(n), "avoiders": str(avoid_counts[n]), "formula": str(expected)}
            break

    a2 = a2_series(series_terms)
    f_big = f_series(series_terms)
    cex_iii: dict[str, str] | None = None
    for n in range(series_terms + 1):
        expected = a2.coeffs[n] + (a2.coeffs[n - 2] if n >= 2 else 0)
        if f_big.coeffs[n] != expected:
            cex_iii = {"n": str(n), "f": str(f_big.coeffs[n]), "(1+x^2)*a2": str(expected)}
            break

    residual = ode_residual(a2)
    cex_iv: dict[str, str] | None = None
    for d, c in enumerate(residual):
        if c != 0:
            cex_iv = {"degree": str(d), "residual": str(c)}
            break

    checks = (
        CheckResult(
            name="p-avoider counts match the f series",
            passed=cex_i is None,
            scanned=scanned,
            detail=f"{scanned} permutations, coefficients 0..{n_max}",
            counterexample=cex_i,
        ),
        CheckResult(
            name="p-avoider counts equal a2(n,0) + a2(n-2,0)",
            passed=cex_ii is None,
            scanned=scanned,
            detail=f"n = 2..{n_max}",
            counterexample=cex_ii,
        ),
        CheckResult(
            name="f series equals (1 + x^2) * a2 series",
            passed=cex_iii is None,
            scanned=series_terms + 1,
            detail=f"coefficients 0..{series_terms}",
            counterexample=cex_iii,
        ),
        CheckResult(
            name="a2 series satisfies its differential equation",
            passed=cex_iv is None,
            scanned=len(residual),
            detail=f"residual degrees 0..{max(series_terms - 1, 0)}",
            counterexample=cex_iv,
        ),
        CheckResult(
            name="avoidance sets of p and s2' coincide",
            passed=sets_cex is None,
            scanned=scanned,
            detail=f"{scanned} permutations",
            counterexample=sets_cex,
        ),
    )
    return VerificationReport(
        title=f"conjecture (n <= {n_max}, series terms {series_terms})", checks=checks
    )
