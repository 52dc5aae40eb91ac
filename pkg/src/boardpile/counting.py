"""Exact counting of the periodic states of complete graphs.

The number of distinct periodic multisets on n vertices satisfies
a(n) = 5a(n-1) - 7a(n-2) + 4a(n-3) with a(1..4) = 1, 2, 6, 19, has ordinary
generating function x(1-x)^3 / (1 - 5x + 7x^2 - 4x^3), and grows like
C * r^n where r ~ 3.2056 is the one real root of x^3 - 5x^2 + 7x - 4.
Labelled counts come from a composition sum weighted by strip adjacency
choices.  Everything integral is computed in exact big-integer arithmetic;
floats appear only on the asymptotic side.  Brute-force scans over small
complete graphs act as independent oracles for both counts.
"""

from __future__ import annotations

import cmath
import functools
import itertools
import math
from dataclasses import dataclass

from .diffusion import fire, fire_complete, is_period_config
from .graphs import complete
from .polyomino import compositions

_SEEDS = (1, 2, 6, 19)

# x^3 - 5x^2 + 7x - 4, the characteristic polynomial of the recurrence
_CUBIC = (1, -5, 7, -4)


def recurrence_counts(n_max: int) -> list[int]:
    """a(1)..a(n_max) by the three-term recurrence, exact integers."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    counts = list(_SEEDS[:n_max])
    while len(counts) < n_max:
        counts.append(5 * counts[-1] - 7 * counts[-2] + 4 * counts[-3])
    return counts


def gf_coefficients(n_max: int) -> list[int]:
    """Coefficients of x^1..x^n_max of x(1-x)^3 / (1 - 5x + 7x^2 - 4x^3).

    Computed by exact polynomial long division: the denominator has constant
    term 1, so each coefficient is the numerator coefficient plus an integer
    combination of the previous three.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    numerator = {1: 1, 2: -3, 3: 3, 4: -1}  # x(1-x)^3 expanded
    series = [0] * (n_max + 1)
    for k in range(1, n_max + 1):
        c = numerator.get(k, 0)
        if k >= 1:
            c += 5 * series[k - 1]
        if k >= 2:
            c -= 7 * series[k - 2]
        if k >= 3:
            c += 4 * series[k - 3]
        series[k] = c
    return series[1:]


# --- growth rate -----------------------------------------------------------


def _cubic_value(x: complex) -> complex:
    a, b, c, d = _CUBIC
    return ((a * x + b) * x + c) * x + d


@dataclass(frozen=True)
class CharacteristicRoots:
    """Roots of x^3 - 5x^2 + 7x - 4: one real root of largest modulus and a
    complex-conjugate pair."""

    dominant: float
    conjugate_pair: tuple[complex, complex]

    def all_roots(self) -> tuple[complex, complex, complex]:
        return (complex(self.dominant), *self.conjugate_pair)


@functools.cache
def characteristic_roots() -> CharacteristicRoots:
    """Solve the growth cubic: Newton for the real root, then deflation.

    Raises RuntimeError if refinement fails to converge within 200
    iterations or any root's residual is not tiny; with this fixed cubic
    that would signal a numerics bug.
    """
    x = 3.0
    for _ in range(200):
        f = _cubic_value(x)
        fprime = 3 * x * x - 10 * x + 7
        step = f / fprime
        x -= step.real
        if abs(step) < 1e-15:
            break
    else:
        raise RuntimeError("root refinement did not converge in 200 iterations")
    # divide out (x - root): quotient x^2 + b1 x + b0
    b1 = x - 5
    b0 = x * x - 5 * x + 7
    disc = cmath.sqrt(b1 * b1 - 4 * b0)
    pair = ((-b1 + disc) / 2, (-b1 - disc) / 2)
    for root in (complex(x), *pair):
        if abs(_cubic_value(root)) >= 1e-10:
            raise RuntimeError(f"root {root} has residual {abs(_cubic_value(root)):.3e}")
    return CharacteristicRoots(dominant=x, conjugate_pair=pair)


def _solve3(matrix: list[list[complex]], rhs: list[complex]) -> list[complex]:
    """Gaussian elimination with partial pivoting for a 3x3 complex system."""
    m = [row[:] + [b] for row, b in zip(matrix, rhs)]
    for col in range(3):
        pivot = max(range(col, 3), key=lambda r: abs(m[r][col]))
        m[col], m[pivot] = m[pivot], m[col]
        for r in range(col + 1, 3):
            factor = m[r][col] / m[col][col]
            for k in range(col, 4):
                m[r][k] -= factor * m[col][k]
    out = [0j, 0j, 0j]
    for r in (2, 1, 0):
        acc = m[r][3] - sum(m[r][k] * out[k] for k in range(r + 1, 3))
        out[r] = acc / m[r][r]
    return out


@functools.cache
def recurrence_coefficients() -> tuple[complex, complex, complex]:
    """Coefficients (c1, c2, c3) with a(k) = sum of c_i * root_i^k for k >= 2.

    The recurrence only governs the sequence from the fifth term on, so the
    closed form is pinned to the window (a(2), a(3), a(4)), the earliest one
    it propagates from; a(1) is the lone exception it does not reproduce.
    The first coefficient belongs to the dominant root.
    """
    roots = characteristic_roots().all_roots()
    matrix = [[root**k for root in roots] for k in (2, 3, 4)]
    rhs = [complex(a) for a in _SEEDS[1:4]]
    c = _solve3(matrix, rhs)
    return (c[0], c[1], c[2])


def _closed_form_coefficient(root: complex) -> complex:
    # cross-check expression for the coefficient attached to one root
    inv = 1 / root
    numerator = -(-7 * inv * inv + 13 * inv - 5)
    denominator = (192 * inv * inv - 224 * inv + 80) * inv
    return numerator / denominator


def asymptotic_constant() -> float:
    """The real multiplier C in the leading-term approximation C * r^k."""
    c1 = recurrence_coefficients()[0]
    if abs(c1.imag) > 1e-9:
        raise RuntimeError(f"dominant coefficient unexpectedly complex: {c1}")
    return c1.real


def asymptotic_estimate(k: int) -> float:
    """Leading-term approximation of a(k); relative error < 1% for k >= 8."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return asymptotic_constant() * characteristic_roots().dominant**k


# --- labelled counting -----------------------------------------------------


def ordered_bell(n: int) -> int:
    """Number of ordered set partitions of an n-set."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    counts = [1]
    for m in range(1, n + 1):
        counts.append(sum(math.comb(m, k) * counts[m - k] for k in range(1, m + 1)))
    return counts[n]


def multinomial(n: int, parts: tuple[int, ...]) -> int:
    """Ways to split n labelled items into ordered blocks of the given sizes."""
    if sum(parts) != n:
        raise ValueError(f"parts {parts} do not sum to {n}")
    out = 1
    remaining = n
    for p in parts:
        out *= math.comb(remaining, p)
        remaining -= p
    return out


def labelled_period_count(n: int) -> int:
    """Number of periodic stack assignments on n labelled vertices, min 0.

    Sums over compositions (s_1..s_N) of n: the multinomial count of ways to
    assign vertices to the blocks, times the number of admissible gap choices
    prod_{i>=2} (s_{i-1} + s_i - 1).  The bottom block has no gap to choose,
    so it contributes a factor of 1.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    total = 0
    for parts in compositions(n):
        ways = multinomial(n, parts)
        for i in range(1, len(parts)):
            ways *= parts[i - 1] + parts[i] - 1
        total += ways
    return total


# --- brute-force oracles ---------------------------------------------------
#
# A normalized periodic multiset has minimum 0 and maximum < 2n (the gaps
# between adjacent distinct values are bounded by the block sizes), so a
# scan over values in [0, 2n] is exhaustive.  "Periodic" is decided purely
# dynamically: firing twice must reproduce the input exactly.

UNLABELLED_CAP = 8
LABELLED_CAP = 5


def brute_force_period_multisets(n: int, cap: int = UNLABELLED_CAP) -> list[tuple[int, ...]]:
    """All sorted periodic multisets on n vertices with minimum 0."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > cap:
        raise ValueError(f"n={n} exceeds the brute-force cap {cap}")
    found = []
    for tail in itertools.combinations_with_replacement(range(2 * n + 1), n - 1):
        ms = (0,) + tail
        if fire_complete(fire_complete(ms)) == ms:
            found.append(ms)
    return found


def brute_force_unlabelled(n: int, cap: int = UNLABELLED_CAP) -> int:
    """Count normalized periodic multisets on n vertices by exhaustive scan."""
    return len(brute_force_period_multisets(n, cap))


def brute_force_labelled(n: int, cap: int = LABELLED_CAP) -> int:
    """Count normalized periodic stack vectors on n labelled vertices.

    Scans every vector in [0, 2n]^n with minimum 0 and keeps those that the
    generic engine maps back to themselves after two firings.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > cap:
        raise ValueError(f"n={n} exceeds the brute-force cap {cap}")
    g = complete(n)
    count = 0
    for vec in itertools.product(range(2 * n + 1), repeat=n):
        if 0 not in vec:
            continue
        if fire(g, fire(g, vec)) == vec:
            count += 1
    return count
