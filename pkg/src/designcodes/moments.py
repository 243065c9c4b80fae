"""
Pless power moments over exact integers and rationals.

Nothing here touches floating point.
"""

from fractions import Fraction
from math import comb, factorial

from .code import WeightDistribution


class MomentError(ValueError):
    pass


def binom(n, k):
    """Binomial coefficient that is 0 outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def stirling2(t, j):
    """Stirling number of the second kind from the alternating sum."""
    if not 0 <= j <= t:
        raise MomentError("need 0 <= j <= t")
    total = sum((-1) ** (j - i) * comb(j, i) * i ** t for i in range(j + 1))
    value, rem = divmod(total, factorial(j))
    if rem:
        raise AssertionError("alternating sum not divisible by j!")
    return value


def moment_coefficient(t, i, nu, m, q):
    """Coefficient of A_i^perp in the t-th moment (sign included)."""
    inner = sum(
        factorial(j) * stirling2(t, j) * Fraction(q) ** (m - j) * (q - 1) ** (j - i)
        * binom(nu - i, nu - j)
        for j in range(i, t + 1)
    )
    return (-1) ** i * inner


def moment_rhs(t, dual_counts, nu, m, q):
    return sum(moment_coefficient(t, i, nu, m, q) * dual_counts[i] for i in range(t + 1))


def moment_lhs(t, counts):
    return sum(i ** t * a for i, a in enumerate(counts))


def _dimension_of(dist):
    q = dist.q
    m, size = 0, 1
    while size < dist.size:
        size *= q
        m += 1
    if size != dist.size:
        raise MomentError(f"code size {dist.size} is not a power of {q}")
    return m


def moment_check(dist, dual_dist, t_max):
    """Per-moment verdicts [(t, lhs, rhs, ok)] for t = 0..t_max."""
    if dist.length != dual_dist.length:
        raise MomentError("distributions have different lengths")
    if dist.q != dual_dist.q:
        raise MomentError("distributions over different fields")
    if t_max > dist.length:
        raise MomentError("t_max exceeds the length")
    m = _dimension_of(dist)
    out = []
    for t in range(t_max + 1):
        lhs = moment_lhs(t, dist.counts)
        rhs = moment_rhs(t, dual_dist.counts, dist.length, m, dist.q)
        out.append((t, lhs, rhs, lhs == rhs))
    return out


def first_failing_moment(dist, dual_dist, t_max):
    for t, _, _, ok in moment_check(dist, dual_dist, t_max):
        if not ok:
            return t
    return None


def solve_rational(matrix, rhs):
    """Gauss-Jordan over Fractions; raises on a singular square system."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise MomentError("singular moment system")
        aug[col], aug[piv] = aug[piv], aug[col]
        lead = aug[col][col]
        aug[col] = [x / lead for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def solve_distribution(nu, m, q, unknown, known, dual_prefix=()):
    """Recover A_i for i in ``unknown`` from the first |unknown| moments.

    ``known`` maps weight -> A_i for the remaining weights (missing ones are
    zero, A_0 defaults to 1).  ``dual_prefix`` holds A^perp_1..A^perp_{s-1}.
    Returns (WeightDistribution, the dual values used).
    """
    unknown = sorted(set(unknown))
    s = len(unknown)
    counts = [0] * (nu + 1)
    counts[0] = 1
    for i, a in known.items():
        if i in unknown:
            raise MomentError(f"weight {i} is both known and unknown")
        counts[i] = a
    if s == 0:
        return WeightDistribution(nu, tuple(counts), q), (1,)
    if any(not 0 <= i <= nu for i in unknown):
        raise MomentError("unknown weight outside 0..nu")
    dual_prefix = tuple(dual_prefix)
    if len(dual_prefix) < s - 1:
        raise MomentError(f"need A^perp_1..A^perp_{s - 1}")
    dual_used = (1,) + dual_prefix[: s - 1]
    matrix, rhs = [], []
    for t in range(s):
        matrix.append([i ** t for i in unknown])
        known_part = sum(i ** t * a for i, a in enumerate(counts) if i not in unknown)
        rhs.append(moment_rhs(t, dual_used, nu, m, q) - known_part)
    solution = solve_rational(matrix, rhs)
    for i, value in zip(unknown, solution):
        if value.denominator != 1 or value < 0:
            raise MomentError(f"A_{i} = {value} is not a nonnegative integer")
        counts[i] = int(value)
    return WeightDistribution(nu, tuple(counts), q), dual_used


def krawtchouk(k, x, nu, q):
    return sum(
        (-1) ** j * (q - 1) ** (k - j) * binom(x, j) * binom(nu - x, k - j)
        for j in range(k + 1)
    )


def macwilliams(dist):
    """Dual weight distribution via the MacWilliams transform."""
    nu, q, size = dist.length, dist.q, dist.size
    out = []
    for k in range(nu + 1):
        total = sum(a * krawtchouk(k, i, nu, q) for i, a in enumerate(dist.counts) if a)
        value, rem = divmod(total, size)
        if rem:
            raise MomentError("MacWilliams transform is not integral")
        out.append(value)
    return WeightDistribution(nu, tuple(out), q)


def a4_dual_from_two_valued(n, s):
    """Weight-4 dual codewords of C(F) for F differentially two-valued {0, 2^s}."""
    if not 1 <= s <= n - 1:
        raise MomentError("need 1 <= s <= n-1")
    value, rem = divmod(2 ** (n - 2) * (2 ** n - 1) * (2 ** (s - 1) - 1), 3)
    if rem:
        raise AssertionError("closed form not divisible by 3")
    return value
