"""Exact combinatorics of gluings: Catalan numbers, the pairing pmf, and
genus counts.

Everything here is integer or rational arithmetic with no rounding.  The
genus count for n-edge one-face maps is

    count(g, n) = (2n)! / ((n+1)! (n-2g)!) * [x^(2g)] ((x/2)/tanh(x/2))^(n+1)

and the coefficient is extracted from an exact truncated power series.
The series for (x/2)/tanh(x/2) is obtained by dividing the cosh Taylor
series by the sinh one, which avoids importing a Bernoulli-number table.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import OutOfRangeError

# Catalan cache, grown on demand via C_k = (4k-2) C_{k-1} / (k+1).  Safe
# for concurrent reads once warm; grow it from a single thread.
_CATALAN: list[int] = [1]


def catalan(n: int) -> int:
    """n-th Catalan number (2n choose n)/(n+1); counts non-crossing pairings."""
    if n < 0:
        raise OutOfRangeError("catalan is defined for n >= 0")
    while len(_CATALAN) <= n:
        k = len(_CATALAN)
        _CATALAN.append((4 * k - 2) * _CATALAN[k - 1] // (k + 1))
    return _CATALAN[n]


def count_matchings(n: int) -> int:
    """(2n-1)!!, the number of perfect matchings on 2n labels."""
    if n < 0:
        raise OutOfRangeError("need n >= 0")
    return math.prod(range(1, 2 * n, 2))


def pmf(m: int, n: int) -> Fraction:
    """Probability that the first node of a size-2n non-crossing pairing
    is paired with node 2m: C_{m-1} C_{n-m} / C_n, exactly."""
    if not 1 <= m <= n:
        raise OutOfRangeError(f"need 1 <= m <= n, got m={m}, n={n}")
    return Fraction(catalan(m - 1) * catalan(n - m), catalan(n))


def coth_series_coefficients(num_terms: int) -> list[Fraction]:
    """Coefficients of x^0, x^2, ..., x^(2(num_terms-1)) in (x/2)/tanh(x/2).

    Computed as cosh(x/2) divided by sinh(x/2)/(x/2), both expanded in
    u = x^2 and divided as truncated series.  Leading terms are
    1 + x^2/12 - x^4/720 + ...
    """
    if num_terms < 1:
        raise OutOfRangeError("need at least one term")
    # cosh(x/2):   u^k coefficient 1 / (4^k (2k)!)
    # sinh(x/2)/(x/2): u^k coefficient 1 / (4^k (2k+1)!)
    cosh = [Fraction(1, 4**k * math.factorial(2 * k)) for k in range(num_terms)]
    sinh = [Fraction(1, 4**k * math.factorial(2 * k + 1)) for k in range(num_terms)]
    out: list[Fraction] = []
    for k in range(num_terms):
        acc = cosh[k] - sum(sinh[j] * out[k - j] for j in range(1, k + 1))
        out.append(acc / sinh[0])
    return out


def _series_multiply(a: list[Fraction], b: list[Fraction], num_terms: int) -> list[Fraction]:
    out = [Fraction(0)] * num_terms
    for i, ai in enumerate(a):
        if i >= num_terms:
            break
        for j, bj in enumerate(b):
            if i + j >= num_terms:
                break
            out[i + j] += ai * bj
    return out


def _series_power(base: list[Fraction], exponent: int, num_terms: int) -> list[Fraction]:
    result = [Fraction(1)] + [Fraction(0)] * (num_terms - 1)
    acc = list(base[:num_terms])
    e = exponent
    while e:
        if e & 1:
            result = _series_multiply(result, acc, num_terms)
        e >>= 1
        if e:
            acc = _series_multiply(acc, acc, num_terms)
    return result


def harer_zagier(g: int, n: int) -> int:
    """Number of genus-g one-face maps with n edges, exactly."""
    if n < 1:
        raise OutOfRangeError("need n >= 1")
    if g < 0 or 2 * g > n:
        raise OutOfRangeError(f"need 0 <= 2g <= n, got g={g}, n={n}")
    num_terms = g + 1
    series = _series_power(coth_series_coefficients(num_terms), n + 1, num_terms)
    factor = Fraction(math.factorial(2 * n), math.factorial(n + 1) * math.factorial(n - 2 * g))
    value = factor * series[g]
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"genus count came out non-integral: {value}")
    return int(value)


def genus_distribution(n: int) -> list[int]:
    """Counts of n-edge one-face maps by genus g = 0..floor(n/2).

    The entries sum to (2n-1)!!, the total number of gluings.
    """
    if n < 1:
        raise OutOfRangeError("need n >= 1")
    num_terms = n // 2 + 1
    # One series power, all coefficients at once; cheaper than per-genus calls.
    series = _series_power(coth_series_coefficients(num_terms), n + 1, num_terms)
    out = []
    for g in range(num_terms):
        factor = Fraction(
            math.factorial(2 * n), math.factorial(n + 1) * math.factorial(n - 2 * g)
        )
        value = factor * series[g]
        if value.denominator != 1 or value < 0:
            raise ArithmeticError(f"genus count came out non-integral: {value}")
        out.append(int(value))
    return out
