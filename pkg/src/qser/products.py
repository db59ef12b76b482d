"""Truncated expansions of q-Pochhammer infinite products.

Building blocks:

* ``pochhammer_inf(a, m, prec)``: the product of (1 - q**(a+k*m)) over all
  k >= 0, multiplied out factor by factor with immediate truncation.
* ``euler_f(k, prec)``: (q**k; q**k)_inf, using the pentagonal-number sparse
  expansion of (q; q)_inf as a fast path.
* ``expand_product(spec, prec)``: an arbitrary product of such factors with
  integer exponents, e.g. eta-quotient style ratios like f5**6 / f1**6.

Offsets a >= 1 guarantee constant term 1, so negative exponents stay in the
integers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import Series

__all__ = ["ProductSpec", "pochhammer_inf", "euler_f", "expand_product"]


@dataclass(frozen=True)
class ProductSpec:
    """A formal product of factors (q**a; q**m)_inf ** e.

    ``factors`` is a sequence of (a, m, e) triples with a >= 1, m >= 1 and
    e a nonzero integer.  The empty product is the constant series 1.
    """

    factors: tuple[tuple[int, int, int], ...]

    def __init__(self, factors=()):
        factors = tuple(tuple(f) for f in factors)
        for a, m, e in factors:
            if a < 1:
                raise ValueError(f"factor offset must be >= 1, got {a}")
            if m < 1:
                raise ValueError(f"factor modulus must be >= 1, got {m}")
            if e == 0:
                raise ValueError("factor exponent must be nonzero")
        object.__setattr__(self, "factors", factors)


def _apply_binomial_factors(coeffs: list, exponents: range) -> list:
    # multiply the dense coefficient list by (1 - q**e) for each e; the
    # update reads only lower indices, done via one slice op per factor
    n = len(coeffs)
    for e in exponents:
        coeffs[e:] = [x - y for x, y in zip(coeffs[e:], coeffs)]
    assert len(coeffs) == n
    return coeffs


def pochhammer_inf(a: int, m: int, prec: int) -> Series:
    """Expansion of prod_{k>=0} (1 - q**(a + k*m)) to the given precision.

    Only the finitely many factors with a + k*m < prec contribute.
    """
    if a < 1:
        raise ValueError(f"offset must be >= 1, got {a}")
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if prec < 0:
        raise ValueError(f"precision must be >= 0, got {prec}")
    if prec == 0:
        return Series.zero(0)
    coeffs = [1] + [0] * (prec - 1)
    _apply_binomial_factors(coeffs, range(a, prec, m))
    return Series(coeffs)


def _pentagonal_terms(prec: int):
    """Yield (exponent, sign) for the sparse expansion of (q; q)_inf.

    Exponents are the generalized pentagonal numbers j*(3j-1)/2 for
    j = 1, -1, 2, -2, ..., each with sign (-1)**j.
    """
    yield 0, 1
    j = 1
    while True:
        e = j * (3 * j - 1) // 2
        if e >= prec:
            return
        sign = -1 if j & 1 else 1
        yield e, sign
        e = j * (3 * j + 1) // 2
        if e < prec:
            yield e, sign
        j += 1


def euler_f(k: int, prec: int) -> Series:
    """(q**k; q**k)_inf, the same value as pochhammer_inf(k, k, prec).

    Uses the pentagonal-number sparse series, which is exactly the expanded
    product (equality against the factor-by-factor expansion is enforced in
    the test suite).
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if prec < 0:
        raise ValueError(f"precision must be >= 0, got {prec}")
    coeffs = [0] * prec
    for e, sign in _pentagonal_terms((prec + k - 1) // k if k > 1 else prec):
        if e * k < prec:
            coeffs[e * k] = sign
    return Series(coeffs)


def expand_product(spec: ProductSpec, prec: int) -> Series:
    """Expand a ProductSpec to the given precision.

    Positive-exponent factors are multiplied into a numerator, negative ones
    into a denominator which is inverted once at the end; every intermediate
    is truncated to prec.
    """
    if prec < 0:
        raise ValueError(f"precision must be >= 0, got {prec}")
    if prec == 0:
        return Series.zero(0)
    num = Series.one(prec)
    den = None
    for a, m, e in spec.factors:
        base = euler_f(a, prec) if a == m else pochhammer_inf(a, m, prec)
        part = base ** abs(e)
        if e > 0:
            num = num * part
        else:
            den = part if den is None else den * part
    if den is not None:
        num = num * den.inverse()
    return num
