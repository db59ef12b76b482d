"""Registry of named series built from q-Pochhammer products.

Every series the package knows by name lives here, each with a single
canonical recipe:

* ``G``, ``H``: the two sum-equals-product series, as products
  1/((q;q5)(q4;q5)) and 1/((q2;q5)(q3;q5)).
* ``G_sum``, ``H_sum``: the same values via partial sums of
  q**(n*n) / (q;q)_n (resp. q**(n*n+n)); kept as an independent
  cross-check of the product recipes.
* ``R = H/G`` and its inverse ``Rinv``; fifth powers ``R5``, ``R5inv``;
  ``Rq5 = R(q**5)``; the ratios ``Cratio = R5/Rq5`` and
  ``Dratio = Rq5/R5``; the Euler-product ratios ``Fratio15 = f1**6/f5**6``
  and ``Fratio51 = f5**6/f1**6``.
* Single-letter aliases for the coefficient families: ``A`` (R5inv),
  ``B`` (R5), ``C`` (Cratio), ``D`` (Dratio), ``c`` (Rinv), ``d`` (R).

Builds are cached per canonical name at the largest precision seen, with
shorter requests answered by truncation, so every earlier coefficient is
stable under rebuilding at higher precision.
"""

from __future__ import annotations

import threading

from .products import ProductSpec, expand_product
from .series import Series

__all__ = [
    "NAMES",
    "ALIASES",
    "build",
    "build_sum_form",
    "coefficient",
    "clear_cache",
]

NAMES = (
    "G",
    "H",
    "G_sum",
    "H_sum",
    "R",
    "Rinv",
    "R5",
    "R5inv",
    "Rq5",
    "Cratio",
    "Dratio",
    "Fratio15",
    "Fratio51",
    "A",
    "B",
    "C",
    "D",
    "c",
    "d",
)

ALIASES = {
    "A": "R5inv",
    "B": "R5",
    "C": "Cratio",
    "D": "Dratio",
    "c": "Rinv",
    "d": "R",
}

_PRODUCT_SPECS = {
    "G": ProductSpec(((1, 5, -1), (4, 5, -1))),
    "H": ProductSpec(((2, 5, -1), (3, 5, -1))),
    "Fratio15": ProductSpec(((1, 1, 6), (5, 5, -6))),
    "Fratio51": ProductSpec(((5, 5, 6), (1, 1, -6))),
}

_cache: dict[str, Series] = {}
_cache_lock = threading.Lock()


def clear_cache() -> None:
    """Drop all cached builds (mainly for timing runs in tests)."""
    with _cache_lock:
        _cache.clear()


def _canonical(name: str) -> str:
    if name not in NAMES:
        raise ValueError(f"unknown series name {name!r}")
    return ALIASES.get(name, name)


def _finite_poch(n: int, prec: int) -> Series:
    # (q; q)_n = prod_{k=1..n} (1 - q**k), truncated
    coeffs = [1] + [0] * (prec - 1)
    for k in range(1, n + 1):
        if k >= prec:
            break
        coeffs[k:] = [x - y for x, y in zip(coeffs[k:], coeffs)]
    return Series(coeffs)


def _sum_form(name: str, prec: int) -> Series:
    # partial sum of q**e(n) / (q;q)_n with e = n*n (G) or n*n + n (H);
    # terms with e >= prec vanish below the truncation order
    total = Series.zero(prec)
    n = 0
    while True:
        e = n * n + (n if name == "H_sum" else 0)
        if e >= prec:
            return total
        total = total + _finite_poch(n, prec - e).inverse().shift(e)
        n += 1


def _compute(key: str, prec: int) -> Series:
    if key in _PRODUCT_SPECS:
        return expand_product(_PRODUCT_SPECS[key], prec)
    if key in ("G_sum", "H_sum"):
        return _sum_form(key, prec)
    if key == "R":
        return build("H", prec) / build("G", prec)
    if key == "Rinv":
        return build("R", prec).inverse()
    if key == "R5":
        return build("R", prec) ** 5
    if key == "R5inv":
        return build("Rinv", prec) ** 5
    if key == "Rq5":
        inner = -(-prec // 5)
        return build("R", inner).substitute_qm(5).truncate(prec)
    if key == "Cratio":
        return build("R5", prec) / build("Rq5", prec)
    if key == "Dratio":
        return build("Rq5", prec) / build("R5", prec)
    raise AssertionError(f"no recipe for {key!r}")


def build(name: str, prec: int) -> Series:
    """The named series truncated to prec, from the largest-prec cache.

    Concurrent builds of the same name may race, but every recipe is
    deterministic, so a lost update only recomputes identical values.
    """
    key = _canonical(name)
    if prec < 0:
        raise ValueError(f"precision must be >= 0, got {prec}")
    if prec == 0:
        return Series.zero(0)
    with _cache_lock:
        hit = _cache.get(key)
    if hit is None or hit.prec < prec:
        out = _compute(key, prec)
        with _cache_lock:
            hit = _cache.get(key)
            if hit is None or hit.prec < out.prec:
                _cache[key] = out
                hit = out
    return hit.truncate(prec)


def build_sum_form(name: str, prec: int) -> Series:
    """Partial-sum recipe for G_sum or H_sum (the cross-check forms)."""
    if name not in ("G_sum", "H_sum"):
        raise ValueError(f"no sum form for {name!r}")
    return build(name, prec)


def coefficient(name: str, n: int) -> int:
    """Exact coefficient of q**n in the named series.

    Grows the cache geometrically so sequential queries for increasing n
    cost amortized O(1) builds rather than one build per query.
    """
    key = _canonical(name)
    if n < 0:
        raise ValueError(f"coefficient index must be >= 0, got {n}")
    with _cache_lock:
        hit = _cache.get(key)
    if hit is not None and hit.prec > n:
        return hit[n]
    target = max(n + 1, 64, 2 * (hit.prec if hit is not None else 0))
    return build(key, target)[n]
