"""Truncated formal power series in q with exact integer coefficients.

A :class:`Series` stores the first ``prec`` coefficients of a power series;
index ``n`` holds the coefficient of ``q**n``.  Coefficients are plain Python
ints, so every operation is exact; there is no floating-point path anywhere.
``prec`` is the number of *known* coefficients: everything from ``q**prec``
up is unknown, and arithmetic propagates precision conservatively
(min of the operands, adjusted by shifts and dissections).

Series are immutable; all operations return new values and are safe to share
between threads.
"""

from __future__ import annotations

from typing import Iterable, Iterator

__all__ = [
    "Series",
    "SeriesError",
    "NonUnitConstantTerm",
    "NonUnitLeadingCoefficient",
    "ValuationMismatch",
    "ZeroDivisor",
    "NegativeShiftNonzeroLowTerms",
]


class SeriesError(ValueError):
    """Base class for series arithmetic errors."""


class NonUnitConstantTerm(SeriesError):
    """inverse() needs a constant term of +1 or -1 to stay in the integers."""


class NonUnitLeadingCoefficient(SeriesError):
    """Division needs a divisor whose lowest nonzero coefficient is +1 or -1."""


class ValuationMismatch(SeriesError):
    """Division would produce negative powers of q."""


class ZeroDivisor(SeriesError):
    """Division by a series that is zero to its precision."""


class NegativeShiftNonzeroLowTerms(SeriesError):
    """shift() by a negative amount requires the dropped low terms to be known zeros."""


# Multiplication strategy: schoolbook convolution when the operands are short
# or sparse, Kronecker substitution (one big-int multiply) otherwise.  Both
# are exact, so the outputs are identical; the thresholds only affect speed.
_KRONECKER_MIN_LEN = 64
_KRONECKER_MIN_WORK = 50_000

# inverse(): recursive convolution up to this length, Newton doubling beyond.
_NEWTON_CUTOFF = 32


def _mul_schoolbook(a: tuple, b: tuple, n: int) -> list:
    nza = [(i, v) for i, v in enumerate(a) if v]
    nzb = [(j, v) for j, v in enumerate(b) if v]
    if len(nzb) < len(nza):
        nza, nzb = nzb, nza
    out = [0] * n
    for i, ai in nza:
        limit = n - i
        for j, bj in nzb:
            if j >= limit:
                break
            out[i + j] += ai * bj
    return out


def _pack(values: Iterable[int], width: int, count: int) -> int:
    # little-endian fixed-width digits; `values` must be nonnegative
    buf = bytearray(width * count)
    off = 0
    for v in values:
        if v:
            buf[off:off + width] = v.to_bytes(width, "little")
        off += width
    return int.from_bytes(buf, "little")


def _mul_kronecker(a: tuple, b: tuple, n: int) -> list:
    # Pack each operand as sum(coeff[i] * 2**(8*w*i)) with w wide enough that
    # the product's digits never overlap, multiply once, then read the signed
    # digits back out of the byte string.  Exact for any integer coefficients.
    amax = max(map(abs, a))
    bmax = max(map(abs, b))
    bits = amax.bit_length() + bmax.bit_length() + n.bit_length() + 1
    w = (bits + 7) // 8
    packed_a = _pack((v if v > 0 else 0 for v in a), w, n) - _pack(
        (-v if v < 0 else 0 for v in a), w, n
    )
    packed_b = _pack((v if v > 0 else 0 for v in b), w, n) - _pack(
        (-v if v < 0 else 0 for v in b), w, n
    )
    ndigits = 2 * n
    half = 1 << (8 * w - 1)
    # adding `half` to every digit makes the whole number nonnegative with
    # digits in [0, 2**(8w)), so no borrows cross digit boundaries
    offset = int.from_bytes((bytes(w - 1) + b"\x80") * ndigits, "little")
    raw = (packed_a * packed_b + offset).to_bytes(ndigits * w, "little")
    from_bytes = int.from_bytes
    return [
        from_bytes(raw[o:o + w], "little") - half
        for o in range(0, n * w, w)
    ]


def _mul_lists(a: tuple, b: tuple, n: int) -> list:
    """Truncated product of coefficient sequences, first n terms."""
    if n <= 0:
        return []
    a = a[:n]
    b = b[:n]
    nza = sum(1 for v in a if v)
    nzb = sum(1 for v in b if v)
    if nza == 0 or nzb == 0:
        return [0] * n
    if n >= _KRONECKER_MIN_LEN and min(nza, nzb) * n >= _KRONECKER_MIN_WORK:
        return _mul_kronecker(a, b, n)
    return _mul_schoolbook(a, b, n)


def _inverse_recursive(a: tuple, n: int) -> list:
    a0 = a[0]
    b = [0] * n
    b[0] = a0
    for k in range(1, n):
        s = 0
        for i in range(1, k + 1):
            ai = a[i]
            if ai:
                s += ai * b[k - i]
        b[k] = -a0 * s
    return b


def _inverse_newton(a: tuple, n: int) -> list:
    # x -> x * (2 - a*x) doubles the number of correct coefficients; the
    # inverse is unique, so this agrees with the recursive definition exactly.
    x = [a[0]]
    k = 1
    while k < n:
        k = min(2 * k, n)
        ax = _mul_lists(a[:k], tuple(x), k)
        t = [-v for v in ax]
        t[0] += 2
        x = _mul_lists(tuple(x), tuple(t), k)
    return x


class Series:
    """Immutable truncated power series with exact integer coefficients."""

    __slots__ = ("coeffs", "prec")

    coeffs: tuple
    prec: int

    def __init__(self, coeffs: Iterable[int] = (), prec: int | None = None):
        t = tuple(coeffs)
        for v in t:
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"coefficients must be exact ints, got {v!r}")
        if prec is not None:
            if prec < len(t):
                raise ValueError(f"prec {prec} smaller than {len(t)} given coefficients")
            t = t + (0,) * (prec - len(t))
        object.__setattr__(self, "coeffs", t)
        object.__setattr__(self, "prec", len(t))

    @classmethod
    def _make(cls, coeffs: tuple) -> "Series":
        s = object.__new__(cls)
        object.__setattr__(s, "coeffs", coeffs)
        object.__setattr__(s, "prec", len(coeffs))
        return s

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @classmethod
    def zero(cls, prec: int) -> "Series":
        return cls._make((0,) * prec)

    @classmethod
    def one(cls, prec: int) -> "Series":
        if prec == 0:
            return cls._make(())
        return cls._make((1,) + (0,) * (prec - 1))

    @classmethod
    def monomial(cls, coeff: int, exponent: int, prec: int) -> "Series":
        """coeff * q**exponent, truncated to prec (zero if exponent >= prec)."""
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        if exponent >= prec:
            return cls.zero(prec)
        return cls._make((0,) * exponent + (coeff,) + (0,) * (prec - exponent - 1))

    # -- inspection -------------------------------------------------------

    def __len__(self) -> int:
        return self.prec

    def __getitem__(self, n: int) -> int:
        if not 0 <= n < self.prec:
            raise IndexError(f"coefficient {n} is beyond precision {self.prec}")
        return self.coeffs[n]

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def is_zero(self) -> bool:
        """True if every known coefficient is zero."""
        return not any(self.coeffs)

    def valuation(self) -> int | None:
        """Index of the lowest nonzero coefficient, or None if zero to prec."""
        for i, v in enumerate(self.coeffs):
            if v:
                return i
        return None

    def truncate(self, prec: int) -> "Series":
        """Drop precision down to the first `prec` coefficients."""
        if not 0 <= prec <= self.prec:
            raise ValueError(f"cannot truncate prec {self.prec} to {prec}")
        if prec == self.prec:
            return self
        return Series._make(self.coeffs[:prec])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if self.prec <= 16:
            return f"Series({list(self.coeffs)!r})"
        head = ", ".join(map(str, self.coeffs[:12]))
        return f"Series([{head}, ...], prec={self.prec})"

    def __str__(self) -> str:
        parts = []
        for i, v in enumerate(self.coeffs):
            if not v:
                continue
            if len(parts) == 8:
                parts.append("...")
                break
            mag = abs(v)
            if i == 0:
                term = str(mag)
            else:
                base = "q" if i == 1 else f"q^{i}"
                term = base if mag == 1 else f"{mag}*{base}"
            if not parts:
                parts.append(term if v > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if v > 0 else f"- {term}")
        body = " ".join(parts) if parts else "0"
        return f"{body} + O(q^{self.prec})"

    # -- ring operations --------------------------------------------------

    def __add__(self, other) -> "Series":
        if isinstance(other, int) and not isinstance(other, bool):
            other = Series.monomial(other, 0, self.prec)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.prec, other.prec)
        a, b = self.coeffs, other.coeffs
        return Series._make(tuple(a[i] + b[i] for i in range(n)))

    __radd__ = __add__

    def __sub__(self, other) -> "Series":
        if isinstance(other, int) and not isinstance(other, bool):
            other = Series.monomial(other, 0, self.prec)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.prec, other.prec)
        a, b = self.coeffs, other.coeffs
        return Series._make(tuple(a[i] - b[i] for i in range(n)))

    def __rsub__(self, other) -> "Series":
        if isinstance(other, int) and not isinstance(other, bool):
            return Series.monomial(other, 0, self.prec) - self
        return NotImplemented

    def __neg__(self) -> "Series":
        return Series._make(tuple(-v for v in self.coeffs))

    def __mul__(self, other) -> "Series":
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.prec, other.prec)
        return Series._make(tuple(_mul_lists(self.coeffs, other.coeffs, n)))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Series":
        """k-th power by repeated squaring, precision unchanged."""
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Series.one(self.prec)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self) -> "Series":
        """Multiplicative inverse to precision.

        The constant term must be +1 or -1 so the inverse has integer
        coefficients; anything else raises NonUnitConstantTerm.
        """
        if self.prec == 0 or self.coeffs[0] not in (1, -1):
            head = self.coeffs[0] if self.prec else "unknown"
            raise NonUnitConstantTerm(f"constant term must be +1 or -1, got {head}")
        n = self.prec
        if n <= _NEWTON_CUTOFF:
            out = _inverse_recursive(self.coeffs, n)
        else:
            out = _inverse_newton(self.coeffs, n)
        return Series._make(tuple(out))

    def __truediv__(self, other) -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        v = other.valuation()
        if v is None:
            raise ZeroDivisor("divisor is zero to its precision")
        if other.coeffs[v] not in (1, -1):
            raise NonUnitLeadingCoefficient(
                f"divisor's lowest coefficient must be +1 or -1, got {other.coeffs[v]} at q^{v}"
            )
        va = self.valuation()
        if va is None:
            # zero numerator: quotient is zero to the shared precision
            return Series.zero(max(min(self.prec, other.prec) - v, 0))
        if va < v:
            raise ValuationMismatch(
                f"numerator valuation {va} is below divisor valuation {v}"
            )
        n = min(self.prec, other.prec) - v
        num = Series._make(self.coeffs[v:v + n])
        den = Series._make(other.coeffs[v:v + n])
        return num * den.inverse()

    # -- reindexing -------------------------------------------------------

    def shift(self, k: int) -> "Series":
        """Multiply by q**k; k < 0 drops low coefficients that must be zero."""
        if k >= 0:
            return Series._make((0,) * k + self.coeffs)
        drop = -k
        if drop > self.prec:
            raise NegativeShiftNonzeroLowTerms(
                f"cannot shift by {k}: only {self.prec} coefficients are known"
            )
        if any(self.coeffs[:drop]):
            raise NegativeShiftNonzeroLowTerms(
                f"cannot shift by {k}: low coefficients are not all zero"
            )
        return Series._make(self.coeffs[drop:])

    def scale(self, c: int) -> "Series":
        """Multiply every coefficient by the integer c."""
        if not isinstance(c, int) or isinstance(c, bool):
            raise TypeError("scale factor must be an exact int")
        return Series._make(tuple(c * v for v in self.coeffs))

    def substitute_qm(self, m: int) -> "Series":
        """Replace q by q**m; precision grows to prec*m."""
        if m < 1:
            raise ValueError("substitution power must be >= 1")
        if m == 1:
            return self
        out = [0] * (self.prec * m)
        out[::m] = self.coeffs
        return Series._make(tuple(out))

    def dissect(self, m: int, j: int) -> "Series":
        """Extract the arithmetic progression: coefficient n of the result
        is coefficient m*n + j of self."""
        if m < 1:
            raise ValueError("dissection modulus must be >= 1")
        if not 0 <= j < m:
            raise ValueError(f"residue must satisfy 0 <= j < {m}, got {j}")
        return Series._make(self.coeffs[j::m])
