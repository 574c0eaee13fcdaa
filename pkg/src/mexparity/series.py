"""Truncated formal power series in one variable q.

Two coefficient domains are supported: arbitrary-precision integers and
GF(2) (coefficients modulo 2).  A series of order N stores the coefficients
of q^0 .. q^(N-1) and every operation is exact through that window: as long
as the inputs are exact to order N, so is the output.  Coefficients at or
beyond the truncation order are unknown, not zero, and asking for them is
an error.

Integer series are kept as coefficient tuples.  GF(2) series are kept as a
single Python int used as a bitmask (bit n = coefficient of q^n), which is
what lets the parity pipeline run at order 10^5: multiplication is either
shift-XOR over the sparser operand or, for two dense operands, Kronecker
substitution into one big-int multiply; reciprocals use Newton iteration,
where squaring a GF(2) series is just a bit dilation.

The module also provides constructors for the classical series this
package is built around: the Euler product (q^s;q^s)_inf and its powers,
the pentagonal-number expansion of (q;q)_inf, Jacobi's expansion of
(q;q)_inf^3, the triangular-number theta series psi(q), and the
alternating triangular sum that generates the mex-based partition counts.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Domain",
    "INTEGERS",
    "MOD2",
    "TruncatedSeries",
    "series_mul",
    "series_recip",
    "euler_product",
    "euler_pentagonal",
    "jacobi_cube",
    "alternating_triangular",
    "theta_psi",
    "dissect",
    "reduce_mod2",
    "nonzero_indices",
]


class Domain(enum.Enum):
    """Coefficient domain of a TruncatedSeries."""

    INTEGERS = "integers"
    MOD2 = "mod2"


INTEGERS = Domain.INTEGERS
MOD2 = Domain.MOD2


class TruncatedSeries:
    """Immutable power series in q, exact through q^(order-1).

    Instances are value objects: equality compares domain, order and all
    stored coefficients.  They are safe to share between threads and to
    cache; no operation in this module mutates its inputs.
    """

    __slots__ = ("order", "domain", "_data")

    order: int
    domain: Domain

    def __init__(self, coeffs: Iterable[int], domain: Domain = INTEGERS):
        data = tuple(int(c) for c in coeffs)
        if not data:
            raise ValueError("a series needs order >= 1 (at least the q^0 coefficient)")
        object.__setattr__(self, "order", len(data))
        object.__setattr__(self, "domain", domain)
        if domain is MOD2:
            bits = 0
            for i, c in enumerate(data):
                if c not in (0, 1):
                    raise ValueError(
                        f"Mod2 coefficients must be 0 or 1, got {c} at q^{i}"
                    )
                bits |= c << i
            object.__setattr__(self, "_data", bits)
        else:
            object.__setattr__(self, "_data", data)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- alternate constructors -------------------------------------------

    @classmethod
    def _from_bits(cls, bits: int, order: int) -> "TruncatedSeries":
        # trusted internal path: bits must already be < 2**order
        self = object.__new__(cls)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "domain", MOD2)
        object.__setattr__(self, "_data", bits)
        return self

    @classmethod
    def _from_tuple(cls, data: tuple, order: int) -> "TruncatedSeries":
        self = object.__new__(cls)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "domain", INTEGERS)
        object.__setattr__(self, "_data", data)
        return self

    @classmethod
    def one(cls, order: int, domain: Domain = INTEGERS) -> "TruncatedSeries":
        """The multiplicative identity 1, truncated at `order`."""
        if order < 1:
            raise ValueError("order must be >= 1")
        if domain is MOD2:
            return cls._from_bits(1, order)
        return cls._from_tuple((1,) + (0,) * (order - 1), order)

    @classmethod
    def zero(cls, order: int, domain: Domain = INTEGERS) -> "TruncatedSeries":
        if order < 1:
            raise ValueError("order must be >= 1")
        if domain is MOD2:
            return cls._from_bits(0, order)
        return cls._from_tuple((0,) * order, order)

    # -- coefficient access ------------------------------------------------

    def coeff(self, n: int) -> int:
        """Coefficient of q^n.  Indices at or past the order are unknown."""
        if not 0 <= n < self.order:
            raise IndexError(
                f"coefficient q^{n} is outside the exact window [0, {self.order})"
            )
        if self.domain is MOD2:
            return (self._data >> n) & 1
        return self._data[n]

    @property
    def coeffs(self) -> tuple[int, ...]:
        """All stored coefficients, q^0 first."""
        if self.domain is MOD2:
            out = [0] * self.order
            offset = 0
            for byte in self._data.to_bytes((self.order + 7) // 8, "little"):
                if byte:
                    for b in _BYTE_BITS[byte]:
                        out[offset + b] = 1
                offset += 8
            return tuple(out)
        return self._data

    @property
    def bits(self) -> int:
        """Bitmask view (bit n = coefficient of q^n); Mod2 series only."""
        if self.domain is not MOD2:
            raise ValueError("bitmask view is only defined for Mod2 series")
        return self._data

    # -- value semantics -----------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.domain is other.domain
            and self.order == other.order
            and self._data == other._data
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.order, self._data))

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order > 8 else ""
        return f"TruncatedSeries([{head}{tail}], order={self.order}, domain={self.domain.value})"


def nonzero_indices(s: TruncatedSeries) -> Iterator[int]:
    """Exponents n < order with a nonzero coefficient, in increasing order."""
    if s.domain is MOD2:
        return _iter_bits(s._data)
    return (i for i, c in enumerate(s._data) if c)


# ---------------------------------------------------------------------------
# arithmetic
# ---------------------------------------------------------------------------


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Product of two series over the same domain.

    The result order is min(a.order, b.order); coefficient k is the full
    convolution sum over i+j = k.
    """
    if a.domain is not b.domain:
        raise ValueError(f"domain mismatch: {a.domain.value} * {b.domain.value}")
    order = min(a.order, b.order)
    if a.domain is MOD2:
        mask = (1 << order) - 1
        return TruncatedSeries._from_bits(_gf2_mul(a._data & mask, b._data & mask, order), order)
    return TruncatedSeries._from_tuple(_int_mul(a._data, b._data, order), order)


def series_recip(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse: series_mul(a, result) == 1 through a.order.

    The constant term must be a unit: +-1 over the integers, 1 over GF(2).
    """
    order = a.order
    if a.domain is MOD2:
        if (a._data & 1) != 1:
            raise ValueError("constant term must be 1 to invert a Mod2 series")
        return TruncatedSeries._from_bits(_gf2_recip(a._data, order), order)
    c0 = a._data[0]
    if c0 not in (1, -1):
        raise ValueError(f"constant term must be +-1 to invert over the integers, got {c0}")
    return TruncatedSeries._from_tuple(_int_recip(a._data, order), order)


@lru_cache(maxsize=256)
def euler_product(step: int, power: int, order: int, domain: Domain = INTEGERS) -> TruncatedSeries:
    """The infinite product prod_{k>=1} (1 - q^(step*k)) raised to `power`.

    The base product is built by multiplying out its binomial factors one
    by one; every factor with step*k >= order is the identity inside the
    truncation window, so the expansion is exact.  Positive powers are then
    assembled by binary exponentiation and negative powers go through
    series_recip.  power = 0 gives the identity series.
    """
    if step < 1:
        raise ValueError("step must be a positive integer")
    if order < 1:
        raise ValueError("order must be >= 1")
    if domain is MOD2:
        base = TruncatedSeries._from_bits(_euler_base_bits(step, order), order)
    else:
        base = TruncatedSeries._from_tuple(_euler_base_ints(step, order), order)
    result = _series_pow(base, abs(power))
    if power < 0:
        result = series_recip(result)
    return result


def euler_pentagonal(order: int) -> TruncatedSeries:
    """Pentagonal-number expansion of (q;q)_inf.

    Sum over all integers n of (-1)^n q^(n(3n-1)/2); the exponents with
    n = k and n = -k are k(3k-1)/2 and k(3k+1)/2, both with sign (-1)^k.
    Must agree with euler_product(1, 1, order) coefficientwise.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    c = [0] * order
    c[0] = 1
    k = 1
    while k * (3 * k - 1) // 2 < order:
        sign = -1 if k & 1 else 1
        c[k * (3 * k - 1) // 2] = sign
        e = k * (3 * k + 1) // 2
        if e < order:
            c[e] = sign
        k += 1
    return TruncatedSeries._from_tuple(tuple(c), order)


def jacobi_cube(order: int) -> TruncatedSeries:
    """Jacobi's expansion of (q;q)_inf^3: sum of (-1)^n (2n+1) q^(n(n+1)/2)."""
    if order < 1:
        raise ValueError("order must be >= 1")
    c = [0] * order
    n = 0
    while n * (n + 1) // 2 < order:
        c[n * (n + 1) // 2] = (2 * n + 1) * (-1 if n & 1 else 1)
        n += 1
    return TruncatedSeries._from_tuple(tuple(c), order)


def alternating_triangular(t: int, order: int) -> TruncatedSeries:
    """The alternating sum of (-1)^n q^(t*n(n+1)/2) over n >= 0."""
    if t < 1:
        raise ValueError("t must be a positive integer")
    if order < 1:
        raise ValueError("order must be >= 1")
    c = [0] * order
    n = 0
    while t * n * (n + 1) // 2 < order:
        c[t * n * (n + 1) // 2] = -1 if n & 1 else 1
        n += 1
    return TruncatedSeries._from_tuple(tuple(c), order)


def theta_psi(order: int) -> TruncatedSeries:
    """Ramanujan's theta series psi(q) = sum of q^(n(n+1)/2).

    The indicator series of the triangular numbers; as a product it equals
    (q^2;q^2)_inf^2 / (q;q)_inf, which is checked by the identity suite.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    c = [0] * order
    n = 0
    while n * (n + 1) // 2 < order:
        c[n * (n + 1) // 2] = 1
        n += 1
    return TruncatedSeries._from_tuple(tuple(c), order)


def dissect(s: TruncatedSeries, modulus: int, residue: int) -> TruncatedSeries:
    """Arithmetic-progression slice: coefficient n of the result is
    coefficient modulus*n + residue of `s`.

    The result order is ceil((s.order - residue) / modulus), i.e. exactly
    the coefficients of the progression that lie inside the exact window.
    """
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    if not 0 <= residue < modulus:
        raise ValueError(f"residue must satisfy 0 <= r < {modulus}, got {residue}")
    new_order = (s.order - residue + modulus - 1) // modulus
    if new_order < 1:
        raise ValueError(
            f"series of order {s.order} has no exact coefficients in the "
            f"progression {modulus}n + {residue}"
        )
    if s.domain is MOD2:
        out = bytearray((new_order + 7) // 8)
        for i in _iter_bits(s._data):
            if i >= residue and (i - residue) % modulus == 0:
                j = (i - residue) // modulus
                out[j >> 3] |= 1 << (j & 7)
        return TruncatedSeries._from_bits(int.from_bytes(bytes(out), "little"), new_order)
    return TruncatedSeries._from_tuple(s._data[residue::modulus], new_order)


def reduce_mod2(s: TruncatedSeries) -> TruncatedSeries:
    """Reduce an integer series coefficientwise modulo 2."""
    if s.domain is not INTEGERS:
        raise ValueError("reduce_mod2 expects an Integers-domain series")
    out = bytearray((s.order + 7) // 8)
    for i, c in enumerate(s._data):
        if c & 1:
            out[i >> 3] |= 1 << (i & 7)
    return TruncatedSeries._from_bits(int.from_bytes(bytes(out), "little"), s.order)


def _series_pow(base: TruncatedSeries, exponent: int) -> TruncatedSeries:
    if exponent == 0:
        return TruncatedSeries.one(base.order, base.domain)
    result = None
    sq = base
    e = exponent
    while True:
        if e & 1:
            result = sq if result is None else series_mul(result, sq)
        e >>= 1
        if not e:
            return result
        sq = series_mul(sq, sq)


# ---------------------------------------------------------------------------
# GF(2) kernels: a series is one int, bit n = coefficient of q^n
# ---------------------------------------------------------------------------

_BYTE_BITS = tuple(
    tuple(b for b in range(8) if v >> b & 1) for v in range(256)
)

# byte -> its bits spread to even positions in two bytes (little endian)
_SPREAD2 = tuple(
    sum(((v >> b) & 1) << (2 * b) for b in range(8)).to_bytes(2, "little")
    for v in range(256)
)

# min popcount above which dense multiplication beats shift-XOR
_GF2_SPARSE_CUTOFF = 512


def _iter_bits(bits: int) -> Iterator[int]:
    offset = 0
    for byte in bits.to_bytes((bits.bit_length() + 7) // 8, "little"):
        if byte:
            for b in _BYTE_BITS[byte]:
                yield offset + b
        offset += 8


def _gf2_dilate(bits: int) -> int:
    # freshman's dream: squaring over GF(2) sends bit i to bit 2i
    if bits == 0:
        return 0
    raw = bits.to_bytes((bits.bit_length() + 7) // 8, "little")
    return int.from_bytes(b"".join(_SPREAD2[c] for c in raw), "little")


def _gf2_mul(a: int, b: int, order: int) -> int:
    mask = (1 << order) - 1
    a &= mask
    b &= mask
    if a == 0 or b == 0:
        return 0
    if a == b:
        return _gf2_dilate(a) & mask
    na = a.bit_count()
    nb = b.bit_count()
    if nb < na:
        a, b, na, nb = b, a, nb, na
    if na <= _GF2_SPARSE_CUTOFF:
        acc = 0
        for i in _iter_bits(a):
            acc ^= b << i
        return acc & mask
    return _gf2_kron_mul(a, b, na, order) & mask


@lru_cache(maxsize=8)
def _spread_table(slot_bytes: int) -> tuple[bytes, ...]:
    table = []
    for v in range(256):
        row = bytearray(8 * slot_bytes)
        for b in _BYTE_BITS[v]:
            row[b * slot_bytes] = 1
        table.append(bytes(row))
    return tuple(table)


def _gf2_kron_mul(a: int, b: int, min_popcount: int, order: int) -> int:
    # pack each bit into its own byte-aligned slot wide enough that no
    # convolution column (sum <= min popcount) can carry into the next slot
    slot_bytes = (min_popcount.bit_length() + 1 + 7) // 8
    table = _spread_table(slot_bytes)

    def spread(x: int) -> int:
        raw = x.to_bytes((x.bit_length() + 7) // 8, "little")
        return int.from_bytes(b"".join(table[c] for c in raw), "little")

    product = spread(a) * spread(b)
    raw = product.to_bytes(((product.bit_length() + 7) // 8) + slot_bytes, "little")
    low_bytes = raw[0 : order * slot_bytes : slot_bytes]
    out = bytearray((order + 7) // 8)
    for i, byte in enumerate(low_bytes):
        if byte & 1:
            out[i >> 3] |= 1 << (i & 7)
    return int.from_bytes(bytes(out), "little")


def _gf2_recip(a: int, order: int) -> int:
    # Newton iteration: if a*x == 1 mod q^m then a*(a*x^2) == (a*x)^2 == 1
    # mod q^2m, and squaring is a dilation
    x = 1
    m = 1
    while m < order:
        m = min(2 * m, order)
        x = _gf2_mul(a & ((1 << m) - 1), _gf2_dilate(x), m)
    return x


@lru_cache(maxsize=64)
def _euler_base_bits(step: int, order: int) -> int:
    # prod (1 + q^(step*k)) over GF(2), one binomial factor at a time
    mask = (1 << order) - 1
    x = 1
    m = step
    while m < order:
        x = (x ^ (x << m)) & mask
        m += step
    return x


# ---------------------------------------------------------------------------
# integer kernels: a series is a tuple of Python ints
# ---------------------------------------------------------------------------

# max number of coefficient products before switching to Kronecker packing
_INT_SPARSE_CUTOFF = 2_000_000


def _int_mul(a: Sequence[int], b: Sequence[int], order: int) -> tuple[int, ...]:
    nza = [(i, v) for i, v in enumerate(a[:order]) if v]
    nzb = [(i, v) for i, v in enumerate(b[:order]) if v]
    if not nza or not nzb:
        return (0,) * order
    if len(nzb) < len(nza):
        nza, nzb = nzb, nza
    if len(nza) * len(nzb) <= _INT_SPARSE_CUTOFF:
        acc = [0] * order
        for i, av in nza:
            for j, bv in nzb:
                k = i + j
                if k >= order:
                    break
                acc[k] += av * bv
        return tuple(acc)
    return _int_kron_mul(a[:order], b[:order], len(nza), order)


def _int_kron_mul(a: Sequence[int], b: Sequence[int], min_nnz: int, order: int) -> tuple[int, ...]:
    # Kronecker substitution: evaluate both polynomials at 2^slot and
    # multiply as integers.  Slots are wide enough for any convolution
    # column plus a sign bit, so adding half = 2^(slot-1) to every slot
    # makes each digit of the shifted product land in [0, 2^slot).
    max_a = max(abs(v) for v in a)
    max_b = max(abs(v) for v in b)
    bound = min_nnz * max_a * max_b
    slot_bits = ((bound.bit_length() + 2 + 7) // 8) * 8
    slot_bytes = slot_bits // 8
    half = 1 << (slot_bits - 1)

    def pack(xs: Sequence[int]) -> int:
        pos = bytearray(len(xs) * slot_bytes)
        neg = bytearray(len(xs) * slot_bytes)
        for i, v in enumerate(xs):
            if v > 0:
                pos[i * slot_bytes : i * slot_bytes + slot_bytes] = v.to_bytes(slot_bytes, "little")
            elif v < 0:
                neg[i * slot_bytes : i * slot_bytes + slot_bytes] = (-v).to_bytes(slot_bytes, "little")
        return int.from_bytes(bytes(pos), "little") - int.from_bytes(bytes(neg), "little")

    n_slots = len(a) + len(b)
    shifted = pack(a) * pack(b) + int.from_bytes(
        half.to_bytes(slot_bytes, "little") * n_slots, "little"
    )
    raw = shifted.to_bytes(n_slots * slot_bytes + slot_bytes, "little")
    return tuple(
        int.from_bytes(raw[i * slot_bytes : (i + 1) * slot_bytes], "little") - half
        for i in range(order)
    )


def _int_recip(a: Sequence[int], order: int) -> tuple[int, ...]:
    # back-substitution over the nonzero terms of a; with a unit constant
    # term c0 the update is r[n] = -c0 * sum_{k>=1} a[k] r[n-k]
    c0 = a[0]
    nz = [(k, v) for k, v in enumerate(a[:order]) if v and k >= 1]
    r = [0] * order
    r[0] = c0
    for n in range(1, order):
        s = 0
        for k, v in nz:
            if k > n:
                break
            s += v * r[n - k]
        r[n] = -s if c0 == 1 else s
    return tuple(r)


@lru_cache(maxsize=64)
def _euler_base_ints(step: int, order: int) -> tuple[int, ...]:
    # multiply out (1 - q^(step*k)) factors in place; the partial product
    # after k factors has degree at most step*k(k+1)/2, so early factors
    # touch only a short prefix
    c = [0] * order
    c[0] = 1
    degree = 0
    m = step
    while m < order:
        degree = min(degree + m, order - 1)
        for i in range(degree, m - 1, -1):
            c[i] -= c[i - m]
        m += step
    return tuple(c)
