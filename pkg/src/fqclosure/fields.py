"""Exact arithmetic in GF(p^e).

Elements are encoded as integers ``0 .. q-1``; the base-p digits of an
encoding are the coefficients (little-endian) of the representing polynomial
modulo the field's irreducible modulus.  Scalar operations go through
:class:`FieldElement`; bulk code works on integer numpy arrays through the
vectorised ``add``/``mul``/... methods of :class:`FiniteField`.
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterable, Sequence

import numpy as np

MAX_ORDER = 2**16


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``, or raise if q is not a prime power."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            r = q
            while r % p == 0:
                r //= p
                e += 1
            if r != 1 or not is_prime(p):
                raise FieldError(f"{q} is not a prime power")
            return p, e
    raise FieldError(f"{q} is not a prime power")  # pragma: no cover


# -- polynomials over GF(p) as little-endian coefficient lists ---------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim(list(a))
    b = _trim(list(b))
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _trim(a)
    return a


def _polymul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _monic_polys(p: int, degree: int) -> Iterable[list[int]]:
    """Monic polynomials of the given degree, in increasing integer encoding."""
    for low in range(p**degree):
        coeffs = [(low // p**k) % p for k in range(degree)]
        yield coeffs + [1]


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Irreducibility by trial division by every monic polynomial of degree <= deg/2."""
    f = _trim(list(modulus))
    deg = len(f) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for k in range(1, deg // 2 + 1):
        for g in _monic_polys(p, k):
            if not _polymod(f, g, p):
                return False
    return True


def first_irreducible(p: int, e: int) -> list[int]:
    """Smallest monic irreducible of degree e, ordered by integer encoding."""
    for f in _monic_polys(p, e):
        if is_irreducible(f, p):
            return f
    raise FieldError(f"no irreducible of degree {e} over GF({p})")  # pragma: no cover


# -- the field ---------------------------------------------------------------

class FiniteField:
    """GF(q), q = p**e, with a verified irreducible modulus when e > 1.

    Construct through :func:`GF` (cached) rather than directly.
    """

    def __init__(self, p: int, e: int = 1, modulus: Sequence[int] | None = None):
        if e < 1:
            raise FieldError("extension degree must be >= 1")
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        q = p**e
        if q > MAX_ORDER:
            raise FieldError(f"field order {q} exceeds the supported maximum {MAX_ORDER}")
        if e == 1:
            if modulus is not None and list(modulus) not in ([0, 1], []):
                raise FieldError("a prime field takes no modulus")
            modulus = None
        elif modulus is None:
            modulus = first_irreducible(p, e)
        else:
            modulus = [int(c) % p for c in modulus]
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise FieldError(f"modulus must be monic of degree {e}")
            if not is_irreducible(modulus, p):
                raise FieldError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.e = e
        self.q = q
        self.modulus = tuple(modulus) if modulus is not None else None
        if e > 1:
            self._build_log_tables()
        else:
            self._inv = np.zeros(q, dtype=np.int64)
            for a in range(1, q):
                self._inv[a] = pow(a, p - 2, p)

    def __repr__(self) -> str:
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e}, modulus={list(self.modulus)})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteField)
            and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    @property
    def is_prime_field(self) -> bool:
        return self.e == 1

    # encoding helpers
    def to_poly(self, a: int) -> list[int]:
        return [(a // self.p**k) % self.p for k in range(self.e)]

    def from_poly(self, coeffs: Sequence[int]) -> int:
        return sum((c % self.p) * self.p**k for k, c in enumerate(coeffs))

    def _mul_reference(self, a: int, b: int) -> int:
        """Scalar multiplication by polynomial product and reduction."""
        if self.e == 1:
            return a * b % self.p
        prod = _polymul(_trim(self.to_poly(a)), _trim(self.to_poly(b)), self.p)
        return self.from_poly(_polymod(prod, self.modulus, self.p) if prod else [])

    def _build_log_tables(self) -> None:
        q = self.q
        for g in range(2, q):
            exp = np.zeros(q - 1, dtype=np.int64)
            x = 1
            for k in range(q - 1):
                exp[k] = x
                x = self._mul_reference(x, g)
            if x == 1 and len(np.unique(exp)) == q - 1:
                break
        else:  # pragma: no cover
            raise FieldError("no primitive element found")
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        self.generator = g
        self._exp = exp
        self._log = log
        self._digit_weights = [self.p**k for k in range(self.e)]

    # -- vectorised arithmetic on integer encodings -------------------------
    def add(self, a, b):
        if self.e == 1:
            return (np.asarray(a) + b) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        a = np.asarray(a)
        b = np.asarray(b)
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for w in self._digit_weights:
            out = out + ((a // w % self.p + b // w % self.p) % self.p) * w
        return out

    def neg(self, a):
        if self.e == 1:
            return (-np.asarray(a)) % self.p
        if self.p == 2:
            return np.asarray(a)
        a = np.asarray(a)
        out = np.zeros(a.shape, dtype=np.int64)
        for w in self._digit_weights:
            out = out + ((-(a // w)) % self.p) * w
        return out

    def sub(self, a, b):
        if self.e == 1:
            return (np.asarray(a) - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.e == 1:
            return (np.asarray(a) * b) % self.p
        a = np.asarray(a)
        b = np.asarray(b)
        zero = (a == 0) | (b == 0)
        prod = self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return np.where(zero, 0, prod)

    def inv(self, a):
        a = np.asarray(a)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if self.e == 1:
            return self._inv[a]
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, k: int):
        """Elementwise a**k for an integer k >= 0 (0**0 == 1)."""
        a = np.asarray(a)
        if k == 0:
            return np.ones(a.shape, dtype=np.int64)
        if self.e == 1:
            out = np.ones(a.shape, dtype=np.int64)
            base = a % self.p
            while k:
                if k & 1:
                    out = out * base % self.p
                base = base * base % self.p
                k >>= 1
            return out
        nz = a != 0
        out = self._exp[(self._log[a] * k) % (self.q - 1)]
        return np.where(nz, out, 0)

    def power_table(self, maxdeg: int) -> np.ndarray:
        """``T[v, k] = v**k`` for every element v and 0 <= k <= maxdeg."""
        t = np.zeros((self.q, maxdeg + 1), dtype=np.int64)
        t[:, 0] = 1
        vals = np.arange(self.q)
        for k in range(1, maxdeg + 1):
            t[:, k] = self.mul(t[:, k - 1], vals)
        return t

    def scalar(self, n: int) -> int:
        """Encoding of the integer n (the image of Z -> GF(q))."""
        return n % self.p

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, v) for v in range(self.q)]

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    def to_json(self) -> dict:
        d = {"p": self.p, "e": self.e}
        if self.modulus is not None:
            d["modulus"] = list(self.modulus)
        return d


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, e: int, modulus: tuple | None) -> FiniteField:
    return FiniteField(p, e, modulus)


def GF(p: int, e: int = 1, modulus: Sequence[int] | None = None) -> FiniteField:
    """Build (or fetch from cache) the field GF(p**e)."""
    return _cached_field(p, e, tuple(modulus) if modulus is not None else None)


field_new = GF


def field_from_order(q: int) -> FiniteField:
    p, e = prime_power(q)
    return GF(p, e)


def field_from_json(obj: dict) -> FiniteField:
    if "p" not in obj and "q" in obj:
        return field_from_order(int(obj["q"]))
    return GF(int(obj["p"]), int(obj.get("e", 1)), obj.get("modulus"))


def enumerate_elements(F: FiniteField) -> list[FieldElement]:
    return F.elements()


def grid(F: FiniteField, n: int) -> np.ndarray:
    """All points of F^n as rows of a (q**n, n) array, in lexicographic order."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(itertools.product(range(F.q), repeat=n)), dtype=np.int64).reshape(-1, n)


class FieldElement:
    __slots__ = ("field", "value")

    def __init__(self, field: FiniteField, value: int):
        value = int(value)
        if not 0 <= value < field.q:
            raise FieldError(f"{value} is not an element encoding of {field}")
        self.field = field
        self.value = value

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"field mismatch: {self.field} vs {other.field}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.field.scalar(int(other))
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        if b == 0:
            raise ZeroDivisionError("division by zero in " + repr(self.field))
        return FieldElement(self.field, self.field.div(self.value, b))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self._other(other)) / self

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, k: int):
        if k < 0:
            return FieldElement(self.field, self.field.inv(self.value)) ** (-k)
        return FieldElement(self.field, self.field.power(self.value, k))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == self.field.scalar(int(other)) and (
                self.field.e == 1 or int(other) < self.field.p
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.field!r}({self.value})"


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Binary field operation selected by name: add, sub, mul or div."""
    if a.field != b.field:
        raise FieldError("field mismatch")
    try:
        fn = {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(b)
