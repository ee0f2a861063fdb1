"""Arithmetic in the prime field F_q for odd primes q.

Everything downstream (symmetric matrices, quadratic form types, weight
formulas) works over a fixed odd prime field. A PrimeField carries
precomputed tables for the quadratic character chi and for inverses, since
character lookups sit inside the hot enumeration loops. Elements are plain
integers in [0, q); the Fe wrapper exists for callers that want operator
syntax tied to a field.
"""
from __future__ import annotations


class NonPrimeError(ValueError):
    """Field order is not a prime number."""


class EvenCharacteristicError(ValueError):
    """Field order is even; the constructions here require odd q."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """The field F_q with quadratic-character and inverse tables.

    chi(a) is +1 for non-zero squares, -1 for non-squares, 0 for 0.
    canonical_nonsquare is the least non-square in integer order; it is the
    fixed representative of the non-square class used everywhere a class
    representative delta is needed.
    """

    __slots__ = ("q", "chi_table", "canonical_nonsquare", "_inv")

    def __init__(self, q: int):
        if not isinstance(q, int) or q < 2:
            raise NonPrimeError(f"field order must be an integer prime, got {q!r}")
        if q % 2 == 0:
            raise EvenCharacteristicError(f"field order {q} is even; odd q required")
        if not _is_prime(q):
            raise NonPrimeError(f"field order {q} is not prime")
        self.q = q
        squares = {(a * a) % q for a in range(1, q)}
        self.chi_table = tuple(
            0 if a == 0 else (1 if a in squares else -1) for a in range(q)
        )
        self.canonical_nonsquare = min(a for a in range(1, q) if a not in squares)
        self._inv = tuple(0 if a == 0 else pow(a, -1, q) for a in range(q))

    def element(self, value: int) -> "Fe":
        return Fe(self, value % self.q)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def neg(self, a: int) -> int:
        return (-a) % self.q

    def inv(self, a: int) -> int:
        a %= self.q
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return (a * self.inv(b)) % self.q

    def chi(self, a: int) -> int:
        """Quadratic character of a (accepts any integer, reduces mod q)."""
        return self.chi_table[a % self.q]

    def delta_rep(self, delta_class: int) -> int:
        """Representative of a square class: 1 for +1, least non-square for -1."""
        if delta_class == 1:
            return 1
        if delta_class == -1:
            return self.canonical_nonsquare
        raise ValueError(f"delta_class must be +1 or -1, got {delta_class!r}")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("PrimeField", self.q))

    def __repr__(self) -> str:
        return f"PrimeField({self.q})"


class Fe:
    """A field element: residue in [0, q) tied to a PrimeField."""

    __slots__ = ("field", "value")

    def __init__(self, field: PrimeField, value: int):
        self.field = field
        self.value = value % field.q

    def _coerce(self, other) -> int:
        if isinstance(other, Fe):
            if other.field != self.field:
                raise ValueError("elements belong to different fields")
            return other.value
        if isinstance(other, int):
            return other % self.field.q
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Fe(self.field, self.value + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Fe(self.field, self.value - v)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Fe(self.field, v - self.value)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Fe(self.field, self.value * v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Fe(self.field, self.value * self.field.inv(v))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Fe(self.field, v * self.field.inv(self.value))

    def __neg__(self):
        return Fe(self.field, -self.value)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Fe):
            return other.field == self.field and other.value == self.value
        if isinstance(other, int):
            return self.value == other % self.field.q
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.q, self.value))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"Fe({self.value} mod {self.field.q})"
