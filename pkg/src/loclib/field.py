"""
Arithmetic in GF(2^m) for 2 <= m <= 16.

Elements are plain Python integers in ``[0, 2^m)``; bit ``i`` is the
coefficient of ``x^i`` in the polynomial basis.  Multiplication and
inversion go through exp/log tables built from a primitive polynomial.
For ``m <= 8`` a full multiplication table is also kept, since the matrix
routines spend nearly all their time scaling rows.
"""

from __future__ import annotations

from functools import lru_cache
from typing import List, Sequence

from .errors import BadDegree, BadPolynomial, DivideByZero, NonPrimitivePolynomial

FieldElement = int

#: x^8 + x^4 + x^3 + x^2 + 1
DEFAULT_POLY = 0x11D

# One primitive polynomial per degree, used when the caller gives only m.
PRIMITIVE_POLYS = {
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x89,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
    16: 0x1100B,
}

_FULL_TABLE_MAX_M = 8


class FieldSpec:
    """
    The field GF(2^m) defined by a primitive polynomial.

    Parameters
    ----------
    m : int
        Extension degree, 2 <= m <= 16.
    poly : int
        Primitive polynomial as a bitmask with bit ``m`` set.

    Raises
    ------
    BadDegree
        If ``m`` is out of range or ``poly`` does not have degree ``m``.
    NonPrimitivePolynomial
        If the powers of ``x`` repeat before reaching all ``2^m - 1``
        nonzero elements.
    """

    __slots__ = ("m", "poly", "q", "order", "exp", "log", "_inv", "_mul")

    def __init__(self, m: int, poly: int):
        if not 2 <= m <= 16:
            raise BadDegree(f"extension degree must be in [2, 16], got {m}")
        if poly <= 0 or poly.bit_length() - 1 != m:
            raise BadDegree(f"polynomial {poly:#x} does not have degree {m}")
        q = 1 << m
        order = q - 1
        exp = [0] * (2 * order)
        log = [-1] * q
        a = 1
        for i in range(order):
            if log[a] != -1:
                raise NonPrimitivePolynomial(
                    f"{poly:#x}: x has multiplicative order {i}, not {order}"
                )
            exp[i] = a
            log[a] = i
            a <<= 1
            if a & q:
                a ^= poly
        if a != 1:
            raise NonPrimitivePolynomial(f"{poly:#x} is not primitive")
        for i in range(order, 2 * order):
            exp[i] = exp[i - order]

        inv = [0] * q
        for a in range(1, q):
            inv[a] = exp[(order - log[a]) % order]

        object.__setattr__(self, "m", m)
        object.__setattr__(self, "poly", poly)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "exp", tuple(exp))
        object.__setattr__(self, "log", tuple(log))
        object.__setattr__(self, "_inv", tuple(inv))
        object.__setattr__(self, "_mul", self._full_table() if m <= _FULL_TABLE_MAX_M else None)

    def _full_table(self):
        exp, log, q = self.exp, self.log, self.q
        table = [[0] * q]
        for a in range(1, q):
            la = log[a]
            table.append([0] + [exp[la + log[b]] for b in range(1, q)])
        return tuple(tuple(row) for row in table)

    def __setattr__(self, name, value):
        raise AttributeError("FieldSpec is immutable")

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.m, self.poly) == (other.m, other.poly)

    def __hash__(self):
        return hash((self.m, self.poly))

    def __repr__(self):
        return f"FieldSpec(m={self.m}, poly={self.poly:#x})"

    def __reduce__(self):
        return (make_field, (self.m, self.poly))

    # -- scalar arithmetic -------------------------------------------------

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    sub = add

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivideByZero("inverse of 0 in GF(2^%d)" % self.m)
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivideByZero("0 raised to a negative power")
            return 1 if e == 0 else 0
        return self.exp[(self.log[a] * e) % self.order]

    def contains(self, a: int) -> bool:
        return isinstance(a, int) and 0 <= a < self.q

    def elements(self) -> range:
        return range(self.q)

    # -- vector helpers used by linalg ---------------------------------------

    def scale(self, vec: Sequence[int], s: int) -> List[int]:
        """Return ``s * vec`` elementwise."""
        if s == 0:
            return [0] * len(vec)
        if s == 1:
            return list(vec)
        if self._mul is not None:
            row = self._mul[s]
            return [row[x] for x in vec]
        exp, log = self.exp, self.log
        ls = log[s]
        return [exp[ls + log[x]] if x else 0 for x in vec]

    def axpy(self, y: Sequence[int], s: int, x: Sequence[int]) -> List[int]:
        """Return ``y + s * x`` elementwise."""
        if s == 0:
            return list(y)
        if self._mul is not None:
            row = self._mul[s]
            return [a ^ row[b] for a, b in zip(y, x)]
        exp, log = self.exp, self.log
        ls = log[s]
        return [a ^ exp[ls + log[b]] if b else a for a, b in zip(y, x)]

    def dot(self, x: Sequence[int], y: Sequence[int]) -> int:
        acc = 0
        if self._mul is not None:
            t = self._mul
            for a, b in zip(x, y):
                acc ^= t[a][b]
            return acc
        for a, b in zip(x, y):
            if a and b:
                acc ^= self.exp[self.log[a] + self.log[b]]
        return acc

    def to_dict(self) -> dict:
        return {"m": self.m, "poly": self.poly}


@lru_cache(maxsize=None)
def make_field(m: int = 8, poly: int | None = None) -> FieldSpec:
    """Build (and cache) GF(2^m); ``poly`` defaults to a known primitive one."""
    if poly is None:
        if m not in PRIMITIVE_POLYS:
            raise BadDegree(f"no default primitive polynomial for m={m}")
        poly = PRIMITIVE_POLYS[m]
    return FieldSpec(m, poly)


def field_from_dict(obj: dict) -> FieldSpec:
    try:
        return make_field(int(obj["m"]), int(obj["poly"]))
    except KeyError as exc:
        raise BadPolynomial(f"field record missing key {exc}") from None


GF256 = make_field(8, DEFAULT_POLY)
