"""Finite fields F_q for prime powers q = p^e, table-driven.

Elements are integers in [0, q). For prime q this is plain arithmetic mod p.
For extensions, the integer v encodes the polynomial sum(d_i * x^i) where
(d_0, d_1, ...) are the base-p digits of v, least significant digit first, and
arithmetic is done modulo a fixed irreducible monic polynomial of degree e.

The modulus is deterministic: the monic irreducible polynomial of degree e
whose integer encoding (same digit convention, leading coefficient included)
is smallest. Irreducibility is checked by trial division by every monic
polynomial of lower degree. Examples of what this selects:

    F_4   x^2 + x + 1
    F_8   x^3 + x + 1
    F_9   x^2 + 1
    F_16  x^4 + x + 1

All four operation tables (add, mul, neg, inv) are materialised as bytes at
construction, so every operation is a table lookup. That is the point of the
q <= 16 default cap; larger orders are refused rather than silently slow.
"""

from __future__ import annotations

import functools

from .errors import FieldTooLargeError, NotPrimePowerError

DEFAULT_MAX_ORDER = 16


def prime_power(q: int):
    """Return (p, e) with q = p^e, or None when q is not a prime power."""
    if q < 2:
        return None
    p = None
    n = q
    for cand in range(2, q + 1):
        if cand * cand > n:
            break
        if n % cand == 0:
            p = cand
            break
    if p is None:
        p = n
    e = 0
    while n > 1:
        if n % p:
            return None
        n //= p
        e += 1
    return (p, e)


def is_prime_power(q: int) -> bool:
    return prime_power(q) is not None


def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a, mod, p):
    a = list(a)
    inv_lead = pow(mod[-1], -1, p)
    while len(a) >= len(mod):
        f = (a[-1] * inv_lead) % p
        shift = len(a) - len(mod)
        if f:
            for i, c in enumerate(mod):
                a[shift + i] = (a[shift + i] - f * c) % p
        _poly_trim(a)
        if len(a) == 0:
            break
        if len(a) >= len(mod) and a[-1] == 0:
            _poly_trim(a)
    return a


def _poly_divisible(a, b, p):
    return len(_poly_mod(a, b, p)) == 0


def _encode(digits, p):
    v = 0
    for d in reversed(digits):
        v = v * p + d
    return v


def _decode(v, p, e):
    digits = []
    for _ in range(e):
        digits.append(v % p)
        v //= p
    return digits


def _monic_polys(degree, p):
    """All monic polynomials of the given degree, ascending integer encoding."""
    for low in range(p**degree):
        yield _decode(low, p, degree) + [1]


def _lowest_irreducible(p, e):
    for cand in _monic_polys(e, p):
        if cand[0] == 0:
            continue  # divisible by x
        reducible = False
        for d in range(1, e // 2 + 1):
            for div in _monic_polys(d, p):
                if _poly_divisible(cand, div, p):
                    reducible = True
                    break
            if reducible:
                break
        if not reducible:
            return cand
    raise AssertionError(f"no irreducible polynomial of degree {e} over F_{p}")


class Field:
    """Immutable F_q with flat lookup tables.

    Attributes:
        q, p, e: order, characteristic, extension degree.
        modulus: coefficient tuple of the modulus, constant term first,
            leading 1 included; empty tuple when e == 1.
        add_table, mul_table: bytes of length q*q, entry at a*q + b.
        neg_table, inv_table: bytes of length q (inv_table[0] is unused).
    """

    __slots__ = ("q", "p", "e", "modulus", "add_table", "mul_table", "neg_table", "inv_table")

    def __init__(self, q: int, p: int, e: int, modulus: tuple[int, ...]):
        self.q = q
        self.p = p
        self.e = e
        self.modulus = modulus
        add = bytearray(q * q)
        mul = bytearray(q * q)
        neg = bytearray(q)
        inv = bytearray(q)
        if e == 1:
            for a in range(q):
                neg[a] = (-a) % p
                for b in range(q):
                    add[a * q + b] = (a + b) % p
                    mul[a * q + b] = (a * b) % p
        else:
            mod = list(modulus)
            polys = [_poly_trim(_decode(v, p, e)) for v in range(q)]
            for a in range(q):
                neg[a] = _encode([(-d) % p for d in _decode(a, p, e)], p)
                pa = polys[a]
                for b in range(q):
                    s = [(x + y) % p for x, y in zip(_decode(a, p, e), _decode(b, p, e))]
                    add[a * q + b] = _encode(s, p)
                    prod = _poly_mod(_poly_mul(pa, polys[b], p), mod, p)
                    mul[a * q + b] = _encode(prod + [0] * (e - len(prod)), p)
        for a in range(1, q):
            for b in range(1, q):
                if mul[a * q + b] == 1:
                    inv[a] = b
                    break
        self.add_table = bytes(add)
        self.mul_table = bytes(mul)
        self.neg_table = bytes(neg)
        self.inv_table = bytes(inv)

    def add(self, a: int, b: int) -> int:
        return self.add_table[a * self.q + b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a * self.q + b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a * self.q + self.neg_table[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.inv_table[a]

    def elements(self) -> range:
        return range(self.q)

    def __repr__(self):
        return f"Field(q={self.q})"

    def __eq__(self, other):
        return isinstance(other, Field) and other.q == self.q

    def __hash__(self):
        return hash(("Field", self.q))


@functools.lru_cache(maxsize=None)
def make_field(q: int, max_order: int = DEFAULT_MAX_ORDER) -> Field:
    """Build F_q, refusing orders above max_order.

    Raises NotPrimePowerError for q that is not a prime power and
    FieldTooLargeError for q > max_order.
    """
    pe = prime_power(q)
    if pe is None:
        raise NotPrimePowerError(f"{q} is not a prime power")
    if q > max_order:
        raise FieldTooLargeError(f"field order {q} exceeds the maximum {max_order}")
    p, e = pe
    modulus = () if e == 1 else tuple(_lowest_irreducible(p, e))
    return Field(q, p, e, modulus)
