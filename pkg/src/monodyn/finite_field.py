"""Explicit arithmetic in GF(p**s).

Field elements are plain tuples of s residues in [0, p), constant
term first: (c0, c1, ..., c_{s-1}) stands for c0 + c1*t + ... for a
root t of the field's defining polynomial.  A prime field uses
one-entry tuples.  Tuples are always kept reduced, so equality and
hashing are structural, and every operation takes the FieldSpec
explicitly; there is no global registry of fields.

The defining polynomial is the monic irreducible of degree s whose
coefficient vector encodes the smallest base-p integer (constant term
as the least significant digit), which pins the construction down
deterministically: GF(8) gets t**3 + t + 1 and GF(9) gets t**2 + 1.

Beyond the basic operations this module knows how to compute element
orders, one by one or for the whole unit group at once; the bulk form
is what powers the structural checks of the graph engine.  Conway
polynomials, discrete logarithms and field embeddings are out of
scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InputRangeError, ResourceCapError
from .numtheory import divisors, factorize, is_prime

#: Largest field that may be materialized element by element.
FIELD_CAP = 2**22

Element = tuple[int, ...]


@dataclass(frozen=True)
class FieldSpec:
    p: int
    s: int
    q: int
    modulus: tuple[int, ...] | None  # monic, length s + 1, present iff s > 1

    def zero(self) -> Element:
        return (0,) * self.s

    def one(self) -> Element:
        return (1,) + (0,) * (self.s - 1)


@lru_cache(maxsize=None)
def make_field(p: int, s: int = 1) -> FieldSpec:
    """Construct GF(p**s) with the deterministic defining polynomial."""
    if s < 1:
        raise InputRangeError(f"extension degree must be >= 1, got {s}")
    if not is_prime(p):
        raise InputRangeError(f"field characteristic must be prime, got {p}")
    q = p**s
    if q > FIELD_CAP:
        raise ResourceCapError(f"field size {p}**{s} exceeds the cap {FIELD_CAP}")
    if s == 1:
        return FieldSpec(p, 1, q, None)
    return FieldSpec(p, s, q, _smallest_irreducible(p, s) + (1,))


# ---------------------------------------------------------------------------
# polynomial plumbing (little-endian coefficient lists over GF(p))

def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    # remainder of a by b; b trimmed and nonzero
    a = [c % p for c in a]
    while a and a[-1] == 0:
        a.pop()
    inv = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        off = len(a) - len(b)
        for i, bi in enumerate(b):
            a[off + i] = (a[off + i] - c * bi) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def _poly_gcd_is_unit(a: list[int], b: list[int], p: int) -> bool:
    while b:
        a, b = b, _poly_mod(a, b, p)
    return len(a) == 1


def _poly_mulmod(a: list[int], b: list[int], g: list[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _poly_mod(prod, g, p)


def _poly_powmod(a: list[int], e: int, g: list[int], p: int) -> list[int]:
    out = [1]
    while e:
        if e & 1:
            out = _poly_mulmod(out, a, g, p)
        e >>= 1
        if e:
            a = _poly_mulmod(a, a, g, p)
    return out


def _is_irreducible(low: tuple[int, ...], p: int, s: int) -> bool:
    # g = x**s + sum(low[i] x**i) is irreducible iff x**(p**s) = x mod g
    # and gcd(x**(p**(s/r)) - x, g) = 1 for every prime r | s
    g = list(low) + [1]
    x = [0, 1]
    proper = {s // r for r, _ in factorize(s).factors}
    t = x
    for k in range(1, s + 1):
        t = _poly_powmod(t, p, g, p)
        if k in proper:
            diff = list(t) + [0] * (2 - len(t))
            diff[1] = (diff[1] - 1) % p  # t minus x
            while diff and diff[-1] == 0:
                diff.pop()
            if not diff or not _poly_gcd_is_unit(g, diff, p):
                return False
    return t == [0, 1]


def _smallest_irreducible(p: int, s: int) -> tuple[int, ...]:
    for v in range(p**s):
        if v % p == 0:
            continue  # constant term 0 means x divides g
        low = tuple((v // p**i) % p for i in range(s))
        if _is_irreducible(low, p, s):
            return low
    raise RuntimeError("no irreducible polynomial found")  # pragma: no cover


# ---------------------------------------------------------------------------
# element operations

def add(spec: FieldSpec, x: Element, y: Element) -> Element:
    p = spec.p
    return tuple((a + b) % p for a, b in zip(x, y))


def _mul_coeffs(x: Element, y: Element, p: int, mod_low: tuple[int, ...]) -> Element:
    s = len(mod_low)
    prod = [0] * (2 * s - 1)
    for i, xi in enumerate(x):
        if xi:
            for j, yj in enumerate(y):
                prod[i + j] += xi * yj
    # fold degrees >= s back down via x**s = -(low part of the modulus)
    for k in range(2 * s - 2, s - 1, -1):
        c = prod[k] % p
        if c:
            base = k - s
            for t, mt in enumerate(mod_low):
                if mt:
                    prod[base + t] -= c * mt
    return tuple(c % p for c in prod[:s])


def mul(spec: FieldSpec, x: Element, y: Element) -> Element:
    if spec.s == 1:
        return (x[0] * y[0] % spec.p,)
    return _mul_coeffs(x, y, spec.p, spec.modulus[:-1])


def power(spec: FieldSpec, x: Element, k: int) -> Element:
    """x**k by square and multiply; k must be nonnegative."""
    if k < 0:
        raise InputRangeError("negative exponents are not supported")
    if spec.s == 1:
        return (pow(x[0], k, spec.p),)
    out = spec.one()
    base = x
    while k:
        if k & 1:
            out = mul(spec, out, base)
        k >>= 1
        if k:
            base = mul(spec, base, base)
    return out


def element_index(spec: FieldSpec, x: Element) -> int:
    """Base-p encoding of the coefficient vector; 0 and 1 map to 0 and 1."""
    idx = 0
    for c in reversed(x):
        idx = idx * spec.p + c
    return idx


def index_element(spec: FieldSpec, i: int) -> Element:
    if not 0 <= i < spec.q:
        raise InputRangeError(f"element index must be in [0, {spec.q}), got {i}")
    p = spec.p
    coeffs = []
    for _ in range(spec.s):
        coeffs.append(i % p)
        i //= p
    return tuple(coeffs)


def element_order(spec: FieldSpec, x: Element) -> int:
    """Multiplicative order of a nonzero element; always divides q - 1."""
    if x == spec.zero():
        raise InputRangeError("the zero element has no multiplicative order")
    one = spec.one()
    o = spec.q - 1
    for pf, _ in factorize(spec.q - 1).factors:
        while o % pf == 0 and power(spec, x, o // pf) == one:
            o //= pf
    return o


def _vec_powmod(base: np.ndarray, k: int, p: int) -> np.ndarray:
    # elementwise base**k mod p; products stay below 2**44 for p <= 2**22
    out = np.ones_like(base)
    b = base % p
    while k:
        if k & 1:
            out = out * b % p
        k >>= 1
        if k:
            b = b * b % p
    return out


@lru_cache(maxsize=64)
def element_orders(spec: FieldSpec) -> tuple[int, ...]:
    """Orders of all elements, indexed by element_index; slot 0 holds 0."""
    if spec.s == 1:
        p = spec.p
        xs = np.arange(1, p, dtype=np.int64)
        ords = np.zeros(p - 1, dtype=np.int64)
        for d in divisors(p - 1):
            left = ords == 0
            if not left.any():
                break
            hit = left & (_vec_powmod(xs, d, p) == 1)
            ords[hit] = d
        return (0,) + tuple(ords.tolist())
    return (0,) + tuple(
        element_order(spec, index_element(spec, i)) for i in range(1, spec.q)
    )
