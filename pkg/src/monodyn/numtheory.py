"""Exact integer number theory shared by the other modules.

Everything here is a pure function of its arguments, so concurrent
callers are safe.  Factorizations are cached; sweeps hit the same
moduli over and over and the cache turns those calls into lookups.
Inputs are held to a 63-bit cap, which keeps the contracts portable;
Python integers never overflow, so the cap is a scale limit, not a
safety net.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InputRangeError, ResourceCapError

#: Largest accepted input for factorization-backed functions.
MAX_INPUT = 2**63 - 1

#: Cap for the prime sieve (desk scale).
SIEVE_CAP = 10**8

_TRIAL_BOUND = 10**6

# Deterministic Miller-Rabin witness set, valid for every modulus < 2**64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class Factorization:
    """value == prod(p**e for p, e in factors), primes strictly increasing."""

    value: int
    factors: tuple[tuple[int, int], ...]


def _check_positive(m: int, name: str = "m") -> None:
    if not 1 <= m <= MAX_INPUT:
        raise InputRangeError(f"{name} must be in [1, 2**63 - 1], got {m}")


def is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin primality test, exact for m < 2**64."""
    if m < 2:
        return False
    for p in _MR_WITNESSES:
        if m % p == 0:
            return m == p
    d = m - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """A nontrivial factor of an odd composite n (Brent's rho variant)."""
    for c in range(1, 100):
        y, m = 2, 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise RuntimeError(f"rho failed to split {n}")  # pragma: no cover


@lru_cache(maxsize=65536)
def factorize(m: int) -> Factorization:
    """Prime factorization: trial division, then rho on hard cofactors."""
    _check_positive(m)
    found: dict[int, int] = {}
    v = m
    for d in (2, 3):
        while v % d == 0:
            found[d] = found.get(d, 0) + 1
            v //= d
    d, step = 5, 2
    while d <= _TRIAL_BOUND and d * d <= v:
        while v % d == 0:
            found[d] = found.get(d, 0) + 1
            v //= d
        d += step
        step = 6 - step
    if v > 1:
        if d * d > v or is_prime(v):
            found[v] = found.get(v, 0) + 1
        else:
            pending = [v]
            while pending:
                w = pending.pop()
                if is_prime(w):
                    found[w] = found.get(w, 0) + 1
                    continue
                f = _brent_rho(w)
                pending.append(f)
                pending.append(w // f)
    return Factorization(m, tuple(sorted(found.items())))


def divisors(m: int) -> list[int]:
    """All positive divisors of m in increasing order."""
    divs = [1]
    for p, e in factorize(m).factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    divs.sort()
    return divs


def mobius(m: int) -> int:
    """0 on non-squarefree m, else (-1)**(number of prime factors)."""
    f = factorize(m).factors
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def euler_phi(m: int) -> int:
    """Count of residues mod m coprime to m."""
    out = 1
    for p, e in factorize(m).factors:
        out *= (p - 1) * p ** (e - 1)
    return out


def tau(m: int) -> int:
    """Number of divisors of m."""
    out = 1
    for _, e in factorize(m).factors:
        out *= e + 1
    return out


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """base**exp mod modulus with validated arguments."""
    if modulus < 1:
        raise InputRangeError(f"modulus must be >= 1, got {modulus}")
    if base < 0 or exp < 0:
        raise InputRangeError("base and exponent must be nonnegative")
    return pow(base, exp, modulus)


@lru_cache(maxsize=65536)
def multiplicative_order(a: int, m: int) -> int:
    """Least l >= 1 with a**l = 1 (mod m); requires gcd(a, m) = 1.

    Starts from phi(m) and strips prime factors that are not needed.
    """
    _check_positive(a, "a")
    _check_positive(m, "modulus")
    if m == 1:
        return 1
    if math.gcd(a, m) != 1:
        raise InputRangeError(f"order undefined: gcd({a}, {m}) != 1")
    o = euler_phi(m)
    for p, _ in factorize(o).factors:
        while o % p == 0 and pow(a, o // p, m) == 1:
            o //= p
    return o


@lru_cache(maxsize=65536)
def v_s(s: int, l: int) -> int:
    """Number of solutions of x**s = 1 in Z/lZ.

    Multiplicative over the prime powers of l: the unit group mod an
    odd p**e is cyclic of size phi(p**e), giving gcd(s, phi(p**e))
    solutions there, and mod 2**e it splits as Z/2 x Z/2**(e-2) once
    e >= 3.
    """
    _check_positive(s, "s")
    _check_positive(l, "l")
    count = 1
    for p, e in factorize(l).factors:
        if p == 2:
            if e == 1:
                continue
            part = math.gcd(s, 2)
            if e >= 3:
                part *= math.gcd(s, 2 ** (e - 2))
        else:
            part = math.gcd(s, (p - 1) * p ** (e - 1))
        count *= part
    return count


def coprime_part(m: int, n: int) -> int:
    """Largest divisor of m coprime to n."""
    _check_positive(m)
    _check_positive(n, "n")
    g = math.gcd(m, n)
    while g > 1:
        m //= g
        g = math.gcd(m, g)
    return m


def max_exponent(n: int) -> int:
    """Largest r with n**r - 1 <= 2**63 - 1 (n >= 2)."""
    if n < 2:
        raise InputRangeError(f"n must be >= 2, got {n}")
    r = 1
    while n ** (r + 1) - 1 <= MAX_INPUT:
        r += 1
    return r


def pow_minus_one(n: int, r: int) -> int:
    """n**r - 1, rejected once it leaves the 63-bit input range."""
    if n < 2 or r < 1:
        raise InputRangeError("need n >= 2 and r >= 1")
    val = n**r - 1
    if val > MAX_INPUT:
        raise InputRangeError(
            f"n**r - 1 exceeds 2**63 - 1; for n = {n} the largest admissible r is {max_exponent(n)}"
        )
    return val


def primes_up_to(t: int) -> list[int]:
    """All primes <= t, by a sieve of Eratosthenes."""
    if t > SIEVE_CAP:
        raise ResourceCapError(f"sieve bound {t} exceeds the cap {SIEVE_CAP}")
    if t < 0:
        raise InputRangeError(f"sieve bound must be nonnegative, got {t}")
    if t < 2:
        return []
    sieve = np.ones(t + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, math.isqrt(t) + 1):
        if sieve[i]:
            sieve[i * i :: i] = False
    return np.flatnonzero(sieve).tolist()


def prime_power_base(q: int) -> tuple[int, int] | None:
    """(p, s) with q = p**s, or None when q >= 2 is not a prime power."""
    if q < 2:
        return None
    f = factorize(q).factors
    if len(f) != 1:
        return None
    return f[0]


def prime_powers_up_to(limit: int) -> list[tuple[int, int, int]]:
    """All (q, p, s) with q = p**s <= limit, ascending in q."""
    out = []
    for p in primes_up_to(limit):
        q, s = p, 1
        while q <= limit:
            out.append((q, p, s))
            q *= p
            s += 1
    out.sort()
    return out
