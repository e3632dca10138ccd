"""Density of good primes for x -> x**n over the rational function field.

Primes of F_q(T) are monic irreducible polynomials; the residue field
at a prime of degree d is GF(q**d).  A prime supports an r-cycle of
the power map exactly when r divides q**d - 1, which is a condition
on d modulo the order of q mod r.  Dirichlet density is therefore
exactly 1 / ord_r(q), while natural density fails to exist: the
counting ratio oscillates between two explicit subsequence limits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InputRangeError, InvariantViolation
from .numtheory import (
    coprime_part,
    divisors,
    euler_phi,
    max_exponent,
    mobius,
    multiplicative_order,
    pow_minus_one,
    prime_power_base,
)


def _check_q(q: int) -> None:
    if prime_power_base(q) is None:
        raise InputRangeError(f"q must be a prime power >= 2, got {q}")


def irreducible_count(q: int, d: int) -> int:
    """Number of monic irreducible polynomials of degree d over GF(q)."""
    _check_q(q)
    if d < 1:
        raise InputRangeError(f"degree must be >= 1, got {d}")
    total = sum(mobius(e) * q ** (d // e) for e in divisors(d))
    if total % d:
        raise InvariantViolation(f"necklace sum not divisible by {d}")
    return total // d


def pi_K(q: int, t: int) -> int:
    """Number of monic irreducible polynomials of degree at most t."""
    _check_q(q)
    if t < 0:
        raise InputRangeError(f"t must be >= 0, got {t}")
    return sum(irreducible_count(q, d) for d in range(1, t + 1))


def _order_of_q(q: int, r: int) -> int:
    return 1 if r == 1 else multiplicative_order(q % r, r)


def C_r_count(q: int, r: int, t: int) -> int:
    """Primes of degree <= t whose residue field supports an r-cycle.

    The condition is r | q**d - 1, i.e. d a multiple of ord_r(q);
    empty when r shares a factor with q.
    """
    _check_q(q)
    if r < 1:
        raise InputRangeError(f"r must be >= 1, got {r}")
    if t < 0:
        raise InputRangeError(f"t must be >= 0, got {t}")
    if gcd(r, q) > 1:
        return 0
    l = _order_of_q(q, r)
    return sum(irreducible_count(q, d) for d in range(l, t + 1, l))


def dirichlet_density_S(q: int, r: int) -> Fraction:
    """Dirichlet density of the primes supporting an r-cycle: 1 / ord_r(q)."""
    _check_q(q)
    if r < 1:
        raise InputRangeError(f"r must be >= 1, got {r}")
    if gcd(r, q) > 1:
        raise InputRangeError(f"r = {r} must be coprime to q = {q}")
    return Fraction(1, _order_of_q(q, r))


def subsequence_limits(q: int, r: int) -> tuple[Fraction, Fraction]:
    """Limits of C_r(t) / pi_K(t) along t = kl and t = kl - 1, l = ord_r(q).

    The two disagree whenever l > 1, so the natural density does not
    exist; their values bracket the oscillation.
    """
    _check_q(q)
    if r < 1:
        raise InputRangeError(f"r must be >= 1, got {r}")
    if gcd(r, q) > 1:
        raise InputRangeError(f"r = {r} must be coprime to q = {q}")
    l = _order_of_q(q, r)
    high = Fraction(q ** (l - 1) * (q - 1), q**l - 1)
    low = Fraction(q - 1, q**l - 1)
    return high, low


@dataclass(frozen=True)
class SeriesPoint:
    t: int
    pi_K: int
    c_r: int
    ratio: Fraction
    tag: str  # "A" on the upper subsequence, "B" on the lower, "" otherwise


@dataclass(frozen=True)
class FFDensityReport:
    q: int
    r: int
    l_r: int
    t_max: int
    series: tuple[SeriesPoint, ...]
    limit_A: Fraction
    limit_B: Fraction


def oscillation_experiment(q: int, r: int, t_max: int) -> FFDensityReport:
    """Track C_r(t) / pi_K(t) for t <= t_max against both subsequence limits.

    Counting is incremental, one degree at a time.  The last few
    errors along each tagged subsequence are required to be
    non-increasing; a violation would falsify the limit values.
    """
    _check_q(q)
    if r < 1:
        raise InputRangeError(f"r must be >= 1, got {r}")
    if gcd(r, q) > 1:
        raise InputRangeError(f"r = {r} must be coprime to q = {q}")
    l = _order_of_q(q, r)
    if t_max < l:
        raise InputRangeError(f"t_max must be >= ord_r(q) = {l}")
    limit_a, limit_b = subsequence_limits(q, r)
    points = []
    pi_total = 0
    c_total = 0
    for t in range(1, t_max + 1):
        pi_total += irreducible_count(q, t)
        if t % l == 0:
            c_total += irreducible_count(q, t)
        ratio = Fraction(c_total, pi_total)
        if not 0 <= ratio <= 1:
            raise InvariantViolation(f"counting ratio {ratio} outside [0, 1]")
        tag = ""
        if t % l == 0:
            tag += "A"
        if (t + 1) % l == 0:
            tag += "B"
        points.append(SeriesPoint(t, pi_total, c_total, ratio, tag))
    for tag, limit in (("A", limit_a), ("B", limit_b)):
        errs = [abs(pt.ratio - limit) for pt in points if tag in pt.tag]
        tail = errs[-3:]
        if any(a < b for a, b in zip(tail, tail[1:])):
            raise InvariantViolation(
                f"subsequence {tag} errors increase near t_max: {tail}"
            )
    return FFDensityReport(q, r, l, t_max, tuple(points), limit_a, limit_b)


def dirichlet_mean_solutions(q: int, m: int) -> Fraction:
    """Dirichlet mean over primes of K of the number of solutions of x**m = 1.

    The residue field at a degree-d prime has gcd(m, q**d - 1) such
    solutions; averaging with Dirichlet density gives the sum of
    phi(k) / ord_k(q) over divisors k of the q-coprime part of m.
    """
    _check_q(q)
    if m < 1:
        raise InputRangeError(f"m must be >= 1, got {m}")
    m_star = coprime_part(m, q)
    return sum(
        (Fraction(euler_phi(k), _order_of_q(q, k)) for k in divisors(m_star)),
        Fraction(0),
    )


def dirichlet_D_K(q: int, n: int, r: int) -> Fraction:
    """Dirichlet mean of the exact-period-r count over primes of F_q(T)."""
    _check_q(q)
    if n < 2:
        raise InputRangeError(f"n must be >= 2, got {n}")
    if r < 1:
        raise InputRangeError(f"r must be >= 1, got {r}")
    total = Fraction(0)
    for d in divisors(r):
        mu = mobius(d)
        if mu:
            total += mu * (dirichlet_mean_solutions(q, pow_minus_one(n, r // d)) + 1)
    return total


def dirichlet_C_K(q: int, n: int, r: int) -> Fraction:
    """Dirichlet mean of the r-cycle count: D_K / r."""
    return dirichlet_D_K(q, n, r) / r


@dataclass(frozen=True)
class DivergenceSeriesK:
    q: int
    r_values: tuple[int, ...]
    point_sums: tuple[Fraction, ...]
    cycle_sums: tuple[Fraction, ...]


def divergence_probe_K(q: int, n: int, r_max: int) -> DivergenceSeriesK:
    """Partial sums of D_K(r) and D_K(r)/r for r = 1..r_max."""
    _check_q(q)
    if n < 2:
        raise InputRangeError(f"n must be >= 2, got {n}")
    if r_max < 1:
        raise InputRangeError(f"r_max must be >= 1, got {r_max}")
    cap = max_exponent(n)
    if r_max > cap:
        raise InputRangeError(
            f"r_max {r_max} exceeds the 63-bit cap {cap} for n = {n}"
        )
    rs, ps, cs = [], [], []
    pt, ct = Fraction(0), Fraction(0)
    for r in range(1, r_max + 1):
        val = dirichlet_D_K(q, n, r)
        pt += val
        ct += val / r
        rs.append(r)
        ps.append(pt)
        cs.append(ct)
    return DivergenceSeriesK(q, tuple(rs), tuple(ps), tuple(cs))
