"""Prime-averaged counts of periodic points and cycles of x -> x**n.

As p runs through primes, the number of exact-period-r points of the
power map on GF(p**s) has a limiting mean value.  Two independent
routes compute it: a direct route that sums the unit-root counts v_s
over the divisors of n**k - 1, and a density route that first builds
the Dirichlet density of each gcd class by Moebius inversion and then
recombines.  Both must agree, and the empirical prime sweep
accumulates exact integers, so every reported mean is a true
rational; floats never enter.
"""

from __future__ import annotations

from bisect import bisect_right
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InputRangeError, InvariantViolation
from .numtheory import (
    SIEVE_CAP,
    divisors,
    euler_phi,
    max_exponent,
    mobius,
    pow_minus_one,
    primes_up_to,
    v_s,
)


def analytic_I(m: int, s: int) -> int:
    """Mean of gcd(m, p**s - 1) over primes: the sum of v_s over divisors of m.

    For s = 1 this is the divisor count of m.
    """
    return sum(v_s(s, l) for l in divisors(m))


def analytic_N(r: int, s: int, n: int) -> int:
    """Limiting mean of the exact-period-r count of x -> x**n on GF(p**s)."""
    if r < 1 or s < 1:
        raise InputRangeError("r and s must be >= 1")
    if n < 2:
        raise InputRangeError(f"n must be >= 2, got {n}")
    total = 0
    for d in divisors(r):
        mu = mobius(d)
        if mu:
            total += mu * (analytic_I(pow_minus_one(n, r // d), s) + 1)
    return total


def analytic_C_mean(r: int, s: int, n: int) -> Fraction:
    """Limiting mean of the r-cycle count: N / r as a reduced fraction."""
    return Fraction(analytic_N(r, s, n), r)


def mobius_invert_multiples(g, m: int, r: int):
    """Recover h(r) from g(r) = sum of h(kr) over multiples kr dividing m."""
    if r < 1 or m % r:
        raise InputRangeError(f"{r} does not divide {m}")
    return sum(mobius(k) * g(k * r) for k in divisors(m // r))


def density_mean_gcd(m: int, s: int) -> Fraction:
    """Dirichlet-density route to the mean of gcd(m, p**s - 1).

    Primes with l | p**s - 1 have density v_s(l) / phi(l); inverting
    over multiples isolates the density of the class where the gcd is
    exactly l, and the mean is the sum of l times that density.
    """
    total = Fraction(0)
    for l in divisors(m):
        dens = mobius_invert_multiples(
            lambda j: Fraction(v_s(s, j), euler_phi(j)), m, l
        )
        total += l * dens
    return total


def dirichlet_D(r: int, s: int, n: int) -> int:
    """Dirichlet mean of the exact-period-r count, via per-class densities.

    A distinct evaluation route from analytic_N; the two must agree,
    and the result must be an integer.
    """
    if r < 1 or s < 1:
        raise InputRangeError("r and s must be >= 1")
    if n < 2:
        raise InputRangeError(f"n must be >= 2, got {n}")
    total = Fraction(0)
    for d in divisors(r):
        mu = mobius(d)
        if mu:
            total += mu * (density_mean_gcd(pow_minus_one(n, r // d), s) + 1)
    if total.denominator != 1:
        raise InvariantViolation(f"Dirichlet mean is not integral: {total}")
    return int(total)


@dataclass(frozen=True)
class SweepCheckpoint:
    t: int
    prime_count: int
    total: int  # exact integer sum of the per-prime counts
    mean: Fraction


@dataclass(frozen=True)
class MeanSweepReport:
    r: int
    s: int
    n: int
    t_max: int
    analytic: Fraction
    checkpoints: tuple[SweepCheckpoint, ...]
    final_abs_error: Fraction


def default_checkpoints(t_max: int) -> list[int]:
    """Powers of ten up to t_max, then t_max itself."""
    out = []
    t = 10
    while t < t_max:
        out.append(t)
        t *= 10
    out.append(t_max)
    return out


def _block_total(args) -> int:
    s, terms, primes = args
    total = 0
    for p in primes:
        acc = 0
        for mu, M in terms:
            g = gcd((pow(p, s, M) + M - 1) % M, M)
            acc += mu * (g + 1)
        total += acc
    return total


def empirical_mean(
    r: int,
    s: int,
    n: int,
    t_max: int,
    checkpoints: list[int] | None = None,
    workers: int = 1,
) -> MeanSweepReport:
    """Exact prime sweep of the period-r count over GF(p**s) for p <= t_max.

    gcd(n**k - 1, p**s - 1) is evaluated with p**s reduced modulo
    n**k - 1, so the prime power is never formed.  The prime range is
    split into blocks whose integer subtotals are folded in index
    order, which makes the result identical for any worker count.
    """
    if r < 1 or s < 1:
        raise InputRangeError("r and s must be >= 1")
    if n < 2:
        raise InputRangeError(f"n must be >= 2, got {n}")
    if not 2 <= t_max <= SIEVE_CAP:
        raise InputRangeError(f"t_max must be in [2, {SIEVE_CAP}], got {t_max}")
    if workers < 1:
        raise InputRangeError("workers must be >= 1")
    terms = tuple(
        (mobius(d), pow_minus_one(n, r // d)) for d in divisors(r) if mobius(d)
    )
    analytic = Fraction(analytic_N(r, s, n))
    cps = sorted(set(checkpoints)) if checkpoints else default_checkpoints(t_max)
    if any(not 2 <= c <= t_max for c in cps):
        raise InputRangeError("checkpoints must lie in [2, t_max]")
    if cps[-1] != t_max:
        cps.append(t_max)

    primes = primes_up_to(t_max)
    bounds = [bisect_right(primes, c) for c in cps]
    cut_set = set(bounds)
    cut_set.update(range(20000, len(primes), 20000))
    cut_set.add(len(primes))
    cut_set.discard(0)
    cuts = sorted(cut_set)
    blocks = list(zip([0] + cuts[:-1], cuts))
    args = [(s, terms, tuple(primes[lo:hi])) for lo, hi in blocks]
    if workers > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            subtotals = list(pool.map(_block_total, args))
    else:
        subtotals = [_block_total(a) for a in args]

    cum_at = {}
    cum = 0
    for (_, hi), sub in zip(blocks, subtotals):
        cum += sub
        cum_at[hi] = cum
    out = []
    for cp, b in zip(cps, bounds):
        total = cum_at[b]
        out.append(SweepCheckpoint(cp, b, total, Fraction(total, b)))
    final = out[-1]
    return MeanSweepReport(
        r, s, n, t_max, analytic, tuple(out), abs(final.mean - analytic)
    )


@dataclass(frozen=True)
class DivergenceSeries:
    r_values: tuple[int, ...]
    point_sums: tuple[int, ...]  # running sums of the period-count means
    cycle_sums: tuple[Fraction, ...]  # running sums of the cycle-count means


def divergence_probe(s: int, n: int, r_max: int) -> DivergenceSeries:
    """Partial sums of N(r) and N(r)/r for r = 1..r_max.

    Both series grow without bound (every prime r contributes at
    least 1); r_max is capped so n**r - 1 stays within 63 bits.
    """
    if s < 1 or r_max < 1:
        raise InputRangeError("s and r_max must be >= 1")
    cap = max_exponent(n)
    if r_max > cap:
        raise InputRangeError(
            f"r_max {r_max} exceeds the 63-bit cap {cap} for n = {n}"
        )
    rs, ps, cs = [], [], []
    pt, ct = 0, Fraction(0)
    for r in range(1, r_max + 1):
        val = analytic_N(r, s, n)
        pt += val
        ct += Fraction(val, r)
        rs.append(r)
        ps.append(pt)
        cs.append(ct)
    return DivergenceSeries(tuple(rs), tuple(ps), tuple(cs))
