"""Exact integer and rational kernels.

Python integers are arbitrary precision and `fractions.Fraction` keeps
rationals normalized (positive denominator, lowest terms), which is the
canonical form the rest of the library relies on. Everything here is exact;
no floating point is used anywhere.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import count
from math import gcd
from typing import Iterator

from .errors import BadResidueClass, NotInvertible, NotPrime, ZeroArgument

#: Exact rational type used throughout the library.
Rat = Fraction

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59)

# These twelve witnesses decide primality for every n < 3.317e24, which covers
# the 64-bit range with a wide margin.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_EXTRA_ROUNDS = 64  # above the limit; error probability <= 4**-64
_TRIAL_DIVISION_LIMIT = 1_000_000


def _mr_witnesses_compositeness(n: int, a: int) -> bool:
    """True if base a proves n composite in a Miller-Rabin round."""
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Exact primality for anything below 2**64 and far beyond.

    Uses a fixed Miller-Rabin witness set that is deterministic below
    3.3e24; larger inputs additionally get 64 rounds with bases drawn from a
    PRNG seeded by n itself, so results stay reproducible (error probability
    at most 4**-64 per composite).
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    for a in _MR_WITNESSES:
        if _mr_witnesses_compositeness(n, a):
            return False
    if n < _MR_DETERMINISTIC_LIMIT:
        return True
    rng = random.Random(n)
    for _ in range(_MR_EXTRA_ROUNDS):
        a = rng.randrange(2, n - 1)
        if _mr_witnesses_compositeness(n, a):
            return False
    return True


def _brent_rho(n: int) -> int:
    # Brent's variant of Pollard's rho. The parameter sweep is fixed so runs
    # are reproducible; n must be odd, composite, and free of tiny factors.
    for c in count(1):
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += 128
            r <<= 1
        if g == n:
            g = 1
            y = ys
            while g == 1:
                y = (y * y + c) % n
                g = gcd(abs(x - y), n)
        if g != n:
            return g
    raise AssertionError("unreachable")


def factorize(n: int) -> dict[int, int]:
    """Exact prime factorization of |n| as a {prime: exponent} map.

    factorize(1) and factorize(-1) return {}. Trial division handles small
    factors; anything left is split with Brent's cycle method, confirming
    primality of every piece. Deterministic for every input.
    """
    if n == 0:
        raise ZeroArgument("cannot factor 0")
    n = abs(n)
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n and f <= _TRIAL_DIVISION_LIMIT:
        for p in (f, f + 2):
            while n % p == 0:
                factors[p] = factors.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        stack = [n]
        while stack:
            m = stack.pop()
            if is_prime(m):
                factors[m] = factors.get(m, 0) + 1
                continue
            d = _brent_rho(m)
            stack.append(d)
            stack.append(m // d)
    return dict(sorted(factors.items()))


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation(x: Fraction | int, p: int) -> int:
    """p-adic valuation of a nonzero rational: the exponent of p in x.

    valuation(12, 2) == 2 and valuation(Fraction(8, 9), 3) == -2. Additive:
    valuation(x*y, p) == valuation(x, p) + valuation(y, p).
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    x = Fraction(x)
    if x == 0:
        raise ZeroArgument("valuation of 0 is undefined")
    return _int_valuation(abs(x.numerator), p) - _int_valuation(x.denominator, p)


def mod_pow(a: int, e: int, m: int) -> int:
    """a**e mod m in {0..m-1} for e >= 0 and m >= 2."""
    if m < 2:
        raise ValueError("modulus must be >= 2")
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return pow(a, e, m)


def mod_inverse(a: int, m: int) -> int:
    """x with a*x == 1 (mod m); raises NotInvertible when gcd(a, m) != 1."""
    try:
        return pow(a, -1, m)
    except ValueError:
        raise NotInvertible(f"{a} has no inverse mod {m}") from None


def residue_of_rat(x: Fraction | int, m: int) -> int:
    """Reduce a rational mod m via a modular inverse of its denominator."""
    x = Fraction(x)
    return x.numerator * mod_inverse(x.denominator, m) % m


def smallest_primitive_root(r: int) -> int:
    """Least g >= 2 of multiplicative order r-1 modulo the odd prime r."""
    if r == 2 or not is_prime(r):
        raise NotPrime(f"{r} is not an odd prime")
    phi = r - 1
    prime_factors = tuple(factorize(phi))
    for g in count(2):
        if all(pow(g, phi // q, r) != 1 for q in prime_factors):
            return g
    raise AssertionError("unreachable")


def primes_in_class(start: int, n: int, residue: int) -> Iterator[int]:
    """Strictly increasing primes p > start with p == residue (mod n).

    n == 1 means no congruence constraint (all primes, residue ignored).
    """
    if n < 1:
        raise ValueError("modulus must be >= 1")
    if n == 1:
        k = max(start, 1)
        while True:
            k += 1
            if is_prime(k):
                yield k
    else:
        residue %= n
        if gcd(residue, n) != 1:
            raise BadResidueClass(
                f"class {residue} mod {n} contains at most one prime"
            )
        k = start + (residue - start) % n
        if k <= start:
            k += n
        while True:
            if is_prime(k):
                yield k
            k += n
