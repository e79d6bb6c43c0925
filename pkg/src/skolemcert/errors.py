"""Exception types shared across the library."""

from __future__ import annotations

from fractions import Fraction


class SkolemError(Exception):
    """Base class for every library-specific error."""


class ZeroArgument(SkolemError):
    """An operation received 0 where a nonzero value is required."""


class NotPrime(SkolemError):
    """A value that must be prime failed the primality test."""


class NotInvertible(SkolemError):
    """No modular inverse exists (gcd with the modulus is not 1)."""


class BadResidueClass(SkolemError):
    """Residue class shares a factor with the modulus, so it holds no primes."""


class ZeroA2(SkolemError):
    """The trailing recurrence coefficient a2 is zero (order collapses)."""


class RepeatedRoot(SkolemError):
    """The characteristic polynomial has a double root.

    Sequences with a repeated root can be zero-free yet admit no modulus
    certificate (u_n = (2n+1)*2**n is the standard counterexample), so they
    are rejected outright.
    """


class IrrationalRoots(SkolemError):
    """The discriminant is not the square of a rational number."""


class DegenerateToOrder1(SkolemError):
    """The closed form collapses to a single geometric term.

    Carries the reduced order-1 data so callers can reroute: the sequence is
    u0 * a1**n (possibly identically zero when u0 == 0).
    """

    def __init__(self, a1: Fraction, u0: Fraction, b: int, parity: str | None = None):
        self.a1 = a1
        self.u0 = u0
        self.b = b
        self.parity = parity
        where = f" ({parity} part)" if parity else ""
        super().__init__(
            f"sequence{where} degenerates to the order-1 recurrence "
            f"u_(k+1) = {a1} * u_k with u_0 = {u0}"
        )


class DenominatorOutsideBase(SkolemError):
    """An input denominator has a prime factor not dividing the base b."""


class DegenerateRoots(SkolemError):
    """Cubic root data violates c1, c2 nonzero with c1 not in {c2, -c2}."""


class BadModulus(SkolemError):
    """Modulus breaks the coprimality needed for an invertible state map."""


class SymbolUndefined(SkolemError):
    """Power residue symbol argument is not coprime to the prime."""


class SingularModN(SkolemError):
    """Pivot minor vanishes mod n; the target system has no unique solution."""


class SearchExhausted(SkolemError):
    """No qualifying prime was found at or below the configured bound.

    This cannot distinguish "no certificate exists" from "bound too small";
    raising the bound is always a legitimate retry.
    """

    def __init__(self, bound: int):
        self.bound = bound
        super().__init__(f"no qualifying prime found up to bound {bound}")


class NotCovered(SkolemError):
    """A multiplicative relation B**k * C**l = +-1 (k != 0) holds.

    Such pairs sit outside the certified cases; only the fallback scan can
    still look for a modulus. The witness relation is attached.
    """

    def __init__(self, k: int, l: int, sign: int, parity: str | None = None):
        self.k = k
        self.l = l
        self.sign = sign
        self.parity = parity
        where = f" ({parity} part)" if parity else ""
        super().__init__(
            f"not covered{where}: B**{k} * C**{l} = {sign:+d} with k != 0"
        )


class MalformedCertificate(SkolemError):
    """Certificate file cannot be parsed into the documented schema."""
