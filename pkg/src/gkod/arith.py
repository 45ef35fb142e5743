"""Divisibility-lattice primitives: bounded trial division, smooth-number
tests, antichains and divisor closures.

Values are plain Python ints, so group orders of thousands of bits need no
special representation.  Every collection-returning function yields its
result sorted ascending; downstream output stays deterministic because of
this convention.
"""

from dataclasses import dataclass
from functools import lru_cache

DEFAULT_PRIME_BOUND = 37
MAX_PRIME_BOUND = 10_000

# deterministic Miller-Rabin witness set, valid for n < 3.3 * 10^24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class NonSmoothError(ValueError):
    """Raised when an operation requires a B-smooth input and gets one with
    a rough residual; the unfactored residual is carried for diagnostics."""

    def __init__(self, n: int, bound: int, residual: int):
        super().__init__(f"{n} is not {bound}-smooth (residual {residual})")
        self.n = n
        self.bound = bound
        self.residual = residual


@lru_cache(maxsize=64)
def primes_upto(bound: int) -> tuple:
    """All primes <= bound, ascending (simple sieve, cached)."""
    if bound < 2:
        return ()
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, int(bound**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(sieve[p * p :: p])
    return tuple(i for i, v in enumerate(sieve) if v)


def is_prime(n: int) -> bool:
    """Deterministic primality test for n < 3.3e24 (Miller-Rabin with a
    fixed witness set; trial division would do but this stays fast)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime_after(p: int) -> int:
    q = p + 1
    while not is_prime(q):
        q += 1
    return q


def prime_power(q: int):
    """Return (p, k) with q = p**k, or None if q is not a prime power."""
    if q < 2:
        return None
    for p in primes_upto(min(q, 100_000)):
        if p * p > q:
            break
        if q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            return (p, k) if m == 1 else None
    return (q, 1) if is_prime(q) else None


@dataclass(frozen=True)
class Factorization:
    """Multiset of (prime, exponent) pairs plus an unfactored residual.

    Invariants: primes strictly increasing, exponents >= 1, and residual is
    either 1 or free of prime factors below the bound that produced it.
    ``value()`` always reconstructs the original integer exactly.
    """

    factors: tuple
    residual: int = 1

    def __post_init__(self):
        ps = [p for p, _ in self.factors]
        if ps != sorted(set(ps)):
            raise ValueError("primes must be strictly increasing")
        if any(e < 1 for _, e in self.factors):
            raise ValueError("exponents must be >= 1")
        if self.residual < 1:
            raise ValueError("residual must be >= 1")

    @classmethod
    def from_pairs(cls, pairs) -> "Factorization":
        pairs = tuple(sorted((int(p), int(e)) for p, e in pairs if e))
        return cls(pairs)

    @property
    def is_complete(self) -> bool:
        return self.residual == 1

    def value(self) -> int:
        n = self.residual
        for p, e in self.factors:
            n *= p**e
        return n

    def primes(self) -> tuple:
        """Support of the factored part, ascending."""
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def divides(self, other: "Factorization") -> bool:
        """Exact exponent-wise divisibility; both sides must be complete."""
        if not (self.is_complete and other.is_complete):
            raise ValueError("divides() needs complete factorizations")
        return all(e <= other.exponent(p) for p, e in self.factors)

    def restrict(self, primes) -> "Factorization":
        """Sub-factorization supported on the given primes (residual 1)."""
        keep = set(primes)
        return Factorization(tuple((p, e) for p, e in self.factors if p in keep))

    def __mul__(self, other: "Factorization") -> "Factorization":
        exps = dict(self.factors)
        for p, e in other.factors:
            exps[p] = exps.get(p, 0) + e
        return Factorization(
            tuple(sorted(exps.items())), self.residual * other.residual
        )

    def __str__(self):
        parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors]
        if self.residual != 1:
            parts.append(f"({self.residual})")
        return "·".join(parts) if parts else "1"


def parse_factorization(text: str) -> Factorization:
    """Inverse of ``str(Factorization)`` for complete factorizations."""
    text = text.strip()
    if text == "1":
        return Factorization(())
    pairs = []
    for token in text.split("·"):
        p, _, e = token.partition("^")
        pairs.append((int(p), int(e) if e else 1))
    return Factorization(tuple(pairs))


def factorize(n: int, prime_bound: int = DEFAULT_PRIME_BOUND) -> Factorization:
    """Factor n by trial division over primes <= prime_bound.

    Parameters
    ----------
    n : int
        Positive integer; 0 is a domain error.
    prime_bound : int
        Trial-division bound, 2 <= prime_bound <= 10**4.

    Returns
    -------
    Factorization
        Complete (residual 1) exactly when n is prime_bound-smooth.
    """
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    if not 2 <= prime_bound <= MAX_PRIME_BOUND:
        raise ValueError(f"prime_bound must be in [2, {MAX_PRIME_BOUND}]")
    pairs = []
    for p in primes_upto(prime_bound):
        if n == 1:
            break
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            pairs.append((p, e))
    return Factorization(tuple(pairs), n)


def is_smooth(n: int, prime_bound: int = DEFAULT_PRIME_BOUND) -> bool:
    """True iff every prime factor of n is <= prime_bound."""
    return factorize(n, prime_bound).residual == 1


def prime_support(n: int, prime_bound: int = DEFAULT_PRIME_BOUND) -> tuple:
    """Distinct primes dividing n, ascending; n must be prime_bound-smooth."""
    f = factorize(n, prime_bound)
    if not f.is_complete:
        raise NonSmoothError(n, prime_bound, f.residual)
    return f.primes()


def maximal_under_divisibility(values) -> list:
    """Antichain of the values maximal under divisibility, ascending.

    An element survives iff it does not properly divide another element of
    the input set.
    """
    vals = sorted(set(int(v) for v in values))
    if any(v < 1 for v in vals):
        raise ValueError("values must be >= 1")
    return [m for m in vals if not any(v != m and v % m == 0 for v in vals)]


def divisors(n: int) -> list:
    """All divisors of n, ascending (unbounded trial division; meant for
    element orders, not group orders)."""
    if n < 1:
        raise ValueError("divisors needs n >= 1")
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def divisor_closure(mu) -> list:
    """All divisors of all members of mu, ascending.

    Idempotent, and maximal_under_divisibility of the result equals
    maximal_under_divisibility of the input.
    """
    out = set()
    for m in mu:
        out.update(divisors(m))
    return sorted(out)
