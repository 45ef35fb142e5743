"""Maximal element orders mu(S) for the group families the toolkit covers.

Closed forms cover L2(q), U3(q), U4(q) (odd q), S4(q) (characteristic not
2 or 3) and G2(q) (characteristic > 5); alternating groups go through
partition enumeration.  Every result is reduced to a divisibility
antichain, since the raw formula lists may contain a divisor of another
member (U4(3) is the standard example: 6 divides 12).
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm

from .arith import divisor_closure, maximal_under_divisibility, prime_power
from .catalog import GroupId, validate_group

SOURCE_FORMULA = "formula"
SOURCE_PARTITION = "partition"
SOURCE_ORACLE = "oracle"


class UnsupportedParameterError(ValueError):
    """The closed form does not cover this characteristic / field size."""


class SpectrumNotImplementedError(NotImplementedError):
    """No spectrum routine for this family."""

    def __init__(self, family: str):
        super().__init__(
            f"no spectrum implemented for family {family!r} "
            "(covered: Alt, L2, U3, U4, S4, G2)")
        self.family = family


@dataclass(frozen=True)
class Spectrum:
    """Antichain of maximal element orders; omega() is its divisor closure."""

    mu: tuple
    source: str

    def __post_init__(self):
        if list(self.mu) != maximal_under_divisibility(self.mu):
            raise ValueError("mu must be a sorted divisibility antichain")

    @classmethod
    def from_values(cls, values, source: str) -> "Spectrum":
        return cls(tuple(maximal_under_divisibility(values)), source)

    def omega(self) -> list:
        return divisor_closure(self.mu)

    def __iter__(self):
        return iter(self.mu)

    def __str__(self):
        return "{" + ", ".join(str(m) for m in self.mu) + "}"


def _char_of(q: int, who: str) -> int:
    pk = prime_power(q)
    if pk is None:
        raise UnsupportedParameterError(f"{who}: q = {q} is not a prime power")
    return pk[0]


def mu_S4(q: int) -> Spectrum:
    """Maximal orders of the 4-dimensional projective symplectic group,
    q = p^n with p not in {2, 3}: (q^2+1)/2, (q^2-1)/2, p(q+1), p(q-1)."""
    p = _char_of(q, "S4")
    if p in (2, 3):
        raise UnsupportedParameterError(
            f"S4({q}): characteristic {p} not covered (needs p not in {{2, 3}})")
    return Spectrum.from_values(
        [(q * q + 1) // 2, (q * q - 1) // 2, p * (q + 1), p * (q - 1)],
        SOURCE_FORMULA)


def mu_U3(q: int) -> Spectrum:
    """Maximal orders of the 3-dimensional projective unitary group, odd q.

    Two cases: for q = -1 (mod 3) the values (q^2-q+1)/3, (q^2-1)/3,
    p(q+1)/3 and q+1; otherwise q^2-q+1, q^2-1 and p(q+1).
    """
    p = _char_of(q, "U3")
    if p == 2 or q < 3:
        raise UnsupportedParameterError(f"U3({q}): needs odd q >= 3")
    if q % 3 == 2:
        vals = [(q * q - q + 1) // 3, (q * q - 1) // 3, p * (q + 1) // 3, q + 1]
    else:
        vals = [q * q - q + 1, q * q - 1, p * (q + 1)]
    return Spectrum.from_values(vals, SOURCE_FORMULA)


def mu_G2(q: int) -> Spectrum:
    """Maximal orders of G2(q), characteristic > 5:
    p(q-1), p(q+1), q^2-1, q^2-q+1, q^2+q+1."""
    p = _char_of(q, "G2")
    if p <= 5:
        raise UnsupportedParameterError(
            f"G2({q}): characteristic {p} not covered (needs p > 5)")
    return Spectrum.from_values(
        [p * (q - 1), p * (q + 1), q * q - 1, q * q - q + 1, q * q + q + 1],
        SOURCE_FORMULA)


def mu_U4(q: int) -> Spectrum:
    """Maximal orders of the 4-dimensional projective unitary group, odd q.

    With d = gcd(4, q+1): always (q-1)(q^2+1)/d, (q^3+1)/d, p(q^2-1)/d and
    q^2-1; additionally p(q+1) exactly when d = 4, and 9 exactly when the
    characteristic is 3.
    """
    p = _char_of(q, "U4")
    if p == 2:
        raise UnsupportedParameterError(f"U4({q}): needs odd q")
    d = gcd(4, q + 1)
    vals = [(q - 1) * (q * q + 1) // d, (q**3 + 1) // d,
            p * (q * q - 1) // d, q * q - 1]
    if d == 4:
        vals.append(p * (q + 1))
    if p == 3:
        vals.append(9)
    return Spectrum.from_values(vals, SOURCE_FORMULA)


def mu_L2(q: int) -> Spectrum:
    """Maximal orders of the 2-dimensional projective special linear group:
    p, (q-1)/k, (q+1)/k with k = gcd(2, q-1); q >= 4."""
    p = _char_of(q, "L2")
    if q < 4:
        raise UnsupportedParameterError(f"L2({q}) is not simple")
    k = gcd(2, q - 1)
    return Spectrum.from_values([p, (q - 1) // k, (q + 1) // k], SOURCE_FORMULA)


@lru_cache(maxsize=None)
def mu_alternating(n: int) -> Spectrum:
    """Maximal element orders of the alternating group of degree n.

    Element orders are the lcms of partitions of n with an even number of
    even parts; parts are generated in descending lexicographic order with
    the lcm carried incrementally.  Degrees 5..100 are accepted (the high
    end enumerates many partitions and takes correspondingly long).
    """
    if not 5 <= n <= 100:
        raise UnsupportedParameterError(f"alternating degree {n} out of [5, 100]")
    orders = set()

    def rec(remaining, max_part, even_parts, l):
        if remaining == 0:
            if even_parts % 2 == 0:
                orders.add(l)
            return
        for part in range(min(remaining, max_part), 0, -1):
            rec(remaining - part, part, even_parts + (part % 2 == 0), lcm(l, part))

    rec(n, n, 0, 1)
    return Spectrum.from_values(orders, SOURCE_PARTITION)


def omega_alternating(n: int) -> list:
    """Full sorted set of element orders of the alternating group."""
    return mu_alternating(n).omega()


def spectrum_of(g: GroupId) -> Spectrum:
    """Dispatch to the routine matching g's family and dimension."""
    validate_group(g)
    if g.family == "A":
        return mu_alternating(g.n)
    if g.family == "L" and g.n == 2:
        return mu_L2(g.q)
    if g.family == "U" and g.n == 3:
        return mu_U3(g.q)
    if g.family == "U" and g.n == 4:
        return mu_U4(g.q)
    if g.family == "S" and g.n == 4:
        return mu_S4(g.q)
    if g.family == "G2":
        return mu_G2(g.q)
    fam = g.family if g.n is None else f"{g.family}{g.n}"
    raise SpectrumNotImplementedError(fam)
