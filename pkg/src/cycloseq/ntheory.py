"""Prime parameters, primitive roots, index tables, cyclotomic cosets, characters.

Everything downstream lives in the arena set up here: a prime p, a primitive
root g, and the dense discrete-log table ind_g(n) for n = 1..p-1.  Characters
are handled as integer phases (k-th roots of unity indexed 0..k-1), never as
floating complex values; only the charsum module materializes floats.

Primes are limited to p < 2**31 so the index table stays a dense int64 array
and all modular arithmetic fits comfortably in 64 bits.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import BadOrder, NoSuchRoot, NotPrimitive, ParameterError, ZeroArgument

P_LIMIT = 2**31

# Deterministic Miller-Rabin witness set, valid for all n < 3.3*10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

THREE_IN_C1 = "3 in C1"


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (valid far beyond 2**31)."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    """Distinct prime factors by trial division (n < 2**31 keeps this cheap)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def is_primitive_root(g: int, p: int, factors: list[int] | None = None) -> bool:
    if not 1 <= g <= p - 1:
        return False
    if factors is None:
        factors = _prime_factors(p - 1)
    return all(pow(g, (p - 1) // q, p) != 1 for q in factors)


def _index_of(target: int, g: int, p: int) -> int:
    # walk powers of g; caller guarantees g primitive
    v = 1
    for e in range(p - 1):
        if v == target:
            return e
        v = v * g % p
    raise NotPrimitive(f"{g} is not a primitive root mod {p}")


def find_primitive_root(p: int, constraint: str | None = None) -> int:
    """Smallest primitive root mod p, optionally filtered to ind_g(3) = 1 (mod 6).

    The constrained variant reports NoSuchRoot when no primitive root puts 3
    into coset C1 (possible: satisfiability requires gcd(ind(3), 6) = 1).
    """
    if not is_prime(p) or p < 3:
        raise ParameterError(f"p={p} is not an odd prime")
    if p >= P_LIMIT:
        raise ParameterError(f"p={p} exceeds the 2**31 limit")
    if constraint not in (None, THREE_IN_C1):
        raise ParameterError(f"unknown constraint {constraint!r}")
    if constraint == THREE_IN_C1 and p % 6 != 1:
        raise ParameterError(f"constraint {THREE_IN_C1!r} needs p = 1 (mod 6), got p={p}")

    factors = _prime_factors(p - 1)
    smallest = None
    for g in range(2, p):
        if is_primitive_root(g, p, factors):
            smallest = g
            break
    if smallest is None:  # unreachable for prime p
        raise NoSuchRoot(f"no primitive root mod {p}")
    if constraint is None:
        return smallest

    # Satisfiable iff ind(3) w.r.t. any primitive root is coprime to 6; check
    # once against the smallest root before scanning candidates in order.
    e = _index_of(3 % p, smallest, p)
    if e % 6 not in (1, 5):
        raise NoSuchRoot(
            f"no primitive root mod {p} has 3 in C1 (ind(3) = {e} mod 6 = {e % 6})"
        )
    for g in range(smallest, p):
        if is_primitive_root(g, p, factors) and _index_of(3 % p, g, p) % 6 == 1:
            return g
    raise NoSuchRoot(f"no primitive root mod {p} has 3 in C1")


def build_index_table(p: int, g: int) -> np.ndarray:
    """Dense table t with t[g**e mod p] = e for e = 0..p-2; t[0] = -1.

    Built in one pass of successive multiplication; raises NotPrimitive if the
    powers of g repeat before exponent p-1.
    """
    table = np.full(p, -1, dtype=np.int64)
    v = 1
    for e in range(p - 1):
        if table[v] != -1:
            raise NotPrimitive(f"{g} is not a primitive root mod {p}")
        table[v] = e
        v = v * g % p
    if v != 1:
        raise NotPrimitive(f"{g} is not a primitive root mod {p}")
    table.setflags(write=False)
    return table


@dataclass(frozen=True, eq=False)
class PrimeParams:
    """A prime p with a fixed primitive root g and its index (discrete log) table."""

    p: int
    g: int
    index_table: np.ndarray = field(repr=False)

    @classmethod
    def create(cls, p: int, g: int | None = None) -> "PrimeParams":
        if not is_prime(p) or p < 3:
            raise ParameterError(f"p={p} is not an odd prime")
        if p >= P_LIMIT:
            raise ParameterError(f"p={p} exceeds the 2**31 limit")
        if g is None:
            g = find_primitive_root(p)
        return cls(p=p, g=g, index_table=build_index_table(p, g))

    def ind(self, n: int) -> int:
        """ind_g(n) for n not divisible by p."""
        n %= self.p
        if n == 0:
            raise ZeroArgument("ind is undefined at 0")
        return int(self.index_table[n])

    def g_inverse(self) -> int:
        return pow(self.g, self.p - 2, self.p)

    def __repr__(self) -> str:  # index table elided
        return f"{type(self).__name__}(p={self.p}, g={self.g})"


@dataclass(frozen=True, eq=False, repr=False)
class SexticParams(PrimeParams):
    """PrimeParams for p = 6f+1, the arena of the sextic residue sequence."""

    f: int = 0

    @classmethod
    def create(cls, p: int, g: int | None = None, g_policy: str = "smallest") -> "SexticParams":
        if not is_prime(p) or p % 6 != 1:
            raise ParameterError(f"p={p} is not a prime of the form 6f+1")
        if p >= P_LIMIT:
            raise ParameterError(f"p={p} exceeds the 2**31 limit")
        if g is None:
            if g_policy == "smallest":
                g = find_primitive_root(p)
            elif g_policy in ("three-in-c1", THREE_IN_C1):
                g = find_primitive_root(p, THREE_IN_C1)
            else:
                raise ParameterError(f"unknown g policy {g_policy!r}")
        return cls(p=p, g=g, index_table=build_index_table(p, g), f=(p - 1) // 6)


@dataclass(frozen=True)
class CosetPartition:
    """Cyclotomic cosets of order m: C_l = {n : ind_g(n) = l (mod m)}."""

    m: int
    classes: tuple[frozenset[int], ...]

    def class_of(self, n: int) -> int:
        for l, c in enumerate(self.classes):
            if n in c:
                return l
        raise ZeroArgument(f"{n} lies in no coset")


def cyclotomic_cosets(params: PrimeParams, m: int) -> CosetPartition:
    """Partition {1..p-1} into the m cyclotomic cosets, in index order."""
    if m < 1 or (params.p - 1) % m != 0:
        raise BadOrder(f"m={m} does not divide p-1={params.p - 1}")
    residues = np.arange(1, params.p)
    cls = np.asarray(params.index_table[1:]) % m
    classes = tuple(frozenset(int(n) for n in residues[cls == l]) for l in range(m))
    return CosetPartition(m=m, classes=classes)


@dataclass(frozen=True)
class CharacterSpec:
    """Multiplicative character of order 3 or 6 fixed by value at g, as a phase map.

    The character value at n is the root of unity exp(2*pi*i*phase/order) with
    phase = (j * ind_g(n)) mod order; the complex number itself is never built
    here.
    """

    order: int
    j: int
    params: PrimeParams

    def __post_init__(self):
        if self.order not in (3, 6):
            raise BadOrder(f"character order must be 3 or 6, got {self.order}")
        if (self.params.p - 1) % self.order != 0:
            raise BadOrder(f"order {self.order} does not divide p-1={self.params.p - 1}")
        if not 1 <= self.j <= self.order - 1:
            raise ParameterError(f"exponent j={self.j} outside 1..{self.order - 1}")


def character_phase(spec: CharacterSpec, n: int) -> int:
    """Phase index of the character value at n, in 0..order-1."""
    return (spec.j * spec.params.ind(n)) % spec.order
