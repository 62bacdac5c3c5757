"""Binary sequence constructions: Hall sextic residue, Legendre, DHL, generic cyclotomic.

The Hall sequence is built two independent ways: by coset membership and by
the exact character-sum identity for its indicator deltas.  Bit-for-bit
agreement of the two routes is the mechanical check of the identity
(-1)**h_n = 1 - 2*delta(n), performed in exact integer arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import BadOrder, BadPrime, BadSubset, ParameterError, ZeroArgument
from .ntheory import PrimeParams, SexticParams, is_prime, is_primitive_root

# Hall ones live on C0 u C1 u C3 of the order-6 cosets.
HALL_CLASSES = frozenset({0, 1, 3})


@dataclass(frozen=True, eq=False)
class BitSequence:
    """A finite 0/1 word with optional period and a provenance label."""

    bits: np.ndarray
    period: int | None = None
    label: str = ""

    @classmethod
    def create(cls, bits, period: int | None = None, label: str = "") -> "BitSequence":
        arr = np.asarray(bits, dtype=np.uint8)
        if arr.ndim != 1 or arr.size < 1:
            raise ParameterError("bits must be a nonempty 1-d 0/1 word")
        if not np.all((arr == 0) | (arr == 1)):
            raise ParameterError("bits must be 0/1")
        if period is not None:
            if period < 1:
                raise ParameterError(f"period must be positive, got {period}")
            if arr.size > period:
                # wraparound check: bits[n] == bits[n mod period]
                idx = np.arange(arr.size) % period
                if not np.array_equal(arr, arr[idx]):
                    raise ParameterError("bits do not wrap with the declared period")
        arr = arr.copy()
        arr.setflags(write=False)
        return cls(bits=arr, period=period, label=label)

    @property
    def length(self) -> int:
        return int(self.bits.size)

    def signs(self) -> np.ndarray:
        """(-1)**bits as an int64 array."""
        return 1 - 2 * self.bits.astype(np.int64)

    def to01(self) -> str:
        return "".join("01"[b] for b in self.bits)

    def prefix(self, n: int) -> "BitSequence":
        if not 1 <= n <= self.length:
            raise ParameterError(f"prefix length {n} outside 1..{self.length}")
        return BitSequence.create(self.bits[:n], period=None, label=self.label)

    def __repr__(self) -> str:
        head = self.to01() if self.length <= 32 else self.to01()[:32] + "..."
        return f"BitSequence({head!r}, N={self.length}, period={self.period}, label={self.label!r})"


def _extend(core: np.ndarray, length: int) -> np.ndarray:
    if length <= core.size:
        return core[:length]
    return core[np.arange(length) % core.size]


def _core_from_classes(params: PrimeParams, m: int, subset: frozenset[int]) -> np.ndarray:
    ind_mod = np.asarray(params.index_table) % m
    core = np.zeros(params.p, dtype=np.uint8)
    core[1:] = np.isin(ind_mod[1:], sorted(subset)).astype(np.uint8)
    return core


def hall_sequence(params: SexticParams, length: int) -> BitSequence:
    """Hall's sextic residue sequence: h_n = 1 iff n mod p in C0 u C1 u C3."""
    if length < 1:
        raise ParameterError("length must be >= 1")
    core = _core_from_classes(params, 6, HALL_CLASSES)
    return BitSequence.create(
        _extend(core, length), period=params.p, label=f"hall(p={params.p},g={params.g})"
    )


def delta1(params: SexticParams, n: int) -> int:
    """(1 + eta(n) + eta^2(n))/3 for the cubic character eta, evaluated exactly.

    The three terms are accumulated as phase counts and reduced in Z[zeta3];
    the result must be a rational integer in {0, 1}.
    """
    ind = params.ind(n)
    counts = [0, 0, 0]
    for j in range(3):
        counts[(j * ind) % 3] += 1
    a, b = _reduce_zeta3(counts)
    assert b == 0 and a % 3 == 0 and a // 3 in (0, 1)
    return a // 3


def delta2(params: SexticParams, n: int) -> int:
    """(1 + sum_j omega^-j chi^j(n))/6 for the sextic character chi, exactly.

    omega = chi(g); the j-th term has phase j*(ind(n) - 1) mod 6.  Reduction in
    Z[omega] must land on a rational integer in {0, 1}.
    """
    ind = params.ind(n)
    counts = [0] * 6
    for j in range(6):
        counts[(j * (ind - 1)) % 6] += 1
    a, b = _reduce_zeta6(counts)
    assert b == 0 and a % 6 == 0 and a // 6 in (0, 1)
    return a // 6


def _reduce_zeta3(counts) -> tuple[int, int]:
    # sum c_r zeta3^r -> a + b*zeta3 using zeta3^2 = -1 - zeta3
    c0, c1, c2 = counts
    return c0 - c2, c1 - c2


def _reduce_zeta6(counts) -> tuple[int, int]:
    # sum c_r w^r -> a + b*w using w^2 = w-1, w^3 = -1 (w a primitive 6th root)
    c0, c1, c2, c3, c4, c5 = counts
    return c0 - c2 - c3 + c5, c1 + c2 - c4 - c5


@dataclass(frozen=True, eq=False)
class DeltaDecomposition:
    """Indicator maps delta1 (C0 u C3) and delta2 (C1) on 1..p-1; slot 0 unused."""

    delta1: np.ndarray
    delta2: np.ndarray


def delta_decomposition(params: SexticParams) -> DeltaDecomposition:
    d1 = np.zeros(params.p, dtype=np.uint8)
    d2 = np.zeros(params.p, dtype=np.uint8)
    for n in range(1, params.p):
        d1[n] = delta1(params, n)
        d2[n] = delta2(params, n)
    d1.setflags(write=False)
    d2.setflags(write=False)
    return DeltaDecomposition(delta1=d1, delta2=d2)


def hall_sequence_via_characters(params: SexticParams, length: int) -> BitSequence:
    """Hall sequence rebuilt from h_n = delta1(n) + delta2(n); h_0 = 0."""
    if length < 1:
        raise ParameterError("length must be >= 1")
    dec = delta_decomposition(params)
    core = (dec.delta1 + dec.delta2).astype(np.uint8)
    assert np.all(core <= 1)
    return BitSequence.create(
        _extend(core, length),
        period=params.p,
        label=f"hall_via_characters(p={params.p},g={params.g})",
    )


def legendre_sequence(p: int, length: int) -> BitSequence:
    """Characteristic sequence of the nonzero quadratic residues mod p."""
    if not is_prime(p) or p < 3:
        raise BadPrime(f"p={p} is not an odd prime")
    if length < 1:
        raise ParameterError("length must be >= 1")
    core = np.zeros(p, dtype=np.uint8)
    squares = (np.arange(1, p, dtype=np.int64) ** 2) % p
    core[squares] = 1
    return BitSequence.create(_extend(core, length), period=p, label=f"legendre(p={p})")


def dhl_sequence(p: int, g: int, length: int) -> BitSequence:
    """Ding-Helleseth-Lam sequence: ones on C0 u C1, C0 the fourth powers, C1 = g*C0."""
    if not is_prime(p) or p % 4 != 1:
        raise BadPrime(f"p={p} is not a prime = 1 (mod 4)")
    if not is_primitive_root(g, p):
        raise ParameterError(f"g={g} is not a primitive root mod {p}")
    if length < 1:
        raise ParameterError("length must be >= 1")
    fourth = {pow(x, 4, p) for x in range(1, p)}
    ones = fourth | {g * x % p for x in fourth}
    core = np.zeros(p, dtype=np.uint8)
    core[sorted(ones)] = 1
    return BitSequence.create(_extend(core, length), period=p, label=f"dhl(p={p},g={g})")


def cyclotomic_sequence(params: PrimeParams, m: int, subset, length: int) -> BitSequence:
    """Characteristic sequence of a union of order-m cyclotomic cosets.

    Hall = (m=6, S={0,1,3}); Legendre = (m=2, S={0}); DHL = (m=4, S={0,1}).
    """
    if m < 1 or (params.p - 1) % m != 0:
        raise BadOrder(f"m={m} does not divide p-1={params.p - 1}")
    subset = frozenset(int(s) for s in subset)
    if not subset <= frozenset(range(m)):
        raise BadSubset(f"classes {sorted(subset)} not within 0..{m - 1}")
    if length < 1:
        raise ParameterError("length must be >= 1")
    core = _core_from_classes(params, m, subset)
    s_str = ",".join(map(str, sorted(subset)))
    return BitSequence.create(
        _extend(core, length),
        period=params.p,
        label=f"cyclotomic(p={params.p},g={params.g},m={m},S={{{s_str}}})",
    )


def permutation_map_f(params: SexticParams, n: int) -> int:
    """The bijection of {1..p-1} interchanging cosets C2 and C3 (identity elsewhere)."""
    n %= params.p
    if n == 0:
        raise ZeroArgument("f is undefined at 0")
    l = params.ind(n) % 6
    if l == 2:
        return params.g * n % params.p
    if l == 3:
        return params.g_inverse() * n % params.p
    return n


def check_index_representation(params: SexticParams, mapping=None) -> bool:
    """Verify h_n = 0 exactly when ind_{g^-1}(f(n)) mod 6 lies in {1, 2, 3}.

    ind with respect to g^-1 is (-ind_g) mod (p-1).  Passing a different
    mapping (e.g. the identity) shows the role f plays.
    """
    if mapping is None:
        mapping = permutation_map_f
    core = _core_from_classes(params, 6, HALL_CLASSES)
    for n in range(1, params.p):
        fn = mapping(params, n)
        val = (-params.ind(fn)) % (params.p - 1) % 6
        if (core[n] == 0) != (1 <= val <= 3):
            return False
    return True


_PERIOD_RE = re.compile(r"^(?P<label>.*?)\s*period=(?P<t>\d+)$")


def write_sequence(seq: BitSequence, path) -> None:
    """ASCII '0'/'1' file with a '#' header line carrying the label."""
    header = seq.label
    if seq.period is not None:
        header = f"{header} period={seq.period}".strip()
    text = (f"# {header}\n" if header else "") + seq.to01() + "\n"
    Path(path).write_text(text)


def read_sequence(path) -> BitSequence:
    lines = Path(path).read_text().splitlines()
    label = ""
    period = None
    body = []
    for line in lines:
        if line.startswith("#"):
            header = line[1:].strip()
            m = _PERIOD_RE.match(header)
            if m:
                label, period = m.group("label"), int(m.group("t"))
            else:
                label = header
        elif line.strip():
            body.append(line.strip())
    word = "".join(body)
    if not word or set(word) - {"0", "1"}:
        raise ParameterError(f"{path}: not a 0/1 sequence file")
    return BitSequence.create([int(c) for c in word], period=period, label=label)
