"""Arithmetic in the prime field F_p for small primes p.

Residues are kept canonically in [0, p).  The characteristic is capped at
97: everything in the catalog lives in p = 2, 3, 5, and the cap keeps all
arithmetic in native word size.
"""

from __future__ import annotations

from .errors import UsageError

_PRIMES = frozenset(
    (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
     53, 59, 61, 67, 71, 73, 79, 83, 89, 97)
)

MAX_CHAR = 97


class PrimeChar:
    """A prime characteristic p with 2 <= p <= 97, checked at construction."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or p not in _PRIMES:
            raise UsageError(f"characteristic must be a prime with 2 <= p <= {MAX_CHAR}, got {p!r}")
        self.p = p

    def __int__(self) -> int:
        return self.p

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeChar) and self.p == other.p

    def __hash__(self) -> int:
        return hash(("PrimeChar", self.p))

    def __repr__(self) -> str:
        return f"PrimeChar({self.p})"

    def element(self, value: int) -> "FpElem":
        return FpElem(value, self)


class FpElem:
    """An element of F_p, stored as the canonical residue in [0, p)."""

    __slots__ = ("value", "char")

    def __init__(self, value: int, char: PrimeChar):
        if not isinstance(char, PrimeChar):
            char = PrimeChar(char)
        self.char = char
        self.value = value % char.p

    def _check(self, other: "FpElem") -> "FpElem":
        if not isinstance(other, FpElem):
            raise UsageError(f"expected FpElem, got {type(other).__name__}")
        if other.char != self.char:
            raise UsageError(f"characteristic mismatch: {self.char.p} vs {other.char.p}")
        return other

    def __add__(self, other: "FpElem") -> "FpElem":
        other = self._check(other)
        return FpElem(self.value + other.value, self.char)

    def __sub__(self, other: "FpElem") -> "FpElem":
        other = self._check(other)
        return FpElem(self.value - other.value, self.char)

    def __mul__(self, other: "FpElem") -> "FpElem":
        other = self._check(other)
        return FpElem(self.value * other.value, self.char)

    def __neg__(self) -> "FpElem":
        return FpElem(-self.value, self.char)

    def inv(self) -> "FpElem":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.char.p}")
        # Fermat: a^(p-2) is the inverse of a nonzero a.
        return FpElem(pow(self.value, self.char.p - 2, self.char.p), self.char)

    def __truediv__(self, other: "FpElem") -> "FpElem":
        return self * self._check(other).inv()

    def __pow__(self, e: int) -> "FpElem":
        if e < 0:
            return self.inv() ** (-e)
        return FpElem(pow(self.value, e, self.char.p), self.char)

    def __eq__(self, other) -> bool:
        return isinstance(other, FpElem) and self.char == other.char and self.value == other.value

    def __hash__(self) -> int:
        return hash((self.char.p, self.value))

    def __repr__(self) -> str:
        return f"FpElem({self.value}, p={self.char.p})"

    def __bool__(self) -> bool:
        return self.value != 0


def inv_mod(value: int, p: int) -> int:
    """Inverse of a nonzero residue modulo a prime, on raw ints."""
    value %= p
    if value == 0:
        raise ZeroDivisionError(f"0 has no inverse in F_{p}")
    return pow(value, p - 2, p)
