"""Sparse multivariate polynomials over F_p.

Monomials are plain exponent tuples.  A polynomial keeps its terms as a
tuple of (monomial, coefficient) pairs sorted in strictly decreasing order
under the ambient ring's monomial ordering, with no zero coefficients;
the zero polynomial has an empty term tuple.  Coefficients are stored as
raw canonical residues in [0, p) -- the FpElem wrapper from the field
module is the boundary type and serves as the slow reference path in the
test suite.

Two orderings are supported:

* GLOBAL_DEGREVLEX -- degree reverse lexicographic, a well-ordering.
* LOCAL_NEG_DEGREVLEX -- negative degree reverse lexicographic; 1 is the
  largest monomial, so leading terms pick out the lowest degree.  Under
  this ordering the ring of fractions with invertible leading terms is
  exactly the localization at the origin.
"""

from __future__ import annotations

import enum
from typing import Dict, Iterable, Sequence, Tuple

from .errors import UsageError
from .field import PrimeChar, inv_mod

Mono = Tuple[int, ...]

MAX_EXPONENT = 1 << 16


class OrderingTag(enum.Enum):
    GLOBAL_DEGREVLEX = "global"
    LOCAL_NEG_DEGREVLEX = "local"


def mono_deg(m: Mono) -> int:
    return sum(m)


def mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Mono, b: Mono) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_quot(a: Mono, b: Mono) -> Mono:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


def _degrevlex_key(m: Mono):
    return (sum(m), tuple(-e for e in reversed(m)))


def _neg_degrevlex_key(m: Mono):
    return (-sum(m), tuple(-e for e in reversed(m)))


_KEYS = {
    OrderingTag.GLOBAL_DEGREVLEX: _degrevlex_key,
    OrderingTag.LOCAL_NEG_DEGREVLEX: _neg_degrevlex_key,
}

_NAME_OK = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_0123456789")


class Ring:
    """Ambient polynomial ring descriptor: characteristic, variable names,
    and the monomial ordering."""

    __slots__ = ("char", "names", "ordering", "key")

    def __init__(self, char, names: Sequence[str],
                 ordering: OrderingTag = OrderingTag.GLOBAL_DEGREVLEX):
        if not isinstance(char, PrimeChar):
            char = PrimeChar(char)
        names = tuple(names)
        if not names:
            raise UsageError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise UsageError(f"variable names must be distinct: {names}")
        for nm in names:
            if not nm or nm[0].isdigit() or not set(nm) <= _NAME_OK:
                raise UsageError(f"bad variable name {nm!r}")
        if not isinstance(ordering, OrderingTag):
            raise UsageError(f"unknown ordering {ordering!r}")
        self.char = char
        self.names = names
        self.ordering = ordering
        self.key = _KEYS[ordering]

    @property
    def p(self) -> int:
        return self.char.p

    @property
    def nvars(self) -> int:
        return len(self.names)

    def with_ordering(self, ordering: OrderingTag) -> "Ring":
        if ordering == self.ordering:
            return self
        return Ring(self.char, self.names, ordering)

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: int) -> "Polynomial":
        c %= self.p
        if c == 0:
            return self.zero()
        return Polynomial(self, (((0,) * self.nvars, c),))

    def var(self, which) -> "Polynomial":
        if isinstance(which, str):
            try:
                which = self.names.index(which)
            except ValueError:
                raise UsageError(f"unknown variable {which!r} in {self.names}") from None
        if not 0 <= which < self.nvars:
            raise UsageError(f"variable index {which} out of range")
        exps = [0] * self.nvars
        exps[which] = 1
        return Polynomial(self, ((tuple(exps), 1),))

    def poly(self, terms: Dict[Mono, int] | Iterable[Tuple[Mono, int]]) -> "Polynomial":
        if not isinstance(terms, dict):
            acc: Dict[Mono, int] = {}
            for m, c in terms:
                acc[m] = acc.get(m, 0) + c
            terms = acc
        return _from_dict(self, terms)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Ring) and self.char == other.char
                and self.names == other.names and self.ordering == other.ordering)

    def __hash__(self) -> int:
        return hash((self.char, self.names, self.ordering))

    def __repr__(self) -> str:
        return f"Ring(p={self.p}, vars={','.join(self.names)}, {self.ordering.value})"


def _check_mono(ring: Ring, m: Mono) -> Mono:
    m = tuple(m)
    if len(m) != ring.nvars:
        raise UsageError(f"monomial {m} has wrong arity for {ring!r}")
    for e in m:
        if not isinstance(e, int) or e < 0:
            raise UsageError(f"bad exponent in monomial {m}")
        if e >= MAX_EXPONENT:
            raise UsageError(f"exponent overflow: {e} >= {MAX_EXPONENT}")
    return m


def _from_dict(ring: Ring, d: Dict[Mono, int]) -> "Polynomial":
    p = ring.p
    items = []
    for m, c in d.items():
        c %= p
        if c:
            items.append((_check_mono(ring, m), c))
    items.sort(key=lambda t: ring.key(t[0]), reverse=True)
    return Polynomial(ring, tuple(items))


class Polynomial:
    """Immutable sparse polynomial; see module docstring for the invariants.

    Construct through Ring.poly / Ring.var / parse_poly rather than
    directly: the term tuple is trusted to be canonical.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Tuple[Tuple[Mono, int], ...]):
        self.ring = ring
        self.terms = terms

    # -- basic queries ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def lm(self) -> Mono:
        if not self.terms:
            raise UsageError("zero polynomial has no leading monomial")
        return self.terms[0][0]

    def lc(self) -> int:
        if not self.terms:
            raise UsageError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def tail(self) -> "Polynomial":
        return Polynomial(self.ring, self.terms[1:])

    def degree(self) -> int:
        """Maximal total degree of a term (-1 for the zero polynomial)."""
        if not self.terms:
            return -1
        return max(mono_deg(m) for m, _ in self.terms)

    def order(self) -> int:
        """Minimal total degree of a term (-1 for the zero polynomial)."""
        if not self.terms:
            return -1
        return min(mono_deg(m) for m, _ in self.terms)

    def ecart(self) -> int:
        return self.degree() - mono_deg(self.lm())

    def constant_coeff(self) -> int:
        zero = (0,) * self.ring.nvars
        for m, c in self.terms:
            if m == zero:
                return c
        return 0

    def coeff(self, m: Mono) -> int:
        for mm, c in self.terms:
            if mm == m:
                return c
        return 0

    def _check_ring(self, other: "Polynomial"):
        if not isinstance(other, Polynomial):
            raise UsageError(f"expected Polynomial, got {type(other).__name__}")
        if other.ring != self.ring:
            raise UsageError(f"ambient ring mismatch: {self.ring!r} vs {other.ring!r}")

    # -- arithmetic -------------------------------------------------------

    def _merge(self, other: "Polynomial", sub: bool) -> "Polynomial":
        p = self.ring.p
        key = self.ring.key
        a, b = self.terms, other.terms
        out = []
        i = j = 0
        while i < len(a) and j < len(b):
            ma, ca = a[i]
            mb, cb = b[j]
            if ma == mb:
                c = (ca - cb) % p if sub else (ca + cb) % p
                if c:
                    out.append((ma, c))
                i += 1
                j += 1
            elif key(ma) > key(mb):
                out.append((ma, ca))
                i += 1
            else:
                out.append((mb, (p - cb) % p if sub else cb))
                j += 1
        out.extend(a[i:])
        if sub:
            out.extend((m, (p - c) % p) for m, c in b[j:])
        else:
            out.extend(b[j:])
        return Polynomial(self.ring, tuple(out))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        return self._merge(other, sub=False)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        return self._merge(other, sub=True)

    def __neg__(self) -> "Polynomial":
        p = self.ring.p
        return Polynomial(self.ring, tuple((m, (p - c) % p) for m, c in self.terms))

    def scale(self, c: int) -> "Polynomial":
        c %= self.ring.p
        if c == 0:
            return self.ring.zero()
        if c == 1:
            return self
        p = self.ring.p
        return Polynomial(self.ring, tuple((m, (cc * c) % p) for m, cc in self.terms))

    def term_mul(self, c: int, m: Mono) -> "Polynomial":
        """Multiply by the single term c*m; preserves term order because the
        ordering is compatible with multiplication."""
        c %= self.ring.p
        if c == 0 or not self.terms:
            return self.ring.zero()
        p = self.ring.p
        out = []
        for mm, cc in self.terms:
            prod = mono_mul(mm, m)
            for e in prod:
                if e >= MAX_EXPONENT:
                    raise UsageError(f"exponent overflow: {e} >= {MAX_EXPONENT}")
            out.append((prod, (cc * c) % p))
        return Polynomial(self.ring, tuple(out))

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            return self.scale(other)
        self._check_ring(other)
        if len(other.terms) == 1:
            m, c = other.terms[0]
            return self.term_mul(c, m)
        acc: Dict[Mono, int] = {}
        for ma, ca in self.terms:
            for mb, cb in other.terms:
                m = mono_mul(ma, mb)
                acc[m] = acc.get(m, 0) + ca * cb
        return _from_dict(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise UsageError("negative polynomial powers are not defined")
        result = self.ring.one()
        for _ in range(e):
            result = result * self
        return result

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.lc()
        if lc == 1:
            return self
        return self.scale(inv_mod(lc, self.ring.p))

    # -- calculus and characteristic-p structure ---------------------------

    def partial(self, var: int) -> "Polynomial":
        """Formal partial derivative with respect to the var-th variable."""
        if not 0 <= var < self.ring.nvars:
            raise UsageError(f"variable index {var} out of range")
        p = self.ring.p
        acc: Dict[Mono, int] = {}
        for m, c in self.terms:
            e = m[var]
            if e == 0:
                continue
            cc = (c * e) % p
            if cc == 0:
                continue
            mm = m[:var] + (e - 1,) + m[var + 1:]
            acc[mm] = (acc.get(mm, 0) + cc) % p
        return _from_dict(self.ring, acc)

    def frobenius(self, e: int = 1) -> "Polynomial":
        """Return self**(p**e), computed term-wise.

        Valid by Frobenius additivity: raising to the p-th power is a ring
        homomorphism in characteristic p, and residues satisfy c**p = c.
        """
        if e < 1:
            raise UsageError("frobenius exponent must be >= 1")
        q = self.ring.p ** e
        p = self.ring.p
        out = []
        for m, c in self.terms:
            mm = tuple(x * q for x in m)
            for x in mm:
                if x >= MAX_EXPONENT:
                    raise UsageError(f"exponent overflow: {x} >= {MAX_EXPONENT}")
            out.append((mm, pow(c, q, p)))
        return Polynomial(self.ring, tuple(out))

    def rename(self, perm: Sequence[int]) -> "Polynomial":
        """Relabel variables: old variable i becomes variable perm[i]."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.ring.nvars)):
            raise UsageError(f"{perm} is not a permutation of the variable indices")
        acc = {}
        for m, c in self.terms:
            mm = [0] * len(m)
            for i, e in enumerate(m):
                mm[perm[i]] = e
            acc[tuple(mm)] = c
        return _from_dict(self.ring, acc)

    # -- hashing, equality, rendering --------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, Polynomial) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.ring, self.terms))

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"<{render(self)} over {self.ring!r}>"


def render(f: Polynomial) -> str:
    """Canonical text form: terms in decreasing ordering, '^' for powers,
    '*' between factors, coefficients printed only when != 1."""
    if f.is_zero:
        return "0"
    names = f.ring.names
    parts = []
    for m, c in f.terms:
        factors = []
        if c != 1 or mono_deg(m) == 0:
            factors.append(str(c))
        for name, e in zip(names, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        parts.append("*".join(factors))
    return "+".join(parts)
