"""Groebner bases (global ordering, Buchberger) and standard bases (local
ordering, Mora).

For the global degrevlex ordering, normal forms are computed by the plain
multivariate division algorithm and completion is Buchberger's loop with
the coprimality criterion.  For the local ordering, normal forms use
Mora's algorithm with ecart-minimizing reducer selection: the working set
of reducers grows with intermediate remainders, which is what makes the
division terminate although the ordering is not a well-ordering.  A Mora
normal form is a *weak* normal form: u*f = sum q_i g_i + nf for some unit
u of the localization, its leading monomial is irreducible, and nf = 0 if
and only if f lies in the ideal extended to the localization at the
origin.  Tail terms of a local normal form may still be divisible by
leading terms; full tail reduction need not terminate in a localization
and nothing downstream needs it.

The coprimality criterion is applied only under the global ordering.  Its
classical proof breaks for non-well-orderings (a tail monomial may be a
multiple of the leading one), pair queues at this problem scale are tiny,
and a wrong basis would be much worse than a few redundant reductions.
The chain criterion is omitted for the same reason.

All loops charge a shared step budget; exceeding it raises
EngineLimitError, never a wrong answer.
"""

from __future__ import annotations

import itertools
import math
from typing import List, Optional, Sequence, Tuple

from .errors import EngineLimitError, UsageError
from .field import inv_mod
from .poly import (Mono, OrderingTag, Polynomial, Ring, mono_deg,
                   mono_divides, mono_lcm, mono_mul, mono_quot)

DEFAULT_STEP_CAP = 10 ** 6

INFINITE = math.inf


class _Budget:
    """Work budget: one unit per reduction step on small polynomials, more
    when the working polynomial is large, so the cap bounds actual work
    and not only the step count."""

    __slots__ = ("remaining", "cap")

    def __init__(self, cap: int):
        self.cap = cap
        self.remaining = cap

    def spend(self, n: int = 1):
        self.remaining -= n
        if self.remaining < 0:
            raise EngineLimitError(
                f"engine step cap of {self.cap} exceeded; raise --step-cap if the input is legitimate")

    def step(self, h: Polynomial, g: Polynomial):
        self.spend(1 + (len(h.terms) + len(g.terms)) // 8)


class StandardBasis:
    """A completed basis: minimal (pairwise non-divisible leading terms),
    monic, sorted with the largest leading monomial first."""

    __slots__ = ("gens", "ring")

    def __init__(self, gens: Tuple[Polynomial, ...], ring: Ring):
        self.gens = gens
        self.ring = ring

    @property
    def ordering(self) -> OrderingTag:
        return self.ring.ordering

    def leading_monomials(self) -> Tuple[Mono, ...]:
        return tuple(g.lm() for g in self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __repr__(self):
        return f"StandardBasis({[str(g) for g in self.gens]}, {self.ring!r})"


def spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    """S-polynomial: cancel the leading terms of f and g against their lcm."""
    p = f.ring.p
    lmf, lmg = f.lm(), g.lm()
    lcm = mono_lcm(lmf, lmg)
    a = f.term_mul(inv_mod(f.lc(), p), mono_quot(lcm, lmf))
    b = g.term_mul(inv_mod(g.lc(), p), mono_quot(lcm, lmg))
    return a - b


def _reduce_step(h: Polynomial, g: Polynomial) -> Polynomial:
    """Cancel the leading term of h against g (LM(g) must divide LM(h))."""
    p = h.ring.p
    c = (h.lc() * inv_mod(g.lc(), p)) % p
    return h - g.term_mul(c, mono_quot(h.lm(), g.lm()))


def _global_nf(f: Polynomial, gens: Sequence[Polynomial], budget: _Budget) -> Polynomial:
    """Fully reduced normal form for a well-ordering: no term of the result
    is divisible by any leading monomial of gens."""
    remainder_terms = []
    h = f
    while not h.is_zero:
        lm = h.lm()
        for g in gens:
            if mono_divides(g.lm(), lm):
                budget.step(h, g)
                h = _reduce_step(h, g)
                break
        else:
            remainder_terms.append(h.terms[0])
            h = h.tail()
    return Polynomial(f.ring, tuple(remainder_terms))


def _mora_nf(f: Polynomial, gens: Sequence[Polynomial], budget: _Budget) -> Polynomial:
    """Mora weak normal form with ecart-minimizing reducer selection and
    stable tie-breaking by reducer index."""
    reducers: List[Tuple[Polynomial, int]] = [(g, g.ecart()) for g in gens]
    h = f
    while not h.is_zero:
        lm = h.lm()
        best = None
        for idx, (g, ec) in enumerate(reducers):
            if mono_divides(g.lm(), lm):
                if best is None or ec < best[0]:
                    best = (ec, idx)
        if best is None:
            return h
        ec, idx = best
        if ec > h.ecart():
            reducers.append((h, h.ecart()))
        budget.step(h, reducers[idx][0])
        h = _reduce_step(h, reducers[idx][0])
    return h


def _nf_with_trace(f: Polynomial, gens: Sequence[Polynomial]):
    """Normal form with an explicit certificate, for self-checks.

    Returns (nf, u, quots) with  u*f = sum(quots[i]*gens[i]) + nf,  where u
    is a polynomial with nonzero constant term (a unit of the localization;
    identically 1 under the global ordering).
    """
    ring = f.ring
    local = ring.ordering == OrderingTag.LOCAL_NEG_DEGREVLEX
    budget = _Budget(DEFAULT_STEP_CAP)
    one, zero = ring.one(), ring.zero()
    # Each working element carries its decomposition  h = u*f - sum q_i g_i.
    reducers = [(g, g.ecart(), None) for g in gens]  # None: an original generator
    h, u, quots = f, one, [zero] * len(gens)
    remainder_terms: List = []
    while not h.is_zero:
        lm = h.lm()
        best = None
        for idx, (g, ec, _) in enumerate(reducers):
            if mono_divides(g.lm(), lm):
                if best is None or ec < best[0]:
                    best = (ec, idx)
        if best is None:
            if local:
                break
            remainder_terms.append(h.terms[0])
            h = h.tail()
            continue
        _, idx = best
        g, ec, payload = reducers[idx]
        if local and ec > h.ecart():
            reducers.append((h, h.ecart(), (u, list(quots))))
        budget.spend()
        p = ring.p
        c = (h.lc() * inv_mod(g.lc(), p)) % p
        mult = mono_quot(h.lm(), g.lm())
        h = h - g.term_mul(c, mult)
        if payload is None:
            quots[idx] = quots[idx] + gens[idx].ring.one().term_mul(c, mult)
        else:
            gu, gq = payload
            u = u - gu.term_mul(c, mult)
            quots = [q - qq.term_mul(c, mult) for q, qq in zip(quots, gq)]
    nf = Polynomial(ring, tuple(remainder_terms)) if remainder_terms else h
    return nf, u, quots


def normal_form(f: Polynomial, basis, step_cap: Optional[int] = None) -> Polynomial:
    """Normal form of f modulo a (completed) basis.

    Global ordering: the fully reduced remainder.  Local ordering: the Mora
    weak normal form; zero exactly when f lies in the ideal inside the
    localization at the origin.
    """
    gens = tuple(basis)
    if gens:
        for g in gens:
            f._check_ring(g)
    budget = _Budget(step_cap or DEFAULT_STEP_CAP)
    if f.ring.ordering == OrderingTag.GLOBAL_DEGREVLEX:
        return _global_nf(f, gens, budget)
    return _mora_nf(f, gens, budget)


def _prepare(gens: Sequence[Polynomial]) -> List[Polynomial]:
    out = []
    seen = set()
    for g in gens:
        if g.is_zero:
            continue
        g = g.monic()
        if g.terms in seen:
            continue
        seen.add(g.terms)
        out.append(g)
    ring = gens[0].ring
    out.sort(key=lambda g: ring.key(g.lm()), reverse=True)
    return out


def complete_basis(gens: Sequence[Polynomial], step_cap: Optional[int] = None) -> StandardBasis:
    """Complete generators to a Groebner basis (global) or standard basis
    (local) of the ideal they generate.

    Pair selection is the normal strategy: minimal lcm degree first, ties
    broken by the lcm monomial and the pair indices for reproducibility.
    """
    gens = list(gens)
    if not gens:
        raise UsageError("complete_basis needs at least one generator")
    ring = gens[0].ring
    for g in gens[1:]:
        gens[0]._check_ring(g)
    budget = _Budget(step_cap or DEFAULT_STEP_CAP)
    is_global = ring.ordering == OrderingTag.GLOBAL_DEGREVLEX
    nf = _global_nf if is_global else _mora_nf

    basis = _prepare(gens)
    if not basis:
        return StandardBasis((), ring)

    pairs = {(i, j) for j in range(len(basis)) for i in range(j)}

    def pair_rank(pair):
        i, j = pair
        lcm = mono_lcm(basis[i].lm(), basis[j].lm())
        return (mono_deg(lcm), ring.key(lcm), j, i)

    while pairs:
        budget.spend()
        i, j = min(pairs, key=pair_rank)
        pairs.remove((i, j))
        lmi, lmj = basis[i].lm(), basis[j].lm()
        lcm = mono_lcm(lmi, lmj)
        if is_global and lcm == mono_mul(lmi, lmj):
            continue  # coprime leading monomials: S-pair reduces to zero
        h = nf(spoly(basis[i], basis[j]), basis, budget)
        if not h.is_zero:
            basis.append(h.monic())
            k = len(basis) - 1
            pairs.update((i2, k) for i2 in range(k))

    return _minimalize(basis, ring, budget, is_global)


def _minimalize(basis: List[Polynomial], ring: Ring, budget: _Budget,
                is_global: bool) -> StandardBasis:
    # Drop elements whose leading monomial is divisible by another's; the
    # remaining leading terms still generate the leading ideal.
    order = sorted(range(len(basis)), key=lambda i: (mono_deg(basis[i].lm()), ring.key(basis[i].lm())))
    kept: List[Polynomial] = []
    for i in order:
        lm = basis[i].lm()
        if not any(mono_divides(g.lm(), lm) for g in kept):
            kept.append(basis[i])
    if is_global:
        # Tail-reduce to the unique reduced Groebner basis.
        changed = True
        while changed:
            changed = False
            for i in range(len(kept)):
                others = kept[:i] + kept[i + 1:]
                r = _global_nf(kept[i], others, budget).monic()
                if r != kept[i]:
                    kept[i] = r
                    changed = True
    kept.sort(key=lambda g: ring.key(g.lm()), reverse=True)
    return StandardBasis(tuple(kept), ring)


def s_pairs_reduce_to_zero(basis: StandardBasis, step_cap: Optional[int] = None) -> bool:
    """Buchberger's criterion as a self-check: every S-pair of the completed
    basis has normal form zero.  No skipping criteria are applied."""
    gens = basis.gens
    for i, j in itertools.combinations(range(len(gens)), 2):
        if not normal_form(spoly(gens[i], gens[j]), basis, step_cap).is_zero:
            return False
    return True


def leading_ideal(basis: StandardBasis) -> Tuple[Mono, ...]:
    """Minimal generating set of the leading term ideal."""
    lms = sorted(set(basis.leading_monomials()), key=mono_deg)
    minimal: List[Mono] = []
    for m in lms:
        if not any(mono_divides(g, m) for g in minimal):
            minimal.append(m)
    return tuple(minimal)


def is_dimension_zero(basis: StandardBasis) -> bool:
    """True iff every variable has a pure power inside the leading ideal.

    Under the local ordering this says the ideal is primary to the maximal
    ideal at the origin; under the global one, that the quotient ring is a
    finite-dimensional vector space.
    """
    n = basis.ring.nvars
    lms = basis.leading_monomials()
    unit = (0,) * n
    if unit in lms:
        return True
    for i in range(n):
        if not any(m[i] > 0 and sum(m) == m[i] for m in lms):
            return False
    return True


def standard_monomial_count(basis: StandardBasis):
    """Number of monomials outside the leading ideal; INFINITE when the
    quotient has positive dimension.

    For a dimension-zero local standard basis this is the length of the
    Artinian quotient of the localization at the origin.
    """
    n = basis.ring.nvars
    lms = leading_ideal(basis)
    unit = (0,) * n
    if unit in lms:
        return 0
    if not is_dimension_zero(basis):
        return INFINITE
    bounds = tuple(min(m[i] for m in lms if m[i] > 0 and sum(m) == m[i])
                   for i in range(n))
    # Inclusion-exclusion over the minimal generators inside the bounding
    # box: a subset contributes (-1)^|S| * prod(b_i - lcm(S)_i).  Subsets
    # whose lcm leaves the box contribute zero, as do all their supersets,
    # which keeps the search tree small for the antichain of generators.
    total = 0

    def walk(idx: int, lcm: Mono, sign: int):
        nonlocal total
        if idx == len(lms):
            prod = 1
            for l, b in zip(lcm, bounds):
                prod *= b - l
            total += sign * prod
            return
        walk(idx + 1, lcm, sign)
        merged = tuple(max(l, g) for l, g in zip(lcm, lms[idx]))
        if all(l < b for l, b in zip(merged, bounds)):
            walk(idx + 1, merged, -sign)

    walk(0, unit, 1)
    return total
