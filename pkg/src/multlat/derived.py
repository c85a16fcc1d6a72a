"""Residuation, radicals, power meets, and element/structure profiles."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .lattice import FiniteMultiplicativeLattice


@lru_cache(maxsize=None)
def _residual_table(L: FiniteMultiplicativeLattice) -> tuple[tuple[int, ...], ...]:
    n = L.n
    return tuple(
        tuple(L.join(x for x in range(n) if L.leq(L.mul(x, b), a)) for b in range(n))
        for a in range(n)
    )


def residual(L: FiniteMultiplicativeLattice, a: int, b: int) -> int:
    """(a : b), the largest x with x*b <= a."""
    return _residual_table(L)[a][b]


@lru_cache(maxsize=None)
def _power_chain(L: FiniteMultiplicativeLattice, a: int) -> tuple[int, ...]:
    """Distinct values of a, a^2, a^3, ... until the chain repeats.

    Powers descend (a^(k+1) <= a^k), so the chain stabilizes within n steps
    and its last entry is the meet of all powers.
    """
    chain = [a]
    cur = a
    while True:
        cur = L.mul(cur, a)
        if cur == chain[-1]:
            return tuple(chain)
        chain.append(cur)


def omega_power(L: FiniteMultiplicativeLattice, a: int) -> int:
    """The stabilized power of a: meet over all a^k, k >= 1."""
    return _power_chain(L, a)[-1]


def power_stabilization(L: FiniteMultiplicativeLattice, a: int) -> int:
    """Least s >= 1 with a^s = a^(s+1)."""
    return len(_power_chain(L, a))


@lru_cache(maxsize=None)
def _radical_table(L: FiniteMultiplicativeLattice) -> tuple[int, ...]:
    # x has some power below a iff its stabilized power is below a,
    # because the power chain descends and is finite.
    n = L.n
    omegas = [omega_power(L, x) for x in range(n)]
    return tuple(
        L.join(x for x in range(n) if L.leq(omegas[x], a)) for a in range(n)
    )


def radical(L: FiniteMultiplicativeLattice, a: int) -> int:
    """sqrt(a): join of every x some power of which lies below a."""
    return _radical_table(L)[a]


def is_idempotent(L: FiniteMultiplicativeLattice, a: int) -> bool:
    return L.mul(a, a) == a


def is_nilpotent(L: FiniteMultiplicativeLattice, a: int) -> bool:
    """Some power of a equals bottom."""
    return omega_power(L, a) == L.bottom


def is_zero_divisor(L: FiniteMultiplicativeLattice, a: int) -> bool:
    """a != 0 and ab = 0 for some b != 0."""
    if a == L.bottom:
        return False
    return any(
        b != L.bottom and L.mul(a, b) == L.bottom for b in range(L.n)
    )


def is_meet_principal(L: FiniteMultiplicativeLattice, e: int) -> bool:
    """a ^ be = ((a:e) ^ b)e for all a, b."""
    for a in range(L.n):
        for b in range(L.n):
            lhs = L.glb(a, L.mul(b, e))
            rhs = L.mul(L.glb(residual(L, a, e), b), e)
            if lhs != rhs:
                return False
    return True


def is_join_principal(L: FiniteMultiplicativeLattice, e: int) -> bool:
    """(ae v b):e = (b:e) v a for all a, b."""
    for a in range(L.n):
        for b in range(L.n):
            lhs = residual(L, L.lub(L.mul(a, e), b), e)
            rhs = L.lub(residual(L, b, e), a)
            if lhs != rhs:
                return False
    return True


def is_principal(L: FiniteMultiplicativeLattice, e: int) -> bool:
    return is_meet_principal(L, e) and is_join_principal(L, e)


def has_restricted_cancellation(L: FiniteMultiplicativeLattice, a: int) -> bool:
    """ab = ac != 0 implies b = c."""
    products = [L.mul(a, b) for b in range(L.n)]
    for b in range(L.n):
        if products[b] == L.bottom:
            continue
        for c in range(b + 1, L.n):
            if products[b] == products[c]:
                return False
    return True


def is_maximal(L: FiniteMultiplicativeLattice, a: int) -> bool:
    """Proper, with no proper element strictly above."""
    if a == L.top:
        return False
    return all(not L.lt(a, x) or x == L.top for x in range(L.n))


def compact_elements(L: FiniteMultiplicativeLattice) -> tuple[int, ...]:
    """Every element of a finite lattice is compact.

    Any cover of x by a join is a finite cover already, so the whole carrier
    qualifies; quantifications over compact elements may range over all of L.
    """
    return tuple(range(L.n))


@dataclass(frozen=True)
class ElementProfile:
    element: int
    idempotent: bool
    nilpotent: bool
    zero_divisor: bool
    principal: bool
    restricted_cancellation: bool
    power_meet: int
    maximal: bool


def element_profile(L: FiniteMultiplicativeLattice, a: int) -> ElementProfile:
    return ElementProfile(
        element=a,
        idempotent=is_idempotent(L, a),
        nilpotent=is_nilpotent(L, a),
        zero_divisor=is_zero_divisor(L, a),
        principal=is_principal(L, a),
        restricted_cancellation=has_restricted_cancellation(L, a),
        power_meet=omega_power(L, a),
        maximal=is_maximal(L, a),
    )


@dataclass(frozen=True)
class StructureProfile:
    modular: bool
    principally_generated: bool
    noether: bool
    domain: bool
    quasi_local: bool
    local_noether: bool
    krull: bool
    maximal_elements: tuple[int, ...]


def is_modular(L: FiniteMultiplicativeLattice) -> bool:
    """a <= c implies a v (b ^ c) = (a v b) ^ c."""
    for a in range(L.n):
        for c in range(L.n):
            if not L.leq(a, c):
                continue
            for b in range(L.n):
                if L.lub(a, L.glb(b, c)) != L.glb(L.lub(a, b), c):
                    return False
    return True


def is_principally_generated(L: FiniteMultiplicativeLattice) -> bool:
    """Every element is the join of the principal elements below it."""
    principal = [e for e in range(L.n) if is_principal(L, e)]
    for a in range(L.n):
        if L.join(e for e in principal if L.leq(e, a)) != a:
            return False
    return True


def maximal_elements(L: FiniteMultiplicativeLattice) -> tuple[int, ...]:
    return tuple(a for a in range(L.n) if is_maximal(L, a))


@lru_cache(maxsize=None)
def structure_profile(L: FiniteMultiplicativeLattice) -> StructureProfile:
    """Whole-lattice classification flags.

    noether means modular and principally generated (the ascending chain
    condition is automatic at finite scale); local_noether additionally
    requires a unique maximal prime element; krull means the power meet of
    every proper element is bottom.
    """
    from .classify import is_prime  # deferred: classify imports this module

    modular = is_modular(L)
    pg = is_principally_generated(L)
    noether = modular and pg
    domain = not any(is_zero_divisor(L, a) for a in range(L.n))
    maxes = maximal_elements(L)
    primes = [p for p in L.proper_elements if is_prime(L, p)]
    maximal_primes = [
        p for p in primes if not any(q != p and L.lt(p, q) for q in primes)
    ]
    krull = all(omega_power(L, a) == L.bottom for a in L.proper_elements)
    return StructureProfile(
        modular=modular,
        principally_generated=pg,
        noether=noether,
        domain=domain,
        quasi_local=len(maxes) == 1,
        local_noether=noether and len(maximal_primes) == 1,
        krull=krull,
        maximal_elements=maxes,
    )
