"""Primality predicates for proper elements and their residual characterizations.

Every predicate quantifies over all ordered pairs of the carrier (in a finite
lattice every element is compact, so compact-pair and all-pair readings
coincide) and rejects the top element: primality of an improper element is a
caller error, not a false answer.  False answers come with the
lexicographically first violating pair, which makes reports deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .derived import radical, residual
from .lattice import FiniteMultiplicativeLattice
from .maps import Expansion, PhiMap


def _require_proper(L: FiniteMultiplicativeLattice, p: int) -> None:
    if p == L.top:
        raise ValueError(
            f"{L.label(p)} is the top of {L.name}; primality needs a proper element"
        )


def _excused(L: FiniteMultiplicativeLattice, phi: PhiMap, ab: int, p: int) -> bool:
    """Whether the product ab is excused from the test at p."""
    return not phi.none and L.leq(ab, phi.table[p])


def _phi_residual(L: FiniteMultiplicativeLattice, phi: PhiMap, q: int, a: int) -> int:
    """(phi(q) : a); for the none kind no x satisfies xa <= phi(q), so join {} = bottom."""
    if phi.none:
        return L.bottom
    return residual(L, phi.table[q], a)


@lru_cache(maxsize=None)
def prime_violation(L, p):
    _require_proper(L, p)
    for a in range(L.n):
        for b in range(L.n):
            if L.leq(L.mul(a, b), p) and not (L.leq(a, p) or L.leq(b, p)):
                return (a, b)
    return None


@lru_cache(maxsize=None)
def primary_violation(L, p):
    _require_proper(L, p)
    r = radical(L, p)
    for a in range(L.n):
        for b in range(L.n):
            if L.leq(L.mul(a, b), p) and not (L.leq(a, p) or L.leq(b, r)):
                return (a, b)
    return None


@lru_cache(maxsize=None)
def delta_primary_violation(L, delta: Expansion, p):
    _require_proper(L, p)
    dp = delta.table[p]
    for a in range(L.n):
        for b in range(L.n):
            if L.leq(L.mul(a, b), p) and not (L.leq(a, p) or L.leq(b, dp)):
                return (a, b)
    return None


@lru_cache(maxsize=None)
def phi_prime_violation(L, phi: PhiMap, p):
    _require_proper(L, p)
    for a in range(L.n):
        for b in range(L.n):
            ab = L.mul(a, b)
            if not L.leq(ab, p) or _excused(L, phi, ab, p):
                continue
            if not (L.leq(a, p) or L.leq(b, p)):
                return (a, b)
    return None


@lru_cache(maxsize=None)
def phi_primary_violation(L, phi: PhiMap, p):
    _require_proper(L, p)
    r = radical(L, p)
    for a in range(L.n):
        for b in range(L.n):
            ab = L.mul(a, b)
            if not L.leq(ab, p) or _excused(L, phi, ab, p):
                continue
            if not (L.leq(a, p) or L.leq(b, r)):
                return (a, b)
    return None


@lru_cache(maxsize=None)
def phi_delta_primary_violation(L, delta: Expansion, phi: PhiMap, p):
    """First (a, b) with ab <= p, ab not excused, a !<= p, b !<= delta(p)."""
    _require_proper(L, p)
    dp = delta.table[p]
    for a in range(L.n):
        for b in range(L.n):
            ab = L.mul(a, b)
            if not L.leq(ab, p) or _excused(L, phi, ab, p):
                continue
            if not (L.leq(a, p) or L.leq(b, dp)):
                return (a, b)
    return None


@lru_cache(maxsize=None)
def n_potent_violation(L, delta: Expansion, p, k: int):
    """First (a, b) with ab <= p^k but a !<= p and b !<= delta(p); k >= 2."""
    _require_proper(L, p)
    if k < 2:
        raise ValueError(f"potency exponent must be >= 2, got {k}")
    target = L.power(p, k)
    dp = delta.table[p]
    for a in range(L.n):
        for b in range(L.n):
            if L.leq(L.mul(a, b), target) and not (L.leq(a, p) or L.leq(b, dp)):
                return (a, b)
    return None


@lru_cache(maxsize=None)
def compact_pair_violation(L, delta: Expansion, phi: PhiMap, q):
    """Pair-swapped form: rs <= q unexcused implies s <= q or r <= delta(q)."""
    _require_proper(L, q)
    dq = delta.table[q]
    for r in range(L.n):
        for s in range(L.n):
            rs = L.mul(r, s)
            if not L.leq(rs, q) or _excused(L, phi, rs, q):
                continue
            if not (L.leq(s, q) or L.leq(r, dq)):
                return (r, s)
    return None


def is_prime(L, p) -> bool:
    return prime_violation(L, p) is None


def is_primary(L, p) -> bool:
    return primary_violation(L, p) is None


def is_delta_primary(L, delta, p) -> bool:
    return delta_primary_violation(L, delta, p) is None


def is_phi_prime(L, phi, p) -> bool:
    return phi_prime_violation(L, phi, p) is None


def is_phi_primary(L, phi, p) -> bool:
    return phi_primary_violation(L, phi, p) is None


def is_phi_delta_primary(L, delta, phi, p) -> bool:
    return phi_delta_primary_violation(L, delta, phi, p) is None


def is_n_potent_delta_primary(L, delta, p, k) -> bool:
    return n_potent_violation(L, delta, p, k) is None


@lru_cache(maxsize=None)
def characterization_A_witness(L, delta: Expansion, phi: PhiMap, q):
    """First a with a !<= delta(q) where (q:a) is neither q nor (phi(q):a)."""
    _require_proper(L, q)
    dq = delta.table[q]
    for a in range(L.n):
        if L.leq(a, dq):
            continue
        res = residual(L, q, a)
        if res != q and res != _phi_residual(L, phi, q, a):
            return a
    return None


@lru_cache(maxsize=None)
def characterization_B_witness(L, delta: Expansion, phi: PhiMap, q):
    """First a with a !<= q where (q:a) !<= delta(q) and (q:a) != (phi(q):a)."""
    _require_proper(L, q)
    dq = delta.table[q]
    for a in range(L.n):
        if L.leq(a, q):
            continue
        res = residual(L, q, a)
        if not L.leq(res, dq) and res != _phi_residual(L, phi, q, a):
            return a
    return None


def residual_characterization_A(L, delta, phi, q) -> bool:
    return characterization_A_witness(L, delta, phi, q) is None


def residual_characterization_B(L, delta, phi, q) -> bool:
    return characterization_B_witness(L, delta, phi, q) is None


@dataclass(frozen=True)
class ClassificationRecord:
    """Flags for one proper element; every false flag carries a witness."""

    element: str
    flags: dict[str, bool] = field(compare=False)
    witnesses: dict[str, tuple[str, ...]] = field(compare=False)

    def to_dict(self) -> dict:
        return {
            "element": self.element,
            "flags": dict(self.flags),
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
        }


@dataclass(frozen=True)
class ClassificationReport:
    lattice: str
    delta: str
    phi: str
    records: tuple[ClassificationRecord, ...]

    def record(self, label: str) -> ClassificationRecord:
        for rec in self.records:
            if rec.element == label:
                return rec
        raise ValueError(f"no record for element {label!r}")

    def to_dict(self) -> dict:
        return {
            "lattice": self.lattice,
            "delta": self.delta,
            "phi": self.phi,
            "elements": [rec.to_dict() for rec in self.records],
        }


def classification_report(
    L: FiniteMultiplicativeLattice,
    delta: Expansion,
    phi: PhiMap,
    potency: tuple[int, ...] = (2, 3, 4),
) -> ClassificationReport:
    """Classify every proper element under the given delta and phi.

    Alongside the ambient-delta potency flags, 2_potent_d0_primary is always
    included because separations against the identity expansion are the ones
    the golden examples need.
    """
    from .maps import make_delta  # local: avoids importing at module load for cycles

    d0 = make_delta(L, "d0")
    phi0 = PhiMap(L, (L.bottom,) * L.n, "phi0", "phi0")
    records = []
    for p in L.proper_elements:
        flags: dict[str, bool] = {}
        witnesses: dict[str, tuple[str, ...]] = {}

        def put(name, violation):
            flags[name] = violation is None
            if violation is not None:
                w = violation if isinstance(violation, tuple) else (violation,)
                witnesses[name] = tuple(L.label(x) for x in w)

        put("prime", prime_violation(L, p))
        put("primary", primary_violation(L, p))
        put("delta_primary", delta_primary_violation(L, delta, p))
        put("weakly_delta_primary", phi_delta_primary_violation(L, delta, phi0, p))
        put("phi_prime", phi_prime_violation(L, phi, p))
        put("phi_primary", phi_primary_violation(L, phi, p))
        put("phi_delta_primary", phi_delta_primary_violation(L, delta, phi, p))
        for k in potency:
            put(f"{k}_potent_delta_primary", n_potent_violation(L, delta, p, k))
        put("2_potent_d0_primary", n_potent_violation(L, d0, p, 2))
        sq = L.power(p, 2)
        flags["idempotent"] = sq == p
        if sq != p:
            witnesses["idempotent"] = (L.label(p), L.label(sq))
        records.append(
            ClassificationRecord(element=L.label(p), flags=flags, witnesses=witnesses)
        )
    return ClassificationReport(
        lattice=L.name, delta=delta.tag, phi=phi.tag, records=tuple(records)
    )
