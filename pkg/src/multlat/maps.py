"""Unary maps on a lattice: expansion functions, phi maps, isomorphisms.

An expansion (delta) is inflationary and monotone; the stock kinds are d0
(identity) and d1 (radical).  A phi map sends each element somewhere at or
below itself; the stock chain is phi0 (constant bottom) <= phiomega <= ...
<= phi3 <= phi2 <= phi1 (identity), plus a flagged "none" kind that excuses
nothing, making phi-delta-primary degenerate to delta-primary.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .derived import omega_power, radical
from .lattice import FiniteMultiplicativeLattice


class MapValidationError(ValueError):
    """A table fails the defining inequalities of its map kind."""

    def __init__(self, message: str, witness: tuple[int, ...]):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class UnaryMap:
    """A total map on the carrier, stored as an index table."""

    lattice: FiniteMultiplicativeLattice
    table: tuple[int, ...]
    tag: str

    def apply(self, a: int) -> int:
        return self.table[a]


@dataclass(frozen=True)
class Expansion(UnaryMap):
    kind: str  # d0 | d1 | table


@dataclass(frozen=True)
class PhiMap(UnaryMap):
    kind: str  # none | phi0 | phi1 | phi2 | phin | phiomega | table

    @property
    def none(self) -> bool:
        """True for the kind that excuses no product at all."""
        return self.kind == "none"


def _check_table(L: FiniteMultiplicativeLattice, table) -> tuple[int, ...]:
    table = tuple(int(v) for v in table)
    if len(table) != L.n or any(not 0 <= v < L.n for v in table):
        raise MapValidationError("map table does not index the carrier", ())
    return table


def make_delta(
    L: FiniteMultiplicativeLattice,
    kind: str,
    table=None,
    tag: str | None = None,
) -> Expansion:
    """Build an expansion function: d0 (identity), d1 (radical), or a table.

    Table kinds are validated: a <= delta(a) everywhere and a <= b implies
    delta(a) <= delta(b); the first violating pair is reported.
    """
    kind = kind.strip().lower()
    if kind == "d0":
        return Expansion(L, tuple(range(L.n)), tag or "d0", "d0")
    if kind == "d1":
        return Expansion(L, tuple(radical(L, a) for a in range(L.n)), tag or "d1", "d1")
    if kind != "table":
        raise ValueError(f"unknown expansion kind {kind!r}")
    t = _check_table(L, table)
    for a in range(L.n):
        if not L.leq(a, t[a]):
            raise MapValidationError(
                f"not inflationary at {L.label(a)}", (a, t[a])
            )
    for a in range(L.n):
        for b in range(L.n):
            if L.leq(a, b) and not L.leq(t[a], t[b]):
                raise MapValidationError(
                    f"not monotone at ({L.label(a)}, {L.label(b)})", (a, b)
                )
    return Expansion(L, t, tag or "table", "table")


_PHI_N = re.compile(r"^phi(\d+)$")


def make_phi(
    L: FiniteMultiplicativeLattice,
    kind: str,
    k: int | None = None,
    table=None,
    tag: str | None = None,
) -> PhiMap:
    """Build a phi map.

    Kinds: none, phi0, phi1, phi2, phin (with k > 2), phiomega, table.
    Shorthand "phi5" is accepted for phin with k=5.  Table kinds are
    normalized pointwise by meeting with the identity so phi(p) <= p holds.
    """
    kind = kind.strip().lower()
    m = _PHI_N.match(kind)
    if m and int(m.group(1)) > 2:
        kind, k = "phin", int(m.group(1))
    if kind == "none":
        return PhiMap(L, (L.bottom,) * L.n, tag or "none", "none")
    if kind == "phi0":
        return PhiMap(L, (L.bottom,) * L.n, tag or "phi0", "phi0")
    if kind == "phi1":
        return PhiMap(L, tuple(range(L.n)), tag or "phi1", "phi1")
    if kind == "phi2":
        return PhiMap(L, tuple(L.power(a, 2) for a in range(L.n)), tag or "phi2", "phi2")
    if kind == "phin":
        if k is None or k <= 2:
            raise ValueError("phin requires an exponent k > 2")
        return PhiMap(L, tuple(L.power(a, k) for a in range(L.n)), tag or f"phi{k}", "phin")
    if kind == "phiomega":
        return PhiMap(
            L, tuple(omega_power(L, a) for a in range(L.n)), tag or "phiomega", "phiomega"
        )
    if kind != "table":
        raise ValueError(f"unknown phi kind {kind!r}")
    t = _check_table(L, table)
    t = tuple(L.glb(a, t[a]) for a in range(L.n))
    return PhiMap(L, t, tag or "table", "table")


def map_leq(g1: UnaryMap, g2: UnaryMap) -> bool:
    """Pointwise comparison g1(a) <= g2(a) on a shared lattice.

    The flagged "none" phi kind sits strictly below every real map: it
    compares below anything, and nothing but none compares below it.
    """
    L = g1.lattice
    if g2.lattice != L:
        raise ValueError("map_leq requires maps on the same lattice")
    if getattr(g1, "none", False):
        return True
    if getattr(g2, "none", False):
        return False
    return all(L.leq(g1.table[a], g2.table[a]) for a in range(L.n))


def is_monotone(g: UnaryMap) -> bool:
    L = g.lattice
    for a in range(L.n):
        for b in range(L.n):
            if L.leq(a, b) and not L.leq(g.table[a], g.table[b]):
                return False
    return True


@dataclass(frozen=True)
class Isomorphism:
    """An order- and multiplication-preserving bijection between lattices."""

    source: FiniteMultiplicativeLattice
    target: FiniteMultiplicativeLattice
    forward: tuple[int, ...]
    inverse: tuple[int, ...]

    def apply(self, a: int) -> int:
        return self.forward[a]

    def pull_back(self, b: int) -> int:
        return self.inverse[b]

    def describe(self) -> str:
        pairs = ", ".join(
            f"{self.source.label(i)}->{self.target.label(self.forward[i])}"
            for i in range(self.source.n)
        )
        return f"{self.source.name}->{self.target.name}[{pairs}]"


def _signature(L: FiniteMultiplicativeLattice, i: int) -> tuple[int, int, int, int]:
    below = sum(L.leq_table[j][i] for j in range(L.n))
    above = sum(L.leq_table[i][j] for j in range(L.n))
    square_below = sum(L.leq_table[j][L.mul(i, i)] for j in range(L.n))
    return (below, above, square_below, int(L.mul(i, i) == i))


def enumerate_isomorphisms(
    L1: FiniteMultiplicativeLattice, L2: FiniteMultiplicativeLattice
) -> tuple[Isomorphism, ...]:
    """All order+multiplication isomorphisms L1 -> L2, in lexicographic order
    of the forward assignment.  Backtracks over order-compatible images and
    checks multiplication on complete assignments (carriers here are small).
    """
    n = L1.n
    if L2.n != n:
        return ()
    sig1 = [_signature(L1, i) for i in range(n)]
    sig2 = [_signature(L2, j) for j in range(n)]
    candidates = [[j for j in range(n) if sig2[j] == sig1[i]] for i in range(n)]
    if any(not c for c in candidates):
        return ()

    found: list[Isomorphism] = []
    forward = [-1] * n
    used = [False] * n

    def ok_partial(i: int, j: int) -> bool:
        for i2 in range(i):
            j2 = forward[i2]
            if L1.leq_table[i][i2] != L2.leq_table[j][j2]:
                return False
            if L1.leq_table[i2][i] != L2.leq_table[j2][j]:
                return False
        return True

    def full_mul_ok() -> bool:
        for a in range(n):
            for b in range(a, n):
                if forward[L1.mul(a, b)] != L2.mul(forward[a], forward[b]):
                    return False
        return True

    def extend(i: int):
        if i == n:
            if full_mul_ok():
                inv = [0] * n
                for a, b in enumerate(forward):
                    inv[b] = a
                found.append(Isomorphism(L1, L2, tuple(forward), tuple(inv)))
            return
        for j in candidates[i]:
            if used[j] or not ok_partial(i, j):
                continue
            forward[i] = j
            used[j] = True
            extend(i + 1)
            used[j] = False
            forward[i] = -1

    extend(0)
    return tuple(found)


def is_automorphism_table(L: FiniteMultiplicativeLattice, table: tuple[int, ...]) -> bool:
    """Whether a table is an order+multiplication automorphism of L."""
    if sorted(table) != list(range(L.n)):
        return False
    for a in range(L.n):
        for b in range(L.n):
            if L.leq_table[a][b] != L.leq_table[table[a]][table[b]]:
                return False
            if table[L.mul(a, b)] != L.mul(table[a], table[b]):
                return False
    return True


def global_property_witness(
    f: Isomorphism, beta_source: UnaryMap, beta_target: UnaryMap
) -> int | None:
    """First target element a with beta_source(f^-1(a)) != f^-1(beta_target(a)).

    By commutativity of the diagram this is equivalent to the forward form
    f(beta_source(q)) = beta_target(f(q)) for all source q.
    """
    if beta_source.lattice != f.source or beta_target.lattice != f.target:
        raise ValueError("maps must live on the isomorphism's source and target")
    for a in range(f.target.n):
        if beta_source.table[f.inverse[a]] != f.inverse[beta_target.table[a]]:
            return a
    return None


def check_global_property(
    f: Isomorphism, beta_source: UnaryMap, beta_target: UnaryMap
) -> bool:
    return global_property_witness(f, beta_source, beta_target) is None


def parse_map_table(text: str, L: FiniteMultiplicativeLattice) -> tuple[int, ...]:
    """Parse a unary-map table: one "<from> <to>" label pair per line.

    Blank lines and '#' comments are ignored; every carrier element must be
    assigned exactly once.
    """
    table: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected '<from> <to>', got {raw!r}")
        src, dst = (L.index_of(p) for p in parts)
        if src in table:
            raise ValueError(f"line {lineno}: duplicate entry for {parts[0]}")
        table[src] = dst
    missing = [L.label(i) for i in range(L.n) if i not in table]
    if missing:
        raise ValueError(f"map table missing entries for: {', '.join(missing)}")
    return tuple(table[i] for i in range(L.n))
