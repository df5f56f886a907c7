"""Which degrees carry a nonsingular invariant curve.

Everything here is integer arithmetic on the degrees (a, b, c) of the three
basic invariants F, Phi, Psi.  A degree-d invariant curve is a combination
of the monomials F^i Phi^j Psi^k with a*i + b*j + c*k = d; for d >= c the
answer is governed by six numerical conditions, below c by inspecting the
short list of monomials directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .groups import DEGREES

GROUP_IDS = ("V", "I", "K")

# residues mod c admitting a nonsingular member, per group
NONSINGULAR_RESIDUES = {"V": (30, (0, 6, 12)), "I": (10, (0, 2, 6)), "K": (14, (0, 4, 6))}


@dataclass(frozen=True)
class DegreeProfile:
    group_id: str
    a: int
    b: int
    c: int
    x_deg: int

    @property
    def degrees(self) -> tuple:
        return (self.a, self.b, self.c)


def profile(group_id: str) -> DegreeProfile:
    if group_id not in DEGREES:
        raise KeyError(f"unknown group {group_id!r}; expected one of V, I, K")
    a, b, c, e = DEGREES[group_id]
    return DegreeProfile(group_id, a, b, c, e)


@dataclass(frozen=True)
class LinearSystemBasis:
    group_id: str
    d: int
    solutions: tuple  # (i, j, k), sorted descending

    def __len__(self):
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)

    def __bool__(self):
        return bool(self.solutions)

    def to_json(self) -> list:
        return [list(s) for s in self.solutions]


def basis(group_id: str, d: int) -> LinearSystemBasis:
    """All (i, j, k) >= 0 with a*i + b*j + c*k = d."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    p = profile(group_id)
    out = []
    for k in range(d // p.c + 1):
        for j in range((d - p.c * k) // p.b + 1):
            r = d - p.c * k - p.b * j
            if r % p.a == 0:
                out.append((r // p.a, j, k))
    return LinearSystemBasis(group_id, d, tuple(sorted(out, reverse=True)))


def representable(d: int, p: int, q: int) -> bool:
    """Is d = p*s + q*t for some s, t >= 0?"""
    if p < 1 or q < 1:
        raise ValueError("generators must be positive")
    if d < 0:
        return False
    if d % gcd(p, q):
        return False
    return any((d - p * s) % q == 0 for s in range(d // p + 1))


def residue_condition(d: int, modulus: int, others: tuple) -> bool:
    """d is congruent to 0 or one of ``others`` modulo ``modulus``."""
    return d % modulus in {0} | {o % modulus for o in others}


def six_conditions(group_id: str, d: int) -> dict:
    """Evaluate conditions 1..6; keys are the condition numbers."""
    p = profile(group_id)
    a, b, c = p.a, p.b, p.c
    return {
        1: representable(d, b, c),
        2: representable(d, a, c),
        3: representable(d, a, b),
        4: residue_condition(d, c, (a, b)),
        5: residue_condition(d, b, (a, c)),
        6: residue_condition(d, a, (b, c)),
    }


def boundary_conditions(group_id: str) -> dict:
    """Conditions 1..3 at d = c, computed rather than assumed."""
    c = profile(group_id).c
    conds = six_conditions(group_id, c)
    return {n: conds[n] for n in (1, 2, 3)}


def closed_form_nonsingular(group_id: str, d: int) -> bool:
    if d < 1:
        raise ValueError("degree must be positive")
    modulus, residues = NONSINGULAR_RESIDUES[group_id]
    return d % modulus in residues


@dataclass
class NonsingularDecision:
    group_id: str
    d: int
    exists: bool
    failed_conditions: list = field(default_factory=list)
    low_degree_case: str | None = None
    basis: LinearSystemBasis | None = None

    def to_json(self) -> dict:
        return {
            "group": self.group_id,
            "degree": self.d,
            "exists": self.exists,
            "failed_conditions": list(self.failed_conditions),
            "low_degree_case": self.low_degree_case,
            "basis": self.basis.to_json() if self.basis is not None else [],
        }


# tags for the low-degree regime
EMPTY = "empty"
ODD = "odd-degree"
FUNDAMENTAL = "fundamental-invariant"
NONREDUCED = "nonreduced"
REDUCIBLE = "reducible"
COMMON_FACTOR = "common-factor"
BINARY_FORM = "binary-form-factors"
BASE_LOCUS = "singular-at-base-locus"
UNRESOLVED = "unresolved"

# tags meaning every member is reducible or nonreduced
NOT_INTEGRAL_TAGS = frozenset({EMPTY, ODD, NONREDUCED, REDUCIBLE, COMMON_FACTOR, BINARY_FORM})


def _perfect_power(triple) -> bool:
    nz = [e for e in triple if e]
    return bool(nz) and gcd(*nz) > 1


def low_degree_case(group_id: str, d: int) -> tuple:
    """(exists, tag) for d < c from the monomial list alone."""
    p = profile(group_id)
    sols = basis(group_id, d).solutions
    if d % 2:
        return False, ODD
    if not sols:
        return False, EMPTY
    degs = p.degrees
    # a lone F_l of degree d: V(F_l) is a smooth curve
    for (i, j, k) in sols:
        if sorted((i, j, k)) == [0, 0, 1]:
            return True, FUNDAMENTAL
    if len(sols) == 1:
        return False, NONREDUCED if _perfect_power(sols[0]) else REDUCIBLE
    for l in range(3):
        if all(s[l] >= 1 for s in sols) and d > degs[l]:
            return False, COMMON_FACTOR
    # weighted binary form in two of the invariants with >= 3 terms splits
    for l in range(3):
        if all(s[l] == 0 for s in sols) and len(sols) >= 3:
            return False, BINARY_FORM
    for m, n in ((0, 1), (0, 2), (1, 2)):
        if all(s[m] + s[n] >= 2 for s in sols):
            return False, BASE_LOCUS
    return False, UNRESOLVED


def decide_nonsingular(group_id: str, d: int) -> NonsingularDecision:
    """Is there a nonsingular curve of degree d invariant under the group?"""
    if d < 1:
        raise ValueError("degree must be positive")
    p = profile(group_id)
    b = basis(group_id, d)
    if d >= p.c:
        conds = six_conditions(group_id, d)
        failed = [n for n, ok in conds.items() if not ok]
        tag = ODD if d % 2 else None
        return NonsingularDecision(group_id, d, not failed, failed, tag, b)
    exists, tag = low_degree_case(group_id, d)
    return NonsingularDecision(group_id, d, exists, [], tag, b)


def nonsingular_table(group_id: str, max_degree: int = 100) -> list:
    return [decide_nonsingular(group_id, d) for d in range(1, max_degree + 1)]
