"""Singularities of a general invariant curve and irreducibility certificates.

When no member of the degree-d system is smooth, a general member is
singular exactly at the deg F * deg Phi points where F = Phi = 0.  Near each
such point F and Phi are local coordinates s, t, and the member looks like
sum c_ij * unit * s^i t^j over the index set below, so the singularity type
is read off from which exponent pairs occur.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .decisions import (
    NOT_INTEGRAL_TAGS,
    basis,
    closed_form_nonsingular,
    decide_nonsingular,
    profile,
)


class SingularityType(str, enum.Enum):
    A1_NODE = "A1_node"
    A2_CUSP = "A2_cusp"
    A3_TACNODE = "A3_tacnode"
    A5 = "A5"
    D5_FAMILY = "D5_family"
    NONSINGULAR = "nonsingular"
    UNDEFINED = "undefined"

    def __str__(self):
        return self.value


# local intersection number of the two branches
MULTIPLICITY = {
    SingularityType.A1_NODE: 1,
    SingularityType.A3_TACNODE: 2,
    SingularityType.D5_FAMILY: 2,
    SingularityType.A5: 3,
}

# (group, residue, modulus, least degree, expected type)
SINGULARITY_TABLE = (
    ("V", 18, 30, 48, SingularityType.A1_NODE),
    ("V", 24, 30, 54, SingularityType.A3_TACNODE),
    ("I", 4, 10, 24, SingularityType.A3_TACNODE),
    ("I", 8, 10, 18, SingularityType.A1_NODE),
    ("K", 2, 14, 30, SingularityType.D5_FAMILY),
    ("K", 8, 14, 36, SingularityType.A5),
    ("K", 10, 14, 24, SingularityType.A1_NODE),
    ("K", 12, 14, 12, SingularityType.A2_CUSP),
)


def multiplicity(t: SingularityType) -> int | None:
    return MULTIPLICITY.get(SingularityType(t))


@dataclass(frozen=True)
class IndexSet:
    group_id: str
    d: int
    pairs: frozenset

    def __contains__(self, ij) -> bool:
        return tuple(ij) in self.pairs

    def __iter__(self):
        return iter(sorted(self.pairs))

    def __len__(self):
        return len(self.pairs)

    def all(self, pred) -> bool:
        return all(pred(i, j) for i, j in self.pairs)


def index_set(group_id: str, d: int) -> IndexSet:
    """Pairs (i, j) with (d - a*i - b*j)/c a nonnegative integer."""
    p = profile(group_id)
    pairs = set()
    for i in range(d // p.a + 1):
        for j in range((d - p.a * i) // p.b + 1):
            if (d - p.a * i - p.b * j) % p.c == 0:
                pairs.add((i, j))
    return IndexSet(group_id, d, frozenset(pairs))


def table_row(group_id: str, d: int):
    for row in SINGULARITY_TABLE:
        g, r, mod, floor, _ = row
        if g == group_id and d % mod == r and d >= floor:
            return row
    return None


def _both(I: IndexSet, p, q) -> bool:
    return p in I and q in I


def type_from_index_set(I: IndexSet) -> SingularityType:
    """Singularity at a point of F = Phi = 0 for a general member.

    Membership plus lower-bound patterns: node s^2 + t^2 (or st), cusp
    s^3 + t^2, tacnode s^4 + t^2, A5 s^2 + t^6, D5 s^4 + s t^2; each with
    the roles of s and t swappable.
    """
    if not I.pairs:
        return SingularityType.UNDEFINED
    if any(i + j <= 1 for i, j in I.pairs):
        return SingularityType.NONSINGULAR
    if (1, 1) in I or _both(I, (2, 0), (0, 2)):
        return SingularityType.A1_NODE
    for sw in (False, True):
        def has(i, j):
            return ((j, i) if sw else (i, j)) in I

        def holds(f):
            return I.all(lambda i, j: f(j, i) if sw else f(i, j))

        if has(3, 0) and has(0, 2) and holds(lambda i, j: 2 * i + 3 * j >= 6):
            return SingularityType.A2_CUSP
        if has(4, 0) and has(0, 2) and holds(lambda i, j: i + 2 * j >= 4):
            return SingularityType.A3_TACNODE
        if has(2, 0) and has(0, 6) and holds(lambda i, j: 3 * i + j >= 6):
            return SingularityType.A5
        if has(4, 0) and has(1, 2) and holds(lambda i, j: 2 * i + 3 * j >= 8):
            return SingularityType.D5_FAMILY
    return SingularityType.UNDEFINED


def classify(group_id: str, d: int) -> SingularityType:
    """Type of the singular points of a general degree-d invariant curve."""
    if d >= 1 and closed_form_nonsingular(group_id, d):
        return SingularityType.NONSINGULAR
    if table_row(group_id, d) is None:
        return SingularityType.UNDEFINED
    return type_from_index_set(index_set(group_id, d))


@dataclass
class SingularityReport:
    group_id: str
    d: int
    type: SingularityType
    m: int | None
    count: int  # deg F * deg Phi

    def to_json(self) -> dict:
        singular = self.type not in (SingularityType.NONSINGULAR, SingularityType.UNDEFINED)
        return {
            "group": self.group_id,
            "degree": self.d,
            "type": str(self.type),
            "m": self.m,
            "locus": "V(F)∩V(Phi)" if singular else None,
            "count": self.count if singular else 0,
        }


def singularity_report(group_id: str, d: int) -> SingularityReport:
    t = classify(group_id, d)
    p = profile(group_id)
    return SingularityReport(group_id, d, t, multiplicity(t), p.a * p.b)


# ---- irreducibility ----------------------------------------------------

@dataclass
class LogEntry:
    parts: tuple  # component degrees fixed so far
    check: str
    statement: str
    refutes: bool

    def to_json(self) -> dict:
        return {
            "parts": list(self.parts),
            "check": self.check,
            "statement": self.statement,
            "refutes": self.refutes,
        }


@dataclass
class IrreducibilityCertificate:
    group_id: str
    d: int
    type: SingularityType
    m: int | None
    bound: int | None  # m * deg F * deg Phi
    log: list = field(default_factory=list)
    survivors: list = field(default_factory=list)  # degree splits not refuted

    @property
    def certified(self) -> bool:
        return not self.survivors

    def statements(self) -> list:
        return [e.statement for e in self.log]

    def to_json(self) -> dict:
        return {
            "group": self.group_id,
            "degree": self.d,
            "type": str(self.type),
            "m": self.m,
            "bound": self.bound,
            "certified": self.certified,
            "survivors": [list(s) for s in self.survivors],
            "log": [e.to_json() for e in self.log],
        }


class NotApplicable(ValueError):
    pass


def _split_rest(log, survivors, m, parts: tuple, R: int, U: int):
    """The degree-R remainder is a union of >= 2 components; U is its pair budget.

    Pairwise products among the remaining components must sum to U and each
    product, including those with ``parts``, must be a multiple of m.
    """
    # smallest possible pair sum for >= 2 components of total degree R
    if R - 1 > U:
        log.append(LogEntry(parts, "(**)", f"{R - 1} ≤ {U} is false", True))
        return
    log.append(LogEntry(parts, "(**)", f"{R - 1} ≤ {U} holds", False))
    for q in range(1, R // 2 + 1):
        path = parts + (q,)
        bad = [p for p in parts if (p * q) % m]
        if bad:
            log.append(LogEntry(path, "divisibility", f"{m} does not divide {bad[0]}*{q}", True))
            continue
        used = q * (R - q)
        if used > U:
            log.append(LogEntry(path, "(**)", f"{q}*{R - q} = {used} > {U}", True))
            continue
        rest, U2 = R - q, U - used
        # the rest as a single component
        single_bad = [p for p in path if (p * rest) % m]
        if U2 == 0 and not single_bad:
            survivors.append(path + (rest,))
            log.append(LogEntry(path + (rest,), "equality", "satisfies every constraint", False))
        else:
            why = (f"{m} does not divide {single_bad[0]}*{rest}" if single_bad
                   else f"remaining pair budget {U2} != 0")
            log.append(LogEntry(path + (rest,), "equality", why, True))
        if rest >= 2:
            _split_rest(log, survivors, m, path, rest, U2)


def split_search(d: int, m: int, M: int) -> tuple:
    """Every degree split d = d_1 + ... + d_n (n >= 2) compatible with the
    intersection count: pairwise products sum to M and each is a multiple of m.

    Returns (log, survivors).  Each candidate d_1 in 1..d/2 is tested against
    d_1 (d - d_1) <= M, divisibility by m, the two-component equality, and
    the residual bound for three or more components.  Survivors are listed
    in the order found and may repeat a multiset in a different order.
    """
    log: list = []
    survivors: list = []
    for d1 in range(1, d // 2 + 1):
        R = d - d1
        prod = d1 * R
        path = (d1,)
        if prod > M:
            log.append(LogEntry(path, "(*)", f"{d1}*{R} = {prod} > {M}", True))
            continue
        log.append(LogEntry(path, "(*)", f"{d1}*{R} = {prod} ≤ {M}", False))
        divisible = prod % m == 0
        if m > 1:
            verb = "divides" if divisible else "does not divide"
            log.append(LogEntry(path, "divisibility", f"{m} {verb} {d1}*{R}", not divisible))
        if prod == M and divisible:
            survivors.append((d1, R))
            log.append(LogEntry((d1, R), "n=2", f"{d1}*{R} = {M}", False))
        else:
            log.append(LogEntry((d1, R), "n=2", f"{d1}*{R} = {prod} != {M}", True))
        U = M - prod
        if not divisible:
            # d_1 cannot occur at all; still record the residual bound
            ok = R - 1 <= U
            log.append(LogEntry(path, "(**)", f"{R - 1} ≤ {U} {'holds' if ok else 'is false'}",
                                not ok))
            continue
        if R >= 2:
            _split_rest(log, survivors, m, path, R, U)
    return log, survivors


def certify_irreducible(group_id: str, d: int) -> IrreducibilityCertificate:
    """Rule out every way a general member of degree d could split.

    If it splits into components of degrees d_1..d_n, the components meet
    only at the deg F * deg Phi singular points, two at a time, with local
    intersection number m; Bezout then pins down the pairwise products.
    """
    t = classify(group_id, d)
    p = profile(group_id)
    if t == SingularityType.A2_CUSP:
        cert = IrreducibilityCertificate(group_id, d, t, None, None)
        cert.log.append(LogEntry((), "cusp",
                                 "cusps are unibranch: no two components can meet there", True))
        return cert
    if t not in MULTIPLICITY:
        raise NotApplicable(f"no certificate for type {t} at ({group_id}, {d})")
    m = MULTIPLICITY[t]
    M = m * p.a * p.b
    log, survivors = split_search(d, m, M)
    return IrreducibilityCertificate(group_id, d, t, m, M, log, survivors)


@dataclass
class IntegralDecision:
    group_id: str
    d: int
    exists: bool
    reason: str
    certificate: IrreducibilityCertificate | None = None

    def to_json(self) -> dict:
        out = {"group": self.group_id, "degree": self.d, "exists": self.exists,
               "reason": self.reason}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


def integral_report(group_id: str, d: int) -> IntegralDecision:
    if d < 1:
        raise ValueError("degree must be positive")
    if d % 2:
        return IntegralDecision(group_id, d, False, "odd-degree")
    dec = decide_nonsingular(group_id, d)
    if dec.exists:
        return IntegralDecision(group_id, d, True, "nonsingular-member")
    if not basis(group_id, d):
        return IntegralDecision(group_id, d, False, "empty")
    if dec.low_degree_case in NOT_INTEGRAL_TAGS:
        return IntegralDecision(group_id, d, False, dec.low_degree_case)
    common = [n for n in dec.failed_conditions if n in (1, 2, 3)]
    if common:
        # every member is divisible by one of F, Phi, Psi of smaller degree
        return IntegralDecision(group_id, d, False, f"common-factor(condition {common[0]})")
    try:
        cert = certify_irreducible(group_id, d)
    except NotApplicable as exc:
        return IntegralDecision(group_id, d, False, f"undecided: {exc}")
    if cert.certified:
        return IntegralDecision(group_id, d, True, f"irreducible({cert.type})", cert)
    return IntegralDecision(group_id, d, False, "reducible-possible", cert)


def decide_integral(group_id: str, d: int) -> bool:
    """Is there an irreducible reduced invariant curve of degree d?"""
    return integral_report(group_id, d).exists


def closed_form_integral(group_id: str, d: int) -> bool:
    exceptions = {"V": {18, 24}, "I": {4, 8, 14}, "K": {2, 8, 10, 16, 22}}[group_id]
    step = 6 if group_id == "V" else 2
    return d % step == 0 and d not in exceptions
