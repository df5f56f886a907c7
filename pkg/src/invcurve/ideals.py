"""Groebner bases in three variables and the emptiness tests built on them.

The engine is Buchberger's algorithm with the normal selection strategy and
the Gebauer-Moeller pair criteria, under grevlex.  Coefficients live either
in an exact number field or in GF(p); the latter is used as a fast
certificate for emptiness of projective zero sets.

A certificate mod p is sound: if the reduction of a homogeneous ideal mod a
prime over p contains pure powers of x, y and z, then some degree-D
Macaulay matrix has full rank mod p, hence full rank over the number field,
so the ideal contains every monomial of degree D.
"""

from __future__ import annotations

import heapq
import os
from math import gcd
from dataclasses import dataclass, field
from functools import lru_cache

from .arith import QQ, FieldElement, NumberField
from .mpoly import MPoly, grevlex_key

DEFAULT_BUDGET = 10**6
BUDGET_ENV = "INVCURVE_BUDGET"

# primes tried for the modular certificate
_PRIME_FLOOR = 2**31


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
        if value <= 0:
            raise ValueError(f"{BUDGET_ENV} must be positive")
        return value
    return DEFAULT_BUDGET


class Inconclusive(RuntimeError):
    """Raised when the pair budget runs out before a basis is complete."""

    def __init__(self, msg: str, pairs: int):
        super().__init__(msg)
        self.pairs = pairs


# ---- coefficient domains ---------------------------------------------

class ExactDomain:
    def __init__(self, fld: NumberField):
        self.field = fld
        self.zero = fld.zero
        self.one = fld.one

    def inv(self, a):
        return a.inverse()

    def from_field(self, c: FieldElement):
        return self.field.coerce(c)

    def tag(self) -> str:
        return self.field.name


class ModPDomain:
    """GF(p) with a ring map from the number field given by the image of its generator."""

    def __init__(self, p: int, fld: NumberField, gen_image: int):
        self.p = p
        self.field = fld
        self.gen_image = gen_image % p
        self.zero = 0
        self.one = 1
        self._powers = [pow(self.gen_image, k, p) for k in range(fld.degree)]

    def inv(self, a):
        return pow(a, -1, self.p)

    def from_field(self, c: FieldElement) -> int:
        p = self.p
        if c.den % p == 0:
            raise ZeroDivisionError("coefficient not integral at p")
        s = sum(n * w for n, w in zip(c.num, self._powers))
        return s * pow(c.den, -1, p) % p

    def tag(self) -> str:
        return f"GF({self.p})"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _roots_mod_p(poly: list, p: int) -> list:
    """Roots in GF(p) of a linear or quadratic integer polynomial, constant term first.

    Square roots use the p = 3 mod 4 shortcut; other primes return no roots.
    """
    if len(poly) == 2:
        c0, c1 = poly
        return [(-c0 * pow(c1, -1, p)) % p]
    if len(poly) == 3:
        c0, c1, c2 = poly
        disc = (c1 * c1 - 4 * c0 * c2) % p
        if pow(disc, (p - 1) // 2, p) != 1:
            return []
        if p % 4 != 3:
            return []
        s = pow(disc, (p + 1) // 4, p)
        inv = pow(2 * c2, -1, p)
        return sorted({(-c1 + s) * inv % p, (-c1 - s) * inv % p})
    raise ValueError("only linear and quadratic minimal polynomials supported here")


def _cyclotomic_order(fld: NumberField) -> int | None:
    name = fld.name
    if name.startswith("Q(zeta") and name.endswith(")"):
        return int(name[len("Q(zeta"):-1])
    return None


@lru_cache(maxsize=None)
def modular_domains(field_name: str, count: int = 3) -> tuple:
    """A few GF(p) images of the named field for primes just above 2^31."""
    from .arith import field_by_name

    fld = field_by_name(field_name)
    out = []
    p = _PRIME_FLOOR
    n = _cyclotomic_order(fld)
    while len(out) < count:
        p += 1
        if not _is_prime(p):
            continue
        if fld.degree == 1:
            out.append(ModPDomain(p, fld, 0))
        elif n is not None:
            if (p - 1) % n:
                continue
            # primitive n-th root of unity
            for g in range(2, 200):
                r = pow(g, (p - 1) // n, p)
                if all(pow(r, n // q, p) != 1 for q in _prime_factors(n)):
                    out.append(ModPDomain(p, fld, r))
                    break
        else:
            den = 1
            for c in fld.minpoly:
                den = den * c.denominator // gcd(den, c.denominator)
            ints = [int(c * den) for c in fld.minpoly]
            if den % p == 0:
                continue
            roots = _roots_mod_p(ints, p)
            if roots:
                out.append(ModPDomain(p, fld, roots[0]))
    return tuple(out)


def _prime_factors(n: int) -> list:
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


# ---- polynomial helpers on plain dicts --------------------------------

def _lm(poly: dict):
    return max(poly, key=grevlex_key)


def _divides(a, b) -> bool:
    return a[0] <= b[0] and a[1] <= b[1] and a[2] <= b[2]


def _lcm(a, b):
    return (max(a[0], b[0]), max(a[1], b[1]), max(a[2], b[2]))


def _disjoint(a, b) -> bool:
    return not ((a[0] and b[0]) or (a[1] and b[1]) or (a[2] and b[2]))


class _Basis:
    """Monic polynomials with cached leading monomials and sorted term lists."""

    def __init__(self, dom):
        self.dom = dom
        self.polys: list = []
        self.lms: list = []
        self.tails: list = []  # terms other than the leading one

    def add(self, poly: dict) -> int:
        lm = _lm(poly)
        self.polys.append(poly)
        self.lms.append(lm)
        self.tails.append([(m, c) for m, c in poly.items() if m != lm])
        return len(self.polys) - 1


def _make_monic(poly: dict, dom) -> dict:
    lm = _lm(poly)
    inv = dom.inv(poly[lm])
    if isinstance(dom, ModPDomain):
        p = dom.p
        return {m: c * inv % p for m, c in poly.items()}
    return {m: c * inv for m, c in poly.items()}


def _reduce(f: dict, basis: _Basis, indices, dom) -> dict:
    """Full reduction of f modulo the monic polynomials basis[indices]."""
    modp = isinstance(dom, ModPDomain)
    p = dom.p if modp else None
    idx = list(indices)
    work = dict(f)
    heap = [(_neg_key(m), m) for m in work]
    heapq.heapify(heap)
    rem = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, None)
        if c is None or not c:
            continue
        divisor = None
        for i in idx:
            if _divides(basis.lms[i], m):
                divisor = i
                break
        if divisor is None:
            rem[m] = c
            continue
        lm = basis.lms[divisor]
        sx, sy, sz = m[0] - lm[0], m[1] - lm[1], m[2] - lm[2]
        for mg, cg in basis.tails[divisor]:
            mm = (mg[0] + sx, mg[1] + sy, mg[2] + sz)
            old = work.get(mm)
            if old is None:
                heapq.heappush(heap, (_neg_key(mm), mm))
                old = dom.zero
            if modp:
                work[mm] = (old - c * cg) % p
            else:
                work[mm] = old - c * cg
    return rem


def _neg_key(m):
    d, nc, nb = grevlex_key(m)
    return (-d, -nc, -nb)


def _spoly(basis: _Basis, i: int, j: int, dom) -> dict:
    li, lj = basis.lms[i], basis.lms[j]
    L = _lcm(li, lj)
    si = (L[0] - li[0], L[1] - li[1], L[2] - li[2])
    sj = (L[0] - lj[0], L[1] - lj[1], L[2] - lj[2])
    out = {}
    modp = isinstance(dom, ModPDomain)
    for m, c in basis.tails[i]:
        out[(m[0] + si[0], m[1] + si[1], m[2] + si[2])] = c
    for m, c in basis.tails[j]:
        mm = (m[0] + sj[0], m[1] + sj[1], m[2] + sj[2])
        v = out.get(mm, dom.zero) - c
        if modp:
            v %= dom.p
        out[mm] = v
    return {m: c for m, c in out.items() if c}


def _pair_key(L):
    return (sum(L),) + tuple(-x for x in grevlex_key(L)[1:])


def _update(basis: _Basis, G: list, pairs: dict, h: int):
    """Gebauer-Moeller installation of a new element h."""
    lh = basis.lms[h]
    C = [(h, g) for g in G]
    D = []
    while C:
        h1, g1 = C.pop()
        L1 = _lcm(lh, basis.lms[g1])
        keep = _disjoint(lh, basis.lms[g1])
        if not keep:
            keep = not any(
                _divides(_lcm(lh, basis.lms[g2]), L1) for _, g2 in C + D
            )
        if keep:
            D.append((h1, g1))
    E = [(hh, g) for hh, g in D if not _disjoint(lh, basis.lms[g])]
    new_pairs = {}
    for (g1, g2), L in pairs.items():
        if (
            _divides(lh, L)
            and _lcm(basis.lms[g1], lh) != L
            and _lcm(lh, basis.lms[g2]) != L
        ):
            continue
        new_pairs[(g1, g2)] = L
    for hh, g in E:
        new_pairs[(g, hh)] = _lcm(lh, basis.lms[g])
    G_new = [g for g in G if not _divides(lh, basis.lms[g])] + [h]
    return G_new, new_pairs


def _buchberger_dicts(polys: list, dom, budget: int):
    basis = _Basis(dom)
    G: list = []
    pairs: dict = {}
    # process inputs smallest first; interreduce lightly by reducing each input
    start = sorted((p for p in polys if p), key=lambda q: grevlex_key(_lm(q)))
    for f in start:
        r = _reduce(f, basis, G, dom)
        if not r:
            continue
        h = basis.add(_make_monic(r, dom))
        G, pairs = _update(basis, G, pairs, h)
    used = 0
    while pairs:
        key = min(pairs, key=lambda ij: (_pair_key(pairs[ij]), ij))
        del pairs[key]
        used += 1
        if used > budget:
            raise Inconclusive(f"pair budget {budget} exhausted", used)
        s = _spoly(basis, key[0], key[1], dom)
        if not s:
            continue
        r = _reduce(s, basis, G, dom)
        if not r:
            continue
        h = basis.add(_make_monic(r, dom))
        G, pairs = _update(basis, G, pairs, h)
    return _interreduce(basis, G, dom), used


def _interreduce(basis: _Basis, G: list, dom) -> list:
    """Reduced Groebner basis, sorted by leading monomial (largest first)."""
    minimal = []
    for g in G:
        lg = basis.lms[g]
        if not any(h != g and _divides(basis.lms[h], lg) and
                   (basis.lms[h] != lg or h < g) for h in G):
            minimal.append(g)
    out_basis = _Basis(dom)
    for g in minimal:
        out_basis.add(basis.polys[g])
    result = []
    n = len(minimal)
    for k in range(n):
        others = [i for i in range(n) if i != k]
        lm = out_basis.lms[k]
        tail = {m: c for m, c in out_basis.polys[k].items() if m != lm}
        r = _reduce(tail, out_basis, others, dom)
        r[lm] = dom.one
        result.append(r)
    result.sort(key=lambda q: grevlex_key(_lm(q)), reverse=True)
    return result


# ---- public types ------------------------------------------------------

@dataclass
class Ideal:
    generators: list
    field: NumberField = field(default=QQ)

    def __post_init__(self):
        gens = [g for g in self.generators]
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        if any(g.is_zero() for g in gens):
            raise ValueError("generators must be nonzero")
        fields = {g.field for g in gens if g.field.degree > 1}
        if len(fields) > 1:
            raise ValueError("generators over different number fields")
        fld = fields.pop() if fields else QQ
        self.field = fld
        self.generators = [g.change_field(fld) if g.field is not fld else g for g in gens]

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.generators + other.generators)


@dataclass
class GroebnerBasis:
    basis: list  # list of dict monomial -> coefficient, reduced and monic
    domain: object
    order: str = "grevlex"
    pairs_used: int = 0

    @property
    def leading_monomials(self) -> list:
        return [_lm(g) for g in self.basis]

    @property
    def is_modular(self) -> bool:
        return isinstance(self.domain, ModPDomain)

    def polys(self) -> list:
        if self.is_modular:
            raise TypeError("modular basis has no exact polynomial form")
        fld = self.domain.field
        return [MPoly(fld, g) for g in self.basis]

    def has_pure_powers(self) -> bool:
        found = [False, False, False]
        for m in self.leading_monomials:
            nz = [i for i in range(3) if m[i]]
            if len(nz) == 1:
                found[nz[0]] = True
            elif not nz:
                return True  # unit ideal
        return all(found)

    def reduce(self, f: MPoly) -> dict:
        b = _Basis(self.domain)
        for g in self.basis:
            b.add(g)
        terms = {m: self.domain.from_field(c) for m, c in f.terms.items()}
        terms = {m: c for m, c in terms.items() if c}
        return _reduce(terms, b, range(len(self.basis)), self.domain)

    def contains(self, f: MPoly) -> bool:
        return not self.reduce(f)


def _as_ideal(obj) -> Ideal:
    if isinstance(obj, Ideal):
        return obj
    return Ideal(list(obj))


def buchberger(ideal, order: str = "grevlex", budget: int | None = None,
               domain=None) -> GroebnerBasis:
    """Reduced Groebner basis under grevlex.

    ``domain`` defaults to exact arithmetic in the ideal's field; pass a
    :class:`ModPDomain` to work in GF(p).  Raises :class:`Inconclusive`
    once more than ``budget`` S-pairs have been processed.
    """
    if order != "grevlex":
        raise ValueError("only grevlex is supported")
    ideal = _as_ideal(ideal)
    budget = default_budget() if budget is None else budget
    dom = domain or ExactDomain(ideal.field)
    polys = []
    for g in ideal.generators:
        d = {m: dom.from_field(c) for m, c in g.terms.items()}
        polys.append({m: c for m, c in d.items() if c})
    basis, used = _buchberger_dicts(polys, dom, budget)
    return GroebnerBasis(basis, dom, order, used)


# ---- emptiness tests ----------------------------------------------------

@dataclass
class ZeroLocusResult:
    empty: bool
    method: str  # "modular:GF(p)" or "exact:<field>"
    pairs_used: int
    leading_monomials: list

    def __bool__(self):
        return self.empty


def zero_locus_report(ideal, budget: int | None = None, modular: bool = True) -> ZeroLocusResult:
    """Decide whether a homogeneous ideal in x, y, z has only the zero solution."""
    ideal = _as_ideal(ideal)
    if not ideal.is_homogeneous():
        raise ValueError("only homogeneous ideals are supported")
    budget = default_budget() if budget is None else budget
    spent = 0
    if modular:
        for dom in modular_domains(ideal.field.name, 2):
            try:
                gb = buchberger(ideal, budget=budget - spent, domain=dom)
            except ZeroDivisionError:
                continue
            except Inconclusive as exc:
                spent += exc.pairs
                break
            spent += gb.pairs_used
            if gb.has_pure_powers():
                return ZeroLocusResult(True, f"modular:{dom.tag()}", spent,
                                       gb.leading_monomials)
    try:
        gb = buchberger(ideal, budget=max(budget - spent, 1))
    except Inconclusive as exc:
        raise Inconclusive(str(exc), spent + exc.pairs) from None
    return ZeroLocusResult(gb.has_pure_powers(), f"exact:{ideal.field.name}",
                           spent + gb.pairs_used, gb.leading_monomials)


def only_trivial_zero(ideal, budget: int | None = None) -> bool:
    """True iff the generators have no common zero in the projective plane."""
    return zero_locus_report(ideal, budget).empty


def nonsingular_check(f: MPoly, budget: int | None = None) -> bool:
    """The curve f = 0 is smooth iff its three partials have no common zero."""
    partials = [p for p in f.gradient() if not p.is_zero()]
    if not partials:
        return False  # constant: every point is singular
    return only_trivial_zero(Ideal(partials), budget)


def jacobian_minors(f: MPoly, g: MPoly) -> list:
    gf, gg = f.gradient(), g.gradient()
    out = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        m = gf[i] * gg[j] - gf[j] * gg[i]
        if not m.is_zero():
            out.append(m)
    return out


def transversal_check(f: MPoly, g: MPoly, budget: int | None = None) -> bool:
    """f = 0 and g = 0 meet only at points where their gradients are independent."""
    return only_trivial_zero(Ideal([f, g] + jacobian_minors(f, g)), budget)
