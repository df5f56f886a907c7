"""Sparse polynomials in x, y, z over a :class:`~invcurve.arith.NumberField`.

Terms are kept in a dict ``{(a, b, c): FieldElement}`` with no zero values.
Iteration order for display and serialization is graded reverse
lexicographic, largest monomial first.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .arith import QQ, FieldElement, NumberField, field_by_name

VARS = ("x", "y", "z")
Monomial = tuple  # (e_x, e_y, e_z)


def grevlex_key(m: Monomial) -> tuple:
    """Sort key; larger key means larger monomial in grevlex with x > y > z."""
    return (m[0] + m[1] + m[2], -m[2], -m[1])


class InhomogeneousError(ValueError):
    pass


class MPoly:
    __slots__ = ("field", "terms", "_scaled", "_hash")

    def __init__(self, field: NumberField, terms: dict | None = None):
        self.field = field
        clean = {}
        if terms:
            for m, c in terms.items():
                c = field.coerce(c)
                if c:
                    clean[tuple(m)] = c
        self.terms = clean
        self._scaled = None
        self._hash = None

    @classmethod
    def _trusted(cls, field, terms):
        obj = object.__new__(cls)
        obj.field = field
        obj.terms = terms
        obj._scaled = None
        obj._hash = None
        return obj

    # ---- constructors ------------------------------------------------
    @classmethod
    def zero(cls, field: NumberField = QQ) -> "MPoly":
        return cls._trusted(field, {})

    @classmethod
    def const(cls, c, field: NumberField = QQ) -> "MPoly":
        return cls(field, {(0, 0, 0): c})

    @classmethod
    def var(cls, name: str, field: NumberField = QQ) -> "MPoly":
        m = [0, 0, 0]
        m[VARS.index(name)] = 1
        return cls._trusted(field, {tuple(m): field.one})

    @classmethod
    def gens(cls, field: NumberField = QQ) -> tuple:
        return tuple(cls.var(v, field) for v in VARS)

    @classmethod
    def linear_form(cls, coeffs: Sequence, field: NumberField) -> "MPoly":
        return cls(field, {(1, 0, 0): coeffs[0], (0, 1, 0): coeffs[1], (0, 0, 1): coeffs[2]})

    # ---- basic queries ----------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def monomials(self) -> list:
        return sorted(self.terms, key=grevlex_key, reverse=True)

    def items(self) -> list:
        return [(m, self.terms[m]) for m in self.monomials()]

    def coefficient(self, m: Monomial) -> FieldElement:
        return self.terms.get(tuple(m), self.field.zero)

    def leading_monomial(self) -> Monomial:
        return max(self.terms, key=grevlex_key)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def homogeneous_degree(self) -> int:
        degs = {sum(m) for m in self.terms}
        if len(degs) > 1:
            raise InhomogeneousError(f"polynomial has terms of degrees {sorted(degs)}")
        return degs.pop() if degs else -1

    def change_field(self, field: NumberField) -> "MPoly":
        if field is self.field:
            return self
        return MPoly._trusted(field, {m: field.coerce(c) for m, c in self.terms.items()})

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.terms.values())

    # ---- equality ----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, MPoly):
            if other.field is not self.field:
                if other.field.degree == 1:
                    other = other.change_field(self.field)
                elif self.field.degree == 1:
                    return self.change_field(other.field) == other
                else:
                    return False
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, FieldElement)):
            return self == MPoly.const(other, self.field)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # ---- arithmetic --------------------------------------------------
    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.field is self.field:
                return other
            if other.field.degree == 1:
                return other.change_field(self.field)
            raise ValueError(f"field mismatch: {self.field.name} vs {other.field.name}")
        return MPoly.const(other, self.field)

    def _lift(self, other):
        if isinstance(other, MPoly) and self.field.degree == 1 and other.field.degree > 1:
            return self.change_field(other.field)
        return self

    def __add__(self, other):
        me = self._lift(other)
        if me is not self:
            return me + other
        o = self._coerce(other)
        out = dict(self.terms)
        for m, c in o.terms.items():
            cur = out.get(m)
            if cur is None:
                out[m] = c
            else:
                s = cur + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return MPoly._trusted(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._trusted(self.field, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        me = self._lift(other)
        if me is not self:
            return me - other
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "MPoly":
        c = self.field.coerce(c)
        if not c:
            return MPoly.zero(self.field)
        return MPoly._trusted(self.field, {m: v * c for m, v in self.terms.items()})

    def _scaled_ints(self):
        """(common denominator, {monomial: [(index, int), ...]}) cached."""
        if self._scaled is None:
            den = 1
            for c in self.terms.values():
                d = c.den
                if den % d:
                    den = den * d // gcd(den, d)
            rows = {}
            for m, c in self.terms.items():
                f = den // c.den
                rows[m] = [(i, v * f) for i, v in enumerate(c.num) if v]
            self._scaled = (den, rows)
        return self._scaled

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            if isinstance(other, (int, Fraction, FieldElement)):
                if isinstance(other, FieldElement) and other.field is not self.field and self.field.degree == 1:
                    return self.change_field(other.field).scale(other)
                return self.scale(other)
            return NotImplemented
        me = self._lift(other)
        if me is not self:
            return me * other
        o = self._coerce(other)
        if not self.terms or not o.terms:
            return MPoly.zero(self.field)
        F = self.field
        n = F.degree
        da, ra = self._scaled_ints()
        db, rb = o._scaled_ints()
        acc = {}
        if n == 1:
            for (a0, a1, a2), ca in ra.items():
                x = ca[0][1]
                for (b0, b1, b2), cb in rb.items():
                    m = (a0 + b0, a1 + b1, a2 + b2)
                    acc[m] = acc.get(m, 0) + x * cb[0][1]
            den = da * db
            out = {}
            for m, v in acc.items():
                if v:
                    out[m] = FieldElement._make(F, [v], den)
            return MPoly._trusted(F, out)
        width = 2 * n - 1
        for (a0, a1, a2), ca in ra.items():
            for (b0, b1, b2), cb in rb.items():
                m = (a0 + b0, a1 + b1, a2 + b2)
                vec = acc.get(m)
                if vec is None:
                    vec = acc[m] = [0] * width
                for i, x in ca:
                    for j, y in cb:
                        vec[i + j] += x * y
        den = da * db
        out = {}
        for m, vec in acc.items():
            if any(vec):
                c = F._reduce(vec, den)
                if c:
                    out[m] = c
        return MPoly._trusted(F, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MPoly":
        if e < 0:
            raise ValueError("negative power")
        result = MPoly.const(1, self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # ---- calculus and substitution ----------------------------------
    def partial(self, var) -> "MPoly":
        k = VARS.index(var) if isinstance(var, str) else int(var)
        out = {}
        for m, c in self.terms.items():
            e = m[k]
            if e:
                mm = list(m)
                mm[k] -= 1
                out[tuple(mm)] = c * e
        return MPoly._trusted(self.field, out)

    def gradient(self) -> list:
        return [self.partial(k) for k in range(3)]

    def evaluate(self, point: Sequence):
        """Value at a point of the coefficient field (ints and Fractions allowed)."""
        F = self.field
        pt = [F.coerce(p) for p in point]
        powers = [_power_table(p, self.degree()) for p in pt]
        total = F.zero
        for (a, b, c), coef in self.terms.items():
            total = total + coef * powers[0][a] * powers[1][b] * powers[2][c]
        return total

    def substitute_linear(self, A) -> "MPoly":
        """f^A(x) := f(A x), a right action: (f^A)^B = f^(AB).

        Horner-style recursion f = x*P + y*Q(y, z) + c*z^d keeps the cost
        cubic in the degree.
        """
        rows = [[self.field.coerce(A[i][j]) for j in range(3)] for i in range(3)]
        L = [MPoly.linear_form(rows[i], self.field) for i in range(3)]
        return _horner(self, L)

    def map_coefficients(self, fn, field: NumberField | None = None) -> "MPoly":
        field = field or self.field
        return MPoly(field, {m: fn(c) for m, c in self.terms.items()})

    # ---- exact division ---------------------------------------------
    def divmod(self, g: "MPoly"):
        """Multivariate division by a single divisor in grevlex order."""
        g = self._coerce(g)
        if g.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lm = g.leading_monomial()
        lc_inv = g.terms[lm].inverse()
        q = {}
        r = {}
        p = dict(self.terms)
        g_items = list(g.terms.items())
        while p:
            m = max(p, key=grevlex_key)
            c = p[m]
            if all(mi >= li for mi, li in zip(m, lm)):
                shift = (m[0] - lm[0], m[1] - lm[1], m[2] - lm[2])
                f = c * lc_inv
                q[shift] = q.get(shift, self.field.zero) + f
                for gm, gc in g_items:
                    mm = (gm[0] + shift[0], gm[1] + shift[1], gm[2] + shift[2])
                    v = p.get(mm, self.field.zero) - f * gc
                    if v:
                        p[mm] = v
                    else:
                        p.pop(mm, None)
            else:
                r[m] = c
                del p[m]
        return MPoly(self.field, q), MPoly(self.field, r)

    def exact_div(self, g: "MPoly") -> "MPoly":
        q, r = self.divmod(g)
        if r:
            raise ArithmeticError("division is not exact")
        return q

    # ---- display / serialization ------------------------------------
    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.items():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(VARS, m) if e
            )
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        text = self.to_text()
        if len(text) > 200:
            text = text[:200] + " ..."
        return f"MPoly[{self.field.name}]({text})"

    def to_json(self) -> dict:
        return {
            "field": self.field.name,
            "terms": {
                f"{m[0]},{m[1]},{m[2]}": c.to_json()["coords"] for m, c in self.items()
            },
        }

    @staticmethod
    def from_json(obj: dict) -> "MPoly":
        F = field_by_name(obj["field"])
        terms = {}
        for key, coords in obj["terms"].items():
            m = tuple(int(s) for s in key.split(","))
            terms[m] = F.element(Fraction(int(n), int(d)) for n, d in coords)
        return MPoly(F, terms)

    @staticmethod
    def parse(text: str, field: NumberField = QQ) -> "MPoly":
        """Inverse of :meth:`to_text`.

        Coefficients are rationals or parenthesised expressions in the
        field generator, e.g. ``(1/2 - zeta15^3)*x^2*y``.
        """
        return _parse_sum(text.replace(" ", ""), field, VARS)


def _power_table(p, d):
    out = [p.field.one]
    for _ in range(max(d, 0)):
        out.append(out[-1] * p)
    return out


def _horner(f: MPoly, L: list) -> MPoly:
    F = f.field
    if not f.terms:
        return MPoly.zero(F)
    cache_pow = {}

    def lpow(k):
        if k not in cache_pow:
            cache_pow[k] = L[2] ** k
        return cache_pow[k]

    def rec(terms: dict) -> MPoly:
        with_x, with_y, pure_z = {}, {}, {}
        for (a, b, c), v in terms.items():
            if a:
                with_x[(a - 1, b, c)] = v
            elif b:
                with_y[(0, b - 1, c)] = v
            else:
                pure_z[c] = v
        out = MPoly.zero(F)
        if with_x:
            out = out + L[0] * rec(with_x)
        if with_y:
            out = out + L[1] * rec(with_y)
        for c, v in pure_z.items():
            out = out + lpow(c).scale(v)
        return out

    return rec(f.terms)


# ---- parsing ---------------------------------------------------------

def _split_top(s: str) -> list:
    """Split on top-level + and - keeping signs."""
    out, depth, cur = [], 0, ""
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "+-" and cur and not cur.endswith(("^", "*", "/")):
            out.append(cur)
            cur = ch
        else:
            cur += ch
    if cur:
        out.append(cur)
    return out


def _parse_sum(s: str, field: NumberField, names) -> MPoly:
    total = MPoly.zero(field)
    if s in ("", "0"):
        return total
    for term in _split_top(s):
        total = total + _parse_term(term, field, names)
    return total


def _parse_term(t: str, field: NumberField, names) -> MPoly:
    sign = 1
    while t and t[0] in "+-":
        if t[0] == "-":
            sign = -sign
        t = t[1:]
    coef = field.from_rational(sign)
    mono = [0, 0, 0]
    factors, depth, cur = [], 0, ""
    for ch in t:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "*" and depth == 0:
            factors.append(cur)
            cur = ""
        else:
            cur += ch
    factors.append(cur)
    for fac in factors:
        if fac.startswith("("):
            close = fac.rindex(")")
            inner = fac[1:close]
            value = _parse_field_expr(inner, field)
            rest = fac[close + 1:]
            if rest.startswith("^"):
                value = value ** int(rest[1:])
            coef = coef * value
            continue
        base, _, exp = fac.partition("^")
        e = int(exp) if exp else 1
        if base in names:
            mono[names.index(base)] += e
        elif base == field.gen_name:
            coef = coef * field.gen() ** e
        else:
            coef = coef * Fraction(base) ** e
    return MPoly(field, {tuple(mono): coef})


def _parse_field_expr(s: str, field: NumberField) -> FieldElement:
    p = _parse_sum(s, field, ())
    return p.coefficient((0, 0, 0))


# ---- polynomial matrices ---------------------------------------------

class PolyMatrix:
    """Rectangular matrix of MPoly entries."""

    def __init__(self, rows: Iterable[Iterable[MPoly]]):
        self.rows = [list(r) for r in rows]
        if not self.rows:
            raise ValueError("empty matrix")
        width = len(self.rows[0])
        if any(len(r) != width for r in self.rows):
            raise ValueError("matrix is not rectangular")

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(zip(*self.rows))

    def is_symmetric(self) -> bool:
        n, m = self.shape
        return n == m and all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i))

    def minor(self, i: int, j: int) -> "PolyMatrix":
        return PolyMatrix(
            [r[:j] + r[j + 1:] for k, r in enumerate(self.rows) if k != i]
        )

    def det(self) -> MPoly:
        """Cofactor expansion along the first row (all uses are n <= 4)."""
        n, m = self.shape
        if n != m:
            raise ValueError("determinant of a non-square matrix")
        return _cofactor_det(self.rows)

    def bareiss_det(self) -> MPoly:
        """Fraction-free elimination; independent check on :meth:`det`."""
        n, m = self.shape
        if n != m:
            raise ValueError("determinant of a non-square matrix")
        a = [r[:] for r in self.rows]
        field = a[0][0].field
        sign = 1
        prev = MPoly.const(1, field)
        for k in range(n - 1):
            if a[k][k].is_zero():
                swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
                if swap is None:
                    return MPoly.zero(field)
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
            prev = a[k][k]
        d = a[n - 1][n - 1]
        return d if sign == 1 else -d


def _cofactor_det(rows) -> MPoly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        a, b, c = rows
        return (
            a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0])
        )
    total = None
    for j in range(n):
        if rows[0][j].is_zero():
            continue
        sub = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _cofactor_det(sub)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else MPoly.zero(rows[0][0].field)


def hessian(f: MPoly) -> PolyMatrix:
    g = f.gradient()
    return PolyMatrix([[g[i].partial(j) for j in range(3)] for i in range(3)])


def bordered_hessian(f: MPoly, g: MPoly) -> PolyMatrix:
    """4x4 matrix: H(f) bordered by the gradient of g, corner 0."""
    H = hessian(f)
    dg = g.gradient()
    zero = MPoly.zero(f.field)
    rows = [H.rows[i] + [dg[i]] for i in range(3)]
    rows.append(dg + [zero])
    return PolyMatrix(rows)


def jacobian_matrix(*fs: MPoly) -> PolyMatrix:
    return PolyMatrix([f.gradient() for f in fs])


def jacobian_det(f: MPoly, g: MPoly, h: MPoly) -> MPoly:
    return jacobian_matrix(f, g, h).det()


def monomials_of_degree(d: int) -> list:
    """All exponent triples of total degree d, grevlex-descending."""
    out = [(a, b, d - a - b) for a in range(d + 1) for b in range(d + 1 - a)]
    return sorted(out, key=grevlex_key, reverse=True)


def product(polys: Iterable[MPoly], field: NumberField) -> MPoly:
    out = MPoly.const(1, field)
    for p in polys:
        out = out * p
    return out


__all__ = [
    "MPoly",
    "PolyMatrix",
    "InhomogeneousError",
    "grevlex_key",
    "hessian",
    "bordered_hessian",
    "jacobian_matrix",
    "jacobian_det",
    "monomials_of_degree",
    "product",
    "VARS",
]
