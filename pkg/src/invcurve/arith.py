"""Exact arithmetic in Q and in the three small number fields used here.

An element of a degree-n field is stored as an integer vector of length n
together with one positive common denominator, reduced so that the gcd of
all entries and the denominator is 1.  Multiplication is schoolbook
convolution followed by reduction modulo the (monic) minimal polynomial.

Rationals are plain :class:`fractions.Fraction` objects where they appear
outside field elements.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence


class FieldError(ArithmeticError):
    """Raised on field mismatch or division by zero."""


def _lcm(a: int, b: int) -> int:
    return a // math.gcd(a, b) * b


class NumberField:
    """Q[t]/(m(t)) for a monic irreducible m with rational coefficients.

    ``minpoly`` lists the coefficients of m from the constant term up, the
    leading 1 included.  ``root`` is a complex number used only by the
    float view (``FieldElement.to_complex``).
    """

    def __init__(self, name: str, minpoly: Sequence, root: complex = 0j, gen_name: str = "t"):
        coeffs = [Fraction(c) for c in minpoly]
        if coeffs[-1] != 1:
            raise ValueError("minimal polynomial must be monic")
        self.name = name
        self.minpoly = tuple(coeffs)
        self.degree = len(coeffs) - 1
        self.root = complex(root)
        self.gen_name = gen_name
        n = self.degree
        # t^k mod m for k = n .. 2n-2, as (integer vector, denominator)
        self._red = {}
        vec = [Fraction(0)] * n
        vec_prev = None
        for k in range(n, 2 * n - 1):
            if vec_prev is None:
                vec = [-c for c in coeffs[:n]]
            else:
                top = vec_prev[-1]
                vec = [Fraction(0)] + vec_prev[:-1]
                vec = [v - top * c for v, c in zip(vec, coeffs[:n])]
            vec_prev = vec
            den = 1
            for v in vec:
                den = _lcm(den, v.denominator)
            self._red[k] = ([int(v * den) for v in vec], den)
        self._red_den = 1
        for _, d in self._red.values():
            self._red_den = _lcm(self._red_den, d)
        self._red_int = {
            k: [v * (self._red_den // d) for v in vec] for k, (vec, d) in self._red.items()
        }
        self.zero = FieldElement._raw(self, (0,) * n, 1)
        self.one = FieldElement._raw(self, (1,) + (0,) * (n - 1), 1)

    def __repr__(self):
        return f"NumberField({self.name!r}, degree={self.degree})"

    def __reduce__(self):
        return (field_by_name, (self.name,))

    def __call__(self, value) -> "FieldElement":
        return self.coerce(value)

    def coerce(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field is self:
                return value
            if value.field.degree == 1:
                return self.from_rational(value.rational())
            raise FieldError(f"cannot coerce element of {value.field.name} into {self.name}")
        return self.from_rational(value)

    def from_rational(self, q) -> "FieldElement":
        q = Fraction(q)
        return FieldElement._make(self, [q.numerator] + [0] * (self.degree - 1), q.denominator)

    def element(self, coords: Iterable) -> "FieldElement":
        qs = [Fraction(c) for c in coords]
        if len(qs) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates, got {len(qs)}")
        den = 1
        for q in qs:
            den = _lcm(den, q.denominator)
        return FieldElement._make(self, [int(q * den) for q in qs], den)

    def gen(self) -> "FieldElement":
        if self.degree == 1:
            return self.from_rational(-self.minpoly[0])
        return self.element([0, 1] + [0] * (self.degree - 2))

    def _reduce(self, raw: list, den: int) -> "FieldElement":
        n = self.degree
        if len(raw) <= n:
            return FieldElement._make(self, raw + [0] * (n - len(raw)), den)
        red = self._red_int
        D = self._red_den
        out = [c * D for c in raw[:n]] if D != 1 else raw[:n]
        for k in range(n, len(raw)):
            c = raw[k]
            if c:
                for i, r in enumerate(red[k]):
                    if r:
                        out[i] += c * r
        return FieldElement._make(self, out, den * D)


class FieldElement:
    """Immutable element of a :class:`NumberField`."""

    __slots__ = ("field", "num", "den", "_hash")

    @classmethod
    def _raw(cls, field, num, den):
        obj = object.__new__(cls)
        obj.field = field
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def _make(cls, field, num, den):
        if den < 0:
            num = [-c for c in num]
            den = -den
        g = math.gcd(den, *num)
        if g != 1:
            num = [c // g for c in num]
            den //= g
        if not any(num):
            den = 1
        return cls._raw(field, tuple(num), den)

    # ---- queries -------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self):
        return any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise FieldError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def coords(self) -> list:
        return [Fraction(c, self.den) for c in self.num]

    def to_complex(self) -> complex:
        """Float view through the field's chosen complex root; diagnostics only."""
        r = self.field.root
        return sum(c * r**i for i, c in enumerate(self.num)) / self.den

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return self.is_rational() and self.num[0] == q.numerator and self.den == q.denominator
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            if self.is_rational():
                h = hash(Fraction(self.num[0], self.den))
            else:
                h = hash((self.field.name, self.num, self.den))
            self._hash = h
        return h

    # ---- arithmetic ----------------------------------------------------
    def _other(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                if other.field.degree == 1:
                    return self.field.from_rational(other.rational())
                raise FieldError(f"field mismatch: {self.field.name} vs {other.field.name}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        raise TypeError(f"unsupported operand {type(other).__name__}")

    def _lifts(self, other) -> bool:
        # a rational-field element meeting an extension element defers to it
        return (
            isinstance(other, FieldElement)
            and self.field.degree == 1
            and other.field.degree > 1
        )

    def __add__(self, other):
        if self._lifts(other):
            return other.field.coerce(self) + other
        try:
            o = self._other(other)
        except TypeError:
            return NotImplemented
        if self.den == o.den:
            return FieldElement._make(self.field, [a + b for a, b in zip(self.num, o.num)], self.den)
        return FieldElement._make(
            self.field,
            [a * o.den + b * self.den for a, b in zip(self.num, o.num)],
            self.den * o.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return FieldElement._raw(self.field, tuple(-a for a in self.num), self.den)

    def __sub__(self, other):
        if self._lifts(other):
            return other.field.coerce(self) - other
        try:
            o = self._other(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return FieldElement._make(self.field, [a * other for a in self.num], self.den)
        if self._lifts(other):
            return other.field.coerce(self) * other
        try:
            o = self._other(other)
        except TypeError:
            return NotImplemented
        a, b = self.num, o.num
        n = self.field.degree
        if n == 1:
            return FieldElement._make(self.field, [a[0] * b[0]], self.den * o.den)
        raw = [0] * (2 * n - 1)
        bnz = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if x:
                for j, y in bnz:
                    raw[i + j] += x * y
        return self.field._reduce(raw, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise FieldError("division by zero in " + self.field.name)
        n = self.field.degree
        if n == 1:
            return FieldElement._make(self.field, [self.den], self.num[0])
        # solve (multiplication-by-self matrix) * v = e_0 over Q
        cols = []
        t = self.field.gen()
        cur = self
        for _ in range(n):
            cols.append(cur.coords())
            cur = cur * t
        mat = [[cols[j][i] for j in range(n)] + [Fraction(int(i == 0))] for i in range(n)]
        sol = _solve_square(mat)
        return self.field.element(sol)

    def __truediv__(self, other):
        if self._lifts(other):
            return other.field.coerce(self) / other
        try:
            o = self._other(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # ---- display / serialization --------------------------------------
    def __repr__(self):
        return f"FieldElement({self.field.name}, {self})"

    def __str__(self):
        if self.is_rational():
            return str(Fraction(self.num[0], self.den))
        g = self.field.gen_name
        parts = []
        for i, c in enumerate(self.num):
            if not c:
                continue
            q = Fraction(c, self.den)
            mono = "" if i == 0 else (g if i == 1 else f"{g}^{i}")
            if mono and abs(q) == 1:
                s = ("-" if q < 0 else "") + mono
            elif mono:
                s = f"{q}*{mono}"
            else:
                s = str(q)
            parts.append(s)
        return "(" + " + ".join(parts).replace("+ -", "- ") + ")"

    def to_json(self) -> dict:
        return {
            "field": self.field.name,
            "coords": [[str(q.numerator), str(q.denominator)] for q in self.coords()],
        }

    @staticmethod
    def from_json(obj: dict) -> "FieldElement":
        F = field_by_name(obj["field"])
        return F.element(Fraction(int(n), int(d)) for n, d in obj["coords"])


def _solve_square(aug: list) -> list:
    """Gauss-Jordan on an n x (n+1) augmented Fraction matrix."""
    n = len(aug)
    m = [row[:] for row in aug]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise FieldError("singular system")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def cyclotomic_polynomial(n: int) -> list:
    """Integer coefficients (constant term first) of the n-th cyclotomic polynomial."""
    # x^n - 1 = prod_{d | n} Phi_d
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_exact_div(poly, cyclotomic_polynomial(d))
    return poly


def _poly_exact_div(num: list, den: list) -> list:
    num = num[:]
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1] // den[-1]
        out[k] = c
        for i, d in enumerate(den):
            num[k + i] -= c * d
    assert not any(num), "inexact polynomial division"
    return out


@lru_cache(maxsize=None)
def field_by_name(name: str) -> NumberField:
    if name == "Q":
        return NumberField("Q", [0, 1], root=0j, gen_name="1")
    if name == "Q(zeta15)":
        return NumberField(name, cyclotomic_polynomial(15), cmath.exp(2j * math.pi / 15), "zeta15")
    if name == "Q(zeta7)":
        return NumberField(name, cyclotomic_polynomial(7), cmath.exp(2j * math.pi / 7), "zeta7")
    if name == "Q(eta)":
        # 4e^2 + 3e + 9, made monic; root (-3 + 3*sqrt(-15))/8
        return NumberField(name, [Fraction(9, 4), Fraction(3, 4), 1], (-3 + 3j * math.sqrt(15)) / 8, "eta")
    raise KeyError(f"unknown field {name!r}")


QQ = field_by_name("Q")
QZ15 = field_by_name("Q(zeta15)")
QZ7 = field_by_name("Q(zeta7)")
QETA = field_by_name("Q(eta)")

GROUP_FIELDS = {
    "V": QZ15,
    "I": QZ15,
    "K": QZ7,
    "I-wiman": QETA,
    "V-wiman": QQ,
}


def gauss_sum(field: NumberField, zeta: FieldElement, p: int) -> FieldElement:
    """Quadratic Gauss sum sum_k (k/p) zeta^k for an odd prime p."""
    squares = {k * k % p for k in range(1, p)}
    total = field.zero
    for k in range(1, p):
        term = zeta**k
        total = total + term if k in squares else total - term
    return total


def embed_constants(group_id: str) -> dict:
    """Named constants living in the canonical field for ``group_id``.

    V, I: rho, tau, sqrt5 (and zeta15) in Q(zeta15).
    K: zeta, sqrt-7 in Q(zeta7).
    I-wiman: eta in Q(eta).  V-wiman: rational only, returns {}.
    """
    if group_id not in GROUP_FIELDS:
        raise KeyError(f"unknown group {group_id!r}")
    F = GROUP_FIELDS[group_id]
    if F is QZ15:
        z = F.gen()
        rho = z**5
        sqrt5 = gauss_sum(F, z**3, 5)
        tau = (1 + sqrt5) / 2
        return {"zeta15": z, "rho": rho, "sqrt5": sqrt5, "tau": tau}
    if F is QZ7:
        z = F.gen()
        return {"zeta": z, "sqrt-7": gauss_sum(F, z, 7)}
    if F is QETA:
        return {"eta": F.gen()}
    return {}
