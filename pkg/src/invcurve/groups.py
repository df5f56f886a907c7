"""The three matrix groups, their projective quotients and Molien series."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import QZ7, QZ15, FieldElement, NumberField, embed_constants

DEFAULT_CAP = 4000

# degrees (a, b, c, e_X) of F, Phi, Psi, X
DEGREES = {
    "V": (6, 12, 30, 45),
    "I": (2, 6, 10, 15),
    "K": (4, 6, 14, 21),
}
PROJECTIVE_ORDERS = {"V": 360, "I": 60, "K": 168}
LIFT_ORDERS = {"V": 1080, "I": 60, "K": 168}


class GroupError(RuntimeError):
    pass


class Mat3:
    """Immutable 3x3 matrix over a number field, stored row-major."""

    __slots__ = ("field", "e", "_hash")

    def __init__(self, field: NumberField, entries):
        flat = [x for row in entries for x in row] if len(entries) == 3 else list(entries)
        if len(flat) != 9:
            raise ValueError("need 9 entries")
        self.field = field
        self.e = tuple(field.coerce(x) for x in flat)
        self._hash = None

    @classmethod
    def identity(cls, field: NumberField) -> "Mat3":
        return cls(field, [1, 0, 0, 0, 1, 0, 0, 0, 1])

    @classmethod
    def scalar(cls, field: NumberField, s) -> "Mat3":
        return cls(field, [s, 0, 0, 0, s, 0, 0, 0, s])

    def __getitem__(self, i):
        return self.e[3 * i: 3 * i + 3]

    def rows(self):
        return [self[i] for i in range(3)]

    def __mul__(self, other):
        if isinstance(other, Mat3):
            a, b = self.e, other.e
            out = []
            for i in range(3):
                a0, a1, a2 = a[3 * i], a[3 * i + 1], a[3 * i + 2]
                for j in range(3):
                    s = self.field.zero
                    if a0:
                        s = s + a0 * b[j]
                    if a1:
                        s = s + a1 * b[3 + j]
                    if a2:
                        s = s + a2 * b[6 + j]
                    out.append(s)
            return Mat3(self.field, out)
        return Mat3(self.field, [x * other for x in self.e])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Mat3) and self.e == other.e

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.e)
        return self._hash

    def det(self) -> FieldElement:
        a, b, c, d, e, f, g, h, i = self.e
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def trace(self) -> FieldElement:
        return self.e[0] + self.e[4] + self.e[8]

    def minor_sum(self) -> FieldElement:
        """Sum of the principal 2x2 minors (second elementary symmetric function)."""
        a, b, c, d, e, f, g, h, i = self.e
        return (a * e - b * d) + (a * i - c * g) + (e * i - f * h)

    def inverse(self) -> "Mat3":
        a, b, c, d, e, f, g, h, i = self.e
        det = self.det()
        if not det:
            raise GroupError("singular matrix")
        inv = det.inverse()
        adj = [
            e * i - f * h, c * h - b * i, b * f - c * e,
            f * g - d * i, a * i - c * g, c * d - a * f,
            d * h - e * g, b * g - a * h, a * e - b * d,
        ]
        return Mat3(self.field, [x * inv for x in adj])

    def transpose(self) -> "Mat3":
        e = self.e
        return Mat3(self.field, [e[0], e[3], e[6], e[1], e[4], e[7], e[2], e[5], e[8]])

    def __pow__(self, k: int) -> "Mat3":
        if k < 0:
            return self.inverse() ** (-k)
        out = Mat3.identity(self.field)
        for _ in range(k):
            out = out * self
        return out

    def projective_key(self) -> tuple:
        """Entries divided by the first nonzero entry; equal keys iff A = cB."""
        pivot = next(x for x in self.e if x)
        inv = pivot.inverse()
        return tuple(x * inv for x in self.e)

    def is_scalar(self) -> bool:
        e = self.e
        return e[0] == e[4] == e[8] and not any(e[k] for k in (1, 2, 3, 5, 6, 7))

    def to_json(self) -> list:
        return [[x.to_json() for x in self[i]] for i in range(3)]

    def __repr__(self):
        return "Mat3(" + "; ".join(", ".join(str(x) for x in self[i]) for i in range(3)) + ")"


@dataclass
class GeneratorSet:
    group_id: str
    names: list
    matrices: list

    @property
    def field(self) -> NumberField:
        return self.matrices[0].field

    def as_dict(self) -> dict:
        return dict(zip(self.names, self.matrices))


@dataclass
class MatrixGroup:
    group_id: str
    elements: list
    generators: GeneratorSet | None = None
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {g: k for k, g in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def field(self) -> NumberField:
        return self.elements[0].field

    def __contains__(self, A) -> bool:
        return A in self._index

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def valentiner_generators() -> GeneratorSet:
    c = embed_constants("V")
    rho, tau = c["rho"], c["tau"]
    F = QZ15
    tinv = tau.inverse()
    Z = Mat3(F, [-1, 0, 0, 0, 1, 0, 0, 0, -1])
    T = Mat3(F, [0, 0, 1, 1, 0, 0, 0, 1, 0])
    Q = Mat3(F, [1, 0, 0, 0, 0, rho**2, 0, -rho, 0])
    half = Fraction(1, 2)
    P = Mat3(F, [x * half for x in [1, tinv, -tau, tinv, tau, 1, tau, -1, tinv]])
    return GeneratorSet("V", ["Z", "T", "Q", "P"], [Z, T, Q, P])


def icosahedral_generators() -> GeneratorSet:
    g = valentiner_generators().as_dict()
    return GeneratorSet("I", ["Z", "T", "P"], [g["Z"], g["T"], g["P"]])


def klein_generators() -> GeneratorSet:
    c = embed_constants("K")
    z, s7 = c["zeta"], c["sqrt-7"]
    F = QZ7
    S = Mat3(F, [z**4, 0, 0, 0, z**2, 0, 0, 0, z])
    T = Mat3(F, [0, 0, 1, 1, 0, 0, 0, 1, 0])
    a, b, cc = z - z**6, z**2 - z**5, z**4 - z**3
    scale = -s7.inverse()
    R = Mat3(F, [x * scale for x in [a, b, cc, b, cc, a, cc, a, b]])
    return GeneratorSet("K", ["S", "T", "R"], [S, T, R])


GENERATORS = {
    "V": valentiner_generators,
    "I": icosahedral_generators,
    "K": klein_generators,
}


def generators(group_id: str) -> GeneratorSet:
    try:
        return GENERATORS[group_id]()
    except KeyError:
        raise KeyError(f"unknown group {group_id!r}; expected one of V, I, K") from None


def closure(gens: GeneratorSet, cap: int = DEFAULT_CAP) -> MatrixGroup:
    """Breadth-first closure of the generators under right multiplication."""
    ident = Mat3.identity(gens.field)
    seen = {ident}
    order = [ident]
    queue = deque([ident])
    while queue:
        A = queue.popleft()
        for g in gens.matrices:
            B = A * g
            if B not in seen:
                seen.add(B)
                order.append(B)
                if len(order) > cap:
                    raise GroupError(
                        f"closure exceeded cap={cap}; generators probably wrong"
                    )
                queue.append(B)
    return MatrixGroup(gens.group_id, order, gens)


_GROUP_CACHE: dict = {}


def lift(group_id: str) -> MatrixGroup:
    """Cached closure of the printed generators for V, I or K."""
    if group_id not in _GROUP_CACHE:
        _GROUP_CACHE[group_id] = closure(generators(group_id))
    return _GROUP_CACHE[group_id]


def projective_view(group: MatrixGroup) -> list:
    """One representative per scalar class."""
    reps = {}
    for A in group.elements:
        reps.setdefault(A.projective_key(), A)
    return list(reps.values())


def projective_order(group: MatrixGroup) -> int:
    return len({A.projective_key() for A in group.elements})


def _series_inverse_cubic(c1, c2, c3, N: int, field: NumberField) -> list:
    """Coefficients of 1/(1 + c1 t + c2 t^2 + c3 t^3) up to t^N."""
    out = [field.one]
    for k in range(1, N + 1):
        s = field.zero
        if c1:
            s = s - c1 * out[k - 1]
        if c2 and k >= 2:
            s = s - c2 * out[k - 2]
        if c3 and k >= 3:
            s = s - c3 * out[k - 3]
        out.append(s)
    return out


def molien_series(group: MatrixGroup, N: int) -> list:
    """Exact coefficients of (1/|G|) sum_A 1/det(I - tA) for t^0..t^N.

    det(I - tA) = 1 - tr(A) t + e2(A) t^2 - det(A) t^3, so elements are
    bucketed by that cubic and each distinct cubic is inverted once.
    """
    F = group.field
    buckets = Counter()
    for A in group.elements:
        buckets[(A.trace(), A.minor_sum(), A.det())] += 1
    total = [F.zero] * (N + 1)
    for (tr, e2, det), count in buckets.items():
        series = _series_inverse_cubic(-tr, e2, -det, N, F)
        total = [t + s * count for t, s in zip(total, series)]
    out = []
    for k, c in enumerate(total):
        q = (c / group.order)
        if not q.is_rational():
            raise GroupError(f"Molien coefficient at t^{k} is not rational: {q}")
        r = q.rational()
        if r.denominator != 1 or r < 0:
            raise GroupError(f"Molien coefficient at t^{k} is not a natural number: {r}")
        out.append(int(r))
    return out


def expand_poincare(group_id: str, N: int) -> list:
    """Power series of (1 - t^(2e)) / ((1-t^a)(1-t^b)(1-t^c)(1-t^e)) to t^N."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    a, b, c, e = DEGREES[group_id]
    series = [0] * (N + 1)
    series[0] = 1
    for d in (a, b, c, e):
        for k in range(d, N + 1):
            series[k] += series[k - d]
    if 2 * e <= N:
        shifted = [0] * (2 * e) + series[: N + 1 - 2 * e]
        series = [s - t for s, t in zip(series, shifted)]
    return series


def check_group_axioms(group: MatrixGroup) -> bool:
    """Exhaustive closure, identity and inverse check."""
    ident = Mat3.identity(group.field)
    if ident not in group:
        return False
    for A in group.elements:
        if A.inverse() not in group:
            return False
        for g in group.generators.matrices if group.generators else group.elements:
            if A * g not in group:
                return False
    return True
