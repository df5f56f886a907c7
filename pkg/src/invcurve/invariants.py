"""Fundamental invariants F, Phi, Psi, X for the three groups.

Standard coordinates use the generator matrices from ``groups``.  The
Wiman frame has integer (V) or Q(eta) (I) coefficients and is much cheaper
for the heavy relations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .arith import QETA, QQ, QZ15, FieldElement, NumberField, embed_constants
from .groups import GeneratorSet, Mat3, MatrixGroup, generators
from .mpoly import MPoly, bordered_hessian, hessian, jacobian_det

WIMAN_SEXTIC = "10*x^3*y^3 + 9*x^5*z + 9*y^5*z - 45*x^2*y^2*z^2 - 135*x*y*z^4 + 27*z^6"
KLEIN_QUARTIC = "x^3*y + y^3*z + z^3*x"

# genus of a smooth plane curve of degree d, for the curves V(F), V(Phi) ...
def plane_genus(d: int) -> int:
    return (d - 1) * (d - 2) // 2


class ExpressionError(ValueError):
    pass


@dataclass
class InvariantTriple:
    group_id: str
    coords: str
    F: MPoly
    Phi: MPoly
    Psi: MPoly
    X: MPoly
    field: NumberField = field(default=QQ)

    @property
    def degrees(self) -> tuple:
        return tuple(p.homogeneous_degree() for p in (self.F, self.Phi, self.Psi, self.X))

    @property
    def basic(self) -> tuple:
        return (self.F, self.Phi, self.Psi)

    def as_dict(self) -> dict:
        return {"F": self.F, "Phi": self.Phi, "Psi": self.Psi, "X": self.X}

    def to_json(self) -> dict:
        return {
            "group": self.group_id,
            "coords": self.coords,
            "field": self.field.name,
            "degrees": list(self.degrees),
            "polynomials": {k: v.to_json() for k, v in self.as_dict().items()},
        }


def _complete(group_id, coords, F, Phi, Psi, fld) -> InvariantTriple:
    X = jacobian_det(F, Phi, Psi)
    return InvariantTriple(group_id, coords, F, Phi, Psi, X, fld)


# ---- the six conics ---------------------------------------------------

# Printed coefficient blocks as 4*coef = c0 + c1*rho + c2*tau + c3*rho*tau,
# keyed by monomial.  Kept only to cross-check the constructed conics.
PRINTED_CONICS = {
    3: {(2, 0, 0): (-1, -1, 1, 2), (0, 2, 0): (1, 0, -2, -1), (0, 0, 2): (0, 1, 1, -1),
        (1, 1, 0): (-4, -2, 2, -1), (0, 1, 1): (-2, 2, -2, -4), (1, 0, 1): (2, 4, -4, -2)},
    4: {(2, 0, 0): (1, 0, -2, -1), (0, 2, 0): (0, 1, 1, -1), (0, 0, 2): (-1, -1, 1, 2),
        (1, 1, 0): (-2, 2, -2, -4), (0, 1, 1): (2, 4, -4, -2), (1, 0, 1): (-4, -2, 2, -2)},
    5: {(2, 0, 0): (1, 0, -2, -1), (0, 2, 0): (0, 1, 1, -1), (0, 0, 2): (-1, -1, 1, 2),
        (1, 1, 0): (-2, 2, -2, -4), (0, 1, 1): (-2, -4, 4, 2), (1, 0, 1): (4, 2, -2, 2)},
    6: {(2, 0, 0): (-1, -1, 1, 2), (0, 2, 0): (1, 0, -2, -1), (0, 0, 2): (0, 1, 1, -1),
        (1, 1, 0): (-4, -2, 2, -1), (0, 1, 1): (2, -2, 2, 4), (1, 0, 1): (-2, -4, 4, 2)},
}

# exponent of P^-1 used to move C_2 onto C_n
_P_POWERS = {3: 4, 4: 3, 5: 2, 6: 1}


@lru_cache(maxsize=None)
def conics() -> tuple:
    """C_1 .. C_6 built from x^2+y^2+z^2 by Q^-1 and powers of P^-1."""
    g = generators("V").as_dict()
    x, y, z = MPoly.gens(QZ15)
    c1 = x * x + y * y + z * z
    c2 = c1.substitute_linear(g["Q"].inverse())
    Pinv = g["P"].inverse()
    out = [c1, c2]
    for n in range(3, 7):
        out.append(c2.substitute_linear(Pinv ** _P_POWERS[n]))
    return tuple(out)


def printed_conic(n: int) -> MPoly:
    c = embed_constants("V")
    rho, tau = c["rho"], c["tau"]
    if n == 1:
        return MPoly.parse("x^2 + y^2 + z^2", QQ).change_field(QZ15)
    if n == 2:
        x, y, z = MPoly.gens(QZ15)
        return x * x + (y * y).scale(rho**2) + (z * z).scale(rho)
    terms = {}
    for m, (c0, c1, c2, c3) in PRINTED_CONICS[n].items():
        terms[m] = (QZ15(c0) + rho * c1 + tau * c2 + rho * tau * c3) / 4
    return MPoly(QZ15, terms)


@dataclass
class ConicComparison:
    index: int
    matches: bool
    mismatched: list  # monomials whose printed coefficient differs

    def to_json(self) -> dict:
        return {
            "conic": self.index,
            "matches": self.matches,
            "mismatched": ["%d,%d,%d" % m for m in self.mismatched],
        }


def compare_printed_conics() -> list:
    built = conics()
    out = []
    for n in range(1, 7):
        a, b = built[n - 1], printed_conic(n)
        bad = sorted({m for m in set(a.terms) | set(b.terms)
                      if a.coefficient(m) != b.coefficient(m)})
        out.append(ConicComparison(n, not bad, bad))
    return out


def conic_orbit_map(A: Mat3) -> list:
    """For each conic C_i return (j, k) with C_i^A = rho^k C_j, or None."""
    rho = embed_constants("V")["rho"]
    built = conics()
    scalars = [QZ15.one, rho, rho * rho]
    out = []
    for c in built:
        img = c.substitute_linear(A)
        hit = None
        for j, d in enumerate(built):
            for k, s in enumerate(scalars):
                if img == d.scale(s):
                    hit = (j + 1, k)
                    break
            if hit:
                break
        out.append(hit)
    return out


def conics_permuted(gens: GeneratorSet | None = None) -> bool:
    """Every generator sends each conic to a cube-root multiple of a conic, bijectively."""
    gens = gens or generators("V")
    for A in gens.matrices:
        images = conic_orbit_map(A)
        if any(h is None for h in images):
            return False
        if len({h[0] for h in images}) != 6:
            return False
    return True


# ---- builders ---------------------------------------------------------

@lru_cache(maxsize=None)
def build_valentiner() -> InvariantTriple:
    F = MPoly.zero(QZ15)
    for c in conics():
        F = F + c * c * c
    Phi = hessian(F).det()
    Psi = bordered_hessian(F, Phi).det()
    return _complete("V", "standard", F, Phi, Psi, QZ15)


@lru_cache(maxsize=None)
def build_wiman_valentiner() -> InvariantTriple:
    F = MPoly.parse(WIMAN_SEXTIC, QQ)
    Phi = hessian(F).det()
    Psi = bordered_hessian(F, Phi).det()
    return _complete("V", "wiman", F, Phi, Psi, QQ)


@lru_cache(maxsize=None)
def build_icosahedral(coords: str = "standard") -> InvariantTriple:
    if coords == "standard":
        x, y, z = MPoly.gens(QZ15)
        F = x * x + y * y + z * z
        Phi = build_valentiner().F
        Psi = bordered_hessian(F, Phi).det()
        return _complete("I", "standard", F, Phi, Psi, QZ15)
    if coords == "wiman":
        eta = embed_constants("I-wiman")["eta"]
        x, y, z = MPoly.gens(QETA)
        F = x * y + (z * z).scale(eta)
        Phi = MPoly.parse(WIMAN_SEXTIC, QQ).change_field(QETA)
        Psi = bordered_hessian(F, Phi).det()
        return _complete("I", "wiman", F, Phi, Psi, QETA)
    raise ValueError(f"unknown coordinate system {coords!r}")


@lru_cache(maxsize=None)
def build_klein() -> InvariantTriple:
    F = MPoly.parse(KLEIN_QUARTIC, QQ)
    Phi = hessian(F).det().scale(Fraction(-1, 54))
    Psi = bordered_hessian(F, Phi).det().scale(Fraction(-1, 9))
    return _complete("K", "standard", F, Phi, Psi, QQ)


def build_invariants(group_id: str, coords: str = "standard") -> InvariantTriple:
    if group_id == "K":
        if coords != "standard":
            raise ValueError("the Klein group only has standard coordinates here")
        return build_klein()
    if group_id == "I":
        return build_icosahedral(coords)
    if group_id == "V":
        if coords == "standard":
            return build_valentiner()
        if coords == "wiman":
            return build_wiman_valentiner()
        raise ValueError(f"unknown coordinate system {coords!r}")
    raise KeyError(f"unknown group {group_id!r}; expected one of V, I, K")


def wiman_jacobian_at_base_point() -> FieldElement:
    """X of the Wiman-frame icosahedral triple evaluated at (1, 0, 0)."""
    return build_icosahedral("wiman").X.evaluate((1, 0, 0))


# ---- invariance -------------------------------------------------------

def _matrices(g) -> list:
    if isinstance(g, MatrixGroup):
        return list(g.elements)
    if isinstance(g, GeneratorSet):
        return list(g.matrices)
    if isinstance(g, Mat3):
        return [g]
    return list(g)


def _common_field(f: MPoly, A: Mat3) -> MPoly:
    if f.field is A.field:
        return f
    if f.field.degree == 1:
        return f.change_field(A.field)
    if f.field is QETA and A.field is QZ15:
        return eta_to_cyclotomic(f)
    raise ValueError(f"cannot act on a {f.field.name} polynomial by a {A.field.name} matrix")


def is_invariant(f: MPoly, g) -> bool:
    """True iff f^A = f for every matrix A in g (a group, generator set or list)."""
    for A in _matrices(g):
        h = _common_field(f, A)
        if h.substitute_linear(A) != h:
            return False
    return True


def eta_image_in_cyclotomic() -> FieldElement:
    """A root of 4e^2 + 3e + 9 inside Q(zeta15): (-3 + 3 sqrt(-15)) / 8."""
    c = embed_constants("V")
    sqrt_m3 = 2 * c["rho"] + 1
    return (-3 + 3 * sqrt_m3 * c["sqrt5"]) / 8


def eta_to_cyclotomic(f: MPoly) -> MPoly:
    e = eta_image_in_cyclotomic()
    a_coord = lambda c: c.coords()  # noqa: E731
    return MPoly(QZ15, {m: QZ15(a_coord(c)[0]) + e * a_coord(c)[1] for m, c in f.terms.items()})


def wiman_symmetries() -> GeneratorSet:
    """Determinant-one symmetries of the Wiman frame visible by inspection.

    (x, y, z) -> (-y, -x, -z) and diag(w, w^-1, 1) with w a fifth root of
    unity.  These generate a dihedral group of order 10 inside the Wiman
    form of the icosahedral group; the full Wiman-frame generators need a
    square root outside our fields and are not built.
    """
    w = QZ15.gen() ** 3
    swap = Mat3(QZ15, [0, -1, 0, -1, 0, 0, 0, 0, -1])
    rot = Mat3(QZ15, [w, 0, 0, 0, w**4, 0, 0, 0, 1])
    return GeneratorSet("wiman", ["swap", "rot5"], [swap, rot])


# ---- expressing an invariant in F, Phi, Psi ---------------------------

@dataclass
class Expression:
    degree: int
    coefficients: dict  # (i, j, k) -> FieldElement
    verified: bool

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "verified": self.verified,
            "coefficients": {
                "%d,%d,%d" % key: c.to_json() for key, c in sorted(self.coefficients.items())
            },
        }


def _basis_triples(a: int, b: int, c: int, d: int) -> list:
    out = []
    for k in range(d // c + 1):
        for j in range((d - c * k) // b + 1):
            r = d - c * k - b * j
            if r % a == 0:
                out.append((r // a, j, k))
    return sorted(out, reverse=True)


def _power(cache: dict, key, base: MPoly, e: int) -> MPoly:
    if (key, e) not in cache:
        if e == 0:
            cache[(key, e)] = MPoly.const(1, base.field)
        else:
            cache[(key, e)] = _power(cache, key, base, e - 1) * base
    return cache[(key, e)]


def basis_products(triple: InvariantTriple, d: int) -> dict:
    a, b, c = (p.homogeneous_degree() for p in triple.basic)
    cache: dict = {}
    out = {}
    for (i, j, k) in _basis_triples(a, b, c, d):
        out[(i, j, k)] = (
            _power(cache, "F", triple.F, i)
            * _power(cache, "Phi", triple.Phi, j)
            * _power(cache, "Psi", triple.Psi, k)
        )
    return out


def _solve_greedy(columns: list, target: MPoly, fld: NumberField):
    """Pick independent monomial rows until full column rank, then back-solve."""
    n = len(columns)
    monos = set(target.terms)
    for col in columns:
        monos.update(col.terms)
    pivots: dict = {}  # pivot column -> reduced row
    for m in sorted(monos, reverse=True):
        row = [col.coefficient(m) for col in columns] + [target.coefficient(m)]
        for p, prow in pivots.items():
            if row[p]:
                f = row[p]
                row = [u - f * v for u, v in zip(row, prow)]
        lead = next((i for i in range(n) if row[i]), None)
        if lead is None:
            continue
        inv = row[lead].inverse()
        row = [u * inv for u in row]
        for p in list(pivots):
            prow = pivots[p]
            if prow[lead]:
                f = prow[lead]
                pivots[p] = [u - f * v for u, v in zip(prow, row)]
        pivots[lead] = row
        if len(pivots) == n:
            break
    sol = [fld.zero] * n
    for p, row in pivots.items():
        sol[p] = row[n]
    return sol


def express_in_basic(f: MPoly, triple: InvariantTriple) -> Expression:
    """Write f as a combination of F^i Phi^j Psi^k, verified by substitution.

    Raises ExpressionError when the degree admits no such monomials or when
    the exact identity fails.
    """
    d = f.homogeneous_degree()
    products = basis_products(triple, d)
    if not products:
        raise ExpressionError(f"degree {d} not representable: empty basis")
    keys = list(products)
    fld = triple.field
    target = f.change_field(fld) if f.field is not fld else f
    sol = _solve_greedy([products[k] for k in keys], target, fld)
    total = MPoly.zero(fld)
    for key, c in zip(keys, sol):
        if c:
            total = total + products[key].scale(c)
    if total != target:
        raise ExpressionError(f"not expressible in degree {d}")
    coeffs = {k: c for k, c in zip(keys, sol) if c}
    return Expression(d, coeffs, True)
