import pytest
from hypothesis import given, strategies as st

from invcurve.arith import QQ, QZ15
from invcurve.groups import Mat3
from invcurve.invariants import WIMAN_SEXTIC
from invcurve.mpoly import (
    InhomogeneousError, MPoly, PolyMatrix, bordered_hessian, hessian, jacobian_det,
    monomials_of_degree,
)

x, y, z = MPoly.gens(QQ)
coef = st.integers(-5, 5)


def hom_poly(d):
    mons = monomials_of_degree(d)
    return st.lists(coef, min_size=len(mons), max_size=len(mons)).map(
        lambda cs: MPoly(QQ, {m: QQ(c) for m, c in zip(mons, cs) if c}))


any_poly = st.integers(0, 3).flatmap(hom_poly)
points = st.tuples(coef, coef, coef)
matrices = st.lists(coef, min_size=9, max_size=9).map(
    lambda e: Mat3(QQ, [e[0:3], e[3:6], e[6:9]]))


@given(any_poly, any_poly, points)
def test_evaluation_is_a_ring_map(f, g, p):
    assert (f * g).evaluate(p) == f.evaluate(p) * g.evaluate(p)
    assert (f + g).evaluate(p) == f.evaluate(p) + g.evaluate(p)


@given(any_poly, matrices, matrices)
def test_right_action_composes(f, A, B):
    assert f.substitute_linear(A).substitute_linear(B) == f.substitute_linear(A * B)


@given(any_poly, matrices, points)
def test_substitution_matches_evaluation(f, A, p):
    Ap = [sum(A[i][j] * p[j] for j in range(3)) for i in range(3)]
    assert f.substitute_linear(A).evaluate(p) == f.evaluate(Ap)


@given(st.integers(1, 4).flatmap(hom_poly))
def test_euler_identity(f):
    if f.is_zero():
        return
    d = f.homogeneous_degree()
    gx, gy, gz = f.gradient()
    assert x * gx + y * gy + z * gz == f.scale(d)


@given(st.integers(2, 3).flatmap(hom_poly))
def test_hessian_symmetric_and_dets_agree(f):
    H = hessian(f)
    assert H.is_symmetric()
    assert H.det() == H.bareiss_det()


@given(hom_poly(2), hom_poly(2), hom_poly(1))
def test_bordered_hessian_dets_agree(f, g, h):
    B = bordered_hessian(f + h * h, g)
    assert B.det() == B.bareiss_det()


def test_hessian_of_sum_of_squares():
    assert hessian(x * x + y * y + z * z).det() == MPoly.const(8)


def test_klein_quartic_hessian():
    # frozen from an independent computer algebra system
    K = MPoly.parse("x^3*y + y^3*z + z^3*x")
    expected = MPoly.parse("-54*x*y^5 - 54*x^5*z + 270*x^2*y^2*z^2 - 54*y*z^5")
    assert hessian(K).det() == expected


def test_wiman_partial_at_base_point():
    W = MPoly.parse(WIMAN_SEXTIC)
    assert W.partial("z").evaluate((0, 0, 1)) == QQ(162)


def test_transposition_action():
    swap = Mat3(QQ, [[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    assert x.substitute_linear(swap) == y


def test_jacobian_of_coordinates():
    assert jacobian_det(x, y, z) == MPoly.const(1)
    assert jacobian_det(x * x, y * y, z * z) == (x * y * z).scale(8)


def test_parse_round_trip_and_json():
    f = MPoly.parse("3*x^2*y - 1/2*z^3 + x*y*z")
    assert MPoly.parse(f.to_text()) == f
    assert MPoly.from_json(f.to_json()) == f
    g = f.change_field(QZ15)
    assert MPoly.from_json(g.to_json()) == g


def test_exact_division():
    f = (x + y) * (x - z * 2)
    assert f.exact_div(x + y) == x - z * 2
    with pytest.raises(ArithmeticError):
        f.exact_div(x + z)


def test_inhomogeneous_degree_raises():
    with pytest.raises(InhomogeneousError):
        (x + y * y).homogeneous_degree()


def test_polymatrix_rejects_ragged():
    with pytest.raises(ValueError):
        PolyMatrix([[x, y], [z]])
