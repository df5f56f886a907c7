import pytest

from invcurve.arith import QETA, QQ, QZ15, embed_constants
from invcurve.groups import DEGREES, generators, lift
from invcurve.invariants import (
    KLEIN_QUARTIC, PRINTED_CONICS, WIMAN_SEXTIC, ExpressionError, build_invariants,
    compare_printed_conics, conics, conics_permuted, eta_image_in_cyclotomic,
    express_in_basic, is_invariant, plane_genus, wiman_jacobian_at_base_point,
    wiman_symmetries,
)
from invcurve.mpoly import MPoly


def _substitute_back(expr, T):
    total = MPoly.zero(T.field)
    for (i, j, k), c in expr.coefficients.items():
        total = total + (T.F ** i * T.Phi ** j * T.Psi ** k).scale(c)
    return total


@pytest.mark.parametrize("gid,coords", [("V", "standard"), ("V", "wiman"), ("I", "standard"),
                                        ("I", "wiman"), ("K", "standard")])
def test_degrees(gid, coords):
    assert build_invariants(gid, coords).degrees == DEGREES[gid]


@pytest.mark.parametrize("gid", ["I", "K"])
def test_invariant_under_whole_group(gid):
    T = build_invariants(gid)
    G = lift(gid)
    for f in (T.F, T.Phi, T.Psi):
        assert is_invariant(f, G)


@pytest.mark.parametrize("gid", ["V", "I", "K"])
def test_invariant_under_generators(gid):
    T = build_invariants(gid)
    gens = generators(gid)
    for f in T.as_dict().values():
        assert is_invariant(f, gens)


@pytest.mark.parametrize("gid", ["V", "I"])
def test_wiman_frame_symmetries(gid):
    T = build_invariants(gid, "wiman")
    for f in T.as_dict().values():
        assert is_invariant(f, wiman_symmetries())


def test_non_invariant_detected():
    x, y, z = MPoly.gens(QZ15)
    assert not is_invariant(x * x, generators("I"))
    assert not is_invariant(x ** 6, generators("V"))


def test_klein_quartic_is_F():
    T = build_invariants("K")
    assert T.F == MPoly.parse(KLEIN_QUARTIC).change_field(T.field)


def test_wiman_sextic_printed_coefficients():
    W = build_invariants("V", "wiman").F
    expected = {(3, 3, 0): 10, (5, 0, 1): 9, (0, 5, 1): 9, (2, 2, 2): -45,
                (1, 1, 4): -135, (0, 0, 6): 27}
    assert {m: c.rational() for m, c in W.items()} == expected
    assert W == MPoly.parse(WIMAN_SEXTIC)


def test_icosahedral_wiman_jacobian():
    assert wiman_jacobian_at_base_point() == QETA(7290)


def test_eta_image_satisfies_minimal_polynomial():
    e = eta_image_in_cyclotomic()
    assert 4 * e * e + 3 * e + 9 == QZ15.zero


def test_conics_are_permuted():
    assert conics_permuted()


def test_conic_one_and_two():
    rho = embed_constants("V")["rho"]
    x, y, z = MPoly.gens(QZ15)
    c = conics()
    assert c[0] == x * x + y * y + z * z
    assert c[1] == x * x + (y * y).scale(rho * rho) + (z * z).scale(rho)


def test_printed_conics_agree_except_one_coefficient():
    cmp = {c.index: c for c in compare_printed_conics()}
    assert [n for n in cmp if cmp[n].matches] == [1, 2, 4, 5]
    assert cmp[3].mismatched == [(1, 1, 0)]
    assert cmp[6].mismatched == [(1, 1, 0)]


def test_corrected_xy_coefficient():
    c = embed_constants("V")
    rho, tau = c["rho"], c["tau"]
    fixed = (QZ15(-4) - 2 * rho + 2 * tau - 2 * rho * tau) / 4
    printed = (QZ15(-4) - 2 * rho + 2 * tau - rho * tau) / 4
    built = conics()
    for n in (3, 6):
        assert PRINTED_CONICS[n][(1, 1, 0)] == (-4, -2, 2, -1)
        assert built[n - 1].coefficient((1, 1, 0)) == fixed != printed


@pytest.mark.parametrize("gid,coords", [("K", "standard"), ("I", "standard"),
                                        ("I", "wiman"), ("V", "wiman")])
def test_x_squared_in_basic_invariants(gid, coords):
    T = build_invariants(gid, coords)
    e = express_in_basic(T.X * T.X, T)
    assert e.verified
    assert _substitute_back(e, T) == T.X * T.X


@pytest.mark.slow
def test_x_squared_valentiner_standard():
    T = build_invariants("V")
    e = express_in_basic(T.X * T.X, T)
    assert _substitute_back(e, T) == T.X * T.X


def test_expression_of_a_power():
    T = build_invariants("K")
    e = express_in_basic(T.F * T.F, T)
    assert {k: v for k, v in e.coefficients.items() if v} == {(2, 0, 0): T.field.one}


def test_expression_fails_for_non_invariant():
    T = build_invariants("K")
    x = MPoly.var("x", T.field)
    with pytest.raises(ExpressionError):
        express_in_basic(x * T.F, T)
    with pytest.raises(ExpressionError):
        express_in_basic(T.X, T)


def test_field_tags():
    assert build_invariants("V", "wiman").field is QQ
    assert build_invariants("I", "wiman").field is QETA


def test_plane_genus():
    assert [plane_genus(d) for d in (1, 2, 3, 4, 6)] == [0, 0, 1, 3, 10]


def test_json_shape():
    j = build_invariants("K").to_json()
    assert j["degrees"] == [4, 6, 14, 21]
    assert set(j["polynomials"]) == {"F", "Phi", "Psi", "X"}
