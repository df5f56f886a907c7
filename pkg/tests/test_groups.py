import pytest

from invcurve.arith import QQ, QZ15
from invcurve.groups import (
    DEGREES, LIFT_ORDERS, PROJECTIVE_ORDERS, GeneratorSet, GroupError, Mat3,
    check_group_axioms, closure, expand_poincare, generators, lift, molien_series,
    projective_order,
)


@pytest.mark.parametrize("gid", ["V", "I", "K"])
def test_generators_have_determinant_one(gid):
    for A in generators(gid).matrices:
        assert A.det() == A.field.one


@pytest.mark.parametrize("gid", ["V", "I", "K"])
def test_orders(gid):
    G = lift(gid)
    assert G.order == LIFT_ORDERS[gid]
    assert projective_order(G) == PROJECTIVE_ORDERS[gid]


@pytest.mark.parametrize("gid", ["I", "K"])
def test_group_axioms(gid):
    assert check_group_axioms(lift(gid))


def test_valentiner_lift_contains_scalar_cube_roots():
    G = lift("V")
    scalars = [A for A in G if A.is_scalar()]
    assert len(scalars) == 3


def test_trivial_group():
    G = closure(GeneratorSet("I", ("E",), (Mat3.identity(QZ15),)))
    assert G.order == 1 and projective_order(G) == 1


def test_closure_cap():
    with pytest.raises(GroupError):
        closure(generators("K"), cap=50)


def test_unknown_group():
    with pytest.raises(KeyError):
        generators("D")


def test_inverse_and_power():
    for A in generators("K").matrices:
        assert A * A.inverse() == Mat3.identity(A.field)
    S = generators("K").as_dict()["S"]
    assert S ** 7 == Mat3.identity(S.field)


@pytest.mark.parametrize("gid,N", [("I", 30), ("K", 42), ("V", 90)])
def test_molien_equals_poincare(gid, N):
    assert molien_series(lift(gid), N) == expand_poincare(gid, N)


def test_molien_klein_prefix():
    # (1 + t^21) / ((1 - t^4)(1 - t^6)(1 - t^14)), expanded by hand
    assert molien_series(lift("K"), 20) == [1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 2, 0, 2, 0, 2, 0, 3, 0, 3]


def test_valentiner_degree_eighteen():
    assert expand_poincare("V", 18)[18] == 2


def test_molien_of_scalar_group():
    # {1, -1} on Q^3: even-degree polynomials only
    G = closure(GeneratorSet("I", ("N",), (Mat3.scalar(QQ, -1),)))
    assert molien_series(G, 4) == [1, 0, 6, 0, 15]


def test_degree_table():
    assert DEGREES == {"V": (6, 12, 30, 45), "I": (2, 6, 10, 15), "K": (4, 6, 14, 21)}
