"""The rational Wiman frame: the sextic, its relatives, and the 7290 check."""

import time

from invcurve.ideals import nonsingular_check, only_trivial_zero
from invcurve.invariants import build_invariants, express_in_basic, wiman_jacobian_at_base_point

V = build_invariants("V", "wiman")
print("Wiman sextic:", V.F)
print("degrees:", V.degrees, "over", V.field.name)
t0 = time.perf_counter()
print("F, Phi, Psi share no zero:", only_trivial_zero(list(V.basic)),
      f"({time.perf_counter() - t0:.2f}s)")
print("Wiman sextic smooth:", nonsingular_check(V.F))
e = express_in_basic(V.X * V.X, V)
print("X^2 needs", sum(1 for c in e.coefficients.values() if c), "monomials in F, Phi, Psi")

print("icosahedral Jacobian at (1,0,0):", wiman_jacobian_at_base_point())
