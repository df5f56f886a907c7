"""Build the Klein group, its invariants, and check the basic geometry."""

from invcurve import build_invariants, express_in_basic, lift, molien_series
from invcurve.groups import projective_order
from invcurve.ideals import nonsingular_check, only_trivial_zero, transversal_check

G = lift("K")
print(f"Klein group: {G.order} matrices, {projective_order(G)} projective transformations")
print("Molien series to t^28:", molien_series(G, 28))

T = build_invariants("K")
for name, f in T.as_dict().items():
    print(f"{name:>3}: degree {f.homogeneous_degree()}, {len(f)} terms")
print("F =", T.F)

print("F, Phi, Psi share no zero:", only_trivial_zero(list(T.basic)))
print("each of F, Phi, Psi smooth:", all(nonsingular_check(f) for f in T.basic))
print("V(F) and V(Phi) transversal:", transversal_check(T.F, T.Phi))

e = express_in_basic(T.X * T.X, T)
print("X^2 =", " + ".join(f"({c})*F^{i}*Phi^{j}*Psi^{k}"
                          for (i, j, k), c in sorted(e.coefficients.items()) if c))
