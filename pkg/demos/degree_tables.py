"""Which degrees admit smooth or irreducible invariant curves.

Degrees with no invariant of that degree at all are skipped.
"""

from invcurve.decisions import decide_nonsingular
from invcurve.singularity import classify, integral_report

for g in ("V", "I", "K"):
    smooth = [d for d in range(1, 101) if decide_nonsingular(g, d).exists]
    print(f"{g}: smooth invariant curves in degrees {smooth}")
    for d in range(2, 61, 2):
        r = integral_report(g, d)
        if not r.exists and r.reason != "empty":
            print(f"   d={d:>2}: no integral curve ({r.reason})")

print()
print("general member of degree 48 for V:", classify("V", 48))
r = integral_report("V", 48)
print("irreducible:", r.exists)
for line in r.certificate.statements()[:8]:
    print("   ", line)
