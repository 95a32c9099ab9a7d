"""pi-Grothendieck rings: exact ring arithmetic over Z[pi]/(pi^2 - 1).

The coefficient ring records parity shifts: a Hom space with n0 even and n1
odd basis vectors contributes n0 + n1*pi.  Majorana classes satisfy
[X] = pi[X], so their coefficients collapse to plain integers; the structure
constant onto a Majorana target is the rank over its two-dimensional
endomorphism algebra (the balanced parity count), which is what keeps the
unit law and associativity exact.
"""

from sfckit.catalog import build_entry
from sfckit.grothendieck import PI, ZPi, build_sgr, relations_text, sgr_multiply

print("pi * pi =", PI * PI)
print("(1 + pi)^2 =", ZPi(1, 1) * ZPi(1, 1))
print("(1 - pi)(1 + pi) =", ZPi(1, -1) * ZPi(1, 1))

for name, params in (("ising", ()), ("ck", (2,)), ("ck", (6,))):
    entry = build_entry(name, *params)
    ring = build_sgr(entry.data)
    majorana = ", ".join(sorted(ring.labels[i] for i in ring.majorana)) or "(none)"
    print(f"\n{entry.describe()}: basis {list(ring.labels)}, majorana {majorana}")
    for line in relations_text(ring):
        print(" ", line)

# powers of [X] in the Ising ring: the Majorana relation folds pi away
ring = build_sgr(build_entry("ising").data)
power = ring.basis_vector(1)
for exponent in range(2, 6):
    power = sgr_multiply(ring, power, ring.basis_vector(1))
    print(f"[X]^{exponent} =", ring.format_element(power))
