"""From a 3-supercocycle to a genuine 3-cocycle on a central extension.

On Z/2 with the nontrivial parity 2-cocycle omega(g,h) = gh, the function
with F~(1,1,1) = i and all other values 1 satisfies the super identity

    F~(g,h,k) F~(g,hk,l) F~(h,k,l) = (-1)^(omega(g,h) omega(k,l)) F~(gh,k,l) F~(g,h,kl)

(the instance (1,1,1,1) forces F~(1,1,1)^2 = -1, so no ordinary cocycle can
do this).  Lifting with the sign (-1)^(c * omega(g,h)) produces an honest
3-cocycle on the group Z/4 built from omega, whose restriction to grade-0
arguments is F~ again.
"""

from sfckit.catalog import z2_supercocycle
from sfckit.cocycles import (
    SuperCocycle,
    check_2cocycle,
    check_3cocycle,
    check_supercocycle,
    cyclic_group,
    lift_supercocycle,
)
from sfckit.scalars import ONE

g = cyclic_group(2)
sc = z2_supercocycle(1)

print("omega is a 2-cocycle:", check_2cocycle(g, sc.omega).ok)
print("F~(1,1,1) =", sc(1, 1, 1))
print(check_supercocycle(g, sc).summary())

flat = SuperCocycle(sc.omega, [[[ONE] * 2] * 2] * 2)
print("\nwith F~ = 1 instead:")
print(check_supercocycle(g, flat).summary())

ext, lifted = lift_supercocycle(g, sc)
print("\ncentral extension has order", ext.order, "with elements", ext.labels)
x = 2  # the element 1^0
orbit = [x]
while orbit[-1] != ext.identity:
    orbit.append(ext.mul(orbit[-1], x))
print("1^0 generates a cycle of length", len(orbit), "-> the extension is Z/4")

print("\nlifted values F(g^a, h^b, k^c):")
for a in range(4):
    for b in range(4):
        for c in range(4):
            value = lifted(a, b, c)
            if not value.is_one():
                print(f"  F({ext.labels[a]}, {ext.labels[b]}, {ext.labels[c]}) = {value}")

print("\nthe lift is a genuine 3-cocycle on Z/4:", check_3cocycle(ext, lifted).ok)
restricts = all(
    lifted(2 * a, 2 * b, 2 * c) == sc(a, b, c)
    for a in range(2)
    for b in range(2)
    for c in range(2)
)
print("restricting to grade-0 arguments recovers F~:", restricts)
