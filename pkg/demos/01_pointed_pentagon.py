"""Pointed fusion categories and the pentagon equation.

A finite group G with a scalar function F on G^3 gives candidate fusion data:
one simple object per group element, tensor product = group multiplication,
and a 6j table with F(g,h,k) at the unique admissible decuple over (g,h,k).
The pentagon identity then holds exactly when F satisfies the multiplicative
3-cocycle identity, so the pentagon checker doubles as a cocycle checker.
"""

from sfckit.catalog import pointed_fusion_data, standard_three_cocycle
from sfckit.cocycles import ThreeCocycle, check_3cocycle, cyclic_group
from sfckit.fusion import check_6j_invertibility, check_pentagon, validate_fusion
from sfckit.scalars import root_of_unity

group = cyclic_group(3)
tau = standard_three_cocycle(3, power=1)
print("tau(1,1,1) =", tau(1, 1, 1))
print("tau(1,2,2) =", tau(1, 2, 2))

data, table = pointed_fusion_data(group, tau)
print("\nfusion data:", validate_fusion(data).summary())

report = check_pentagon(data, table)
print("\n" + report.summary())
print(check_6j_invertibility(data, table).summary())

oracle = check_3cocycle(group, tau)
print("\n3-cocycle identity directly:", "pass" if oracle.ok else "FAIL")

# now damage one value and watch both checks fail in the same place
broken_values = [[[tau(a, b, c) for c in range(3)] for b in range(3)] for a in range(3)]
broken_values[1][1][1] = broken_values[1][1][1] * root_of_unity(5, 1)
broken = ThreeCocycle(broken_values)
_, broken_table = pointed_fusion_data(group, broken)

pentagon = check_pentagon(data, broken_table, max_violations=3)
cocycle = check_3cocycle(group, broken, max_violations=3)
print("\nafter perturbing F(1,1,1) by a fifth root of unity:")
print(pentagon.summary())
print(cocycle.summary())
first = pentagon.violations[0].instance
print("\nfirst pentagon violation at objects (i,j,k,l) =", first[:4])
print("first cocycle violation at", cocycle.violations[0].instance)
