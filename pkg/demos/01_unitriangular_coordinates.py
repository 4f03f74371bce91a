"""Coordinate arithmetic in the unitriangular groups U3(Z/l) and U4(Z/l).

Elements are stored by their above-diagonal entries; the product and the
commutator are closed-form polynomial maps on those coordinates.
"""

from nilmassey import U3Element, U4Element

l = 7

m = U4Element(l, a1=1, a2=0, a3=0, u=0, v=0, w=0)
n = U4Element(l, a1=0, a2=1, a3=0, u=0, v=0, w=0)

print("m * n            =", (m * n).coords())
print("[m, n]           =", m.commutator(n).coords())
print("composed m n m~ n~ =", (m * n * m.inverse() * n.inverse()).coords())

# exponent l: every element has order dividing l
big = U4Element(l, 1, 2, 3, 4, 5, 6)
print(f"big^{l} is identity:", big.power(l).is_identity)

# the derived subgroup {a1 = a2 = a3 = 0} is abelian ...
c1 = U4Element(l, 0, 0, 0, 2, 1, 3)
c2 = U4Element(l, 0, 0, 0, 5, 0, 4)
print("derived subgroup commutes:", c1.commutator(c2).is_identity)

# ... and the center is {a1 = a2 = a3 = u = w = 0}
z = U4Element(l, 0, 0, 0, 0, 6, 0)
print("central element commutes with big:", z.commutator(big).is_identity)

# dropping the corner entry gives the quotient mod center
print("projection of big:", big.project_mod_center().coords())

# U3 is the same story one size down; its commutators are central
a = U3Element(l, a=1, b=0, c=0)
b = U3Element(l, a=0, b=1, c=0)
print("U3 commutator:", (a.commutator(b).a, a.commutator(b).b, a.commutator(b).c))
