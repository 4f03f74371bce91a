"""Triple Massey products on the quotient: cup obstructions, defining
systems, lifts to U4, and the corner homomorphism h_l on the degree-3 layer.
"""

from nilmassey import (build_context, c_det, contains_zero, cup_vanishes,
                       dual_character, h_ell, massey_nonempty)

ctx = build_context(5, g=2)
x1s = dual_character(ctx, "x1")
x2s = dual_character(ctx, "x2")
y1s = dual_character(ctx, "y1")

# nonemptiness is exactly the vanishing of the two cup products
print("cup(x1*, x2*) = 0:", cup_vanishes(ctx, x1s, x2s))
print("cup(x1*, y1*) = 0:", cup_vanishes(ctx, x1s, y1s))
print("<x1*, x2*, x1*> nonempty:", massey_nonempty(ctx, x1s, x2s, x1s) is not None)
print("<x1*, y1*, x1*> nonempty:", massey_nonempty(ctx, x1s, y1s, x1s) is not None)

# a full lift to U4 witnesses that the product contains zero
rep = contains_zero(ctx, x1s, x2s, x1s)
print("\nlift witnessing 0 in <x1*, x2*, x1*>:")
for name, image in zip(ctx.gen_names, rep.images):
    print(f"  rho({name}) = {image.coords()}   (a1,a2,a3,u,v,w)")

# h_l reads the corner entry of the lift on the degree-3 layer;
# on triple commutators of generators it is a 3x3 determinant
for word in ("[[x1,x2],x1]", "[[x2,x1],x1]", "[[y1,y2],y1]", "[[x1,x2],x1]^8"):
    value = h_ell(ctx, x1s, x2s, x1s, ctx.evaluate_word(word), rep)
    print(f"h({word}) = {value}")

g = ctx.generator
print("determinant formula at (x1, x2, x1):",
      c_det(x1s, x2s, x1s, g("x1"), g("x2"), g("x1")))
