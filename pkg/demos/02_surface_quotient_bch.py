"""The finite class-3 exponent-l quotient of a genus-g surface group.

The group is realized as a graded Lie ring over Z/l with the truncated
BCH product; elements are coordinate vectors in degrees 1, 2, 3.
"""

from nilmassey import build_context, print_word
from nilmassey.words import GroupWord

ctx = build_context(5, g=2)
d1, d2, d3 = ctx.dims
print(f"genus 2, l = 5: graded dimensions {d1}/{d2}/{d3},",
      f"group order 5^{ctx.order_exponent}")

free = build_context(5, flavor="free", rank=4)
print("free cover dimensions:", free.dims)

# the defining relation [x1,y1][x2,y2] collapses in the quotient ...
rel = ctx.evaluate_word("[x1,y1] [x2,y2]")
print("relation evaluates to identity:", rel.is_identity)
# ... but not in the free cover
print("relation in the free cover is identity:", free.evaluate_word("[x1,y1] [x2,y2]").is_identity)

# group arithmetic through the word grammar
a = ctx.evaluate_word("x1 y1^2 [x2,y2]")
b = ctx.evaluate_word("[[x1,x2],x1]^3 y2^-1")
print("a coordinates:", a.v1, a.v2, a.v3)
print("a * b == parse of concatenation:",
      a * b == ctx.evaluate_word("x1 y1^2 [x2,y2] [[x1,x2],x1]^3 y2^-1"))
print(f"a^5 is identity (exponent 5):", (a ** 5).is_identity)

# normal form: collect any element into an ordered product of Hall atoms
factors = ctx.normal_form_factor(a * b)
print("normal form of a*b:", print_word(GroupWord(tuple(factors))))

# degree filtration: commutators sink one layer down
c = ctx.evaluate_word("[x1,y1]")
print("[x1,y1] is in layer 2:", ctx.lcs_membership(c, 2),
      "| in layer 3:", ctx.lcs_membership(c, 3))
t = ctx.evaluate_word("[[x1,x2],x1]")
print("[[x1,x2],x1] is in layer 3:", ctx.lcs_membership(t, 3))
