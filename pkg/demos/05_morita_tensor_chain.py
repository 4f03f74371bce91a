"""From wedge squares to the degree-3 twist: the tensor-calculus route.

(x1 ^ (y1 +- 2 x2))^(x)2 expands into three terms; the difference isolates
8 (x1 ^ x2)^(x)2, whose image under the projection

    wedge^2 H (x) wedge^2 H -> ((wedge^2 H (x) H)/wedge^3 H) (x) H

is, after reading (a^b)(x)c as [[a,b],c] and pairing off the trailing
factor symplectically, exactly the Johnson-type map of the degree-3 twist
automorphism.
"""

import numpy as np

from nilmassey import (TensorSpaceContext, build_context, build_phi_lambda,
                       tau_3_ell)

l, g = 5, 2
tctx = TensorSpaceContext(l, g)
x1 = tctx.vector({"x1": 1})
y1 = tctx.vector({"y1": 1})
x2 = tctx.vector({"x2": 1})

wa = tctx.wedge(x1, y1)
wb = tctx.wedge(x1, x2)
plus = tctx.wedge_square_expand(x1, y1, x2, +1)
minus = tctx.wedge_square_expand(x1, y1, x2, -1)
cross = (tctx.tensor_w2_w2(wa, wb) + tctx.tensor_w2_w2(wb, wa)) % l
print("expansion (+): holds:",
      np.array_equal(plus, (tctx.tensor_w2_w2(wa, wa)
                            + 4 * tctx.tensor_w2_w2(wb, wb) + 2 * cross) % l))
print("expansion (-): holds:",
      np.array_equal(minus, (tctx.tensor_w2_w2(wa, wa)
                             + 4 * tctx.tensor_w2_w2(wb, wb) - 2 * cross) % l))
print("sum minus twice the plain square isolates 8 (x1^x2)^(x)2:",
      np.array_equal((plus + minus - 2 * tctx.tensor_w2_w2(wa, wa)) % l,
                     8 * tctx.tensor_w2_w2(wb, wb) % l))

target = 8 * tctx.tensor_w2_w2(wb, wb) % l
projected = tctx.project_w(target)
print("projected shape:", projected.shape,
      f"(quotient dim {tctx.dim_quotient} x trailing H dim {tctx.n})")

free = build_context(l, flavor="free", rank=2 * g)
as_map = tctx.tensor_to_hom(free, projected)
print("map on y1:", free.element(v3=as_map.columns[1])
      == free.evaluate_word("[[x1,x2],x2]^-8"))
print("map on y2:", free.element(v3=as_map.columns[3])
      == free.evaluate_word("[[x1,x2],x1]^8"))

ctx = build_context(l, g=g)
surface_map = tctx.tensor_to_hom(ctx, projected)
tau = tau_3_ell(ctx, build_phi_lambda(ctx))
print("equals the twist automorphism's Johnson-type map on the quotient:",
      surface_map.matrix() == tau.matrix())
