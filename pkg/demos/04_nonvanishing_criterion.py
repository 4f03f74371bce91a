"""The non-vanishing criterion, end to end.

On the quotient alone the product <x1*, x2*, x1*> contains 0. Extending
the characters to the semidirect product with the degree-3 twist
automorphism keeps the product nonempty but removes 0: the full stratum
sweep over rho(Phi)'s non-central coordinates finds no lift, and the
obstruction is exactly h(tau(y2)) = 16 != 0 mod l.
"""

from nilmassey import (SemidirectContext, build_context, build_phi_lambda,
                       check_proposition, contains_zero,
                       contains_zero_semidirect, dual_character,
                       extend_characters, h_ell, massey_nonempty_semidirect,
                       tau_3_ell)

for l in (5, 7):
    ctx = build_context(l, g=2)
    chi1 = dual_character(ctx, "x1")
    chi2 = dual_character(ctx, "x2")
    phi = build_phi_lambda(ctx)
    tau = tau_3_ell(ctx, phi)

    print(f"-- l = {l} " + "-" * 40)
    y2 = ctx.generator("y2")
    print("tau(y2) equals [[x1,x2],x1]^8:",
          tau(y2) == ctx.evaluate_word("[[x1,x2],x1]^8"))
    print("h(tau(y2)) =", h_ell(ctx, chi1, chi2, chi1, tau(y2)), f"(16 mod {l})")

    print("on the quotient, product contains 0:",
          contains_zero(ctx, chi1, chi2, chi1) is not None)

    semictx = SemidirectContext(ctx, phi)
    ext = extend_characters(semictx, chi1, chi2, chi1)
    print("on the semidirect product: nonempty =",
          massey_nonempty_semidirect(semictx, *ext),
          "| contains 0 =", contains_zero_semidirect(semictx, *ext) is not None,
          f"(all {l}^5 strata swept)")

    report = check_proposition(ctx, chi1, chi2, chi1, phi, y2)
    print("criterion conditions (i)/(ii)/(iii):",
          report.condition_i, report.condition_ii, report.condition_iii,
          "-> verdict", report.verdict)
