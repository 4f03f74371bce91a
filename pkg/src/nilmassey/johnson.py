"""Johnson-type maps, the degree-3 twist automorphism, and the wedge/tensor
calculus identifying the free degree-3 layer with (wedge^2 H (x) H) / wedge^3 H.

The distinguished automorphism phi_lambda of the genus-g quotient fixes
every x_i, multiplies y1 by [[x1,x2],x2]^-8 and y2 by [[x1,x2],x1]^8, and
fixes y_i for i >= 3. It acts trivially mod degree 3, has order l, and its
Johnson-type map tau_{3,l} (column j = degree-3 part of (Phi.e_j) e_j^-1)
is exactly the image of 8*(x1 ^ x2)^(x)2 under the projection

    wedge^2 H (x) wedge^2 H -> ((wedge^2 H (x) H)/wedge^3 H) (x) H

followed by the identification (a^b)(x)c -> [[a,b],c] and the symplectic
pairing <x_i, y_i> = +1 on the trailing factor. The full sufficient-
criterion checker (conditions (i)-(iii)) lives here as well.
"""

from dataclasses import dataclass

import numpy as np

from . import massey as _massey
from . import modular
from .errors import BadGenus, ContextMismatch, NotInG3
from .nilgroup import NilGroupContext, hall_basis


PHI_LAMBDA_WORDS = {"y1": "[[x1,x2],x2]^-8 y1", "y2": "[[x1,x2],x1]^8 y2"}


def build_phi_lambda(ctx):
    """The degree-3 twist automorphism (validated: relation preserved,
    invertible on degree 1)."""
    if ctx.flavor != "surface" or (ctx.genus or 0) < 2:
        raise BadGenus("phi_lambda needs a surface context with g >= 2")
    return ctx.hom_from_words(PHI_LAMBDA_WORDS, require_automorphism=True)


def action_differences(ctx, phi):
    """(Phi.e_j) e_j^-1 for each generator."""
    return [ctx.apply_hom(phi, g) * g.inverse() for g in ctx.generators()]


def in_g3(ctx, phi) -> bool:
    """Strict membership: Phi acts trivially mod the degree-3 layer."""
    return all(ctx.lcs_membership(d, 3) for d in action_differences(ctx, phi))


@dataclass(frozen=True)
class Tau3Map:
    """Linear map from degree-1 coordinates into the degree-3 layer."""

    ctx: NilGroupContext
    columns: tuple  # one degree-3 coordinate tuple per generator

    def __call__(self, element):
        if element.ctx is not self.ctx:
            raise ContextMismatch("element from a different context")
        l = self.ctx.l
        acc = [0] * len(self.columns[0])
        for coeff, col in zip(element.v1, self.columns):
            if coeff:
                acc = [(a + coeff * c) % l for a, c in zip(acc, col)]
        return self.ctx.element(v3=acc)

    def matrix(self):
        return self.columns

    @property
    def is_zero(self):
        return not any(any(c) for c in self.columns)


def tau_3_ell(ctx, phi) -> Tau3Map:
    """Column j = degree-3 projection of (Phi.e_j) e_j^-1.

    Rejects only automorphisms that move the abelianization; the membership
    test looks at the computed action, not at how Phi was produced.
    """
    diffs = action_differences(ctx, phi)
    for d in diffs:
        if any(d.v1):
            raise NotInG3("automorphism acts nontrivially on degree 1")
    return Tau3Map(ctx, tuple(d.v3 for d in diffs))


# -- wedge/tensor calculus ---------------------------------------------------


class TensorSpaceContext:
    """H with symplectic basis x1,y1,...,xg,yg and the spaces wedge^2 H,
    wedge^2 H (x) H, wedge^3 H (embedded), the quotient, and
    wedge^2 H (x) wedge^2 H. All vectors are int64 coordinate arrays."""

    def __init__(self, l, g):
        modular.validate_modulus(l)
        if g < 1:
            raise BadGenus("need g >= 1")
        self.l = l
        self.g = g
        self.n = n = 2 * g
        self.pairs, _ = hall_basis(n)  # (i, j) with i > j, e_i ^ e_j
        self.pair_index = {p: k for k, p in enumerate(self.pairs)}
        self.dim_w2 = len(self.pairs)
        self.dim_w2t = self.dim_w2 * n
        # symplectic pairing <x_i, y_i> = +1, <y_i, x_i> = -1
        self.pairing = np.zeros((n, n), dtype=np.int64)
        for i in range(g):
            self.pairing[2 * i, 2 * i + 1] = 1
            self.pairing[2 * i + 1, 2 * i] = (-1) % l
        self._build_w3_embedding()

    def _build_w3_embedding(self):
        n, l = self.n, self.l
        triples = [(i, j, k) for i in range(n) for j in range(i) for k in range(j)]
        rows = []
        for (i, j, k) in triples:
            row = np.zeros(self.dim_w2t, dtype=np.int64)
            # a^b^c -> (a^b)(x)c + (b^c)(x)a + (c^a)(x)b, c^a = -(a^c)
            row[self.w2t_index((i, j), k)] += 1
            row[self.w2t_index((j, k), i)] += 1
            row[self.w2t_index((i, k), j)] -= 1
            rows.append(row % l)
        self.dim_w3 = len(triples)
        if rows:
            red, pivots = modular.rref(np.array(rows, dtype=np.int64), l)
        else:
            red, pivots = np.zeros((0, self.dim_w2t), dtype=np.int64), []
        self._w3_rows = [(p, red[r]) for r, p in enumerate(pivots)]
        self.live_w2t = [c for c in range(self.dim_w2t) if c not in pivots]
        self.dim_quotient = len(self.live_w2t)

    def w2t_index(self, pair, k):
        return self.pair_index[pair] * self.n + k

    # -- vectors ------------------------------------------------------------

    def vector(self, assignment):
        """H vector from {"x1": coeff, ...} (or a ready coordinate list)."""
        if not isinstance(assignment, dict):
            v = np.asarray(assignment, dtype=np.int64) % self.l
            if v.shape != (self.n,):
                raise ContextMismatch(f"H vectors have length {self.n}")
            return v
        names = [f"x{i // 2 + 1}" if i % 2 == 0 else f"y{i // 2 + 1}"
                 for i in range(self.n)]
        index = {nm: i for i, nm in enumerate(names)}
        v = np.zeros(self.n, dtype=np.int64)
        for name, coeff in assignment.items():
            if name not in index:
                raise ContextMismatch(f"unknown basis vector {name!r}")
            v[index[name]] = coeff % self.l
        return v

    def wedge(self, a, b):
        """Coordinates of a ^ b in wedge^2 H."""
        a, b = self.vector(a), self.vector(b)
        out = np.zeros(self.dim_w2, dtype=np.int64)
        for idx, (i, j) in enumerate(self.pairs):
            out[idx] = (a[i] * b[j] - a[j] * b[i]) % self.l
        return out

    def tensor_w2_w2(self, t1, t2):
        """Flat coordinates of t1 (x) t2 in wedge^2 H (x) wedge^2 H."""
        return np.outer(t1, t2).reshape(-1) % self.l

    def wedge_square_expand(self, a, b, s, sign=1):
        """(a ^ (b + sign*2*s))^(x)2, expanded bilinearly."""
        a, b, s = self.vector(a), self.vector(b), self.vector(s)
        u = self.wedge(a, (b + sign * 2 * s) % self.l)
        return self.tensor_w2_w2(u, u)

    # -- the projection w and the Hall identification -----------------------

    def reduce_w2t(self, vec):
        """Quotient coordinates of a wedge^2 H (x) H vector mod wedge^3 H."""
        vec = np.asarray(vec, dtype=np.int64) % self.l
        for pivot, row in self._w3_rows:
            c = vec[pivot]
            if c:
                vec = (vec - c * row) % self.l
        return vec[self.live_w2t]

    def project_w(self, t):
        """wedge^2 H (x) wedge^2 H -> ((wedge^2 H (x) H)/wedge^3 H) (x) H.

        The second wedge factor expands via h1 ^ h2 -> h1 (x) h2 - h2 (x) h1;
        the first three tensor factors reduce modulo the embedded wedge^3 H.
        Returns an array of shape (dim_quotient, n).
        """
        t = np.asarray(t, dtype=np.int64).reshape(self.dim_w2, self.dim_w2) % self.l
        raw = np.zeros((self.dim_w2t, self.n), dtype=np.int64)
        for p in range(self.dim_w2):
            for q in range(self.dim_w2):
                c = int(t[p, q])
                if not c:
                    continue
                i, j = self.pairs[q]
                raw[self.w2t_index(self.pairs[p], i), j] += c
                raw[self.w2t_index(self.pairs[p], j), i] -= c
        raw %= self.l
        out = np.zeros((self.dim_quotient, self.n), dtype=np.int64)
        for m in range(self.n):
            out[:, m] = self.reduce_w2t(raw[:, m])
        return out

    def tensor_to_hom(self, ctx, t) -> Tau3Map:
        """Interpret ((wedge^2 H (x) H)/wedge^3 H) (x) H as a map from the
        degree-1 space to the degree-3 layer of ctx.

        (a ^ b) (x) c becomes the Hall atom [[a,b],c]; the trailing H factor
        acts through the symplectic pairing. Surface contexts compose with
        the relation-ideal quotient projection.
        """
        if ctx.l != self.l or ctx.n != self.n:
            raise ContextMismatch("tensor and group contexts disagree")
        t = np.asarray(t, dtype=np.int64) % self.l
        if t.shape != (self.dim_quotient, self.n):
            raise ContextMismatch(
                f"expected shape {(self.dim_quotient, self.n)}, got {t.shape}")
        hall_cols = np.zeros((ctx.d3, self.n), dtype=np.int64)  # per generator
        for q_pos in range(self.dim_quotient):
            flat = self.live_w2t[q_pos]
            pair, k = self.pairs[flat // self.n], flat % self.n
            hall = np.array(ctx.triple_bracket_free(pair[0], pair[1], k),
                            dtype=np.int64)
            for m in range(self.n):
                c = int(t[q_pos, m])
                if not c:
                    continue
                for p in range(self.n):
                    pm = int(self.pairing[m, p])
                    if pm:
                        hall_cols[:, p] = (hall_cols[:, p] + c * pm * hall) % self.l
        columns = []
        for p in range(self.n):
            elem = ctx.reduce_free([0] * ctx.d1, [0] * ctx.d2,
                                   [int(x) for x in hall_cols[:, p]])
            columns.append(elem.v3)
        return Tau3Map(ctx, tuple(columns))


# -- the sufficient-criterion checker ---------------------------------------


@dataclass(frozen=True)
class PropositionReport:
    condition_i: bool
    condition_ii: bool
    condition_iii: bool
    details: dict

    @property
    def verdict(self) -> bool:
        return self.condition_i and self.condition_ii and self.condition_iii

    def to_dict(self):
        return {
            "condition_i": self.condition_i,
            "condition_ii": self.condition_ii,
            "condition_iii": self.condition_iii,
            "verdict": self.verdict,
            "details": self.details,
        }


def check_proposition(ctx, chi1, chi2, chi3, phi, omega0) -> PropositionReport:
    """Check conditions (i)-(iii) of the non-vanishing criterion.

    (i)  the product on the quotient is nonempty and contains 0,
    (ii) no character is zero and {chi1,chi2} or {chi2,chi3} is independent,
    (iii) phi lies in G(3,l), all characters kill omega0, and
          h_l(tau_{3,l}(phi)(omega0)) != 0.
    Failures are recorded in the report, never raised.
    """
    l = ctx.l
    details = {}

    witness = _massey.contains_zero(ctx, chi1, chi2, chi3)
    nonempty = _massey.massey_nonempty(ctx, chi1, chi2, chi3) is not None
    cond_i = nonempty and witness is not None
    details["nonempty"] = nonempty
    details["lift"] = witness.to_dict() if witness else None

    nonzero = all(not c.is_zero for c in (chi1, chi2, chi3))
    m12 = modular.rank(np.array([chi1.values, chi2.values], dtype=np.int64), l)
    m23 = modular.rank(np.array([chi2.values, chi3.values], dtype=np.int64), l)
    cond_ii = nonzero and (m12 == 2 or m23 == 2)
    details["independent_pair"] = {"chi1_chi2": m12 == 2, "chi2_chi3": m23 == 2}

    cond_iii = False
    details["h_value"] = None
    vanish = all(c(omega0) == 0 for c in (chi1, chi2, chi3))
    details["characters_kill_omega0"] = vanish
    details["phi_in_g3"] = in_g3(ctx, phi)
    if details["phi_in_g3"] and vanish and cond_i:
        tau = tau_3_ell(ctx, phi)
        value = _massey.h_ell(ctx, chi1, chi2, chi3, tau(omega0), witness)
        details["h_value"] = value
        cond_iii = value != 0

    return PropositionReport(cond_i, cond_ii, cond_iii, details)
