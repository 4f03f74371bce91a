"""Triple Massey products on the quotient group and on semidirect products.

A character triple (chi1, chi2, chi3) prescribes the superdiagonal of
U4(Z/l)-valued representations. The two decision procedures are:

  * massey_nonempty  -- does a defining system (a homomorphism into
    U4/Z(U4) with that superdiagonal) exist? Equivalent to the vanishing
    of both cup products, which for the surface quotient is the closed
    form sum_i (a(x_i) b(y_i) - a(y_i) b(x_i)) = 0.
  * contains_zero    -- does some defining system lift to U4? Decided by
    one affine solve: the unknowns are the kappa_12, kappa_23 and corner
    values on the generators, and the only nontrivial constraint is the
    (1,4) entry of the evaluated surface relation.

On a semidirect product with a single order-l automorphism Phi the same
questions are decided by a stratified search: the five non-central
coordinates (a1,a2,a3,u,w) of M = rho(Phi) are enumerated (l^5 strata for
the full lift; u,w are invisible mod center, so l^3 strata suffice for
the defining-system search), and inside a stratum the surface relation
plus the per-generator conjugation constraints M rho(e) M^-1 = rho(Phi.e)
are affine in the remaining unknowns. Sweeping M's superdiagonal means
the search quantifies over every character extension to the semidirect
product at once; "none" certifies that no extension's product contains 0.
Searches return the lexicographically first witness in stratum order.
"""

import itertools
from dataclasses import dataclass

import numpy as np

from . import modular
from .errors import (BadOrder, ContextMismatch, NotInThirdLayer, NotInvariant,
                     PreconditionFailed)
from .nilgroup import GroupElement, NilGroupContext
from .unitriangular import U4Element, U4ModCenterElement
from .words import BracketAtom, GenAtom


@dataclass(frozen=True)
class Character:
    """Homomorphism to Z/l given by its values on the generators."""

    ctx: NilGroupContext
    values: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "values", tuple(int(v) % self.ctx.l for v in self.values))
        if len(self.values) != self.ctx.n:
            raise ContextMismatch("one value per generator required")

    def __call__(self, element: GroupElement) -> int:
        if element.ctx is not self.ctx:
            raise ContextMismatch("element from a different context")
        return sum(v * x for v, x in zip(self.values, element.v1)) % self.ctx.l

    @property
    def is_zero(self):
        return not any(self.values)


def character(ctx, assignment) -> Character:
    """Character from {"x1": value, ...}; absent generators default to 0."""
    values = [0] * ctx.n
    for name, value in assignment.items():
        if name not in ctx._gen_index:
            raise ContextMismatch(f"unknown generator {name!r}")
        values[ctx._gen_index[name]] = value
    return Character(ctx, tuple(values))


def dual_character(ctx, name) -> Character:
    """The dual basis character, e.g. x1* for name="x1"."""
    return character(ctx, {name: 1})


def triple_from_dict(ctx, data):
    """Character triple from the JSON layout {"chi1": {...}, "chi2": ...}."""
    return tuple(character(ctx, data.get(key, {})) for key in ("chi1", "chi2", "chi3"))


def cup_pairing(chi_a: Character, chi_b: Character) -> int:
    """Value of the cup product chi_a u chi_b against the fundamental class."""
    ctx = chi_a.ctx
    if chi_b.ctx is not ctx:
        raise ContextMismatch("characters from different contexts")
    total = 0
    for i in range(ctx.genus or 0):
        xi, yi = 2 * i, 2 * i + 1
        total += (chi_a.values[xi] * chi_b.values[yi]
                  - chi_a.values[yi] * chi_b.values[xi])
    return total % ctx.l


def cup_vanishes(ctx, chi_a: Character, chi_b: Character) -> bool:
    return cup_pairing(chi_a, chi_b) == 0


# -- defining systems and lifts -------------------------------------------


@dataclass(frozen=True)
class DefiningSystem:
    chi1: Character
    chi2: Character
    chi3: Character
    kappa12: tuple
    kappa23: tuple

    def generator_image(self, idx) -> U4ModCenterElement:
        ctx = self.chi1.ctx
        e = ctx.generator(idx)
        return U4ModCenterElement(ctx.l, self.chi1(e), self.chi2(e), self.chi3(e),
                                  self.kappa12[idx], self.kappa23[idx])

    def is_valid(self) -> bool:
        ctx = self.chi1.ctx
        acc = U4ModCenterElement(ctx.l)
        for idx, sign in ctx.relation_letters():
            img = self.generator_image(idx)
            acc = acc * (img if sign > 0 else img.inverse())
        return acc.is_identity


@dataclass(frozen=True)
class U4Representation:
    """A full U4-valued lift given by one U4 element per generator."""

    ctx: NilGroupContext
    images: tuple

    def evaluate_letters(self, letters) -> U4Element:
        acc = U4Element(self.ctx.l)
        for idx, sign in letters:
            img = self.images[idx]
            acc = acc * (img if sign > 0 else img.inverse())
        return acc

    def evaluate_element(self, element: GroupElement) -> U4Element:
        """Image of a group element, via its Hall normal form."""
        acc = U4Element(self.ctx.l)
        for atom, exponent in self.ctx.normal_form_factor(element):
            acc = acc * self._atom_image(atom).power(exponent)
        return acc

    def _atom_image(self, atom) -> U4Element:
        if isinstance(atom, GenAtom):
            return self.images[self.ctx._gen_index[atom.name]]
        if isinstance(atom, BracketAtom):
            return self._word_image(atom.left).commutator(self._word_image(atom.right))
        raise TypeError(f"cannot map atom {atom!r}")

    def _word_image(self, word) -> U4Element:
        acc = U4Element(self.ctx.l)
        for atom, exponent in word.terms:
            acc = acc * self._atom_image(atom).power(exponent)
        return acc

    def is_valid(self) -> bool:
        return self.evaluate_letters(self.ctx.relation_letters()).is_identity

    def defining_system(self, chi1, chi2, chi3) -> DefiningSystem:
        return DefiningSystem(chi1, chi2, chi3,
                              tuple(m.u for m in self.images),
                              tuple(m.w for m in self.images))

    def to_dict(self):
        return {self.ctx.gen_names[k]: list(m.coords())
                for k, m in enumerate(self.images)}


def massey_nonempty(ctx, chi1, chi2, chi3):
    """A defining system when the product is nonempty, else None.

    The relation's (1,3) and (2,4) entries are kappa-independent (they are
    the two cup pairings), so all-zero kappas work whenever the cup
    products vanish; the returned system is validated by evaluation.
    """
    if not (cup_vanishes(ctx, chi1, chi2) and cup_vanishes(ctx, chi2, chi3)):
        return None
    system = DefiningSystem(chi1, chi2, chi3, (0,) * ctx.n, (0,) * ctx.n)
    if not system.is_valid():
        raise AssertionError("zero defining system failed validation")
    return system


# -- affine U4 machinery ----------------------------------------------------
#
# Affine forms are int64 vectors of length (#unknowns + 1) with the constant
# term in the last slot. Superdiagonal entries of every symbolic U4 element
# are plain integers, so the coordinate product/commutator formulas only
# ever multiply an affine form by a constant, or produce pure constants
# (which are added to the constant slot); everything stays affine.


class _Unknowns:
    def __init__(self, l):
        self.l = l
        self.labels = []

    def fresh(self, label):
        self.labels.append(label)
        return len(self.labels) - 1

    @property
    def size(self):
        return len(self.labels)


def _const_shift(vec, value):
    out = vec.copy()
    out[-1] += value
    return out


class _AffineU4:
    __slots__ = ("l", "a1", "a2", "a3", "u", "v", "w")

    def __init__(self, l, a1, a2, a3, u, v, w):
        self.l = l
        self.a1, self.a2, self.a3 = a1 % l, a2 % l, a3 % l
        self.u, self.v, self.w = u % l, v % l, w % l

    def mul(self, o):
        l = self.l
        return _AffineU4(
            l, self.a1 + o.a1, self.a2 + o.a2, self.a3 + o.a3,
            _const_shift(self.u + o.u, self.a1 * o.a2),
            self.v + o.v + self.a1 * o.w + self.u * o.a3,
            _const_shift(self.w + o.w, self.a2 * o.a3),
        )

    def inverse(self):
        l, a1, a2, a3 = self.l, self.a1, self.a2, self.a3
        return _AffineU4(
            l, -a1, -a2, -a3,
            _const_shift(-self.u, a1 * a2),
            _const_shift(-self.v + a1 * self.w + self.u * a3, -a1 * a2 * a3),
            _const_shift(-self.w, a2 * a3),
        )

    def commutator(self, o):
        l = self.l
        width = self.u.shape[0]
        c13 = (self.a1 * o.a2 - self.a2 * o.a1) % l
        c24 = (self.a2 * o.a3 - self.a3 * o.a2) % l
        c14 = (self.a1 * o.w - o.a1 * self.w) - (self.a3 * o.u - o.a3 * self.u)
        c14 = _const_shift(c14, -c13 * (self.a3 + o.a3))
        return _AffineU4(l, 0, 0, 0,
                         _const_form(width, c13), c14 % l, _const_form(width, c24))

    def power(self, k):
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = _identity_affine(self.l, self.u.shape[0])
        while k:
            if k & 1:
                result = result.mul(base)
            base = base.mul(base)
            k >>= 1
        return result


def _const_form(width, value):
    v = np.zeros(width, dtype=np.int64)
    v[-1] = value
    return v


def _identity_affine(l, width):
    zero = np.zeros(width, dtype=np.int64)
    return _AffineU4(l, 0, 0, 0, zero, zero.copy(), zero.copy())


def _affine_unit(width, idx):
    v = np.zeros(width, dtype=np.int64)
    v[idx] = 1
    return v


def _generator_forms(ctx, unknowns, with_corner):
    """Fresh unknown indices for kappa_12, kappa_23 (and corners) per generator."""
    k12 = [unknowns.fresh(f"k12[{name}]") for name in ctx.gen_names]
    k23 = [unknowns.fresh(f"k23[{name}]") for name in ctx.gen_names]
    vv = [unknowns.fresh(f"v[{name}]") for name in ctx.gen_names] if with_corner else None
    return k12, k23, vv


def _build_forms(ctx, chis, unknowns, k12, k23, vv):
    width = unknowns.size + 1
    forms = []
    gens = ctx.generators()
    for j in range(ctx.n):
        e = gens[j]
        u = _affine_unit(width, k12[j])
        w = _affine_unit(width, k23[j])
        v = _affine_unit(width, vv[j]) if vv else np.zeros(width, dtype=np.int64)
        forms.append(_AffineU4(ctx.l, chis[0](e), chis[1](e), chis[2](e), u, v, w))
    return forms


def _fold_letters(ctx, forms, letters, width):
    acc = _identity_affine(ctx.l, width)
    inverses = {}
    for idx, sign in letters:
        if sign > 0:
            acc = acc.mul(forms[idx])
        else:
            if idx not in inverses:
                inverses[idx] = forms[idx].inverse()
            acc = acc.mul(inverses[idx])
    return acc


def _rows_to_system(rows, l, labels):
    a = np.array([r[:-1] for r in rows], dtype=np.int64)
    b = np.array([(-r[-1]) % l for r in rows], dtype=np.int64)
    return modular.AffineSystem(a, b, l, labels=tuple(labels))


def _infeasible(row, l):
    return not np.any(row[:-1] % l) and (row[-1] % l) != 0


def contains_zero(ctx, chi1, chi2, chi3):
    """A U4 lift witnessing that the triple Massey product contains 0, or None."""
    if massey_nonempty(ctx, chi1, chi2, chi3) is None:
        return None
    unknowns = _Unknowns(ctx.l)
    k12, k23, vv = _generator_forms(ctx, unknowns, True)
    forms = _build_forms(ctx, (chi1, chi2, chi3), unknowns, k12, k23, vv)
    width = unknowns.size + 1
    rel = _fold_letters(ctx, forms, ctx.relation_letters(), width)
    # (1,3)/(2,4) of the relation are the cup pairings, already known to
    # vanish; the lift exists iff the (1,4) row is solvable.
    rows = [rel.u, rel.w, rel.v]
    if any(_infeasible(r, ctx.l) for r in rows):
        return None
    sol = modular.solve_affine(_rows_to_system(rows, ctx.l, unknowns.labels))
    if sol is None:
        return None
    x = sol.particular
    images = []
    gens = ctx.generators()
    for j in range(ctx.n):
        e = gens[j]
        images.append(U4Element(ctx.l, chi1(e), chi2(e), chi3(e),
                                x[k12[j]], x[vv[j]], x[k23[j]]))
    rep = U4Representation(ctx, tuple(images))
    if not rep.is_valid():
        raise AssertionError("affine witness failed validation")
    return rep


def lift_solutions(ctx, chi1, chi2, chi3):
    """The full affine solution space of lifts (for well-definedness sweeps)."""
    unknowns = _Unknowns(ctx.l)
    k12, k23, vv = _generator_forms(ctx, unknowns, True)
    forms = _build_forms(ctx, (chi1, chi2, chi3), unknowns, k12, k23, vv)
    width = unknowns.size + 1
    rel = _fold_letters(ctx, forms, ctx.relation_letters(), width)
    rows = [rel.u, rel.w, rel.v]
    if any(_infeasible(r, ctx.l) for r in rows):
        return None
    sol = modular.solve_affine(_rows_to_system(rows, ctx.l, unknowns.labels))
    if sol is None:
        return None

    def rep_from_point(point):
        images = []
        gens = ctx.generators()
        for j in range(ctx.n):
            e = gens[j]
            images.append(U4Element(ctx.l, chi1(e), chi2(e), chi3(e),
                                    point[k12[j]], point[vv[j]], point[k23[j]]))
        return U4Representation(ctx, tuple(images))

    return sol, rep_from_point


# -- h_l and the triple-commutator determinant ------------------------------


def c_det(chi1, chi2, chi3, sigma, tau, gamma) -> int:
    """det of the 3x3 matrix with rows (-chi1(g), 0, chi3(g)) and the
    character values at sigma and tau; the (1,4) entry of rho([[s,t],g])."""
    l = chi1.ctx.l
    d23 = chi2(sigma) * chi3(tau) - chi3(sigma) * chi2(tau)
    d12 = chi1(sigma) * chi2(tau) - chi2(sigma) * chi1(tau)
    return (-chi1(gamma) * d23 + chi3(gamma) * d12) % l


def h_ell(ctx, chi1, chi2, chi3, omega, witness=None) -> int:
    """(1,4) entry of a lift at omega; defined on the degree-3 layer only
    and independent of the witness lift chosen."""
    if not ctx.lcs_membership(omega, 3):
        raise NotInThirdLayer("h_l needs an element of the degree-3 layer")
    if witness is None:
        witness = contains_zero(ctx, chi1, chi2, chi3)
        if witness is None:
            raise PreconditionFailed("triple Massey product does not contain 0")
    return witness.evaluate_element(omega).v


def surjectivity_witness(ctx, chi1, chi2, chi3):
    """A triple (sigma, tau, gamma) with c_det != 0, following the case split:
    independent triple -> unit determinant; two independent with both minors
    nonzero -> gamma = sigma^chi2(tau) tau^-chi2(sigma); mixed cases pick a
    gamma where the leftover character is nonzero."""
    l = ctx.l
    if any(c.is_zero for c in (chi1, chi2, chi3)):
        raise PreconditionFailed("condition (ii) fails: a character is zero")
    m12 = np.array([chi1.values, chi2.values], dtype=np.int64)
    m23 = np.array([chi2.values, chi3.values], dtype=np.int64)
    if modular.rank(m12, l) < 2 and modular.rank(m23, l) < 2:
        raise PreconditionFailed("condition (ii) fails: no independent pair")
    if contains_zero(ctx, chi1, chi2, chi3) is None:
        raise PreconditionFailed("condition (i) fails: product empty or without 0")

    full = np.array([chi1.values, chi2.values, chi3.values], dtype=np.int64)
    if modular.rank(full, l) == 3:
        # choose value vectors making the determinant matrix the identity
        targets = {"sigma": (0, 1, 0), "tau": (0, 0, 1), "gamma": (l - 1, None, 0)}
        out = {}
        for name, want in targets.items():
            rows = [r for r, w in zip(full, want) if w is not None]
            rhs = [w for w in want if w is not None]
            sol = modular.solve_affine(modular.AffineSystem(
                np.array(rows, dtype=np.int64), np.array(rhs, dtype=np.int64), l))
            out[name] = ctx.element(v1=sol.particular)
        return out["sigma"], out["tau"], out["gamma"]

    gens = ctx.generators()
    best = None
    for a in range(ctx.n):
        for b in range(ctx.n):
            d12 = (chi1.values[a] * chi2.values[b] - chi2.values[a] * chi1.values[b]) % l
            d23 = (chi2.values[a] * chi3.values[b] - chi3.values[a] * chi2.values[b]) % l
            if d12 and d23:
                sigma, tau = gens[a], gens[b]
                gamma = ctx.power(sigma, chi2(tau)) * ctx.power(tau, -chi2(sigma))
                return sigma, tau, gamma
            if (d12 or d23) and best is None:
                best = (a, b, d12, d23)
    a, b, d12, d23 = best
    sigma, tau = gens[a], gens[b]
    if d23:  # need chi1(gamma) != 0
        pick = chi1
    else:    # need chi3(gamma) != 0
        pick = chi3
    for g in gens:
        if pick(g):
            return sigma, tau, g
    raise PreconditionFailed("no gamma with a nonzero character value")


# -- semidirect products ----------------------------------------------------


@dataclass(frozen=True)
class SemiCharacter:
    """Character of the semidirect product: base values plus a value at Phi."""

    base: Character
    phi_value: int = 0

    def of_pair(self, omega, k=0):
        return (self.base(omega) + k * self.phi_value) % self.base.ctx.l


class SemidirectContext:
    """The semidirect product of the quotient with a single automorphism Phi
    of order dividing l."""

    def __init__(self, ctx, phi):
        if phi.ctx is not ctx:
            raise ContextMismatch("automorphism from a different context")
        self.ctx = ctx
        self.phi = phi
        gens = ctx.generators()
        for g in gens:
            image = g
            for _ in range(ctx.l):
                image = ctx.apply_hom(phi, image)
            if image != g:
                raise BadOrder("Phi^l is not the identity")
        self.diffs = tuple(ctx.apply_hom(phi, g) * g.inverse() for g in gens)
        self.in_g3 = all(ctx.lcs_membership(d, 3) for d in self.diffs)
        self._tau = None

    @property
    def tau(self):
        """tau_{3,l}(Phi), cached when Phi fixes the quotient mod degree 3."""
        if self._tau is None and self.in_g3:
            from .johnson import tau_3_ell
            self._tau = tau_3_ell(self.ctx, self.phi)
        return self._tau


def extend_characters(semictx, chi1, chi2, chi3, phi_values=(0, 0, 0)):
    """Extensions chi(omega Phi^k) = chibar(omega) + k*phi_value.

    Each base character must be Phi-invariant, else it does not extend.
    """
    out = []
    for chi, pv in zip((chi1, chi2, chi3), phi_values):
        for g, img in zip(semictx.ctx.generators(), semictx.phi.images):
            if chi(g) != chi(img):
                raise NotInvariant("character is not Phi-invariant")
        out.append(SemiCharacter(chi, pv))
    return tuple(out)


def _base_characters(chis):
    return tuple(c.base if isinstance(c, SemiCharacter) else c for c in chis)


@dataclass
class _SemiSystem:
    chis: tuple
    unknowns: _Unknowns
    k12: list
    k23: list
    vv: list
    v_m: int
    forms: list
    rel: _AffineU4
    images: list
    width: int


def _semidirect_system(semictx, chis, with_corner):
    """Stratum-independent data for the semidirect search."""
    ctx = semictx.ctx
    chis = _base_characters(chis)
    unknowns = _Unknowns(ctx.l)
    k12, k23, vv = _generator_forms(ctx, unknowns, with_corner)
    v_m = unknowns.fresh("v[phi]") if with_corner else None
    forms = _build_forms(ctx, chis, unknowns, k12, k23, vv)
    width = unknowns.size + 1
    rel = _fold_letters(ctx, forms, ctx.relation_letters(), width)
    # rho(Phi.e_j): affine in the generator unknowns, no stratum dependence
    images = []
    for target in semictx.phi.images:
        acc = _identity_affine(ctx.l, width)
        for atom, exponent in ctx.normal_form_factor(target):
            acc = acc.mul(_affine_atom(ctx, forms, atom).power(exponent))
        images.append(acc)
    return _SemiSystem(chis, unknowns, k12, k23, vv, v_m, forms, rel, images, width)


def _affine_atom(ctx, forms, atom):
    if isinstance(atom, GenAtom):
        return forms[ctx._gen_index[atom.name]]
    if isinstance(atom, BracketAtom):
        return _affine_word(ctx, forms, atom.left).commutator(
            _affine_word(ctx, forms, atom.right))
    raise TypeError(f"cannot map atom {atom!r}")


def _affine_word(ctx, forms, word):
    acc = _identity_affine(ctx.l, forms[0].u.shape[0])
    for atom, exponent in word.terms:
        acc = acc.mul(_affine_atom(ctx, forms, atom).power(exponent))
    return acc


def _character_obstruction(semictx, chis):
    """Conjugation forces the characters of Phi.e_j to match those of e_j."""
    ctx = semictx.ctx
    gens = ctx.generators()
    for chi in chis:
        for g, img in zip(gens, semictx.phi.images):
            if chi(g) != chi(img):
                return True
    return False


def iter_strata(l, with_corner):
    coords = 5 if with_corner else 3
    return itertools.product(range(l), repeat=coords)


def _search_stratum(semictx, data, stratum, with_corner):
    """Solve one stratum; returns the SolutionSet or None."""
    ctx = semictx.ctx
    l = ctx.l
    if with_corner:
        a1, a2, a3, u_m, w_m = stratum
    else:
        a1, a2, a3 = stratum
        u_m = w_m = 0
    width = data.width
    v_row = _affine_unit(width, data.v_m) if with_corner else _const_form(width, 0)
    m = _AffineU4(l, a1, a2, a3,
                  _const_form(width, u_m), v_row, _const_form(width, w_m))
    rows = [data.rel.u, data.rel.w] + ([data.rel.v] if with_corner else [])
    for j in range(ctx.n):
        lhs = m.commutator(data.forms[j]).mul(data.forms[j])
        rhs = data.images[j]
        cand = [(lhs.u - rhs.u) % l, (lhs.w - rhs.w) % l]
        if with_corner:
            cand.append((lhs.v - rhs.v) % l)
        for row in cand:
            if _infeasible(row, l):
                return None
        rows += cand
    return modular.solve_affine(_rows_to_system(rows, l, data.unknowns.labels))


def contains_zero_semidirect(semictx, chi1, chi2, chi3, strata=None):
    """Search for a U4 lift of the semidirect product; None certifies that
    no character extension's triple Massey product contains 0.

    Full l^5 sweep over M = rho(Phi)'s non-central coordinates; each
    stratum is one affine solve. Returns (U4Representation, M) or None.
    """
    data = _semidirect_system(semictx, (chi1, chi2, chi3), with_corner=True)
    ctx = semictx.ctx
    if _character_obstruction(semictx, data.chis):
        return None
    if any(_infeasible(r, ctx.l) for r in (data.rel.u, data.rel.w)):
        return None  # cups fail already on the normal subgroup
    for stratum in (strata if strata is not None else iter_strata(ctx.l, True)):
        sol = _search_stratum(semictx, data, stratum, with_corner=True)
        if sol is not None:
            return _assemble_semidirect_witness(semictx, data, stratum, sol)
    return None


def _assemble_semidirect_witness(semictx, data, stratum, sol):
    ctx = semictx.ctx
    x = sol.particular
    gens = ctx.generators()
    chis = data.chis
    images = []
    for j in range(ctx.n):
        e = gens[j]
        images.append(U4Element(ctx.l, chis[0](e), chis[1](e), chis[2](e),
                                x[data.k12[j]], x[data.vv[j]], x[data.k23[j]]))
    rep = U4Representation(ctx, tuple(images))
    a1, a2, a3, u_m, w_m = stratum
    m = U4Element(ctx.l, a1, a2, a3, u_m, x[data.v_m], w_m)
    if not rep.is_valid():
        raise AssertionError("semidirect witness fails the surface relation")
    for j in range(ctx.n):
        target = rep.evaluate_element(semictx.phi.images[j])
        if m * images[j] * m.inverse() != target:
            raise AssertionError("semidirect witness fails conjugation")
    return rep, m


def massey_nonempty_semidirect(semictx, chi1, chi2, chi3, strata=None) -> bool:
    """Defining-system search on the semidirect product, mod center.

    u and w of M are invisible mod center, so the sweep runs over the l^3
    superdiagonal strata only.
    """
    data = _semidirect_system(semictx, (chi1, chi2, chi3), with_corner=False)
    ctx = semictx.ctx
    if _character_obstruction(semictx, data.chis):
        return False
    if any(_infeasible(r, ctx.l) for r in (data.rel.u, data.rel.w)):
        return False
    for stratum in (strata if strata is not None else iter_strata(ctx.l, False)):
        if _search_stratum(semictx, data, stratum, with_corner=False) is not None:
            return True
    return False
