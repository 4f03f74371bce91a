"""Finite class-3 exponent-l quotients of surface and free groups.

The quotient of the genus-g surface group (generators x1,y1,...,xg,yg,
single relation [x1,y1][x2,y2]...[xg,yg] = 1) by the fourth term of its
lower central l-series is modeled as a class-3 graded Lie ring over Z/l
with the truncated Baker-Campbell-Hausdorff group law

    Z = A + B + 1/2 [A,B] + 1/12 [A,[A,B]] - 1/12 [B,[A,B]]

which is exact because the class (3) is smaller than l (> 3), so the
denominators 2 and 12 are units. Free Lie coordinates use the Hall basis
with left-normed degree-3 atoms [[e_i,e_j],e_k], i > j, k >= j, over the
generator order x1 < y1 < x2 < y2 < ... The surface flavor quotients by
the ideal generated by the relation's BCH logarithm: one inhomogeneous
row (degree-2 leading term sum_i [X_i,Y_i] plus its operational degree-3
tail) together with the 2g pure degree-3 rows [r, e_j]. Quotient
coordinates are the non-pivot columns of the row-reduced ideal; elements
are stored reduced, lifted back to free coordinates for arithmetic.
"""

from dataclasses import dataclass, field

import numpy as np

from . import modular, words
from .errors import (BadGenus, BadPrime, ContextMismatch, InvalidHom,
                     UnknownGenerator)
from .words import BracketAtom, GenAtom, GroupWord, WordAtom


def hall_basis(n):
    """Hall atoms in degrees 2 and 3 for n generators (0-based indices)."""
    deg2 = [(i, j) for i in range(n) for j in range(i)]
    deg2.sort()
    deg3 = []
    for (i, j) in deg2:
        for k in range(j, n):
            deg3.append(((i, j), k))
    return deg2, deg3


def generator_names(n):
    return [f"x{k // 2 + 1}" if k % 2 == 0 else f"y{k // 2 + 1}" for k in range(n)]


@dataclass(frozen=True)
class GroupElement:
    """Element of the quotient: graded coordinate tuples (degrees 1, 2, 3)."""

    ctx: "NilGroupContext"
    v1: tuple
    v2: tuple
    v3: tuple

    def __mul__(self, other):
        return self.ctx.multiply(self, other)

    def __pow__(self, k):
        return self.ctx.power(self, k)

    def inverse(self):
        return self.ctx.inverse(self)

    def commutator(self, other):
        return self.ctx.commutator(self, other)

    @property
    def is_identity(self):
        return not (any(self.v1) or any(self.v2) or any(self.v3))

    def __repr__(self):
        return f"GroupElement(v1={self.v1}, v2={self.v2}, v3={self.v3})"


@dataclass(frozen=True)
class GroupHomomorphismSpec:
    """Endomorphism given by generator images; relation preservation checked."""

    ctx: "NilGroupContext"
    images: tuple  # one GroupElement per generator
    automorphism_checked: bool = False
    # memoized Hall-atom images; contents only, never part of identity
    _atom_cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __call__(self, element):
        return self.ctx.apply_hom(self, element)


class NilGroupContext:
    """Shared immutable structure for one quotient group: Hall basis,
    bracket tables, relation ideal and quotient coordinate maps."""

    def __init__(self, l, genus=None, flavor="surface", rank=None):
        modular.validate_modulus(l)
        if flavor not in ("surface", "free"):
            raise BadGenus(f"unknown flavor {flavor!r}")
        if flavor == "surface":
            if genus is None or genus < 2:
                raise BadGenus("surface flavor needs genus g >= 2")
            rank = 2 * genus
        else:
            if rank is None:
                if genus is None or genus < 1:
                    raise BadGenus("free flavor needs g >= 1 or an explicit rank")
                rank = 2 * genus
            if rank < 2:
                raise BadGenus("free flavor needs rank >= 2")
        self.l = l
        self.genus = genus
        self.flavor = flavor
        self.n = rank
        self.gen_names = generator_names(rank)
        self._gen_index = {name: k for k, name in enumerate(self.gen_names)}
        self.hall2, self.hall3 = hall_basis(rank)
        self.hall2_index = {a: k for k, a in enumerate(self.hall2)}
        self.hall3_index = {a: k for k, a in enumerate(self.hall3)}
        self.d1, self.d2, self.d3 = rank, len(self.hall2), len(self.hall3)
        self._inv2 = modular.mod_inverse(2, l)
        self._inv12 = modular.mod_inverse(12, l)
        self._build_bracket_tables()
        if flavor == "surface":
            self._build_relation_ideal()
        else:
            self._ideal = []
            self.live2 = list(range(self.d2))
            self.live3 = list(range(self.d3))
        self.dims = (self.d1, len(self.live2), len(self.live3))

    # -- construction ---------------------------------------------------

    def _build_bracket_tables(self):
        n = self.n
        br11 = [[[] for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i > j:
                    br11[i][j] = [(self.hall2_index[(i, j)], 1)]
                elif i < j:
                    br11[i][j] = [(self.hall2_index[(j, i)], -1)]
        # [[e_i,e_j], e_k]; Jacobi rewrite when k < j:
        # [[a,b],c] = [[a,c],b] - [[b,c],a]
        br21 = [[None] * n for _ in range(self.d2)]
        for t, (i, j) in enumerate(self.hall2):
            for k in range(n):
                if k >= j:
                    br21[t][k] = [(self.hall3_index[((i, j), k)], 1)]
                else:
                    br21[t][k] = [
                        (self.hall3_index[((i, k), j)], 1),
                        (self.hall3_index[((j, k), i)], -1),
                    ]
        self._br11 = br11
        self._br21 = br21

    def _build_relation_ideal(self):
        l = self.l
        rel = self._free_identity()
        for i in range(self.genus):
            xi = self._free_generator(2 * i)
            yi = self._free_generator(2 * i + 1)
            rel = self._free_bch(rel, self._free_commutator(xi, yi))
        r1, r2, r3 = rel
        if any(r1):
            raise AssertionError("surface relation has a degree-1 part")
        rows = [list(r2) + list(r3)]
        for j in range(self.n):
            unit = [0] * self.n
            unit[j] = 1
            rows.append([0] * self.d2 + self._br_d2_d1(r2, unit))
        red, pivots = modular.rref(rows, l)
        self._ideal = [(p, [int(x) for x in red[k]]) for k, p in enumerate(pivots)]
        self.live2 = [c for c in range(self.d2) if c not in pivots]
        self.live3 = [c for c in range(self.d3) if (c + self.d2) not in pivots]
        self.relation_log = rel

    # -- free-coordinate Lie/BCH kernel ----------------------------------

    def _free_identity(self):
        return ([0] * self.d1, [0] * self.d2, [0] * self.d3)

    def _free_generator(self, idx):
        v1 = [0] * self.d1
        v1[idx] = 1
        return (v1, [0] * self.d2, [0] * self.d3)

    def _br_d1_d1(self, a1, b1):
        l, out = self.l, [0] * self.d2
        for i, ai in enumerate(a1):
            if ai:
                row = self._br11[i]
                for j, bj in enumerate(b1):
                    if bj:
                        for idx, co in row[j]:
                            out[idx] = (out[idx] + co * ai * bj) % l
        return out

    def _br_d2_d1(self, a2, b1):
        """Degree-3 part of [A2, B1] for a degree-2 vector and degree-1 vector."""
        l, out = self.l, [0] * self.d3
        for t, at in enumerate(a2):
            if at:
                row = self._br21[t]
                for j, bj in enumerate(b1):
                    if bj:
                        for idx, co in row[j]:
                            out[idx] = (out[idx] + co * at * bj) % l
        return out

    def triple_bracket_free(self, i, j, k):
        """Free degree-3 Hall coordinates of [[e_i, e_j], e_k]."""
        ui = [0] * self.n
        ui[i] = 1
        uj = [0] * self.n
        uj[j] = 1
        uk = [0] * self.n
        uk[k] = 1
        return self._br_d2_d1(self._br_d1_d1(ui, uj), uk)

    def _free_bracket(self, a, b):
        """Truncated Lie bracket of full free-coordinate triples."""
        a1, a2, _ = a
        b1, b2, _ = b
        c2 = self._br_d1_d1(a1, b1)
        c3 = [
            (x - y) % self.l
            for x, y in zip(self._br_d2_d1(a2, b1), self._br_d2_d1(b2, a1))
        ]
        return ([0] * self.d1, c2, c3)

    def _free_bch(self, a, b):
        l, inv2, inv12 = self.l, self._inv2, self._inv12
        a1, a2, a3 = a
        b1, b2, b3 = b
        _, c2, c3 = self._free_bracket(a, b)
        ac3 = self._br_d2_d1(c2, a1)  # [[A,B], A]; [A,[A,B]] = -this
        bc3 = self._br_d2_d1(c2, b1)
        z1 = [(x + y) % l for x, y in zip(a1, b1)]
        z2 = [(x + y + inv2 * c) % l for x, y, c in zip(a2, b2, c2)]
        z3 = [
            (x + y + inv2 * c + inv12 * (bc - ac)) % l
            for x, y, c, ac, bc in zip(a3, b3, c3, ac3, bc3)
        ]
        return (z1, z2, z3)

    def _free_negate(self, a):
        return tuple([(-x) % self.l for x in part] for part in a)

    def _free_commutator(self, a, b):
        out = self._free_bch(a, b)
        out = self._free_bch(out, self._free_negate(a))
        return self._free_bch(out, self._free_negate(b))

    # -- quotient coordinates --------------------------------------------

    def reduce_free(self, v1, v2, v3):
        """Reduce full free coordinates modulo the relation ideal."""
        l = self.l
        vec = [x % l for x in list(v2) + list(v3)]
        for pivot, row in self._ideal:
            c = vec[pivot]
            if c:
                for k, rv in enumerate(row):
                    if rv:
                        vec[k] = (vec[k] - c * rv) % l
        return GroupElement(
            self,
            tuple(x % l for x in v1),
            tuple(vec[c] for c in self.live2),
            tuple(vec[c + self.d2] for c in self.live3),
        )

    def lift(self, element):
        """One coset representative: non-pivot coordinates, pivots zero."""
        v2 = [0] * self.d2
        for pos, c in enumerate(self.live2):
            v2[c] = element.v2[pos]
        v3 = [0] * self.d3
        for pos, c in enumerate(self.live3):
            v3[c] = element.v3[pos]
        return (list(element.v1), v2, v3)

    def _check_member(self, *elements):
        for e in elements:
            if e.ctx is not self:
                raise ContextMismatch("element belongs to a different context")

    # -- group operations --------------------------------------------------

    def identity(self):
        return GroupElement(self, (0,) * self.d1,
                            (0,) * len(self.live2), (0,) * len(self.live3))

    def generator(self, name_or_index):
        if isinstance(name_or_index, str):
            if name_or_index not in self._gen_index:
                raise UnknownGenerator(f"no generator {name_or_index!r} "
                                       f"(have {', '.join(self.gen_names)})")
            idx = self._gen_index[name_or_index]
        else:
            idx = name_or_index
            if not 0 <= idx < self.n:
                raise UnknownGenerator(f"generator index {idx} out of range")
        return self.reduce_free(*self._free_generator(idx))

    def generators(self):
        return [self.generator(k) for k in range(self.n)]

    def element(self, v1=None, v2=None, v3=None):
        """Element from quotient coordinates (missing degrees are zero)."""
        l = self.l
        v1 = tuple(int(x) % l for x in (v1 or [0] * self.d1))
        v2 = tuple(int(x) % l for x in (v2 or [0] * len(self.live2)))
        v3 = tuple(int(x) % l for x in (v3 or [0] * len(self.live3)))
        if (len(v1), len(v2), len(v3)) != self.dims:
            raise ContextMismatch(f"coordinate lengths must be {self.dims}")
        return GroupElement(self, v1, v2, v3)

    def multiply(self, a, b):
        self._check_member(a, b)
        return self.reduce_free(*self._free_bch(self.lift(a), self.lift(b)))

    def inverse(self, a):
        self._check_member(a)
        l = self.l
        return GroupElement(self, tuple((-x) % l for x in a.v1),
                            tuple((-x) % l for x in a.v2),
                            tuple((-x) % l for x in a.v3))

    def power(self, a, k):
        """a^k = exp(k log a): scaling coordinates is exact for a single base."""
        self._check_member(a)
        l = self.l
        k = k % l
        return GroupElement(self, tuple(k * x % l for x in a.v1),
                            tuple(k * x % l for x in a.v2),
                            tuple(k * x % l for x in a.v3))

    def commutator(self, a, b):
        self._check_member(a, b)
        return self.reduce_free(*self._free_commutator(self.lift(a), self.lift(b)))

    def lcs_membership(self, a, i):
        """Membership in the i-th lower central l-series term of the quotient."""
        self._check_member(a)
        if i not in (1, 2, 3, 4):
            raise ValueError("layer index must be in 1..4")
        if i == 1:
            return True
        if i == 2:
            return not any(a.v1)
        if i == 3:
            return not (any(a.v1) or any(a.v2))
        return a.is_identity

    # -- words -------------------------------------------------------------

    def relation_word(self):
        terms = []
        for i in range(self.genus or 0):
            xi = words.gen_word("x", i + 1)
            yi = words.gen_word("y", i + 1)
            terms.append((BracketAtom(xi, yi), 1))
        return GroupWord(tuple(terms))

    def relation_letters(self):
        """The surface relation as a flat generator/sign sequence."""
        letters = []
        for i in range(self.genus or 0):
            xi, yi = 2 * i, 2 * i + 1
            letters += [(xi, 1), (yi, 1), (xi, -1), (yi, -1)]
        return letters

    def evaluate_word(self, word):
        if isinstance(word, str):
            word = words.parse_word(word)
        out = self.identity()
        for atom, exponent in word.terms:
            out = out * self.power(self._evaluate_atom(atom), exponent)
        return out

    def _evaluate_atom(self, atom):
        if isinstance(atom, GenAtom):
            return self.generator(atom.name)
        if isinstance(atom, BracketAtom):
            return self.commutator(self.evaluate_word(atom.left),
                                   self.evaluate_word(atom.right))
        if isinstance(atom, WordAtom):
            return self.evaluate_word(atom.word)
        raise TypeError(f"not a word atom: {atom!r}")

    def _gen_atom(self, idx):
        name = self.gen_names[idx]
        return GenAtom(name[0], int(name[1:]))

    def _hall2_atom(self, d2_col):
        i, j = self.hall2[d2_col]
        return BracketAtom(GroupWord(((self._gen_atom(i), 1),)),
                           GroupWord(((self._gen_atom(j), 1),)))

    def _hall3_atom(self, d3_col):
        (i, j), k = self.hall3[d3_col]
        inner = self._hall2_atom(self.hall2_index[(i, j)])
        return BracketAtom(GroupWord(((inner, 1),)),
                           GroupWord(((self._gen_atom(k), 1),)))

    # -- normal form and homomorphisms --------------------------------------

    def normal_form_factor(self, a):
        """Greedy collection to an ordered product over Hall atoms.

        Reads degree-1 exponents off v1, divides that product off on the
        left, then collects degree 2 and degree 3 the same way. Multiplying
        the factors back in the listed order reproduces a exactly.
        """
        self._check_member(a)
        factors = []
        head = self.identity()
        for idx, e in enumerate(a.v1):
            if e:
                factors.append((self._gen_atom(idx), e))
                head = head * self.power(self.generator(idx), e)
        rest = head.inverse() * a
        head2 = self.identity()
        for pos, e in enumerate(rest.v2):
            if e:
                col = self.live2[pos]
                factors.append((self._hall2_atom(col), e))
                i, j = self.hall2[col]
                head2 = head2 * self.power(
                    self.commutator(self.generator(i), self.generator(j)), e)
        rest = head2.inverse() * rest
        for pos, e in enumerate(rest.v3):
            if e:
                factors.append((self._hall3_atom(self.live3[pos]), e))
        return factors

    def hom(self, images, require_automorphism=False):
        """Homomorphism spec from generator images (relation must be preserved)."""
        images = tuple(images)
        if len(images) != self.n:
            raise InvalidHom(f"need {self.n} generator images")
        self._check_member(*images)
        if self.flavor == "surface":
            rel = self.identity()
            for i in range(self.genus):
                rel = rel * self.commutator(images[2 * i], images[2 * i + 1])
            if not rel.is_identity:
                raise InvalidHom("images do not preserve the surface relation")
        checked = False
        if require_automorphism:
            m = np.array([list(img.v1) for img in images], dtype=np.int64)
            if modular.rank(m, self.l) != self.n:
                raise InvalidHom("degree-1 matrix of the images is singular")
            checked = True
        return GroupHomomorphismSpec(self, images, automorphism_checked=checked)

    def automorphism(self, images):
        return self.hom(images, require_automorphism=True)

    def hom_from_words(self, image_words, require_automorphism=False):
        """Images given in the word grammar, one entry per generator name;
        missing generators map to themselves."""
        images = []
        for name in self.gen_names:
            text = image_words.get(name, name)
            images.append(self.evaluate_word(text))
        return self.hom(images, require_automorphism=require_automorphism)

    def identity_hom(self):
        return self.hom(self.generators())

    def apply_hom(self, spec, a):
        """Image of a: factor into Hall atoms, map atoms, remultiply in order."""
        if spec.ctx is not self:
            raise ContextMismatch("hom spec belongs to a different context")
        self._check_member(a)
        out = self.identity()
        for atom, exponent in self.normal_form_factor(a):
            out = out * self.power(self._map_atom(spec, atom), exponent)
        return out

    def _map_atom(self, spec, atom):
        if isinstance(atom, GenAtom):
            return spec.images[self._gen_index[atom.name]]
        if isinstance(atom, BracketAtom):
            cached = spec._atom_cache.get(atom)
            if cached is None:
                cached = self.commutator(self._map_word(spec, atom.left),
                                         self._map_word(spec, atom.right))
                spec._atom_cache[atom] = cached
            return cached
        raise TypeError(f"cannot map atom {atom!r}")

    def _map_word(self, spec, word):
        out = self.identity()
        for atom, exponent in word.terms:
            out = out * self.power(self._map_atom(spec, atom), exponent)
        return out

    # -- reporting -----------------------------------------------------------

    @property
    def order_exponent(self):
        """|group| = l ** order_exponent."""
        return sum(self.dims)

    def descriptor(self):
        d = {"l": self.l, "flavor": self.flavor}
        if self.flavor == "surface":
            d["g"] = self.genus
        else:
            d["rank"] = self.n
            if self.genus is not None:
                d["g"] = self.genus
        return d

    def __repr__(self):
        return (f"NilGroupContext(l={self.l}, flavor={self.flavor!r}, "
                f"rank={self.n}, dims={self.dims})")


def build_context(l, g=None, flavor="surface", rank=None) -> NilGroupContext:
    return NilGroupContext(l, genus=g, flavor=flavor, rank=rank)


# Free-standing operation aliases over the context methods.

def bch_multiply(ctx, a, b):
    return ctx.multiply(a, b)


def group_commutator(ctx, a, b):
    return ctx.commutator(a, b)


def evaluate_word(ctx, word):
    return ctx.evaluate_word(word)


def normal_form_factor(ctx, a):
    return ctx.normal_form_factor(a)


def apply_hom(ctx, spec, a):
    return ctx.apply_hom(spec, a)


def lcs_membership(ctx, a, i):
    return ctx.lcs_membership(a, i)


def context_from_descriptor(descriptor) -> NilGroupContext:
    if "l" not in descriptor:
        raise BadPrime("context descriptor needs an 'l' entry")
    return build_context(
        descriptor["l"],
        g=descriptor.get("g"),
        flavor=descriptor.get("flavor", "surface"),
        rank=descriptor.get("rank"),
    )
