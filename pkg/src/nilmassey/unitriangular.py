"""The unitriangular groups U3(Z/l) and U4(Z/l) in above-diagonal coordinates.

A U4 element is stored as the six entries of

        1  a1  u   v
        0  1   a2  w
        0  0   1   a3
        0  0   0   1

and never as a dense matrix (dense products exist only in test oracles).
The coordinate product and commutator formulas were derived once from 4x4
matrix multiplication and are guarded by those oracles; the commutator is
the closed form

    (1,3) -> a1*b2 - a2*b1
    (2,4) -> a2*b3 - a3*b2
    (1,4) -> (a1*w' - w*b1) - (a3*u' - b3*u) - (a1*b2 - a2*b1)*(a3 + b3)

with zero superdiagonal. Batch variants operate on int64 coordinate arrays
so property sweeps over 10^5+ pairs stay cheap.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ModulusMismatch


def _check(l, other_l):
    if l != other_l:
        raise ModulusMismatch(f"moduli differ: {l} vs {other_l}")


@dataclass(frozen=True)
class U4Element:
    l: int
    a1: int = 0
    a2: int = 0
    a3: int = 0
    u: int = 0
    v: int = 0
    w: int = 0

    def __post_init__(self):
        for f in ("a1", "a2", "a3", "u", "v", "w"):
            object.__setattr__(self, f, getattr(self, f) % self.l)

    def __mul__(self, o: "U4Element") -> "U4Element":
        _check(self.l, o.l)
        l = self.l
        return U4Element(
            l,
            self.a1 + o.a1,
            self.a2 + o.a2,
            self.a3 + o.a3,
            self.u + o.u + self.a1 * o.a2,
            self.v + o.v + self.a1 * o.w + self.u * o.a3,
            self.w + o.w + self.a2 * o.a3,
        )

    def inverse(self) -> "U4Element":
        l, a1, a2, a3, u, v, w = self.l, self.a1, self.a2, self.a3, self.u, self.v, self.w
        return U4Element(
            l, -a1, -a2, -a3,
            a1 * a2 - u,
            -v + a1 * w + u * a3 - a1 * a2 * a3,
            a2 * a3 - w,
        )

    def commutator(self, o: "U4Element") -> "U4Element":
        _check(self.l, o.l)
        c13 = self.a1 * o.a2 - self.a2 * o.a1
        c24 = self.a2 * o.a3 - self.a3 * o.a2
        c14 = ((self.a1 * o.w - self.w * o.a1)
               - (self.a3 * o.u - o.a3 * self.u)
               - c13 * (self.a3 + o.a3))
        return U4Element(self.l, 0, 0, 0, 0, c14, c24) * U4Element(self.l, 0, 0, 0, c13, 0, 0)

    def power(self, k: int) -> "U4Element":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = U4Element(self.l)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def project_mod_center(self) -> "U4ModCenterElement":
        return U4ModCenterElement(self.l, self.a1, self.a2, self.a3, self.u, self.w)

    @property
    def is_identity(self) -> bool:
        return not (self.a1 or self.a2 or self.a3 or self.u or self.v or self.w)

    def in_derived_subgroup(self) -> bool:
        return not (self.a1 or self.a2 or self.a3)

    def in_center(self) -> bool:
        return not (self.a1 or self.a2 or self.a3 or self.u or self.w)

    def coords(self):
        return (self.a1, self.a2, self.a3, self.u, self.v, self.w)


@dataclass(frozen=True)
class U4ModCenterElement:
    """U4 modulo its center: the v coordinate is discarded."""

    l: int
    a1: int = 0
    a2: int = 0
    a3: int = 0
    u: int = 0
    w: int = 0

    def __post_init__(self):
        for f in ("a1", "a2", "a3", "u", "w"):
            object.__setattr__(self, f, getattr(self, f) % self.l)

    def __mul__(self, o: "U4ModCenterElement") -> "U4ModCenterElement":
        _check(self.l, o.l)
        return U4ModCenterElement(
            self.l,
            self.a1 + o.a1,
            self.a2 + o.a2,
            self.a3 + o.a3,
            self.u + o.u + self.a1 * o.a2,
            self.w + o.w + self.a2 * o.a3,
        )

    def inverse(self) -> "U4ModCenterElement":
        l, a1, a2, a3, u, w = self.l, self.a1, self.a2, self.a3, self.u, self.w
        return U4ModCenterElement(l, -a1, -a2, -a3, a1 * a2 - u, a2 * a3 - w)

    def power(self, k: int) -> "U4ModCenterElement":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = U4ModCenterElement(self.l)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    @property
    def is_identity(self) -> bool:
        return not (self.a1 or self.a2 or self.a3 or self.u or self.w)

    def coords(self):
        return (self.a1, self.a2, self.a3, self.u, self.w)


@dataclass(frozen=True)
class U3Element:
    """Unitriangular 3x3: superdiagonal (a, b), corner c."""

    l: int
    a: int = 0
    b: int = 0
    c: int = 0

    def __post_init__(self):
        for f in ("a", "b", "c"):
            object.__setattr__(self, f, getattr(self, f) % self.l)

    def __mul__(self, o: "U3Element") -> "U3Element":
        _check(self.l, o.l)
        return U3Element(self.l, self.a + o.a, self.b + o.b,
                         self.c + o.c + self.a * o.b)

    def inverse(self) -> "U3Element":
        return U3Element(self.l, -self.a, -self.b, self.a * self.b - self.c)

    def commutator(self, o: "U3Element") -> "U3Element":
        _check(self.l, o.l)
        return U3Element(self.l, 0, 0, self.a * o.b - self.b * o.a)

    def power(self, k: int) -> "U3Element":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = U3Element(self.l)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    @property
    def is_identity(self) -> bool:
        return not (self.a or self.b or self.c)


# Functional aliases matching the operation names used in reports/tests.

def u4_multiply(m: U4Element, n: U4Element) -> U4Element:
    return m * n


def u4_commutator(m: U4Element, n: U4Element) -> U4Element:
    return m.commutator(n)


def u4_power(m: U4Element, k: int) -> U4Element:
    return m.power(k)


def u4_project_mod_center(m: U4Element) -> U4ModCenterElement:
    return m.project_mod_center()


def u3_multiply(m: U3Element, n: U3Element) -> U3Element:
    return m * n


def u3_commutator(m: U3Element, n: U3Element) -> U3Element:
    return m.commutator(n)


# Batch kernels: coordinates as an int64 array of shape (6, N) in the order
# (a1, a2, a3, u, v, w). Used by the high-volume property sweeps.

def u4_multiply_batch(m: np.ndarray, n: np.ndarray, l: int) -> np.ndarray:
    a1, a2, a3, u, v, w = m
    b1, b2, b3, p, q, r = n
    return np.stack([
        a1 + b1,
        a2 + b2,
        a3 + b3,
        u + p + a1 * b2,
        v + q + a1 * r + u * b3,
        w + r + a2 * b3,
    ]) % l


def u4_inverse_batch(m: np.ndarray, l: int) -> np.ndarray:
    a1, a2, a3, u, v, w = m
    return np.stack([
        -a1, -a2, -a3,
        a1 * a2 - u,
        -v + a1 * w + u * a3 - a1 * a2 * a3,
        a2 * a3 - w,
    ]) % l


def u4_commutator_batch(m: np.ndarray, n: np.ndarray, l: int) -> np.ndarray:
    a1, a2, a3, u, v, w = m
    b1, b2, b3, p, q, r = n
    c13 = a1 * b2 - a2 * b1
    c24 = a2 * b3 - a3 * b2
    c14 = (a1 * r - w * b1) - (a3 * p - b3 * u) - c13 * (a3 + b3)
    zero = np.zeros_like(c13)
    return np.stack([zero, zero, zero, c13, c14, c24]) % l
