"""Exact arithmetic and small dense linear algebra over Z/l, l an odd prime > 3.

Everything is integer arithmetic on int64 numpy arrays reduced mod l; no
floating point anywhere. Row reduction uses the first nonzero pivot in a
fixed column order, so echelon forms, kernels and particular solutions are
reproducible across runs.
"""

from dataclasses import dataclass

import numpy as np

from .errors import BadPrime, DimensionMismatch, ZeroInverse


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def validate_modulus(l: int) -> int:
    """Check l is a prime > 3 (the standing assumption; 2, 3, 12 must be units)."""
    if not isinstance(l, int) or l <= 3 or not is_prime(l):
        raise BadPrime(f"modulus must be a prime > 3, got {l!r}")
    return l


def mod_inverse(a: int, l: int) -> int:
    if a % l == 0:
        raise ZeroInverse(f"0 has no inverse mod {l}")
    return pow(a % l, -1, l)


def as_matrix(rows, l: int) -> np.ndarray:
    m = np.asarray(rows, dtype=np.int64)
    if m.ndim != 2:
        raise DimensionMismatch(f"expected a 2-d matrix, got shape {m.shape}")
    return m % l


def rref(matrix, l: int):
    """Reduced row echelon form over Z/l.

    Returns (R, pivot_cols). Pivots are chosen as the first nonzero entry
    scanning rows top-down within each column, columns left to right.
    """
    a = as_matrix(matrix, l).copy()
    n_rows, n_cols = a.shape
    pivots = []
    r = 0
    for c in range(n_cols):
        if r >= n_rows:
            break
        piv = None
        for i in range(r, n_rows):
            if a[i, c] % l:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * mod_inverse(int(a[r, c]), l)) % l
        for i in range(n_rows):
            if i != r and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[r]) % l
        pivots.append(c)
        r += 1
    return a, pivots


def rank(matrix, l: int) -> int:
    _, pivots = rref(matrix, l)
    return len(pivots)


@dataclass(frozen=True)
class AffineSystem:
    """A x = b over Z/l, with optional unknown labels for witness reporting."""

    a: np.ndarray
    b: np.ndarray
    l: int
    labels: tuple = ()

    def __post_init__(self):
        a = as_matrix(self.a, self.l)
        b = np.asarray(self.b, dtype=np.int64) % self.l
        if b.ndim != 1 or a.shape[0] != b.shape[0]:
            raise DimensionMismatch(
                f"coefficient matrix {a.shape} vs constants {b.shape}")
        if self.labels and len(self.labels) != a.shape[1]:
            raise DimensionMismatch("one label per unknown required")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)


@dataclass(frozen=True)
class SolutionSet:
    """Affine solution space: particular solution plus a kernel basis."""

    particular: tuple
    kernel: tuple  # tuple of kernel basis vectors, each a tuple
    labels: tuple = ()

    def sample(self, coeffs, l: int) -> tuple:
        """particular + sum(c_k * kernel_k), one point of the solution space."""
        x = np.asarray(self.particular, dtype=np.int64)
        for c, k in zip(coeffs, self.kernel):
            x = x + int(c) * np.asarray(k, dtype=np.int64)
        return tuple(int(v) % l for v in x)


def solve_affine(system: AffineSystem):
    """Solve A x = b over Z/l.

    Returns a SolutionSet (particular solution with free variables set to 0,
    kernel basis in free-variable order) or None when inconsistent.
    """
    a, b, l = system.a, system.b, system.l
    n = a.shape[1]
    aug = np.concatenate([a, b.reshape(-1, 1)], axis=1)
    red, pivots = rref(aug, l)
    if n in pivots:
        return None  # pivot in the constants column: inconsistent
    particular = np.zeros(n, dtype=np.int64)
    for row, c in enumerate(pivots):
        particular[c] = red[row, n]
    free = [j for j in range(n) if j not in pivots]
    kernel = []
    for f in free:
        v = np.zeros(n, dtype=np.int64)
        v[f] = 1
        for row, c in enumerate(pivots):
            v[c] = (-red[row, f]) % l
        lead = next(int(x) for x in v if x)  # normalize to leading coefficient 1
        v = (v * mod_inverse(lead, l)) % l
        kernel.append(tuple(int(x) for x in v))
    return SolutionSet(
        particular=tuple(int(x) for x in particular),
        kernel=tuple(kernel),
        labels=system.labels,
    )
