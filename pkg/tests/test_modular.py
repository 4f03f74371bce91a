import itertools
import random

import numpy as np
import pytest

from nilmassey import modular
from nilmassey.errors import BadPrime, DimensionMismatch, ZeroInverse


def egcd_inverse(a, l):
    """Extended-Euclid oracle, independent of pow(a, -1, l)."""
    old_r, r = a % l, l
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    assert old_r == 1
    return old_s % l


def test_mod_inverse_examples():
    assert modular.mod_inverse(2, 5) == 3
    assert modular.mod_inverse(1, 7) == 1
    assert modular.mod_inverse(12, 13) == egcd_inverse(12, 13) == 12


def test_mod_inverse_zero():
    with pytest.raises(ZeroInverse):
        modular.mod_inverse(0, 5)
    with pytest.raises(ZeroInverse):
        modular.mod_inverse(10, 5)


def test_mod_inverse_matches_egcd_oracle():
    for l in (5, 7, 11, 13, 101):
        for a in range(1, l):
            assert modular.mod_inverse(a, l) == egcd_inverse(a, l)


def test_validate_modulus():
    for bad in (4, 3, 2, 1, 0, -5, 9, 10000):
        with pytest.raises(BadPrime):
            modular.validate_modulus(bad)
    assert modular.validate_modulus(5) == 5
    assert modular.validate_modulus(9973) == 9973


def test_solve_affine_single_pivot():
    sol = modular.solve_affine(modular.AffineSystem([[1]], [2], 5))
    assert sol.particular == (2,)
    assert sol.kernel == ()


def test_solve_affine_inconsistent():
    assert modular.solve_affine(modular.AffineSystem([[0]], [1], 5)) is None


def test_solve_affine_kernel_matches_enumeration():
    sys = modular.AffineSystem([[1, 1]], [0], 5)
    sol = modular.solve_affine(sys)
    assert sol.particular == (0, 0)
    assert sol.kernel == ((1, 4),)
    # oracle: enumerate all 25 pairs
    truth = {(x, y) for x in range(5) for y in range(5) if (x + y) % 5 == 0}
    points = {sol.sample([c], 5) for c in range(5)}
    assert points == truth


def test_solve_affine_random_solvable_systems():
    rng = random.Random(0)
    for _ in range(10_000):
        l = rng.choice((5, 7, 11, 13))
        rows, cols = rng.randrange(1, 5), rng.randrange(1, 5)
        a = [[rng.randrange(l) for _ in range(cols)] for _ in range(rows)]
        x = [rng.randrange(l) for _ in range(cols)]
        b = [sum(r[j] * x[j] for j in range(cols)) % l for r in a]
        sol = modular.solve_affine(modular.AffineSystem(a, b, l))
        assert sol is not None
        got = sol.particular
        for r, bi in zip(a, b):
            assert sum(rj * gj for rj, gj in zip(r, got)) % l == bi


def test_rref_idempotent():
    rng = random.Random(1)
    for _ in range(300):
        l = rng.choice((5, 7))
        m = [[rng.randrange(l) for _ in range(4)] for _ in range(3)]
        r1, p1 = modular.rref(m, l)
        r2, p2 = modular.rref(r1, l)
        assert np.array_equal(r1, r2) and p1 == p2


def brute_force_rank(rows, l):
    """Largest independent subset, by enumerating all coefficient combos."""
    rows = [tuple(x % l for x in r) for r in rows]
    best = 0
    for size in range(1, len(rows) + 1):
        for subset in itertools.combinations(rows, size):
            dependent = False
            for coeffs in itertools.product(range(l), repeat=size):
                if not any(coeffs):
                    continue
                combo = [sum(c * r[j] for c, r in zip(coeffs, subset)) % l
                         for j in range(len(subset[0]))]
                if not any(combo):
                    dependent = True
                    break
            if not dependent:
                best = max(best, size)
    return best


def test_rank_matches_brute_force():
    rng = random.Random(2)
    for _ in range(25):
        l = 5
        rows = rng.randrange(1, 4)
        cols = rng.randrange(1, 5)
        m = [[rng.randrange(l) for _ in range(cols)] for _ in range(rows)]
        assert modular.rank(m, l) == brute_force_rank(m, l)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        modular.AffineSystem([[1, 2]], [1, 2], 5)
    with pytest.raises(DimensionMismatch):
        modular.AffineSystem([[1, 2]], [1], 5, labels=("only-one",))
