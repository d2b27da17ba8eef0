"""Divisor lattice, classical functions, Möbius transforms."""

import cmath
import math
import random
from fractions import Fraction

import pytest

from cyclozeta.arith import (
    DivisorMap,
    divisors,
    euler_phi,
    inverse_mobius_transform,
    jordan_totient,
    largest_odd_divisor,
    mobius,
    mobius_transform,
    named_function,
    ramanujan_sum,
)


def test_divisors_examples():
    assert divisors(1) == (1,)
    assert divisors(12) == (1, 2, 3, 4, 6, 12)
    assert divisors(30) == (1, 2, 3, 5, 6, 10, 15, 30)


def test_divisors_rejects_zero():
    with pytest.raises(ValueError):
        divisors(0)


def test_divisors_against_trial_division():
    for n in range(1, 200):
        assert list(divisors(n)) == [d for d in range(1, n + 1) if n % d == 0]


def test_mobius_examples():
    assert mobius(1) == 1
    assert mobius(6) == 1
    assert mobius(12) == 0
    with pytest.raises(ValueError):
        mobius(0)


def test_mobius_divisor_sum_is_unit():
    """sum of mu(d) over d | n vanishes except at n = 1."""
    for n in range(1, 201):
        total = sum(mobius(d) for d in divisors(n))
        assert total == (1 if n == 1 else 0), n


def test_euler_phi_brute():
    assert euler_phi(1) == 1
    assert euler_phi(12) == 4
    assert euler_phi(30) == 8
    with pytest.raises(ValueError):
        euler_phi(0)


def test_jordan_totient_values():
    assert jordan_totient(1, 5) == 1
    assert jordan_totient(6, 1) == 2
    assert jordan_totient(6, -1) == Fraction(1, 3)  # 1 - 1/2 - 1/3 + 1/6
    assert jordan_totient(1, 0) == 1
    assert jordan_totient(5, 0) == 0


def test_jordan_totient_at_one_is_euler():
    for n in range(1, 201):
        assert jordan_totient(n, 1) == euler_phi(n)


def test_ramanujan_sum_examples():
    assert ramanujan_sum(1, 7) == 1
    assert ramanujan_sum(6, 0) == 2  # c_m(0) = phi(m)
    assert ramanujan_sum(6, 2) == -1


def test_ramanujan_sum_against_exponential_oracle():
    """The divisor form matches the literal root-of-unity power sum.

    Floating point appears only in this oracle, never in the library.
    """
    for m in range(1, 61):
        for l in range(m):
            direct = sum(
                cmath.exp(2j * cmath.pi * k * l / m)
                for k in range(1, m + 1)
                if math.gcd(k, m) == 1
            )
            assert abs(direct.imag) < 1e-9
            assert abs(direct.real - ramanujan_sum(m, l)) < 1e-9, (m, l)


def test_ramanujan_sum_is_even_in_l():
    for m in (9, 12, 30):
        for l in range(-2 * m, 2 * m):
            assert ramanujan_sum(m, l) == ramanujan_sum(m, math.gcd(l, m))


def test_divisor_map_requires_full_key_set():
    with pytest.raises(ValueError):
        DivisorMap(6, {1: 1, 2: 0})
    with pytest.raises(ValueError):
        DivisorMap(6, {1: 1, 2: 0, 3: 0, 6: 0, 4: 5})
    dm = DivisorMap.from_partial(6, {2: 7})
    assert dm[2] == 7 and dm[1] == 0


def test_mobius_transform_examples():
    assert mobius_transform(DivisorMap(1, {1: 5})).values == {1: 5}
    unit = DivisorMap(6, {1: 1, 2: 0, 3: 0, 6: 0})
    assert mobius_transform(unit).values == {1: 1, 2: 1, 3: 1, 6: 1}
    e = DivisorMap(6, {1: -1, 2: 1, 3: 1, 6: 1})
    assert mobius_transform(e).values == {1: -1, 2: 0, 3: 0, 6: 2}


def test_mobius_transform_round_trip():
    """Inverse transform undoes the transform on 100 random maps per n."""
    for n in range(1, 61):
        for t in range(100):
            rng = random.Random(f"arith:{n}:{t}")
            dm = DivisorMap(
                n, {d: Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for d in divisors(n)}
            )
            assert inverse_mobius_transform(mobius_transform(dm)) == dm
            assert mobius_transform(inverse_mobius_transform(dm)) == dm


class TestNamedFunctions:
    def test_liouville(self):
        f = named_function("liouville")
        assert f(12) == -1  # 2^2 * 3 has three prime factors with multiplicity
        assert f(1) == 1

    def test_klee(self):
        assert named_function("klee", 2)(8) == 6
        assert named_function("klee", 1)(12) == euler_phi(12)

    def test_rho(self):
        assert named_function("rho", 2)(12) == 15  # divisors 3 and 12
        assert named_function("rho", 1)(12) == sum(divisors(12))

    def test_rho_prime(self):
        assert named_function("rho_prime", 2)(12) == 5  # square divisors 1, 4
        assert named_function("rho_prime", 1)(10) == sum(divisors(10))

    def test_beta(self):
        assert named_function("beta")(8) == 5

    def test_phi_inverse(self):
        assert named_function("phi_inv")(6) == 2  # (1 - 2)(1 - 3)
        assert named_function("phi_inv")(3) == -2

    def test_largest_odd(self):
        assert named_function("largest_odd")(48) == 3
        assert largest_odd_divisor(7) == 7

    def test_sigma_and_abs_mobius(self):
        assert named_function("sigma")(6) == 12
        assert named_function("abs_mobius")(12) == 0
        assert named_function("abs_mobius")(30) == 1

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            named_function("totally-unknown")
        with pytest.raises(ValueError):
            named_function("klee")  # missing parameter

    def test_dedekind_psi_divisor_identity(self):
        """psi(k) = sum over d | k of |mu(d)| (k/d), for every k <= 500."""
        psi = named_function("dedekind_psi")
        for k in range(1, 501):
            want = sum(abs(mobius(d)) * (k // d) for d in divisors(k))
            assert psi(k) == want, k

    def test_values_helper(self):
        assert named_function("euler_phi").values(6) == [1, 1, 2, 2, 4, 2]
