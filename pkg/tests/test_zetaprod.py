"""Root data of cyclotomic products and the even-function machinery."""

import random
from fractions import Fraction

import pytest

from cyclozeta.arith import DivisorMap, divisors
from cyclozeta.catalog import get as catalog_get
from cyclozeta.exactpoly import ONE, Q, RationalFunctionQ, cyclotomic
from cyclozeta.zetaprod import (
    EvenFunction,
    ZetaParseError,
    ZetaProduct,
    check_fourier_pair_family,
    check_mobius_pairing,
    check_pairing_preset,
    check_totient_pairing,
    cyclotomic_exponents,
    dft_power_sums,
    expand_divisor_product,
    gf_power_series,
    multiplicities,
    parse_zeta_product,
    partial_zeta,
    power_sums,
    ramanujan_coefficients,
    ramanujan_reconstruct,
    random_even_function,
    random_zeta_product,
    root_multiplicity_at_one,
    saito_dual,
    saito_transform,
    star_functions,
    to_rational_function,
    zeta_product_from_json,
)

A2 = ZetaProduct(3, {1: -1, 3: 1})


class TestRootData:
    def test_rank_two_multiplicities(self):
        assert multiplicities(A2).values == (0, 1, 1)
        assert power_sums(A2).values == (2, -1, -1)

    def test_double_root_instance(self):
        z = ZetaProduct(2, {1: 1, 2: 1})  # roots 1, 1, -1
        assert multiplicities(z).values == (2, 1)
        assert power_sums(z).values == (3, 1)

    def test_zero_exponents(self):
        z = ZetaProduct(12, {d: 0 for d in divisors(12)})
        assert not any(multiplicities(z).values)
        assert not any(power_sums(z).values)
        assert to_rational_function(z) == RationalFunctionQ(ONE)

    def test_total_multiplicity_at_zero(self):
        rng = random.Random(3)
        for n in (1, 6, 12, 30):
            z = random_zeta_product(rng, n)
            assert multiplicities(z)(0) == z.mu_e
            mstar, _ = star_functions(z)
            assert mstar(0) == z.mu_e


class TestSaito:
    def test_transform_reverses_indices(self):
        assert saito_transform(A2).e.values == {1: 1, 3: -1}
        assert saito_dual(A2).e.values == {1: -1, 3: 1}

    def test_involution(self):
        rng = random.Random(17)
        for _ in range(100):
            n = rng.choice((1, 2, 6, 12, 30, 60))
            z = random_zeta_product(rng, n)
            assert saito_transform(saito_transform(z)) == z

    def test_star_functions_match_transform(self):
        rng = random.Random(23)
        for _ in range(20):
            z = random_zeta_product(rng, 12)
            mstar, pstar = star_functions(z)
            assert mstar == multiplicities(saito_transform(z))
            assert pstar == power_sums(saito_transform(z))

    def test_star_power_sums_instance(self):
        assert star_functions(A2)[1].values == (-2, 1, 1)
        zx = ZetaProduct(4, {1: -1, 2: 1, 4: 2})
        assert star_functions(zx)[1].values == (0, 2, 4, 2)


class TestRationalForm:
    def test_rank_two(self):
        assert to_rational_function(A2) == RationalFunctionQ(Q**2 + Q + 1)

    def test_exceptional_root_system(self):
        z = catalog_get("E_8").zeta_product()
        rf = to_rational_function(z)
        assert rf.is_polynomial and rf.num.degree == 8
        m = multiplicities(z)
        prod = ONE
        for d in divisors(30):
            c = m(30 // d)
            if c:
                prod = prod * cyclotomic(d) ** c
        assert rf.num == prod

    def test_exponent_extraction_matches_multiplicities(self):
        rng = random.Random(7)
        for n in (1, 2, 6, 12, 20):
            for _ in range(10):
                z = random_zeta_product(rng, n)
                rf = to_rational_function(z)
                expo = cyclotomic_exponents(rf, n)
                m = multiplicities(z)
                assert all(expo[d] == m(n // d) for d in divisors(n))

    def test_matches_literal_divisor_product(self):
        rng = random.Random(8)
        for n in (1, 4, 6, 9, 12, 18, 30):
            z = random_zeta_product(rng, n)
            num, den = expand_divisor_product(z)
            rf = to_rational_function(z)
            assert num * rf.den == rf.num * den


class TestFourier:
    def test_reconstruction_of_multiplicities(self):
        r = ramanujan_coefficients(multiplicities(A2))
        assert r.values == (Fraction(2, 3), Fraction(-1, 3), Fraction(-1, 3))
        assert ramanujan_reconstruct(r) == multiplicities(A2)

    def test_trivial_conductor(self):
        a = EvenFunction(1, [5])
        assert ramanujan_coefficients(a).values == (5,)

    def test_round_trip_random(self):
        for n in (1, 2, 12, 45, 60):
            for t in range(20):
                a = random_even_function(random.Random(f"ft:{n}:{t}"), n)
                assert ramanujan_reconstruct(ramanujan_coefficients(a)) == a

    def test_dft_power_sums(self):
        assert dft_power_sums(multiplicities(A2)) == power_sums(A2)
        m = EvenFunction(2, [2, 1])
        assert dft_power_sums(m).values == (3, 1)
        rng = random.Random(5)
        for n in (6, 12, 30):
            z = random_zeta_product(rng, n)
            assert dft_power_sums(multiplicities(z)) == power_sums(z)


class TestEvenFunction:
    def test_rejects_non_even_values(self):
        with pytest.raises(ValueError):
            EvenFunction(6, [0, 1, 2, 3, 4, 5])  # a(5) must equal a(1)

    def test_trusted_constructions_revalidate(self):
        """Operations that skip the eagerness check still produce genuinely
        gcd-even values: rebuilding through the checking constructor passes."""
        rng = random.Random(61)
        for n in (6, 12, 30, 60):
            z = random_zeta_product(rng, n)
            for fn in (multiplicities, power_sums):
                EvenFunction(n, fn(z).values)  # must not raise
            mstar, pstar = star_functions(z)
            EvenFunction(n, mstar.values)
            EvenFunction(n, pstar.values)
            EvenFunction(n, ramanujan_coefficients(multiplicities(z)).values)

    def test_periodic_indexing(self):
        m = multiplicities(A2)
        assert m(3) == m(0) and m(-1) == m(2)

    def test_additivity(self):
        rng = random.Random(1)
        z1, z2 = (random_zeta_product(rng, 12) for _ in range(2))
        assert multiplicities(z1 * z2) == multiplicities(z1) + multiplicities(z2)
        assert power_sums(z1 * z2) == power_sums(z1) + power_sums(z2)


class TestPartialZeta:
    def test_coprime_index(self):
        z = ZetaProduct(6, {1: 2, 2: 1, 3: -1, 6: 4})
        assert partial_zeta(z, 5) == RationalFunctionQ((Q - 1) ** 2)

    def test_index_zero_is_the_whole_product(self):
        z = ZetaProduct(6, {1: 1, 2: 1, 3: 0, 6: 0})
        assert partial_zeta(z, 0) == to_rational_function(z)

    def test_unit_root_multiplicity_is_divisor_sum(self):
        z6 = ZetaProduct(6, {1: 1, 2: 1, 3: 0, 6: 0})
        pz = partial_zeta(z6, 2)
        assert pz == RationalFunctionQ((Q - 1) * (Q**2 - 1))
        assert root_multiplicity_at_one(pz) == 2
        rng = random.Random(2)
        for n in (6, 12, 30):
            z = random_zeta_product(rng, n)
            a = EvenFunction.from_divisor_map(z.e)
            for k in range(n + 1):
                assert root_multiplicity_at_one(partial_zeta(z, k)) == a(k), (n, k)


class TestGeneratingForms:
    def test_rank_family_line(self):
        e = DivisorMap(3, {1: 1, 3: -1})
        a = EvenFunction.from_divisor_map(e)
        rep = gf_power_series(a, e)
        assert rep.status == "pass"
        assert rep.context["series_form"] == str(
            RationalFunctionQ(ONE, ONE - Q) - RationalFunctionQ(ONE, ONE - Q**3)
        )

    def test_zero_case(self):
        e = DivisorMap(6, {d: 0 for d in divisors(6)})
        assert gf_power_series(EvenFunction.from_divisor_map(e), e).status == "pass"

    def test_mismatch_is_reported(self):
        e = DivisorMap(3, {1: 1, 3: -1})
        wrong = EvenFunction(3, [7, 7, 7])
        assert gf_power_series(wrong, e).status == "fail"

    def test_random_sweep(self):
        rng = random.Random(12)
        for n in (1, 2, 8, 12, 30, 60):
            for _ in range(10):
                z = random_zeta_product(rng, n)
                a = EvenFunction.from_divisor_map(z.e)
                assert gf_power_series(a, z.e).status == "pass"


class TestPairings:
    def test_constant_substitution(self):
        rep = check_mobius_pairing(A2, {1: 1, 3: 1})
        assert rep.status == "pass"

    def test_necklace_preset_on_rank_family(self):
        z = ZetaProduct(6, {1: -1, 2: 0, 3: 0, 6: 1})
        assert check_pairing_preset(z, "necklace").status == "pass"

    def test_log_derivative_preset_on_catalog_entry(self):
        z = catalog_get("E_6").zeta_product()
        assert check_pairing_preset(z, "log-derivative").status == "pass"
        assert check_pairing_preset(z, "ramanujan").status == "pass"

    def test_presets_random(self):
        rng = random.Random(31)
        for n in (6, 12):
            for _ in range(3):
                z = random_zeta_product(rng, n)
                for preset in ("ones", "necklace", "log-derivative", "ramanujan"):
                    assert check_pairing_preset(z, preset).status == "pass", (n, preset)


class TestTotientPairing:
    def test_trivial_conductor(self):
        z = ZetaProduct(1, {1: 3})
        assert check_totient_pairing(z, range(-2, 4)).status == "pass"

    def test_random_and_catalog(self):
        rng = random.Random(41)
        for n in (6, 12):
            z = random_zeta_product(rng, n)
            assert check_totient_pairing(z, range(-2, 4)).status == "pass"
        z = catalog_get("E_8").zeta_product()
        assert check_totient_pairing(z, (0, 1, 2)).status == "pass"


class TestFourierPairFamily:
    def test_zero_table(self):
        F = DivisorMap(12, {d: 0 for d in divisors(12)})
        assert check_fourier_pair_family(12, F, 0).status == "pass"

    def test_random_tables(self):
        rng = random.Random(51)
        for s in (0, 1):
            for _ in range(5):
                F = DivisorMap(
                    12, {d: Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for d in divisors(12)}
                )
                assert check_fourier_pair_family(12, F, s).status == "pass"


class TestParsing:
    def test_text_round_trip(self):
        z = parse_zeta_product("  n = 3 ;  e = { 1 : -1 , 3 : 1 } ".replace(" ", " "))
        assert z == A2
        assert z.to_text() == "n=3; e={1:-1,3:1}"

    def test_json_round_trip(self):
        z = zeta_product_from_json(A2.to_json_dict())
        assert z == A2
        z2 = parse_zeta_product('{"n": 3, "e": {"1": -1, "3": 1}}')
        assert z2 == A2

    def test_parse_error_carries_position(self):
        with pytest.raises(ZetaParseError):
            parse_zeta_product("m=3; e={1:-1,3:1}")
        with pytest.raises(ZetaParseError) as exc:
            parse_zeta_product("n=3; e={1:-1,3:x}")
        assert exc.value.position is not None

    def test_divisor_validation(self):
        with pytest.raises(ValueError):
            parse_zeta_product("n=6; e={1:1,6:1}")  # 2 and 3 missing
        with pytest.raises(ValueError):
            ZetaProduct(6, {1: Fraction(1, 2), 2: 0, 3: 0, 6: 0})  # non-integer
