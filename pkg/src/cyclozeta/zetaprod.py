"""Cyclotomic products and their root data.

A :class:`ZetaProduct` is the formal product over the divisors d of a
conductor n of (q**d - 1)**e(d) with integer exponents e(d).  This module
computes the attached even functions -- root multiplicities m(k), power sums
p(k), and their Saito counterparts m*(k), p*(k) -- together with the
Fourier expansion of even functions in Ramanujan sums, the discrete Fourier
relation between m and p, generating-function identities, and the pairing
identities obtained by substituting Möbius-inverse pairs (necklace
polynomials, cyclotomic logarithmic derivatives, Ramanujan-sum kernels).

Everything is exact.  The index convention a(0) = a(n) (gcd(0, n) = n) is
used throughout.
"""

from __future__ import annotations

import json
import math
import re
from fractions import Fraction
from typing import Mapping

from .arith import (
    DivisorMap,
    as_exact,
    div_exact,
    divisors,
    inverse_mobius_transform,
    jordan_totient,
    mobius,
    ramanujan_sum,
    rational_power,
)
from .exactpoly import (
    ONE,
    ZERO,
    PolynomialQ,
    Q,
    RationalFunctionQ,
    combine_fractions,
    cyclotomic,
    fractions_equal,
    geometric,
)
from .report import Report


class ZetaParseError(ValueError):
    """Malformed textual zeta-product input; carries the offending position."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ZetaProduct:
    """Formal product over d | n of (q**d - 1)**e(d), e integer-valued."""

    __slots__ = ("n", "e")

    def __init__(self, n: int, e):
        if not isinstance(e, DivisorMap):
            e = DivisorMap(n, e)
        if e.n != n:
            raise ValueError(f"exponent map has conductor {e.n}, expected {n}")
        for d, v in e.items():
            if not isinstance(v, int):
                raise ValueError(f"exponent e({d}) = {v} is not an integer")
        self.n = n
        self.e = e

    @property
    def mu_e(self) -> int:
        """Total sign-counted root count: sum of all exponents."""
        return sum(self.e.values.values())

    def __mul__(self, other: "ZetaProduct") -> "ZetaProduct":
        if not isinstance(other, ZetaProduct):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("can only multiply products with the same conductor")
        return ZetaProduct(self.n, {d: self.e[d] + other.e[d] for d in divisors(self.n)})

    def __eq__(self, other):
        if not isinstance(other, ZetaProduct):
            return NotImplemented
        return self.n == other.n and self.e == other.e

    def __hash__(self):
        return hash((self.n, self.e))

    def to_text(self) -> str:
        body = ",".join(f"{d}:{v}" for d, v in self.e.items())
        return f"n={self.n}; e={{{body}}}"

    def to_json_dict(self) -> dict:
        return {"n": self.n, "e": {str(d): v for d, v in self.e.items()}}

    def __repr__(self):
        return f"ZetaProduct({self.to_text()})"


def parse_zeta_product(text: str) -> ZetaProduct:
    """Parse ``n=<int>; e={d:v,...}`` (whitespace-insensitive, all divisors required)."""
    s = re.sub(r"\s+", "", text)
    if s.startswith("{"):
        return zeta_product_from_json(json.loads(text))
    m = re.match(r"^n=(\d+);e=\{(.*)\}$", s)
    if not m:
        for pos, (got, want) in enumerate(zip(s, "n=")):
            if got != want:
                raise ZetaParseError(f"expected {want!r}, found {got!r}", pos)
        raise ZetaParseError("expected the form n=<int>; e={d:v,...}", 0)
    n = int(m.group(1))
    body = m.group(2)
    e: dict[int, int] = {}
    if body:
        offset = s.index("{") + 1
        for chunk in body.split(","):
            if not re.match(r"^-?\d+:-?\d+$", chunk):
                raise ZetaParseError(f"bad exponent entry {chunk!r}", offset)
            d_str, v_str = chunk.split(":")
            d = int(d_str)
            if d in e:
                raise ZetaParseError(f"duplicate divisor {d}", offset)
            e[d] = int(v_str)
            offset += len(chunk) + 1
    return ZetaProduct(n, e)


def zeta_product_from_json(obj: Mapping) -> ZetaProduct:
    return ZetaProduct(int(obj["n"]), {int(k): int(v) for k, v in obj["e"].items()})


def random_zeta_product(rng, n: int, span: int = 2) -> ZetaProduct:
    """Seeded random exponent vector with entries in [-span, span]."""
    return ZetaProduct(n, {d: rng.randint(-span, span) for d in divisors(n)})


# ---------------------------------------------------------------------------
# even functions


class EvenFunction:
    """n-periodic function whose value at k depends only on gcd(k, n).

    Values are stored for k = 0..n-1 and validated eagerly unless produced by
    an operation that is even by construction.
    """

    __slots__ = ("n", "values")

    def __init__(self, n: int, values, *, _trusted: bool = False):
        vals = tuple(as_exact(v) for v in values)
        if len(vals) != n:
            raise ValueError(f"need exactly {n} values, got {len(vals)}")
        if not _trusted:
            for k in range(n):
                g = math.gcd(k, n) % n
                if vals[k] != vals[g]:
                    raise ValueError(
                        f"values are not gcd-even: a({k}) = {vals[k]} but a(gcd) = {vals[g]}"
                    )
        self.n = n
        self.values = vals

    @classmethod
    def from_divisor_map(cls, e: DivisorMap) -> "EvenFunction":
        """a(k) = sum of e(d) over d | gcd(k, n), with gcd(0, n) = n."""
        n = e.n
        by_gcd = {g: as_exact(sum(e[d] for d in divisors(g))) for g in divisors(n)}
        vals = [by_gcd[math.gcd(k, n)] for k in range(n)]
        vals[0] = by_gcd[n]
        return cls(n, vals, _trusted=True)

    @classmethod
    def _from_gcd_table(cls, n: int, by_gcd: Mapping[int, object]) -> "EvenFunction":
        vals = [by_gcd[math.gcd(k, n)] for k in range(n)]
        vals[0] = by_gcd[n]
        return cls(n, vals, _trusted=True)

    def __call__(self, k: int):
        return self.values[k % self.n]

    def to_divisor_map(self) -> DivisorMap:
        """Recover e with a(k) = sum of e(d) over d | (k, n), by Möbius inversion."""
        table = DivisorMap(self.n, {d: self(d) for d in divisors(self.n)})
        return inverse_mobius_transform(table)

    def __add__(self, other):
        if not isinstance(other, EvenFunction) or other.n != self.n:
            return NotImplemented
        return EvenFunction(self.n, [a + b for a, b in zip(self.values, other.values)], _trusted=True)

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return EvenFunction(self.n, [c * v for v in self.values], _trusted=True)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, EvenFunction):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def __hash__(self):
        return hash((self.n, self.values))

    def __repr__(self):
        return f"EvenFunction(n={self.n}, {list(self.values)})"


def random_even_function(rng, n: int, span: int = 6) -> EvenFunction:
    by_gcd = {g: Fraction(rng.randint(-span, span), rng.randint(1, 4)) for g in divisors(n)}
    return EvenFunction._from_gcd_table(n, by_gcd)


# ---------------------------------------------------------------------------
# root data of a zeta product


def multiplicities(z: ZetaProduct) -> EvenFunction:
    """m(k) = sum of e(n/d) over d | (k, n): the sign-counted multiplicity of
    exp(2 pi i k / n) as a root of the product."""
    n = z.n
    by_gcd = {g: sum(z.e[n // d] for d in divisors(g)) for g in divisors(n)}
    return EvenFunction._from_gcd_table(n, by_gcd)


def power_sums(z: ZetaProduct) -> EvenFunction:
    """p(k) = sum of d e(d) over d | (k, n): sign-counted k-th power sums of roots."""
    n = z.n
    by_gcd = {g: sum(d * z.e[d] for d in divisors(g)) for g in divisors(n)}
    return EvenFunction._from_gcd_table(n, by_gcd)


def saito_transform(z: ZetaProduct) -> ZetaProduct:
    """Reindex exponents d -> e(n/d); an involution."""
    return ZetaProduct(z.n, {d: z.e[z.n // d] for d in divisors(z.n)})


def saito_dual(z: ZetaProduct) -> ZetaProduct:
    """The inverse of the transform: exponents d -> -e(n/d)."""
    return ZetaProduct(z.n, {d: -z.e[z.n // d] for d in divisors(z.n)})


def star_functions(z: ZetaProduct) -> tuple[EvenFunction, EvenFunction]:
    """(m*, p*): multiplicities and power sums of the Saito transform.

    m*(k) = sum of e(d), p*(k) = sum of d e(n/d), both over d | (k, n).
    """
    n = z.n
    m_star = {g: sum(z.e[d] for d in divisors(g)) for g in divisors(n)}
    p_star = {g: sum(d * z.e[n // d] for d in divisors(g)) for g in divisors(n)}
    return (
        EvenFunction._from_gcd_table(n, m_star),
        EvenFunction._from_gcd_table(n, p_star),
    )


def to_rational_function(z: ZetaProduct) -> RationalFunctionQ:
    """The product as a reduced rational function of q.

    Assembled through its cyclotomic factorization: the exponent of the d-th
    cyclotomic polynomial is the sum of e(d') over multiples d' of d dividing
    n, which equals m(n/d).  Distinct cyclotomics are coprime, so the result
    is already in lowest terms.
    """
    n = z.n
    num, den = ONE, ONE
    for d in divisors(n):
        c = sum(z.e[dp] for dp in divisors(n) if dp % d == 0)
        if c > 0:
            num = num * cyclotomic(d) ** c
        elif c < 0:
            den = den * cyclotomic(d) ** (-c)
    return RationalFunctionQ(num, den, _normalized=True)


def expand_divisor_product(z: ZetaProduct) -> tuple[PolynomialQ, PolynomialQ]:
    """Unreduced (numerator, denominator) of the literal product of (q**d - 1)**e(d)."""
    num, den = ONE, ONE
    for d, ed in z.e.items():
        if ed:
            f = PolynomialQ.monomial(d) - 1
            if ed > 0:
                num = num * f**ed
            else:
                den = den * f ** (-ed)
    return num, den


def _division_count(p: PolynomialQ, f: PolynomialQ) -> int:
    count = 0
    while not p.is_zero:
        quo, rem = divmod(p, f)
        if not rem.is_zero:
            break
        p = quo
        count += 1
    return count


def cyclotomic_exponents(f: RationalFunctionQ, n: int) -> DivisorMap:
    """Exponent of each cyclotomic factor of f among indices dividing n."""
    out = {}
    for d in divisors(n):
        phi = cyclotomic(d)
        out[d] = _division_count(f.num, phi) - _division_count(f.den, phi)
    return DivisorMap(n, out)


def partial_zeta(z: ZetaProduct, k: int) -> RationalFunctionQ:
    """Product of (q**d - 1)**e(d) restricted to d | (k, n).

    Defined as the restricted PRODUCT: only then is the multiplicity of the
    root q = 1 the divisor sum a(k) = sum of e(d) over d | (k, n), which is
    the property this object exists to carry (a termwise sum of the factors
    would not even be multiplicative in e).
    """
    g = math.gcd(k, z.n)
    num, den = ONE, ONE
    for d in divisors(g):
        ed = z.e[d]
        if ed:
            f = PolynomialQ.monomial(d) - 1
            if ed > 0:
                num = num * f**ed
            else:
                den = den * f ** (-ed)
    return RationalFunctionQ(num, den)


def root_multiplicity_at_one(f: RationalFunctionQ) -> int:
    """Sign-counted multiplicity of the root q = 1."""
    linear = Q - 1
    return _division_count(f.num, linear) - _division_count(f.den, linear)


# ---------------------------------------------------------------------------
# Fourier analysis in Ramanujan sums


def ramanujan_coefficients(a: EvenFunction) -> EvenFunction:
    """r(k) = (1/n) sum of a(n/d) c_d(k) over d | n."""
    n = a.n
    divs = divisors(n)
    by_gcd = {}
    for g in divs:
        total = sum(a(n // d) * ramanujan_sum(d, g) for d in divs)
        by_gcd[g] = div_exact(total, n)
    return EvenFunction._from_gcd_table(n, by_gcd)


def ramanujan_reconstruct(r: EvenFunction) -> EvenFunction:
    """a(k) = sum of r(n/d) c_d(k) over d | n; inverse of :func:`ramanujan_coefficients`."""
    n = r.n
    divs = divisors(n)
    by_gcd = {g: sum(r(n // d) * ramanujan_sum(d, g) for d in divs) for g in divs}
    return EvenFunction._from_gcd_table(n, by_gcd)


def dft_power_sums(m: EvenFunction) -> EvenFunction:
    """p(l) = sum of m(n/d) c_d(l) over d | n: the even-function discrete
    Fourier transform sending multiplicities to power sums."""
    n = m.n
    divs = divisors(n)
    by_gcd = {g: sum(m(n // d) * ramanujan_sum(d, g) for d in divs) for g in divs}
    return EvenFunction._from_gcd_table(n, by_gcd)


# ---------------------------------------------------------------------------
# generating-function identities


def gf_power_series(a: EvenFunction, e: DivisorMap) -> Report:
    """Check the two partial-fraction forms of the periodic Lambert identity.

    With a(k) = sum of e(d) over d | (k, n), both of

    * sum_{k=1..n} a(k) q**k / (1 - q**n)  ==  sum_d e(d) q**d / (1 - q**d)
    * sum_{k=0..n-1} a(k) q**k / (1 - q**n)  ==  sum_d e(d) / (1 - q**d)

    must hold as exact rational-function identities.  (The third member with
    q-integer denominators is the second one with (1 - q) factored out, so it
    is covered by the same cleared comparison.)  Both sides are returned in
    the report context for display.
    """
    n = a.n
    report = Report("lambert-partial-fractions", context={"n": n})
    lhs_tail = PolynomialQ([0] + [a(k) for k in range(1, n + 1)])
    rhs_tail = ZERO
    for d, ed in e.items():
        if ed:
            rhs_tail = rhs_tail + PolynomialQ.monomial(d, ed) * geometric(d, n)
    if lhs_tail != rhs_tail:
        report.fail(identity="k=1..n", lhs=str(lhs_tail), rhs=str(rhs_tail))
    lhs_head = PolynomialQ([a(k) for k in range(n)])
    rhs_head = ZERO
    for d, ed in e.items():
        if ed:
            rhs_head = rhs_head + ed * geometric(d, n)
    if lhs_head != rhs_head:
        report.fail(identity="k=0..n-1", lhs=str(lhs_head), rhs=str(rhs_head))
    one_minus_qn = ONE - PolynomialQ.monomial(n)
    report.context["series_form"] = str(RationalFunctionQ(lhs_tail, one_minus_qn))
    report.context["partial_fractions"] = {d: v for d, v in e.items() if v}
    return report


# ---------------------------------------------------------------------------
# Möbius pairing identities


def check_mobius_pairing(z: ZetaProduct, x: Mapping[int, object]) -> Report:
    """Pair the root data of z against any Möbius-inverse pair of sequences.

    Given x_d for d | n, let z_d = sum of mu(d/d') x_{d'} (inverse Möbius
    transform).  Then both

    * sum_d m(n/d) z_d == sum_d e(d) x_d
    * sum_d p(n/d) z_d == sum_d (n/d) e(n/d) x_d

    are checked exactly.  Values may be rationals, polynomials or rational
    functions; sums are compared by cross-multiplication so no gcd is needed.
    """
    n = z.n
    divs = divisors(n)
    xf = {d: RationalFunctionQ.from_value(x[d]) for d in divs}
    pairs = {d: (xf[d].num, xf[d].den) for d in divs}
    zed = {}
    for d in divs:
        terms = []
        for dp in divisors(d):
            mu = mobius(d // dp)
            if mu:
                tn, td = pairs[dp]
                terms.append((mu * tn, td))
        zed[d] = combine_fractions(terms) if terms else (ZERO, ONE)
    m = multiplicities(z)
    p = power_sums(z)
    report = Report("mobius-pairing", context={"n": n})

    def _sum(table, coeff_of):
        return combine_fractions([(coeff_of(d) * num, den) for d, (num, den) in table.items()])

    lhs_m = _sum(zed, lambda d: m(n // d))
    lhs_p = _sum(zed, lambda d: p(n // d))
    rhs_m = _sum(pairs, lambda d: z.e[d])
    rhs_p = _sum(pairs, lambda d: (n // d) * z.e[n // d])
    if not fractions_equal(lhs_m, rhs_m):
        report.fail(identity="multiplicity-side")
    if not fractions_equal(lhs_p, rhs_p):
        report.fail(identity="power-sum-side")
    report.context["derived_z"] = {d: zed[d] for d in divs}
    return report


def pairing_preset(name: str, n: int) -> dict[int, object]:
    """Named substitutions: 'ones', 'necklace' (x_d = q**d), 'log-derivative'
    and 'ramanujan' (both x_d = d q**d / (q**d - 1))."""
    if name == "ones":
        return {d: 1 for d in divisors(n)}
    if name == "necklace":
        return {d: PolynomialQ.monomial(d) for d in divisors(n)}
    if name in ("log-derivative", "ramanujan"):
        return {
            d: RationalFunctionQ(PolynomialQ.monomial(d, d), PolynomialQ.monomial(d) - 1)
            for d in divisors(n)
        }
    raise ValueError(f"unknown pairing preset {name!r}")


def _ramanujan_kernel(d: int) -> tuple[PolynomialQ, PolynomialQ]:
    """(sum of c_d(k) q**k for k = 1..d, q**d - 1) without reduction."""
    num = PolynomialQ([0] + [ramanujan_sum(d, k) for k in range(1, d + 1)])
    return num, PolynomialQ.monomial(d) - 1


def check_pairing_preset(z: ZetaProduct, name: str) -> Report:
    """Run :func:`check_mobius_pairing` on a preset substitution.

    For the log-derivative preset the inverse-Möbius sequence is verified to
    equal q Phi_d'(q) / Phi_d(q) for every d | n; for the Ramanujan preset it
    is verified to equal the Ramanujan-sum kernel over q**d - 1.
    """
    n = z.n
    x = pairing_preset(name, n)
    report = check_mobius_pairing(z, x)
    report.check = f"mobius-pairing[{name}]"
    derived = report.context.pop("derived_z")
    if name in ("log-derivative", "ramanujan"):
        for d in divisors(n):
            phi = cyclotomic(d)
            expected = (Q * phi.derivative(), phi) if name == "log-derivative" else _ramanujan_kernel(d)
            if not fractions_equal(derived[d], expected):
                report.fail(identity=f"kernel at d={d}")
    if name == "necklace":
        from .exactpoly import necklace

        for d in divisors(n):
            num, den = derived[d]
            if not fractions_equal((num, den), (d * necklace(d), ONE)):
                report.fail(identity=f"necklace kernel at d={d}")
    return report


def check_totient_pairing(z: ZetaProduct, s_values) -> Report:
    """Dirichlet-exponent identities tying root data to the exponent vector.

    For each integer s the four finite rational identities

    * sum m(n/d) phi_{1-s}(d) == sum d e(d) / d**s
    * (1/n) sum p(n/d) phi_{1-s}(d) == sum e(n/d) / d**s
    * sum m(n/d) phi_{-s}(d) == sum e(d) / d**s
    * sum p(n/d) phi_{-s}(d) == sum (n/d) e(n/d) / d**s

    are evaluated exactly (phi_s is the Möbius-weighted power sum
    :func:`cyclozeta.arith.jordan_totient`).
    """
    n = z.n
    divs = divisors(n)
    m = multiplicities(z)
    p = power_sums(z)
    report = Report("totient-pairing", context={"n": n, "s": list(s_values)})
    for s in s_values:
        checks = [
            (
                "m/shifted",
                sum(m(n // d) * jordan_totient(d, 1 - s) for d in divs),
                sum(d * z.e[d] * rational_power(d, -s) for d in divs),
            ),
            (
                "p/shifted",
                div_exact(sum(p(n // d) * jordan_totient(d, 1 - s) for d in divs), n),
                sum(z.e[n // d] * rational_power(d, -s) for d in divs),
            ),
            (
                "m/plain",
                sum(m(n // d) * jordan_totient(d, -s) for d in divs),
                sum(z.e[d] * rational_power(d, -s) for d in divs),
            ),
            (
                "p/plain",
                sum(p(n // d) * jordan_totient(d, -s) for d in divs),
                sum((n // d) * z.e[n // d] * rational_power(d, -s) for d in divs),
            ),
        ]
        for label, lhs, rhs in checks:
            if lhs != rhs:
                report.fail(identity=label, s=s, lhs=str(lhs), rhs=str(rhs))
    return report


def check_fourier_pair_family(n: int, F: DivisorMap, s: int) -> Report:
    """The two-parameter family of Fourier pairs of even functions.

    f_s(k) = sum of F(d) / d**s over d | (k, n) must expand in Ramanujan sums
    with coefficients f'_{s+1}(n/d), where f'_t(k) = sum of F(n/d) / (n/d)**t
    over d | (k, n).  Checked for every residue k.
    """
    if F.n != n:
        raise ValueError("pair table must live on the divisors of n")
    divs = divisors(n)

    def f_s(k):
        g = math.gcd(k, n)
        return sum(F[d] * rational_power(d, -s) for d in divisors(g))

    def f_prime(k, t):
        g = math.gcd(k, n)
        return sum(F[n // d] * rational_power(n // d, -t) for d in divisors(g))

    report = Report("fourier-pair-family", context={"n": n, "s": s})
    for k in range(n):
        lhs = f_s(k)
        rhs = sum(f_prime(n // d, s + 1) * ramanujan_sum(d, k) for d in divs)
        if lhs != rhs:
            report.fail(k=k, lhs=str(lhs), rhs=str(rhs))
    return report
