"""Quasihomogeneous three-variable weight systems and Seifert invariants.

A weight system (a, b, c; n) determines a spectral generating function

    q**(-n) (q**n - q**a)(q**n - q**b)(q**n - q**c)
            / ((q**a - 1)(q**b - 1)(q**c - 1))

which is a polynomial with nonnegative integer coefficients exactly when the
system is regular; its coefficient sum is the local multiplicity
(n-a)(n-b)(n-c)/(abc).  The module also assembles the eight-term divisor
expansions of the root-multiplicity and power-sum generating functions from
the weights, their finite Dirichlet forms, and the characteristic rational
function attached to Seifert data {g, (alpha_i, beta_i)}; each of these is
handed back as an exponent vector on the divisors of n so the rest of the
package can analyze it.

beta_i are stored but inert: the displayed formulas use only g, r and those
alpha_i dividing n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import DivisorMap, as_exact, divisors, rational_power
from .exactpoly import (
    ONE,
    ZERO,
    PolynomialQ,
    RationalFunctionQ,
    combine_fractions,
    geometric,
)
from .report import Report
from .zetaprod import EvenFunction, ZetaProduct, dft_power_sums, multiplicities, power_sums


class NonRegularWeightSystem(ValueError):
    """The spectral quotient failed to be a polynomial."""


@dataclass(frozen=True)
class WeightSystem:
    a: int
    b: int
    c: int
    n: int

    def __post_init__(self):
        if min(self.a, self.b, self.c, self.n) < 1:
            raise ValueError("weights and degree must be positive")

    @classmethod
    def parse(cls, text: str) -> "WeightSystem":
        """Parse the ``a,b,c;n`` form."""
        s = text.replace(" ", "")
        head, _, deg = s.partition(";")
        parts = head.split(",")
        if len(parts) != 3 or not deg:
            raise ValueError(f"expected 'a,b,c;n', got {text!r}")
        a, b, c = (int(p) for p in parts)
        return cls(a, b, c, int(deg))

    def __str__(self):
        return f"{self.a},{self.b},{self.c};{self.n}"


@dataclass(frozen=True)
class SeifertData:
    genus: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        for alpha, beta in self.pairs:
            if alpha < 1 or beta < 1:
                raise ValueError("Seifert pair entries must be positive")

    @property
    def r(self) -> int:
        return len(self.pairs)

    @property
    def alphas(self) -> tuple[int, ...]:
        return tuple(alpha for alpha, _ in self.pairs)

    @classmethod
    def parse(cls, text: str) -> "SeifertData":
        """Parse the ``g; a1/b1,a2/b2,...`` form."""
        s = text.replace(" ", "")
        head, _, tail = s.partition(";")
        pairs = []
        if tail:
            for chunk in tail.split(","):
                alpha, _, beta = chunk.partition("/")
                pairs.append((int(alpha), int(beta)))
        return cls(int(head), tuple(pairs))

    def __str__(self):
        return f"{self.genus}; " + ",".join(f"{a}/{b}" for a, b in self.pairs)


def milnor_number(w: WeightSystem) -> Fraction:
    return Fraction((w.n - w.a) * (w.n - w.b) * (w.n - w.c), w.a * w.b * w.c)


def spectral_gf(w: WeightSystem) -> PolynomialQ:
    """The spectral generating function, checked to be a genuine polynomial.

    Raises :class:`NonRegularWeightSystem` when the quotient has a remainder
    or produces a negative or fractional coefficient.
    """
    qn = PolynomialQ.monomial(w.n)
    num = (qn - PolynomialQ.monomial(w.a)) * (qn - PolynomialQ.monomial(w.b)) * (
        qn - PolynomialQ.monomial(w.c)
    )
    den = PolynomialQ.monomial(w.n)
    for wt in (w.a, w.b, w.c):
        den = den * (PolynomialQ.monomial(wt) - 1)
    quo, rem = divmod(num, den)
    if not rem.is_zero:
        raise NonRegularWeightSystem(f"({w}) spectral quotient has a remainder")
    if any(not isinstance(cf, int) or cf < 0 for cf in quo.coeffs):
        raise NonRegularWeightSystem(f"({w}) spectral coefficients are not nonnegative integers")
    return quo


def spectral_mod(w: WeightSystem) -> PolynomialQ:
    """Spectral generating function reduced mod q**n - 1."""
    _, rem = divmod(spectral_gf(w), PolynomialQ.monomial(w.n) - 1)
    return rem


def _line_rational(line: DivisorMap) -> RationalFunctionQ:
    terms = []
    for d, v in line.items():
        if v:
            terms.append((PolynomialQ.constant(v), PolynomialQ.monomial(d) - 1))
    if not terms:
        return RationalFunctionQ(ZERO)
    return RationalFunctionQ(*combine_fractions(terms))


def m_line_from_weights(w: WeightSystem) -> DivisorMap:
    """Coefficients of 1/(q**d - 1) in the multiplicity generating function.

    All eight displayed terms land on divisors of n (gcds with n), so the
    result is a genuine divisor map; the coefficient at d equals the product
    exponent e(n/d).
    """
    a, b, c, n = w.a, w.b, w.c, w.n
    coeff: dict[int, object] = {d: 0 for d in divisors(n)}
    coeff[1] += Fraction(n * n, a * b * c)
    coeff[n] += -1
    for wt in (a, b, c):
        g = math.gcd(wt, n)
        coeff[g] += Fraction(g, wt)
    for wt1, wt2 in ((b, c), (a, c), (a, b)):
        g = math.gcd(math.gcd(wt1, wt2), n)
        coeff[g] -= Fraction(n * g, wt1 * wt2)
    return DivisorMap(n, {d: as_exact(v) for d, v in coeff.items()})


def p_line_from_weights(w: WeightSystem) -> DivisorMap:
    """Coefficients of 1/(q**d - 1) in the power-sum generating function."""
    a, b, c, n = w.a, w.b, w.c, w.n
    coeff: dict[int, object] = {d: 0 for d in divisors(n)}
    coeff[n] += Fraction(n**3, a * b * c)
    coeff[1] += -1
    for wt in (a, b, c):
        g = math.gcd(wt, n)
        coeff[n // g] += Fraction(n, wt)
    for wt1, wt2 in ((b, c), (a, c), (a, b)):
        g = math.gcd(math.gcd(wt1, wt2), n)
        coeff[n // g] -= Fraction(n * n, wt1 * wt2)
    return DivisorMap(n, {d: as_exact(v) for d, v in coeff.items()})


def m_gf_from_weights(w: WeightSystem) -> tuple[RationalFunctionQ, DivisorMap]:
    """(assembled rational function, divisor coefficients) of the m-line."""
    line = m_line_from_weights(w)
    return _line_rational(line), line


def p_gf_from_weights(w: WeightSystem) -> RationalFunctionQ:
    """Assembled power-sum generating function; its coefficients are
    :func:`p_line_from_weights`."""
    return _line_rational(p_line_from_weights(w))


def m_dirichlet_from_weights(w: WeightSystem, s: int):
    """The finite Dirichlet form of the multiplicity series at integer s."""
    a, b, c, n = w.a, w.b, w.c, w.n
    total = Fraction(n * n, a * b * c) - rational_power(n, -s)
    for wt in (a, b, c):
        g = math.gcd(wt, n)
        total += Fraction(1, wt) * rational_power(g, 1 - s)
    for wt1, wt2 in ((b, c), (a, c), (a, b)):
        g = math.gcd(math.gcd(wt1, wt2), n)
        total -= Fraction(n, wt1 * wt2) * rational_power(g, 1 - s)
    return as_exact(total)


def p_dirichlet_from_weights(w: WeightSystem, s: int):
    """The finite Dirichlet form of the power-sum series at integer s."""
    a, b, c, n = w.a, w.b, w.c, w.n
    total = Fraction(1, a * b * c) * rational_power(n, 3 - s) - 1
    for wt in (a, b, c):
        g = math.gcd(wt, n)
        total += Fraction(1, wt) * rational_power(g, s) * rational_power(n, 1 - s)
    for wt1, wt2 in ((b, c), (a, c), (a, b)):
        g = math.gcd(math.gcd(wt1, wt2), n)
        total -= Fraction(1, wt1 * wt2) * rational_power(g, s) * rational_power(n, 2 - s)
    return as_exact(total)


def weight_even_functions(w: WeightSystem) -> tuple[EvenFunction, EvenFunction]:
    """(m, p) as even functions; they satisfy the discrete Fourier pairing."""
    return (
        EvenFunction.from_divisor_map(m_line_from_weights(w)),
        EvenFunction.from_divisor_map(p_line_from_weights(w)),
    )


def check_weight_consistency(w: WeightSystem, s_values=(-1, 0, 1, 2, 3)) -> Report:
    """Internal coherence of all the weight-derived data.

    Checks: spectral polynomial coefficient sum and degree, palindromic
    coefficients, reduction mod q**n - 1 against the m-line, the Fourier
    pairing p = DFT(m), the exponent relation p-coefficient(d) = d e(d), and
    both finite Dirichlet forms against the divisor expansions.
    """
    report = Report("weight-system", context={"weights": str(w)})
    n = w.n
    try:
        spec = spectral_gf(w)
    except NonRegularWeightSystem as exc:
        return report.fail(error=str(exc))
    mu = milnor_number(w)
    if sum(spec.coeffs) != mu:
        report.fail(identity="multiplicity-sum", lhs=str(sum(spec.coeffs)), rhs=str(mu))
    if not spec.is_zero and spec.degree != 2 * n - w.a - w.b - w.c:
        report.fail(identity="degree", lhs=spec.degree, rhs=2 * n - w.a - w.b - w.c)
    # reciprocity: the spectral function satisfies P(1/q) = q**(-n) P(q),
    # i.e. exponents pair up as m <-> n - m
    for k in range(n + 1):
        if spec.coefficient(k) != spec.coefficient(n - k):
            report.fail(identity="reciprocity", k=k)
            break

    m_line = m_line_from_weights(w)
    p_line = p_line_from_weights(w)
    m_even, p_even = weight_even_functions(w)
    reduced = spectral_mod(w)
    from_m = PolynomialQ([m_even(k) for k in range(n)])
    if reduced != from_m:
        report.fail(identity="spectral-mod", lhs=str(reduced), rhs=str(from_m))
    if dft_power_sums(m_even) != p_even:
        report.fail(identity="fourier-pairing")
    for d in divisors(n):
        if p_line[d] != d * m_line[n // d]:
            report.fail(identity="exponent-relation", d=d)
    for s in s_values:
        lhs = m_dirichlet_from_weights(w, s)
        rhs = sum(v * rational_power(d, -s) for d, v in m_line.items())
        if lhs != rhs:
            report.fail(identity="m-dirichlet", s=s, lhs=str(lhs), rhs=str(rhs))
        lhs = p_dirichlet_from_weights(w, s)
        rhs = sum(v * rational_power(d, -s) for d, v in p_line.items())
        if lhs != rhs:
            report.fail(identity="p-dirichlet", s=s, lhs=str(lhs), rhs=str(rhs))
    return report


# ---------------------------------------------------------------------------
# Seifert data


def char_poly_from_seifert(w: WeightSystem, sd: SeifertData) -> tuple[RationalFunctionQ, ZetaProduct]:
    """Characteristic rational function from Seifert invariants.

    (1 - q**n)**(2g - 2 + r) times (1 - q**(n/d)) over d | n, d in {a, b, c},
    divided by (1 - q) and by (1 - q**(n/alpha_i)) over alpha_i | n.  Returns
    the function together with its exponent vector on the divisors of n.
    """
    n = w.n
    expo: dict[int, int] = {d: 0 for d in divisors(n)}
    expo[n] += 2 * sd.genus - 2 + sd.r
    for d in sorted({w.a, w.b, w.c}):
        if n % d == 0:
            expo[n // d] += 1
    expo[1] -= 1
    for alpha in sd.alphas:
        if n % alpha == 0:
            expo[n // alpha] -= 1
    num, den = ONE, ONE
    for d, ed in expo.items():
        if ed:
            factor = ONE - PolynomialQ.monomial(d)
            if ed > 0:
                num = num * factor**ed
            else:
                den = den * factor ** (-ed)
    return RationalFunctionQ(num, den), ZetaProduct(n, expo)


def check_seifert_lines(w: WeightSystem, sd: SeifertData, s_values=(0, 1, 2)) -> Report:
    """The four displayed generating forms for Seifert data.

    The multiplicity and power-sum lines are rebuilt from g, r, {a, b, c}
    and the alpha_i, cleared against the exponent vector of
    :func:`char_poly_from_seifert`, and the two finite Dirichlet forms are
    evaluated at the given integer points.
    """
    n = w.n
    _, z = char_poly_from_seifert(w, sd)
    gr = 2 * sd.genus - 2 + sd.r
    report = Report("seifert-lines", context={"weights": str(w), "seifert": str(sd)})

    m_coeff: dict[int, object] = {d: 0 for d in divisors(n)}
    m_coeff[1] += gr
    m_coeff[n] -= 1
    for d in sorted({w.a, w.b, w.c}):
        if n % d == 0:
            m_coeff[d] += 1
    for alpha in sd.alphas:
        if n % alpha == 0:
            m_coeff[alpha] -= 1
    p_coeff: dict[int, object] = {d: 0 for d in divisors(n)}
    p_coeff[n] += n * gr
    p_coeff[1] -= 1
    for d in sorted({w.a, w.b, w.c}):
        if n % d == 0:
            p_coeff[n // d] += n // d
    for alpha in sd.alphas:
        if n % alpha == 0:
            p_coeff[n // alpha] -= n // alpha

    m_even = multiplicities(z)
    p_even = power_sums(z)
    m_poly = PolynomialQ([m_even(k) for k in range(n)])
    p_poly = PolynomialQ([p_even(k) for k in range(n)])
    rhs_m = ZERO
    for d, v in m_coeff.items():
        if v:
            rhs_m = rhs_m + v * geometric(d, n)
    rhs_p = ZERO
    for d, v in p_coeff.items():
        if v:
            rhs_p = rhs_p + v * geometric(d, n)
    if m_poly != rhs_m:
        report.fail(identity="m-line", lhs=str(m_poly), rhs=str(rhs_m))
    if p_poly != rhs_p:
        report.fail(identity="p-line", lhs=str(p_poly), rhs=str(rhs_p))

    for s in s_values:
        lhs = sum(z.e[n // d] * rational_power(d, -s) for d in divisors(n))
        rhs = gr - rational_power(n, -s)
        for d in sorted({w.a, w.b, w.c}):
            if n % d == 0:
                rhs += rational_power(d, -s)
        for alpha in sd.alphas:
            if n % alpha == 0:
                rhs -= rational_power(alpha, -s)
        if lhs != rhs:
            report.fail(identity="m-dirichlet", s=s, lhs=str(lhs), rhs=str(rhs))
        lhs = rational_power(n, s - 1) * sum(
            d * z.e[d] * rational_power(d, -s) for d in divisors(n)
        )
        rhs = gr - rational_power(n, s - 1)
        for d in sorted({w.a, w.b, w.c}):
            if n % d == 0:
                rhs += rational_power(d, s - 1)
        for alpha in sd.alphas:
            if n % alpha == 0:
                rhs -= rational_power(alpha, s - 1)
        if lhs != rhs:
            report.fail(identity="p-dirichlet", s=s, lhs=str(lhs), rhs=str(rhs))
    return report
