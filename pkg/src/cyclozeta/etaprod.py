"""Eta-style infinite products attached to a cyclotomic product.

For exponents e on the divisors of n, the product over all k >= 1 of the
cyclotomic product evaluated at q**k has a logarithmic derivative with an
exact q-expansion.  This module expands q d/dq log of the product directly
from its (1 - q**(k d)) factors and compares it with three closed forms:

* the Lambert form: a divisor combination of L(q**d), where
  L(q) = sum of k q**k / (1 - q**k) = sum of sigma(m) q**m;
* the cyclotomic form: multiplicity-weighted log derivatives of the
  cyclotomic polynomials evaluated along q**k;
* the Ramanujan form: the same with each log derivative replaced by its
  Ramanujan-sum kernel over q**(k d) - 1.

Two conventions are pinned here.  First, with (1 - q**(k d)) factors the
direct expansion equals MINUS the divisor Lambert combination - the sign is
intrinsic (a unit flip of every factor does not change the log derivative),
and the checker reports it as a single flag.  Second, the Ramanujan form
carries the weight k inherited from the chain rule; substituting the kernel
identity into the cyclotomic form forces it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arith import divisors, ramanujan_sum, sigma
from .exactpoly import (
    PolynomialQ,
    PowerSeriesQ,
    cyclotomic,
    expand_fraction,
    log_derivative,
)
from .report import Report
from .zetaprod import ZetaProduct, multiplicities


def lambert_series(order: int) -> PowerSeriesQ:
    """L(q) = sum of sigma(m) q**m, truncated; constant term 0."""
    if order < 1:
        raise ValueError("order must be at least 1")
    return PowerSeriesQ([0] + [sigma(m) for m in range(1, order)], order)


@dataclass(frozen=True)
class EtaExpansion:
    """q d/dq log of the eta-style product, with the three closed forms."""

    order: int
    mu_e: int
    series: PowerSeriesQ          # direct expansion from the product factors
    lambert_form: PowerSeriesQ    # sum of d e(d) L(q**d)
    cyclotomic_form: PowerSeriesQ
    ramanujan_form: PowerSeriesQ


@lru_cache(maxsize=None)
def _logderiv_coeffs(d: int, order: int) -> tuple:
    phi = cyclotomic(d)
    ld = log_derivative(phi)
    return expand_fraction(ld.num, ld.den, order).coeffs


@lru_cache(maxsize=None)
def _ramanujan_kernel_coeffs(d: int, order: int) -> tuple:
    num = PolynomialQ([0] + [ramanujan_sum(d, j) for j in range(1, d + 1)])
    den = PolynomialQ.monomial(d) - 1
    return expand_fraction(num, den, order).coeffs


def eta_log_derivative(z: ZetaProduct, order: int) -> EtaExpansion:
    """All four expansions to the given order.

    The direct series differentiates each (1 - q**(k d)) factor term by
    term; the closed forms are assembled independently, the Lambert one
    exactly as displayed (so it comes out as the negative of the other
    three).
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    n = z.n
    direct = [0] * order
    for d, ed in z.e.items():
        if not ed:
            continue
        for k in range(1, (order - 1) // d + 1):
            step = k * d
            weight = ed * step
            for idx in range(step, order, step):
                direct[idx] -= weight

    lambert = [0] * order
    for d, ed in z.e.items():
        if not ed:
            continue
        w = d * ed
        for m in range(1, (order - 1) // d + 1):
            lambert[m * d] += w * sigma(m)

    m = multiplicities(z)
    cyclo = [0] * order
    rama = [0] * order
    for d in divisors(n):
        md = m(n // d)
        if not md:
            continue
        s_cyc = _logderiv_coeffs(d, order)
        s_ram = _ramanujan_kernel_coeffs(d, order)
        for k in range(1, order):
            wk = md * k
            for j in range(1, (order - 1) // k + 1):
                cj = s_cyc[j]
                if cj:
                    cyclo[k * j] += wk * cj
                rj = s_ram[j]
                if rj:
                    rama[k * j] += wk * rj

    return EtaExpansion(
        order=order,
        mu_e=z.mu_e,
        series=PowerSeriesQ(direct, order),
        lambert_form=PowerSeriesQ(lambert, order),
        cyclotomic_form=PowerSeriesQ(cyclo, order),
        ramanujan_form=PowerSeriesQ(rama, order),
    )


def check_eta_forms(z: ZetaProduct, order: int = 100) -> Report:
    """Compare the direct expansion against the three closed forms.

    Passes when direct == cyclotomic == Ramanujan == -(Lambert form); the
    global sign between the direct expansion and the Lambert combination is
    recorded as a single flag.
    """
    exp = eta_log_derivative(z, order)
    report = Report("eta-log-derivative", context={"n": z.n, "order": order, "mu_e": exp.mu_e})
    if exp.series != -exp.lambert_form:
        report.fail(identity="lambert", detail="direct expansion != -(divisor Lambert combination)")
    if exp.series != exp.cyclotomic_form:
        report.fail(identity="cyclotomic")
    if exp.series != exp.ramanujan_form:
        report.fail(identity="ramanujan")
    if report.status == "pass":
        nonzero = any(exp.series.coeffs)
        if nonzero:
            report.flag("eta sign: direct log derivative is the negative of the Lambert-form display")
        report.note("Ramanujan form carries the chain-rule weight k on each kernel")
    return report
