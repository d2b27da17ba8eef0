"""Truncated Dirichlet-series algebra and generalized root transforms.

A :class:`DirichletSeries` holds exact coefficients g(1..N) of a formal
series sum g(k) k**(-s).  Multiplication is divisor convolution, the shift
g(k) -> k g(k) realizes s -> s - 1, and :func:`stretch` realizes s -> r s by
moving support onto r-th powers.  All identities in this module are verified
coefficientwise; nothing is ever evaluated analytically.

Attached to a cyclotomic product with exponents e on the divisors of n, a
series G induces four generalized root transforms

    m_G  = G * [d -> e(n/d)]      p_G  = G * [d -> d e(d)]
    m*_G = G * [d -> e(d)]        p*_G = G * [d -> d e(n/d)]

(the bracketed sequences are supported on divisors of n).  Taking G to be
the all-ones series recovers the even functions m, p, m*, p* of
:mod:`cyclozeta.zetaprod` on indices k >= 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, NamedTuple

from .arith import (
    as_exact,
    div_exact,
    divisors,
    liouville,
    mobius,
    named_function,
    ramanujan_sum,
)
from .exactpoly import PowerSeriesQ, RationalFunctionQ, combine_fractions, expand, q_integer
from .report import Report
from .zetaprod import ZetaProduct, multiplicities, power_sums


@lru_cache(maxsize=8)
def divisor_table(limit: int) -> tuple[tuple[int, ...], ...]:
    """divisor_table(N)[k] lists the divisors of k for 1 <= k <= N (index 0 unused)."""
    table: list[list[int]] = [[] for _ in range(limit + 1)]
    for d in range(1, limit + 1):
        for m in range(d, limit + 1, d):
            table[m].append(d)
    return tuple(tuple(row) for row in table)


class DirichletSeries:
    """Exact coefficients g(1..order) of a truncated Dirichlet series."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = tuple(as_exact(c) for c in coeffs)
        if not cs:
            raise ValueError("DirichletSeries needs at least one coefficient")
        self.coeffs = cs

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def coefficient(self, k: int):
        if not 1 <= k <= self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k - 1]

    def truncate(self, order: int) -> "DirichletSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated Dirichlet series")
        return DirichletSeries(self.coeffs[:order])

    def __add__(self, other):
        if not isinstance(other, DirichletSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return DirichletSeries([a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])])

    def __sub__(self, other):
        if not isinstance(other, DirichletSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return DirichletSeries([a - b for a, b in zip(self.coeffs[:n], other.coeffs[:n])])

    def __neg__(self):
        return DirichletSeries([-c for c in self.coeffs])

    def __mul__(self, other):
        """Divisor convolution, truncated to the smaller order."""
        if isinstance(other, (int, Fraction)):
            return DirichletSeries([c * other for c in self.coeffs])
        if not isinstance(other, DirichletSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        a, b = self.coeffs, other.coeffs
        for i in range(1, n + 1):
            ai = a[i - 1]
            if ai:
                for j in range(1, n // i + 1):
                    bj = b[j - 1]
                    if bj:
                        out[i * j] += ai * bj
        return DirichletSeries(out[1:])

    __rmul__ = __mul__

    def invert(self) -> "DirichletSeries":
        """Dirichlet inverse; needs g(1) != 0."""
        a = self.coeffs
        if a[0] == 0:
            raise ValueError("series with g(1) = 0 has no Dirichlet inverse")
        n = self.order
        table = divisor_table(n)
        b = [0] * (n + 1)
        b[1] = div_exact(1, a[0])
        for k in range(2, n + 1):
            acc = 0
            for d in table[k]:
                if d > 1:
                    ad = a[d - 1]
                    if ad:
                        acc += ad * b[k // d]
            b[k] = div_exact(-acc, a[0])
        return DirichletSeries(b[1:])

    def shift(self) -> "DirichletSeries":
        """g(k) -> k g(k): the series of G(s - 1)."""
        return DirichletSeries([k * c for k, c in enumerate(self.coeffs, start=1)])

    def stretch(self, r: int) -> "DirichletSeries":
        """Support moved to r-th powers: the series of G(r s)."""
        if r < 1:
            raise ValueError("stretch needs r >= 1")
        out = [0] * self.order
        k = 1
        while k**r <= self.order:
            out[k**r - 1] = self.coeffs[k - 1]
            k += 1
        return DirichletSeries(out)

    def __eq__(self, other):
        if not isinstance(other, DirichletSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:10])
        tail = ", ..." if self.order > 10 else ""
        return f"DirichletSeries([{head}{tail}], order={self.order})"


def zeta_series(order: int) -> DirichletSeries:
    """All-ones coefficients: the Riemann zeta series."""
    return DirichletSeries([1] * order)


def unit_series(order: int) -> DirichletSeries:
    """(1, 0, 0, ...): the convolution identity."""
    return DirichletSeries([1] + [0] * (order - 1))


def mobius_series(order: int) -> DirichletSeries:
    return DirichletSeries([mobius(k) for k in range(1, order + 1)])


def from_function(fn: Callable[[int], object], order: int) -> DirichletSeries:
    return DirichletSeries([fn(k) for k in range(1, order + 1)])


def divisor_polynomial(coeffs: Mapping[int, object], order: int) -> DirichletSeries:
    """Finite Dirichlet polynomial with the given support."""
    out = [0] * order
    for k, v in coeffs.items():
        k = int(k)
        if k < 1:
            raise ValueError(f"support index {k} must be positive")
        if k <= order:
            out[k - 1] = out[k - 1] + as_exact(v)
    return DirichletSeries(out)


# ---------------------------------------------------------------------------
# generalized transforms


class GTransforms(NamedTuple):
    m: DirichletSeries
    p: DirichletSeries
    mstar: DirichletSeries
    pstar: DirichletSeries


def g_transforms(z: ZetaProduct, G: DirichletSeries) -> GTransforms:
    """The four series m_G, p_G, m*_G, p*_G attached to z and G."""
    n, order = z.n, G.order
    supports = {
        "m": {d: z.e[n // d] for d in divisors(n)},
        "p": {d: d * z.e[d] for d in divisors(n)},
        "mstar": {d: z.e[d] for d in divisors(n)},
        "pstar": {d: d * z.e[n // d] for d in divisors(n)},
    }
    out = {}
    for key, supp in supports.items():
        coeffs = [0] * (order + 1)
        for d, w in supp.items():
            if w and d <= order:
                g = G.coeffs
                for j in range(1, order // d + 1):
                    gj = g[j - 1]
                    if gj:
                        coeffs[d * j] += w * gj
        out[key] = DirichletSeries(coeffs[1:])
    return GTransforms(out["m"], out["p"], out["mstar"], out["pstar"])


def ps_g_transforms(z: ZetaProduct, g: PowerSeriesQ) -> tuple[PowerSeriesQ, PowerSeriesQ]:
    """Power-series analogues: multiply sum g(k) q**k by the q-integer sums

        sum_d e(n/d) / [d]_q      and      sum_d d e(d) / [d]_q

    where [d]_q = 1 + q + ... + q**(d-1).  g must have zero constant term.
    """
    if g.coeffs[0] != 0:
        raise ValueError("ps_g_transforms: the coefficient series must start at q^1")
    from .exactpoly import PolynomialQ

    n, order = z.n, g.order
    m_terms = [(PolynomialQ.constant(z.e[n // d]), q_integer(d)) for d in divisors(n)]
    p_terms = [(PolynomialQ.constant(d * z.e[d]), q_integer(d)) for d in divisors(n)]
    m_num, m_den = combine_fractions(m_terms)
    p_num, p_den = combine_fractions(p_terms)
    m_series = g * expand(RationalFunctionQ(m_num, m_den), order)
    p_series = g * expand(RationalFunctionQ(p_num, p_den), order)
    return m_series, p_series


# ---------------------------------------------------------------------------
# star-transform and transfer identities


def check_star_series(z: ZetaProduct, G: DirichletSeries) -> Report:
    """Star transforms of G against totient-paired root data, coefficientwise.

    * G(s) sum_d m(n/d) phi_{-s}(d) must be the series of m*_G;
    * (1/n) G(s) sum_d p(n/d) phi_{2-s}(d) must be the series of p*_G.

    The finite sums are materialized as divisor-supported Dirichlet
    polynomials, convolved with G and compared to the transforms.
    """
    n, order = z.n, G.order
    m = multiplicities(z)
    p = power_sums(z)
    t = g_transforms(z, G)
    u: dict[int, object] = {}
    v: dict[int, object] = {}
    for d in divisors(n):
        md = m(n // d)
        pd = p(n // d)
        for dp in divisors(d):
            mu = mobius(d // dp)
            if mu:
                u[dp] = u.get(dp, 0) + md * mu
                v[dp] = v.get(dp, 0) + pd * mu * dp * dp
    lhs_m = G * divisor_polynomial(u, order)
    lhs_p = div_exact(1, n) * (G * divisor_polynomial(v, order))
    report = Report("star-series", context={"n": n, "order": order})
    if lhs_m != t.mstar:
        k = _first_mismatch(lhs_m, t.mstar)
        report.fail(identity="mstar", k=k, lhs=str(lhs_m.coefficient(k)), rhs=str(t.mstar.coefficient(k)))
    if lhs_p != t.pstar:
        k = _first_mismatch(lhs_p, t.pstar)
        report.fail(identity="pstar", k=k, lhs=str(lhs_p.coefficient(k)), rhs=str(t.pstar.coefficient(k)))
    return report


def _first_mismatch(a: DirichletSeries, b: DirichletSeries) -> int:
    for k in range(1, min(a.order, b.order) + 1):
        if a.coefficient(k) != b.coefficient(k):
            return k
    return 0


def check_transfer(z: ZetaProduct, G1: DirichletSeries, G2: DirichletSeries) -> Report:
    """The transfer identity between the two generalized transforms:

        G2(s) * [k m_{G1}(k)]  ==  G1(s - 1) * [p*_{G2}(k)]

    checked as an exact coefficient identity to the common order.
    """
    order = min(G1.order, G2.order)
    m_g1 = g_transforms(z, G1.truncate(order)).m
    pstar_g2 = g_transforms(z, G2.truncate(order)).pstar
    lhs = G2.truncate(order) * m_g1.shift()
    rhs = G1.truncate(order).shift() * pstar_g2
    report = Report("transfer", context={"n": z.n, "order": order})
    if lhs != rhs:
        k = _first_mismatch(lhs, rhs)
        report.fail(k=k, lhs=str(lhs.coefficient(k)), rhs=str(rhs.coefficient(k)))
    return report


# ---------------------------------------------------------------------------
# the twelve convolution examples


@dataclass(frozen=True)
class TransferExample:
    """One instance of the transfer identity written as a plain convolution.

    ``build(n, r, order)`` returns (G1, G2, h) with h(1..order) the named
    arithmetic sequence whose Dirichlet series is G1(s-1)/G2(s); the final
    identity then reads k m_{G1}(k) = sum over d | k of h(k/d) p*_{G2}(d).
    """

    index: int
    label: str
    needs_r: bool
    build: Callable[[int, int, int], tuple[DirichletSeries, DirichletSeries, list]]


def _abs_mobius_series(order: int) -> DirichletSeries:
    # zeta(s) / zeta(2s), built from zeta itself
    return zeta_series(order) * zeta_series(order).stretch(2).invert()


def _build_ex1(n, r, order):
    phi = named_function("euler_phi")
    return zeta_series(order), zeta_series(order), phi.values(order)


def _build_ex2(n, r, order):
    G1 = divisor_polynomial({d: 1 for d in divisors(r)}, order)
    h = [ramanujan_sum(k, r) for k in range(1, order + 1)]
    return G1, zeta_series(order), h


def _build_ex3(n, r, order):
    G2 = zeta_series(order).stretch(r).invert()
    rho = named_function("rho", r)
    return zeta_series(order), G2, rho.values(order)


def _build_ex4(n, r, order):
    G2 = zeta_series(order).stretch(r)
    klee = named_function("klee", r)
    return zeta_series(order), G2, klee.values(order)


def _build_ex5(n, r, order):
    beta = named_function("beta")
    return zeta_series(order), _abs_mobius_series(order), beta.values(order)


def _build_ex6(n, r, order):
    psi = named_function("dedekind_psi")
    return zeta_series(order), _abs_mobius_series(order).invert(), psi.values(order)


def _build_ex7(n, r, order):
    G = _abs_mobius_series(order).invert()
    phi = named_function("euler_phi")
    h = [liouville(k) * phi(k) for k in range(1, order + 1)]
    return G, G, h


def _liouville_twisted_power_divisors(k: int, r: int) -> int:
    # sum of lambda(t)**(r+1) t**r over t**r | k.  For odd r the Liouville
    # weight drops out and this is the plain sum of r-th-power divisors; for
    # even r it survives on the r-th root (the quoted zeta quotient expands
    # to the twisted sum, not to lambda * rho'_r, when r is even).
    total = 0
    t = 1
    while t**r <= k:
        if k % t**r == 0:
            w = liouville(t) if r % 2 == 0 else 1
            total += w * t**r
        t += 1
    return total


def _build_ex8(n, r, order):
    zr = zeta_series(order).stretch(r)
    z2r = zeta_series(order).stretch(2 * r)
    G1 = z2r * zr.invert()
    h = [liouville(k) * _liouville_twisted_power_divisors(k, r) for k in range(1, order + 1)]
    return G1, _abs_mobius_series(order), h


def _build_ex9(n, r, order):
    support: dict[int, int] = {}
    for d in divisors(n):
        g = math.gcd(r, d)
        j = d // g
        support[j] = support.get(j, 0) + g * mobius(n // d)
    G1 = divisor_polynomial(support, order)
    h = [ramanujan_sum(n, r * k) for k in range(1, order + 1)]
    return G1, mobius_series(order), h


def _build_ex10(n, r, order):
    G1 = divisor_polynomial({d: liouville(d) * mobius(n // d) for d in divisors(n)}, order)
    h = [liouville(k) * ramanujan_sum(n, k) for k in range(1, order + 1)]
    return G1, _abs_mobius_series(order), h


def _build_ex11(n, r, order):
    G1 = divisor_polynomial({1: -1, 2: 1}, order)
    h = [(-1) ** k for k in range(1, order + 1)]
    return G1, mobius_series(order), h


def _build_ex12(n, r, order):
    half = divisor_polynomial({1: 1, 2: -1}, order)
    G1 = zeta_series(order) * half
    largest_odd = named_function("largest_odd")
    return G1, half, largest_odd.values(order)


TRANSFER_EXAMPLES: dict[int, TransferExample] = {
    ex.index: ex
    for ex in [
        TransferExample(1, "euler-phi", False, _build_ex1),
        TransferExample(2, "ramanujan-row", True, _build_ex2),
        TransferExample(3, "power-quotient-divisors", True, _build_ex3),
        TransferExample(4, "klee-totient", True, _build_ex4),
        TransferExample(5, "square-gcd-count", False, _build_ex5),
        TransferExample(6, "dedekind-psi", False, _build_ex6),
        TransferExample(7, "liouville-phi", False, _build_ex7),
        TransferExample(8, "liouville-power-divisors", True, _build_ex8),
        TransferExample(9, "scaled-ramanujan-column", True, _build_ex9),
        TransferExample(10, "liouville-ramanujan", False, _build_ex10),
        TransferExample(11, "alternating", False, _build_ex11),
        TransferExample(12, "largest-odd-divisor", False, _build_ex12),
    ]
}


def convolution_example(index: int, z: ZetaProduct, r: int | None = None, order: int = 200) -> Report:
    """Check one worked convolution identity, coefficientwise to ``order``.

    The left side k m_{G1}(k) comes from :func:`g_transforms`; the right side
    convolves the independently evaluated named sequence h with p*_{G2}.
    Example 1 additionally checks the inverse direction
    p*(k) = sum of phi_inv(k/d) d m(d).
    """
    if index not in TRANSFER_EXAMPLES:
        raise ValueError(f"unknown example index {index}")
    ex = TRANSFER_EXAMPLES[index]
    if ex.needs_r and (r is None or r < 1):
        raise ValueError(f"example {index} needs a parameter r >= 1")
    G1, G2, h = ex.build(z.n, r if ex.needs_r else 0, order)
    m_g1 = g_transforms(z, G1).m
    pstar_g2 = g_transforms(z, G2).pstar
    table = divisor_table(order)
    report = Report(
        f"convolution-example-{index}",
        context={
            "example": index,
            "label": ex.label,
            "n": z.n,
            "params": {"r": r} if ex.needs_r else {},
            "order": order,
        },
    )
    for k in range(1, order + 1):
        lhs = k * m_g1.coefficient(k)
        rhs = sum(h[k // d - 1] * pstar_g2.coefficient(d) for d in table[k])
        if lhs != rhs:
            report.fail(k=k, lhs=str(lhs), rhs=str(rhs))
            break
    if index == 1 and report.status == "pass":
        phi_inv = named_function("phi_inv")
        hi = phi_inv.values(order)
        m_series = g_transforms(z, zeta_series(order)).m
        pstar = pstar_g2
        for k in range(1, order + 1):
            lhs = pstar.coefficient(k)
            rhs = sum(hi[k // d - 1] * d * m_series.coefficient(d) for d in table[k])
            if lhs != rhs:
                report.fail(identity="inverse", k=k, lhs=str(lhs), rhs=str(rhs))
                break
    return report


def example_report_json(report: Report) -> dict:
    """The fixed JSON shape for example reports."""
    first = report.mismatches[0] if report.mismatches else None
    return {
        "example": report.context.get("example"),
        "n": report.context.get("n"),
        "params": report.context.get("params", {}),
        "order": report.context.get("order"),
        "status": report.status,
        "first_mismatch": (
            {"k": first.get("k"), "lhs": first.get("lhs"), "rhs": first.get("rhs")}
            if first
            else None
        ),
    }
