"""Exact univariate algebra in q: polynomials, rational functions, series.

Coefficients are ints or ``fractions.Fraction``; integral values are kept as
ints so the common integer-coefficient paths stay fast.  Polynomials are
dense tuples with trailing zeros stripped (the zero polynomial is the empty
tuple).  Rational functions are kept reduced with a monic denominator.
Power series are truncated hard at their stated order; mixed-order
arithmetic truncates to the minimum rather than extending precision.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .arith import as_exact, div_exact, divisors, mobius


class ExactDivisionError(ArithmeticError):
    """Polynomial division left a remainder where none was allowed."""


# ---------------------------------------------------------------------------
# raw dense-list kernels


def _trim(cs: list) -> list:
    while cs and not cs[-1]:
        cs.pop()
    return cs


def _add(a: Sequence, b: Sequence) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _neg(a: Sequence) -> list:
    return [-c for c in a]


def _mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return _trim(out)


def _scale(a: Sequence, c) -> list:
    if not c:
        return []
    return _trim([ai * c for ai in a])


def _divmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(r) <= db:
        return [], _trim(r)
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            c = div_exact(c, lb)
            q[i - db] = c
            r[i] = 0
            for j in range(db):
                r[i - db + j] -= c * b[j]
    return _trim(q), _trim(r)


def _pow(a: Sequence, k: int) -> list:
    if k < 0:
        raise ValueError("negative polynomial power")
    out = [1]
    base = list(a)
    while k:
        if k & 1:
            out = _mul(out, base)
        k >>= 1
        if k:
            base = _mul(base, base)
    return out


class PolynomialQ:
    """Dense polynomial in q with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of q**i; trailing zeros are stripped and
    the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_exact(c) for c in coeffs]
        self.coeffs = tuple(_trim(cs))

    @staticmethod
    def _raw(cs: list) -> "PolynomialQ":
        p = PolynomialQ.__new__(PolynomialQ)
        p.coeffs = tuple(cs)
        return p

    @classmethod
    def constant(cls, c) -> "PolynomialQ":
        c = as_exact(c)
        return cls._raw([c] if c else [])

    @classmethod
    def monomial(cls, k: int, c=1) -> "PolynomialQ":
        c = as_exact(c)
        if not c:
            return cls._raw([])
        return cls._raw([0] * k + [c])

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def valuation(self) -> int:
        """Index of the lowest nonzero coefficient (0 for the zero polynomial)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, PolynomialQ):
            return other
        if isinstance(other, (int, Fraction)):
            return PolynomialQ.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PolynomialQ._raw(_add(self.coeffs, o.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PolynomialQ._raw(_add(self.coeffs, _neg(o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PolynomialQ._raw(_add(o.coeffs, _neg(self.coeffs)))

    def __neg__(self):
        return PolynomialQ._raw(_neg(self.coeffs))

    def __mul__(self, other):
        if isinstance(other, PolynomialQ):
            return PolynomialQ._raw(_mul(self.coeffs, other.coeffs))
        if isinstance(other, (int, Fraction)):
            return PolynomialQ._raw(_scale(self.coeffs, as_exact(other)))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return PolynomialQ._raw(_pow(self.coeffs, k))

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        q, r = _divmod(self.coeffs, o.coeffs)
        return PolynomialQ._raw(q), PolynomialQ._raw(r)

    def exact_div(self, other) -> "PolynomialQ":
        """Divide exactly; raise :class:`ExactDivisionError` on a remainder."""
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ExactDivisionError(f"{self} is not divisible by {other}")
        return q

    def derivative(self) -> "PolynomialQ":
        return PolynomialQ._raw(_trim([i * c for i, c in enumerate(self.coeffs)][1:]))

    def substitute_power(self, m: int) -> "PolynomialQ":
        """q -> q**m."""
        if m < 1:
            raise ValueError("substitute_power: need m >= 1")
        if self.is_zero or m == 1:
            return self
        out = [0] * (self.degree * m + 1)
        for i, c in enumerate(self.coeffs):
            if c:
                out[i * m] = c
        return PolynomialQ._raw(out)

    def __call__(self, x):
        """Exact evaluation by Horner's rule."""
        x = as_exact(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return as_exact(acc)

    # -- comparison / display ------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, PolynomialQ):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == PolynomialQ.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if i == 0:
                body = f"{mag}"
            else:
                var = "q" if i == 1 else f"q^{i}"
                body = var if mag == 1 else (f"{mag}*{var}" if isinstance(mag, Fraction) else f"{mag}{var}")
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"PolynomialQ({self})"


ZERO = PolynomialQ()
ONE = PolynomialQ.constant(1)
Q = PolynomialQ.monomial(1)


def geometric(d: int, n: int) -> PolynomialQ:
    """(1 - q**n) / (1 - q**d) = 1 + q**d + ... + q**(n-d), for d | n."""
    if n % d:
        raise ValueError(f"geometric: {d} does not divide {n}")
    out = [0] * (n - d + 1)
    for i in range(0, n, d):
        out[i] = 1
    return PolynomialQ._raw(out)


def q_integer(m: int) -> PolynomialQ:
    """1 + q + ... + q**(m-1)."""
    return PolynomialQ._raw([1] * m)


# ---------------------------------------------------------------------------
# gcd over the rationals (primitive remainder sequence on integer clears)


def _int_clear(p: PolynomialQ) -> list[int]:
    """Scale to integer coefficients and divide out the content."""
    den = 1
    for c in p.coeffs:
        if isinstance(c, Fraction):
            den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    if g > 1:
        ints = [c // g for c in ints]
    return ints


def poly_gcd(a: PolynomialQ, b: PolynomialQ) -> PolynomialQ:
    """Monic greatest common divisor, via a primitive PRS over the integers."""
    if a.is_zero and b.is_zero:
        return ZERO
    if a.is_zero:
        return _make_monic(b)
    if b.is_zero:
        return _make_monic(a)
    A, B = _int_clear(a), _int_clear(b)
    if len(A) < len(B):
        A, B = B, A
    while B:
        A, B = B, _primitive(_pseudo_rem(A, B))
    return _make_monic(PolynomialQ(A))


def _pseudo_rem(A: list[int], B: list[int]) -> list[int]:
    # lb**(deg A - deg B + 1) * A mod B, all integer
    r = list(A)
    db = len(B) - 1
    lb = B[-1]
    while len(r) - 1 >= db and r:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [lb * x for x in r]
        for j in range(len(B)):
            r[shift + j] -= c * B[j]
        r = _trim(r)
    return r


def _primitive(p: list[int]) -> list[int]:
    g = 0
    for c in p:
        g = math.gcd(g, c)
    if g > 1:
        p = [c // g for c in p]
    return p


def _make_monic(p: PolynomialQ) -> PolynomialQ:
    if p.is_zero or p.is_monic:
        return p
    inv = div_exact(1, p.leading)
    return p * inv


# ---------------------------------------------------------------------------
# unreduced fraction bookkeeping (fast identity checks without gcds)


def combine_fractions(terms) -> tuple[PolynomialQ, PolynomialQ]:
    """Sum (num, den) pairs of polynomials without reducing.

    Returns the pair (sum numerator, product denominator); callers compare
    results with :func:`fractions_equal`, which never needs a gcd.
    """
    num, den = ZERO, ONE
    for tn, td in terms:
        num = num * td + tn * den
        den = den * td
    if den.is_zero:
        raise ZeroDivisionError("zero denominator in fraction combination")
    return num, den


def fractions_equal(a: tuple[PolynomialQ, PolynomialQ], b: tuple[PolynomialQ, PolynomialQ]) -> bool:
    """a[0]/a[1] == b[0]/b[1] by cross-multiplication."""
    return a[0] * b[1] == b[0] * a[1]


# ---------------------------------------------------------------------------
# rational functions


class RationalFunctionQ:
    """Quotient of two polynomials in lowest terms with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE, *, _normalized=False):
        if not isinstance(num, PolynomialQ):
            num = PolynomialQ.constant(num) if isinstance(num, (int, Fraction)) else num
        if not isinstance(den, PolynomialQ):
            den = PolynomialQ.constant(den) if isinstance(den, (int, Fraction)) else den
        if not isinstance(num, PolynomialQ) or not isinstance(den, PolynomialQ):
            raise TypeError("RationalFunctionQ needs polynomial or rational arguments")
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            self.num, self.den = ZERO, ONE
            return
        if not _normalized:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
            if not den.is_monic:
                inv = div_exact(1, den.leading)
                num = num * inv
                den = den * inv
        self.num = num
        self.den = den

    @classmethod
    def from_value(cls, x) -> "RationalFunctionQ":
        if isinstance(x, RationalFunctionQ):
            return x
        if isinstance(x, PolynomialQ):
            return cls(x, ONE, _normalized=True)
        return cls(PolynomialQ.constant(x), ONE, _normalized=True)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den == ONE

    def as_polynomial(self) -> PolynomialQ:
        if not self.is_polynomial:
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def _coerce(self, other):
        if isinstance(other, RationalFunctionQ):
            return other
        if isinstance(other, (PolynomialQ, int, Fraction)):
            return RationalFunctionQ.from_value(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunctionQ(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunctionQ(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return RationalFunctionQ(-self.num, self.den, _normalized=True)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunctionQ(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunctionQ(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if k >= 0:
            return RationalFunctionQ(self.num**k, self.den**k, _normalized=True)
        if self.is_zero:
            raise ZeroDivisionError("negative power of zero")
        return RationalFunctionQ(self.den ** (-k), self.num ** (-k))

    def derivative(self) -> "RationalFunctionQ":
        return RationalFunctionQ(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at q = {x}")
        return div_exact(self.num(x), d)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.is_polynomial:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RationalFunctionQ({self})"


RF_ZERO = RationalFunctionQ(ZERO, ONE, _normalized=True)
RF_ONE = RationalFunctionQ(ONE, ONE, _normalized=True)


def log_derivative(f) -> RationalFunctionQ:
    """q f'(q) / f(q), reduced; additive over products."""
    f = RationalFunctionQ.from_value(f)
    if f.is_zero:
        raise ValueError("log_derivative of the zero function")
    num = Q * (f.num.derivative() * f.den - f.num * f.den.derivative())
    return RationalFunctionQ(num, f.num * f.den)


# ---------------------------------------------------------------------------
# truncated power series


class PowerSeriesQ:
    """Power series truncated at a fixed order: coefficients of q^0..q^(order-1)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable = (), order: int | None = None):
        cs = [as_exact(c) for c in coeffs]
        if order is None:
            order = len(cs)
        if order < 1:
            raise ValueError("PowerSeriesQ: order must be at least 1")
        if len(cs) < order:
            cs += [0] * (order - len(cs))
        else:
            cs = cs[:order]
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, order: int) -> "PowerSeriesQ":
        return cls((), order)

    @classmethod
    def from_polynomial(cls, p: PolynomialQ, order: int) -> "PowerSeriesQ":
        return cls(p.coeffs, order)

    def coefficient(self, k: int):
        if not 0 <= k < self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def truncate(self, order: int) -> "PowerSeriesQ":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return PowerSeriesQ(self.coeffs[:order], order)

    def _common(self, other: "PowerSeriesQ") -> int:
        return min(self.order, other.order)

    def __add__(self, other):
        if isinstance(other, PowerSeriesQ):
            n = self._common(other)
            return PowerSeriesQ([a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])], n)
        if isinstance(other, (int, Fraction)):
            cs = list(self.coeffs)
            cs[0] += other
            return PowerSeriesQ(cs, self.order)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return PowerSeriesQ([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        if isinstance(other, (PowerSeriesQ, int, Fraction)):
            return self + (-other if isinstance(other, PowerSeriesQ) else -as_exact(other))
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PowerSeriesQ):
            n = self._common(other)
            out = [0] * n
            for i, a in enumerate(self.coeffs[:n]):
                if a:
                    for j in range(n - i):
                        b = other.coeffs[j]
                        if b:
                            out[i + j] += a * b
            return PowerSeriesQ(out, n)
        if isinstance(other, (int, Fraction)):
            return PowerSeriesQ([c * other for c in self.coeffs], self.order)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PowerSeriesQ):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order > 8 else ""
        return f"PowerSeriesQ([{head}{tail}], order={self.order})"


def expand_fraction(num: PolynomialQ, den: PolynomialQ, order: int) -> PowerSeriesQ:
    """Maclaurin expansion of num/den (no reduction required of the pair)."""
    dc = den.coeffs
    nc = num.coeffs
    if not dc or dc[0] == 0:
        raise ValueError("expand: denominator vanishes at q = 0")
    d0 = dc[0]
    out = [0] * order
    for k in range(order):
        acc = nc[k] if k < len(nc) else 0
        top = min(k, len(dc) - 1)
        for j in range(1, top + 1):
            c = dc[j]
            if c:
                acc -= c * out[k - j]
        out[k] = div_exact(acc, d0)
    return PowerSeriesQ(out, order)


def expand(f, order: int) -> PowerSeriesQ:
    """First ``order`` Maclaurin coefficients of a rational function, exactly."""
    f = RationalFunctionQ.from_value(f)
    return expand_fraction(f.num, f.den, order)


# ---------------------------------------------------------------------------
# cyclotomic and necklace polynomials


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> PolynomialQ:
    """n-th cyclotomic polynomial, by the Möbius product over q**d - 1.

    Exact rational-function evaluation of the product; an inexact division
    here would indicate an arithmetic bug, so it raises.
    """
    if n < 1:
        raise ValueError(f"cyclotomic: need a positive integer, got {n}")
    num, den = ONE, ONE
    for d in divisors(n):
        mu = mobius(n // d)
        if mu == 0:
            continue
        f = PolynomialQ.monomial(d) - 1
        if mu == 1:
            num = num * f
        else:
            den = den * f
    return num.exact_div(den)


@lru_cache(maxsize=None)
def necklace(d: int) -> PolynomialQ:
    """Necklace polynomial (1/d) * sum of mu(d/d') q**d' over d' | d."""
    if d < 1:
        raise ValueError(f"necklace: need a positive integer, got {d}")
    acc = ZERO
    for dp in divisors(d):
        mu = mobius(d // dp)
        if mu:
            acc = acc + PolynomialQ.monomial(dp, mu)
    return acc * Fraction(1, d)


# ---------------------------------------------------------------------------
# tensor product of polynomials through resultants


def _det(rows: list[list]) -> object:
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    n = len(rows)
    det = 1
    for col in range(n):
        piv = None
        for r in range(col, n):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        pv = rows[col][col]
        det = det * pv
        for r in range(col + 1, n):
            c = rows[r][col]
            if c:
                factor = div_exact(c, pv)
                row = rows[r]
                top = rows[col]
                for j in range(col, n):
                    row[j] -= factor * top[j]
    return as_exact(det)


def _interpolate(xs: list, ys: list) -> PolynomialQ:
    """Newton-form interpolation through exact points."""
    n = len(xs)
    coef = [as_exact(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = div_exact(coef[i] - coef[i - 1], xs[i] - xs[i - j])
    poly = ZERO
    for i in range(n - 1, -1, -1):
        poly = poly * (Q - xs[i]) + coef[i]
    return poly


def resultant_in_q(a_rows: list[PolynomialQ], b_coeffs: list) -> PolynomialQ:
    """Resultant in t of A(t) (polynomial coefficients in q) and B(t) (constants).

    A is given low-to-high as ``a_rows``; B low-to-high as rational constants.
    Computed by evaluating the Sylvester determinant at enough rational points
    and interpolating, which stays exact.
    """
    A = list(a_rows)
    while A and A[-1].is_zero:
        A.pop()
    B = _trim([as_exact(c) for c in b_coeffs])
    if not A or not B:
        raise ValueError("resultant of a zero polynomial")
    alpha, beta = len(A) - 1, len(B) - 1
    if alpha == 0 and beta == 0:
        return ONE
    bound = beta * max(p.degree for p in A) + 1
    dim = alpha + beta
    xs = []
    k = 0
    while len(xs) < bound + 1:
        xs.append(k)
        if k > 0:
            xs.append(-k)
        k += 1
    xs = xs[: bound + 1]
    a_high = A[::-1]  # high-to-low rows of A
    b_high = B[::-1]
    ys = []
    for x in xs:
        a_vals = [p(x) for p in a_high]
        rows = []
        for i in range(beta):
            rows.append([0] * i + a_vals + [0] * (dim - i - len(a_vals)))
        for i in range(alpha):
            rows.append([0] * i + list(b_high) + [0] * (dim - i - len(b_high)))
        ys.append(_det(rows))
    return _interpolate(xs, ys)


def tensor_product(f: PolynomialQ, g: PolynomialQ) -> PolynomialQ:
    """Polynomial whose roots are the pairwise products of the roots of f and g.

    Computed exactly as the resultant in t of t**deg(f) f(q/t) and g(t);
    the result is normalized to be monic whenever both inputs are monic and
    has degree deg(f) * deg(g).
    """
    if f.is_zero or g.is_zero:
        raise ValueError("tensor_product: zero polynomial has no root data")
    m = f.degree
    rows = [PolynomialQ.monomial(m - j, f.coeffs[m - j]) for j in range(m + 1)]
    res = resultant_in_q(rows, list(g.coeffs))
    if res.degree != f.degree * g.degree:
        raise ArithmeticError(
            f"tensor product degree {res.degree} != {f.degree * g.degree}; arithmetic bug"
        )
    if f.is_monic and g.is_monic and not res.is_monic:
        res = res * div_exact(1, res.leading)
    return res
