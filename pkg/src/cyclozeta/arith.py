"""Divisor lattices and classical arithmetic functions, exactly.

Values are Python ints or ``fractions.Fraction``; nothing in this module
(or anywhere else in the package) touches floating point.  Two conventions
used throughout the package live here:

* ``gcd(0, n) == n``, so the index ``k = 0`` behaves like ``k = n`` in every
  divisor sum over ``d | (k, n)``.
* Evaluators produced by :func:`named_function` follow the defining
  descriptions of the functions (brute-force counts and divisor sums); none
  of them rely on multiplicativity shortcuts.

Inputs are desk-scale, so factoring is plain trial division.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping


def as_exact(x):
    """Coerce to an exact coefficient (int or Fraction); demote integral Fractions."""
    if type(x) is int:
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, int):
        return int(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def div_exact(a, b):
    """a / b as an exact rational (never a float)."""
    if b == 1:
        return a
    if b == -1:
        return -a
    if isinstance(a, int) and isinstance(b, int):
        return as_exact(Fraction(a, b))
    return as_exact(Fraction(a) / Fraction(b))


def rational_power(base: int, s: int):
    """base**s for integer s of either sign, exactly."""
    if s >= 0:
        return base**s
    return as_exact(Fraction(1, base ** (-s)))


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, strictly increasing."""
    if n < 1:
        raise ValueError(f"divisors: need a positive integer, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization ``((p, multiplicity), ...)`` by trial division."""
    if n < 1:
        raise ValueError(f"factorize: need a positive integer, got {n}")
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            out.append((p, k))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


@lru_cache(maxsize=None)
def mobius(k: int) -> int:
    """Möbius function: (-1)^(number of primes) on squarefree k, else 0."""
    if k < 1:
        raise ValueError(f"mobius: need a positive integer, got {k}")
    fac = factorize(k)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


@lru_cache(maxsize=None)
def euler_phi(k: int) -> int:
    """Number of 1 <= j <= k with gcd(j, k) = 1, counted directly."""
    if k < 1:
        raise ValueError(f"euler_phi: need a positive integer, got {k}")
    return sum(1 for j in range(1, k + 1) if math.gcd(j, k) == 1)


def jordan_totient(n: int, s: int):
    """Sum of mu(n/d) d**s over d | n; s = 1 gives Euler's totient, s = 0 gives [n == 1]."""
    if n < 1:
        raise ValueError(f"jordan_totient: need a positive integer, got {n}")
    total = 0
    for d in divisors(n):
        mu = mobius(n // d)
        if mu:
            total += mu * rational_power(d, s)
    return as_exact(total)


def ramanujan_sum(m: int, l: int) -> int:
    """Sum of l-th powers of the primitive m-th roots of unity.

    Computed by the closed divisor form sum of d mu(m/d) over d | gcd(l, m),
    with gcd(0, m) = m; always an integer.
    """
    if m < 1:
        raise ValueError(f"ramanujan_sum: need a positive modulus, got {m}")
    g = math.gcd(l, m)
    return sum(d * mobius(m // d) for d in divisors(g))


def integer_nth_root(x: int, r: int) -> int:
    """Floor of the r-th root of x >= 0, integer arithmetic only."""
    if x < 0 or r < 1:
        raise ValueError("integer_nth_root: need x >= 0 and r >= 1")
    if r == 1 or x in (0, 1):
        return x
    if r == 2:
        return math.isqrt(x)
    g = 1 << ((x.bit_length() + r - 1) // r)
    while True:
        ng = ((r - 1) * g + x // g ** (r - 1)) // r
        if ng >= g:
            break
        g = ng
    while g**r > x:
        g -= 1
    return g


def is_rth_power(x: int, r: int) -> bool:
    if x < 1:
        return False
    return integer_nth_root(x, r) ** r == x


def _is_r_free(g: int, r: int) -> bool:
    # no t**r > 1 divides g
    t = 2
    while t**r <= g:
        if g % t**r == 0:
            return False
        t += 1
    return True


class DivisorMap:
    """Exact values indexed by the divisors of a conductor n.

    The key set is exactly the set of positive divisors of n; missing keys in
    :meth:`from_partial` are filled with 0.
    """

    __slots__ = ("n", "values")

    def __init__(self, n: int, values: Mapping[int, object]):
        divs = divisors(n)
        given = {int(k): as_exact(v) for k, v in values.items()}
        if set(given) != set(divs):
            missing = sorted(set(divs) - set(given))
            extra = sorted(set(given) - set(divs))
            raise ValueError(
                f"DivisorMap keys must be exactly the divisors of {n}"
                + (f"; missing {missing}" if missing else "")
                + (f"; non-divisors {extra}" if extra else "")
            )
        self.n = n
        self.values = {d: given[d] for d in divs}

    @classmethod
    def from_partial(cls, n: int, values: Mapping[int, object]) -> "DivisorMap":
        filled = {d: 0 for d in divisors(n)}
        for k, v in values.items():
            k = int(k)
            if k not in filled:
                raise ValueError(f"{k} is not a divisor of {n}")
            filled[k] = as_exact(v)
        return cls(n, filled)

    @classmethod
    def zeros(cls, n: int) -> "DivisorMap":
        return cls(n, {d: 0 for d in divisors(n)})

    def __getitem__(self, d: int):
        return self.values[d]

    def get(self, d: int, default=0):
        return self.values.get(d, default)

    def items(self):
        return self.values.items()

    def map_values(self, fn: Callable) -> "DivisorMap":
        return DivisorMap(self.n, {d: fn(v) for d, v in self.values.items()})

    def __eq__(self, other):
        if not isinstance(other, DivisorMap):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def __hash__(self):
        return hash((self.n, tuple(self.values.items())))

    def __repr__(self):
        body = ",".join(f"{d}:{v}" for d, v in self.values.items())
        return f"DivisorMap(n={self.n}, {{{body}}})"


def mobius_transform(e: DivisorMap) -> DivisorMap:
    """Divisor-sum transform: output(d) = sum of e(d') over d' | d."""
    out = {}
    for d in divisors(e.n):
        out[d] = as_exact(sum(e[dp] for dp in divisors(d)))
    return DivisorMap(e.n, out)


def inverse_mobius_transform(x: DivisorMap) -> DivisorMap:
    """Inverse of :func:`mobius_transform`: output(d) = sum of mu(d/d') x(d')."""
    out = {}
    for d in divisors(x.n):
        total = 0
        for dp in divisors(d):
            mu = mobius(d // dp)
            if mu:
                total += mu * x[dp]
        out[d] = as_exact(total)
    return DivisorMap(x.n, out)


class ArithmeticFunction:
    """A named total map from positive integers to exact rationals."""

    __slots__ = ("name", "params", "_fn")

    def __init__(self, name: str, params: tuple[int, ...], fn: Callable[[int], object]):
        self.name = name
        self.params = params
        self._fn = fn

    def __call__(self, k: int):
        if k < 1:
            raise ValueError(f"{self.name}: need a positive integer, got {k}")
        return self._fn(k)

    def values(self, upto: int) -> list:
        """[f(1), ..., f(upto)]"""
        return [self(k) for k in range(1, upto + 1)]

    def __repr__(self):
        ps = ",".join(map(str, self.params))
        return f"ArithmeticFunction({self.name}{'(' + ps + ')' if ps else ''})"


def _phi_inverse(k: int) -> int:
    # sum of d mu(d) over d | k; Dirichlet inverse of Euler's totient
    return sum(d * mobius(d) for d in divisors(k))


def _liouville(k: int) -> int:
    return -1 if sum(e for _, e in factorize(k)) % 2 else 1


def _dedekind_psi(k: int) -> int:
    # sum of |mu(d)| (k/d) over d | k, i.e. k times the product of (1 + 1/p)
    return sum((k // d) for d in divisors(k) if mobius(d) != 0)


def _klee(k: int, r: int) -> int:
    # count of 1 <= j <= k whose gcd with k has trivial r-th-power part
    return sum(1 for j in range(1, k + 1) if _is_r_free(math.gcd(j, k), r))


def _rho(k: int, r: int) -> int:
    # sum of divisors d of k with k/d an r-th power
    return sum(d for d in divisors(k) if is_rth_power(k // d, r))


def _rho_prime(k: int, r: int) -> int:
    # sum of divisors of k that are r-th powers
    return sum(d for d in divisors(k) if is_rth_power(d, r))


def _beta(k: int) -> int:
    # count of 1 <= j <= k with gcd(j, k) a perfect square
    return sum(1 for j in range(1, k + 1) if is_rth_power(math.gcd(j, k), 2))


def largest_odd_divisor(k: int) -> int:
    if k < 1:
        raise ValueError(f"largest_odd_divisor: need a positive integer, got {k}")
    while k % 2 == 0:
        k //= 2
    return k


def _sigma(k: int) -> int:
    return sum(divisors(k))


_PARAMETRIC = {"klee", "rho", "rho_prime"}

_PLAIN: dict[str, Callable[[int], object]] = {
    "mobius": mobius,
    "euler_phi": euler_phi,
    "phi_inv": _phi_inverse,
    "liouville": _liouville,
    "dedekind_psi": _dedekind_psi,
    "beta": _beta,
    "largest_odd": largest_odd_divisor,
    "sigma": _sigma,
    "abs_mobius": lambda k: abs(mobius(k)),
}


def named_function(name: str, *params: int) -> ArithmeticFunction:
    """Look up a classical arithmetic function by name.

    Plain names: mobius, euler_phi, phi_inv, liouville, dedekind_psi, beta,
    largest_odd, sigma, abs_mobius.  Parametric (one parameter r >= 1):
    klee, rho, rho_prime.
    """
    if name in _PLAIN:
        if params:
            raise ValueError(f"{name} takes no parameters")
        return ArithmeticFunction(name, (), _PLAIN[name])
    if name in _PARAMETRIC:
        if len(params) != 1 or params[0] < 1:
            raise ValueError(f"{name} needs a single parameter r >= 1")
        r = params[0]
        fn = {"klee": _klee, "rho": _rho, "rho_prime": _rho_prime}[name]
        return ArithmeticFunction(name, (r,), lambda k, _r=r, _f=fn: _f(k, _r))
    raise ValueError(f"unknown arithmetic function {name!r}")


def dedekind_psi(k: int) -> int:
    return _dedekind_psi(k)


def liouville(k: int) -> int:
    if k < 1:
        raise ValueError(f"liouville: need a positive integer, got {k}")
    return _liouville(k)


def sigma(k: int) -> int:
    if k < 1:
        raise ValueError(f"sigma: need a positive integer, got {k}")
    return _sigma(k)
