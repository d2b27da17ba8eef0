"""Dirichlet-series algebra and one worked convolution identity.

Everything is coefficientwise and exact: series are truncated coefficient
vectors, multiplication is divisor convolution, and the zeta series is just
the all-ones vector.
"""

from cyclozeta import ZetaProduct, g_transforms, mobius_series, zeta_series
from cyclozeta.arith import named_function
from cyclozeta.dirichlet import check_transfer, convolution_example, example_report_json

N = 60
zs = zeta_series(N)
mu = mobius_series(N)

print("zeta * mobius has coefficients", (zs * mu).coeffs[:8], "... (the unit)")
print("zeta * zeta counts divisors:   ", (zs * zs).coeffs[:12])
print("shift realizes s -> s-1:       ", zs.shift().coeffs[:8])
print("stretch(2) realizes s -> 2s:   ", zs.stretch(2).coeffs[:10])

# The Euler totient series is zeta(s-1)/zeta(s), coefficient by coefficient.
phi = named_function("euler_phi")
print("\nzeta(s-1)/zeta(s) equals the totient series:",
      zs.shift() * mu == type(zs)(phi.values(N)))

# Attach a product and transfer between its generalized transforms.
z = ZetaProduct(6, {1: -1, 2: 0, 3: 1, 6: 1})
t = g_transforms(z, zs)
print("\nfirst coefficients of m_G: ", t.m.coeffs[:12])
print("first coefficients of p*_G:", t.pstar.coeffs[:12])
print("transfer identity:", check_transfer(z, zs, zs).status)

# Worked identity 4: the Klee totient convolves p*_G2 back to k m(k).
report = convolution_example(4, z, r=2, order=N)
print("\nKlee-totient convolution example:", example_report_json(report))
