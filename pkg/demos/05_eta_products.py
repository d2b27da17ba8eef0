"""Expanding the logarithmic derivative of an eta-style infinite product.

For exponents e on the divisors of n, the product over k of the cyclotomic
product at q^k generalizes the Euler-product skeleton of the Dedekind eta
function; its q d/dq log expansion is an exact integer series.
"""

from cyclozeta import ZetaProduct, catalog, eta_log_derivative, lambert_series
from cyclozeta.etaprod import check_eta_forms

# The single factor (1 - q^k) over all k: the classical case, whose
# log-derivative coefficients are (minus) the divisor sums sigma(m).
z1 = ZetaProduct(1, {1: 1})
exp = eta_log_derivative(z1, 16)
print("single-factor expansion:", list(exp.series.coeffs))
print("sigma series:           ", list(lambert_series(16).coeffs))

# A parabolic catalog entry: all four computed forms at once.
z = catalog.get("J_10").zeta_product()
exp = eta_log_derivative(z, 20)
print("\nparabolic entry", z.to_text())
print("direct:          ", list(exp.series.coeffs)[:12])
print("lambert form:    ", list(exp.lambert_form.coeffs)[:12])
print("cyclotomic form: ", list(exp.cyclotomic_form.coeffs)[:12])
print("ramanujan form:  ", list(exp.ramanujan_form.coeffs)[:12])

report = check_eta_forms(z, 100)
print("\nverdict:", report.status)
for flag in report.flags:
    print("flag:", flag)
for note in report.notes:
    print("note:", note)
