"""From quasihomogeneous weights to root data and back.

The weight system (15, 10, 6; 30) belongs to x^2 + y^3 + z^5; its spectral
polynomial is supported exactly on the eight root exponents of the largest
exceptional reflection group, and its divisor lines match the stored catalog
entry.  Seifert invariants {g = 0, (2, 3, 5)} rebuild the same product.
"""

from cyclozeta import catalog
from cyclozeta.weights import (
    SeifertData,
    WeightSystem,
    char_poly_from_seifert,
    check_seifert_lines,
    check_weight_consistency,
    m_gf_from_weights,
    p_gf_from_weights,
    spectral_gf,
    spectral_mod,
)

w = WeightSystem.parse("15,10,6;30")
spec = spectral_gf(w)
print("weights:", w)
print("spectral polynomial:", spec)
print("exponents:", [k for k, c in enumerate(spec.coeffs) if c])
print("multiplicity (coefficient sum):", sum(spec.coeffs))

rf, line = m_gf_from_weights(w)
print("\nm-line divisor coefficients:", {d: v for d, v in line.items() if v})
print("catalog E_8 m-line:         ", catalog.get("E_8").m_line)
print("p-line function:", p_gf_from_weights(w))
print("internal consistency:", check_weight_consistency(w).status)

# The cubic cone: three equal weights, conductor three.
cone = WeightSystem(1, 1, 1, 3)
print("\ncubic cone spectral polynomial:", spectral_gf(cone))
print("reduced mod q^3 - 1:           ", spectral_mod(cone))
print("m-line:", {d: v for d, v in m_gf_from_weights(cone)[1].items() if v})

# Seifert data gives the same exceptional product.
sd = SeifertData.parse("0; 2/1,3/1,5/1")
rf, z = char_poly_from_seifert(w, sd)
print("\nSeifert data:", sd)
print("exponent vector:", dict(z.e.items()))
print("matches the catalog entry:", z == catalog.get("E_8").zeta_product())
print("all four displayed line forms:", check_seifert_lines(w, sd).status)
