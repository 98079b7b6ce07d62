#!/usr/bin/env python3
"""Exact arithmetic in Q(zeta_n): parsing, Galois action, signs, minimal
polynomials, fixed fields, and certified enclosures."""

from pseudoreal.cyclotomic import (
    CycElt,
    approx,
    fixed_field,
    format_poly,
    make_element,
    min_poly,
    real_sign,
    same_field,
    units,
)

# Elements are written in a tiny expression language; `z` is zeta_n.
print("== parsing and canonical forms ==")
e = make_element("z + z^2", 3)
print("z + z^2 in Q(zeta_3)          ->", e, "   (the classic -1)")
print("(1+z)*(1-z) in Q(zeta_8)      ->", make_element("(1+z)*(1-z)", 8))
mu = make_element("2*z", 5)
print("mu = 2*z in Q(zeta_5), |mu|^2 ->", mu * mu.conjugate())

# The Galois action substitutes zeta -> zeta^a for units a mod n.
print("\n== Galois action ==")
eta = CycElt.zeta(16)
print("eta = zeta_16, eta -> eta^3 image:", eta.galois_apply(3))
omega = eta ** 2
print("omega = eta^2 maps to omega^3:",
      omega.galois_apply(3) == omega ** 3)
print("units mod 16:", units(16))

# Signs of real elements are decided exactly: symbolic zero test first,
# then interval refinement until zero is excluded.
print("\n== exact signs of real numbers ==")
golden = make_element("z + z^4", 5)   # 2 cos(72 deg) = (sqrt5 - 1)/2
print("sign(zeta_5 + zeta_5^4) =", real_sign(golden))
print("sign(z^2 + z^3 @5)      =", real_sign(make_element("z^2 + z^3", 5)))
print("sign(0)                 =", real_sign(CycElt.zero(5)))

# Minimal polynomials come from the Galois orbit.
print("\n== minimal polynomials ==")
print("minpoly(zeta_3)   =", format_poly(min_poly(CycElt.zeta(3))))
print("minpoly(2 zeta_3) =", format_poly(min_poly(make_element("2*z", 3))))
print("minpoly(z + z^4)  =", format_poly(min_poly(golden)))

# Fixed fields of subgroups of (Z/n)* with explicit primitive elements.
print("\n== fixed fields ==")
sf = fixed_field({1, 4}, 5)
print("fixed field of {1,4} <= (Z/5)*:", sf)
print("it is the real quadratic field of z + z^4:",
      same_field(sf.primitive, golden))
whole = fixed_field(units(3), 3)
print("fixed field of all of (Z/3)*: degree", whole.degree, "(that is Q)")

# Certified complex enclosures: a box of width <= 2^-bits.
print("\n== certified enclosures ==")
print("2 zeta_5 ~", approx(mu, 48))
print("zeta_4   ~", approx(CycElt.zeta(4), 48))
