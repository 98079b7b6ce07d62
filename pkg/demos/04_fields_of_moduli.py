#!/usr/bin/env python3
"""Galois classification against the twelve-row table and the field of
moduli / minimal field of definition of three worked parameter sets."""

from pseudoreal.cyclotomic import (
    CycElt,
    GaloisElement,
    fixing_subgroup,
    format_poly,
    make_element,
    same_field,
    units,
)
from pseudoreal.family import validate
from pseudoreal.moduli import classify_sigma, field_of_moduli, stabilizer

# Each Galois element either matches one of twelve closed-form shapes
# (with an explicit Moebius witness) or moves the configuration class;
# a brute-force enumeration double-checks every verdict.
print("== classification at r = 2, theta = 2pi/5 ==")
p5 = validate(-4, make_element("2*z", 5), 2)
for a in units(5):
    cls = classify_sigma(p5, GaloisElement(5, a))
    rows = ", ".join(str(m) for m in cls.matched_rows) or "no match"
    print(f"sigma: zeta -> zeta^{a}:  {rows}"
          + (f"   witness {cls.witness}" if cls.witness else ""))

# theta = 2pi/3: every Galois element preserves the class, so the field
# of moduli is Q; the minimal field of definition is Q(zeta_3).
print("\n== r = 2, theta = 2pi/3 ==")
p3 = validate(-4, make_element("2*z", 3), 2)
res = field_of_moduli(p3, 3)
print("stabilizer:", sorted(res.stabilizer))
print("moduli field degree:", res.moduli_field.degree)
print("minimal definition field minpoly:",
      format_poly(res.min_def_field.minpoly))
print("degree over moduli:", res.degree_over_moduli)

# theta = 2pi/5: the moduli field is the real quadratic field Q(sqrt5).
print("\n== r = 2, theta = 2pi/5 ==")
res = field_of_moduli(p5, 5)
print("stabilizer:", sorted(res.stabilizer))
print("moduli field:", res.moduli_field)
print("generates the same field as zeta + zeta^4:",
      same_field(res.moduli_field.primitive, make_element("z + z^4", 5)))
print("minimal definition field degree:", res.min_def_field.degree,
      "(all of Q(zeta_5)); degree over moduli:", res.degree_over_moduli)

# theta = pi/4: some sigma sends mu to -mu, the quadratic-extension
# rule does not apply, and the definition field has degree 4 over the
# (rational) moduli field.
print("\n== r = 2, theta = pi/4 ==")
p8 = validate(-4, make_element("2*z", 8), 2)
res = field_of_moduli(p8, 8)
print("stabilizer:", sorted(res.stabilizer))
print("moduli field degree:", res.moduli_field.degree)
print("hypothesis r^4 rational:", res.hypothesis_r4_rational)
print("hypothesis no sigma(mu) = -mu:", res.hypothesis_no_negation)
print("degree over moduli:", res.degree_over_moduli)

# A field-equality check inside Q(zeta_40): the radical i sqrt(5+sqrt5)
# equals sqrt2 (zeta_5 - zeta_5^4) and generates a degree-4 field that is
# NOT Q(zeta_5).
print("\n== comparing fields by fixed subgroups ==")
sqrt2 = CycElt.zeta(8) + CycElt.zeta(8) ** 7
radical = sqrt2 * (CycElt.zeta(5) - CycElt.zeta(5) ** 4)
deg = len(units(40)) // len(fixing_subgroup(radical, 40))
print("degree of Q(i sqrt(5+sqrt5)):", deg)
print("equals Q(zeta_5):", same_field(radical, CycElt.zeta(5), 40))
