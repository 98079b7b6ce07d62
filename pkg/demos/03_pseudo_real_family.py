#!/usr/bin/env python3
"""The two-parameter family of curves branched over six points: exact
parameter validation, genus, and the pseudo-reality verdict."""

from pseudoreal.cyclotomic import make_element
from pseudoreal.family import ParameterError, analyze, genus, validate

# Parameters are the pair (lambda, mu) = (-r^2, r e^(i theta)) plus an
# even exponent k.  Everything is validated exactly, without square roots.
print("== validation ==")
p = validate(-4, make_element("2*z", 3), 2)
print("accepted:", p)

rejects = [
    ("mu real (theta = 0)", -4, make_element("2", 3), 2),
    ("mu imaginary (theta = pi/2)", -4, make_element("2*z", 4), 2),
    ("odd exponent", -4, make_element("2*z", 3), 3),
    ("wrong modulus", -5, make_element("2*z", 3), 2),
]
for label, lam, mu, k in rejects:
    try:
        validate(lam, mu, k)
    except ParameterError as err:
        print(f"rejected ({label}): clause={err.clause}")

# The excluded critical radius, exactly: at theta = pi/3 the bad value of
# lambda is -(3 + sqrt5)/2, built here from zeta_5 + zeta_5^4 in Q(zeta_30).
print("\n== the critical radius ==")
lam = make_element("-(2 + z^6 + z^24)", 30)
mu = make_element("(1 + z^6 + z^24) * z^5", 30)
try:
    validate(lam, mu, 2)
except ParameterError as err:
    print(f"lambda = -(3+sqrt5)/2 at theta = pi/3: clause={err.clause}")

# Genus grows quickly with the exponent.
print("\n== genus ==")
for k in (2, 4, 6):
    print(f"k = {k}: genus {genus(k)}")

# The analysis report: trivial conformal symmetry group, a unique
# anticonformal symmetry, and the obstruction that makes the curve
# pseudo-real (no anticonformal involution upstairs).
print("\n== analysis ==")
rep = analyze(p)
print("conformal group trivial:", rep.aut_trivial)
print("anticonformal symmetry:", str(rep.anti_symmetries[0]))
print("pseudo-real:", rep.pseudo_real)
print("scale constraints (k-th powers):",
      {f"alpha{i}": str(v) for i, v in sorted(rep.alpha_constraints.items())})
print("obstruction:", rep.obstruction)
