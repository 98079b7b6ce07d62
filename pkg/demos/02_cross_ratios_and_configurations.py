#!/usr/bin/env python3
"""Cross-ratios, generalized circles, and six-point configuration
combinatorics: orbits, equivalence witnesses, and symmetry groups."""

from fractions import Fraction

from pseudoreal.cyclotomic import CycElt, make_element
from pseudoreal.moebius import INF, cross_ratio, g_orbit
from pseudoreal.configurations import (
    concircular_quadruples,
    equivalent,
    make_config,
    symmetries,
    u_orbit,
)

# The cross-ratio [a,b,c,d] is T(d) for the Moebius map with T(a) = inf,
# T(b) = 0, T(c) = 1; four points lie on a generalized circle iff it is
# real.  Permuting the points moves the value around a six-element orbit.
print("== cross-ratios ==")
mu = make_element("2*z", 3)
print("[inf, 0, 1, -4]      =", cross_ratio(INF, 0, 1, -4))
print("[inf, 0, mu, -mu]    =", cross_ratio(INF, 0, mu, -mu))
print("[1, -4, mu, -mu]     =", cross_ratio(1, -4, mu, -mu))
print("orbit of -7/3        =",
      [str(v) for v in g_orbit(CycElt.from_rational(Fraction(-7, 3)))])

# The configuration behind the (r, theta) = (2, 2pi/3) curve: exactly
# three of the fifteen four-point subsets lie on a circle.
print("\n== concircular quadruples ==")
cfg = make_config(-4, mu, -mu)
for quad in concircular_quadruples(cfg):
    print("  circle through:", ", ".join(str(p) for p in quad))

# Its symmetry group: no conformal maps beyond the identity, and exactly
# one anticonformal map z -> -4/conj(z), whose square is the identity.
print("\n== symmetries ==")
sym = symmetries(cfg)
print("conformal:     ", [str(m) for m in sym.conformal])
print("anticonformal: ", [str(m) for m in sym.anticonformal])
print("squares are identity:",
      [m.is_identity for m in sym.anticonformal_squares])

# Relabeling orbit: generically 720 triples; symmetric configurations
# have smaller orbits, and orbit size times symmetry order is always 720.
print("\n== relabeling orbits ==")
generic = make_config(2, 3, 5)
print("orbit size of (2, 3, 5):", len(u_orbit(generic)))
harmonic = make_config(-1, 2, CycElt.from_rational(Fraction(1, 2)))
orbit = u_orbit(harmonic)
syms = symmetries(harmonic)
print(f"orbit of (-1, 2, 1/2): {len(orbit)} triples x "
      f"{len(syms.conformal)} symmetries = {len(orbit) * len(syms.conformal)}")

# Equivalence with an explicit witness.
print("\n== equivalence witnesses ==")
w = equivalent(generic, make_config(Fraction(1, 2), Fraction(1, 3),
                                    Fraction(1, 5)))
print("(2,3,5) ~ (1/2,1/3,1/5) via:", w)
print("no map to (2,3,7):",
      equivalent(generic, make_config(2, 3, 7)) is None)
