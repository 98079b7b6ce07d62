import random
from fractions import Fraction

import pytest

from pseudoreal.cyclotomic import (
    CycElt,
    GaloisElement,
    euler_phi,
    make_element,
    min_poly,
    same_field,
    units,
)
from pseudoreal.family import ParameterError, validate
from pseudoreal.moebius import INF, Moebius, SpherePoint
from pseudoreal.moduli import (
    RowMatch,
    classify_sigma,
    field_of_moduli,
    row_targets,
    stabilizer,
)


def sample_params(rng, n, k=2):
    """A random admissible parameter pair with rational r^2, or None."""
    q = Fraction(rng.randint(2, 5))
    mu = q * CycElt.zeta(n) ** rng.randint(1, n - 1)
    lam = -(mu * mu.conjugate())
    try:
        return validate(lam, mu, k)
    except ParameterError:
        return None


def test_classify_identity():
    p = validate(-4, make_element("2*z", 3), 2)
    cls = classify_sigma(p, GaloisElement(3, 1))
    assert RowMatch(row=1, sign=1) in cls.matched_rows
    assert cls.witness is not None and cls.witness.is_identity
    assert cls.brute_force_agree


def test_classify_conjugation_is_row_four():
    # sigma_2 on Q(zeta_3) is conjugation: sigma(mu) = conj(mu) = -lambda/mu
    p = validate(-4, make_element("2*z", 3), 2)
    cls = classify_sigma(p, GaloisElement(3, 2))
    assert cls.matched_rows == (RowMatch(row=4, sign=-1),)
    assert cls.sigma_mu == -p.lam / p.mu
    assert cls.witness == Moebius(0, -4, 1, 0)


def test_classify_no_match():
    p = validate(-4, make_element("2*z", 5), 2)
    cls = classify_sigma(p, GaloisElement(5, 2))
    assert cls.matched_rows == ()
    assert cls.witness is None
    # and the brute-force enumeration found nothing either
    assert cls.brute_force_agree
    cls = classify_sigma(p, GaloisElement(5, 3))
    assert cls.matched_rows == ()


def test_classify_eighth_roots():
    p = validate(-4, make_element("2*z", 8), 2)
    got = {}
    for a in units(8):
        cls = classify_sigma(p, GaloisElement(8, a))
        got[a] = cls.matched_rows
        assert cls.witness is not None
    assert got[1] == (RowMatch(1, 1),)
    assert got[3] == (RowMatch(4, 1),)   # sigma_3(mu) = +lambda/mu
    assert got[5] == (RowMatch(1, -1),)  # sigma_5(mu) = -mu
    assert got[7] == (RowMatch(4, -1),)  # conjugation
    # witnesses for rows (4) are z -> -4/z
    for a in (3, 7):
        assert classify_sigma(p, GaloisElement(8, a)).witness == \
            Moebius(0, -4, 1, 0)


def test_conjugation_always_matches_row_four():
    rng = random.Random(41)
    seen = 0
    while seen < 20:
        n = rng.choice((3, 5, 7, 8, 12))
        p = sample_params(rng, n)
        if p is None:
            continue
        seen += 1
        cls = classify_sigma(p, GaloisElement(n, -1))
        rows = {m.row for m in cls.matched_rows}
        assert 4 in rows
        assert cls.sigma_mu == -p.lam / p.mu


def test_real_sigma_lambda_stays_in_first_rows():
    rng = random.Random(43)
    seen = 0
    while seen < 20:
        n = rng.choice((3, 5, 7, 8, 12))
        p = sample_params(rng, n)
        if p is None:
            continue
        seen += 1
        for a in units(n):
            cls = classify_sigma(p, GaloisElement(n, a))
            if cls.sigma_lambda.is_real():
                assert all(m.row <= 4 for m in cls.matched_rows)


def unit_norm_sample():
    """lambda = -(3 + 2 sqrt2), mu = (1 + sqrt2) zeta_8: an admissible pair
    whose lambda has a Galois conjugate equal to 1/lambda, so rows (2) and
    (3) actually occur."""
    lam = make_element("-(3 + 2*(z + z^-1))", 8)
    mu = make_element("(1 + z + z^-1) * z", 8)
    return validate(lam, mu, 2)


def test_unit_norm_sample_hits_rows_two_and_three():
    p = unit_norm_sample()
    rows = {a: classify_sigma(p, GaloisElement(8, a)).matched_rows
            for a in units(8)}
    assert rows[1] == (RowMatch(1, 1),)
    assert rows[3] == (RowMatch(3, 1),)
    assert rows[5] == (RowMatch(2, -1),)
    assert rows[7] == (RowMatch(4, -1),)


def test_row_composition_laws():
    # matching rows compose like (2)(3) -> (4), (2)(4) -> (3), (3)(4) -> (2)
    rng = random.Random(47)
    law = {frozenset((2, 3)): 4, frozenset((2, 4)): 3, frozenset((3, 4)): 2}
    checked = 0
    params = [unit_norm_sample()]
    seen = 0
    while seen < 8:
        n = rng.choice((3, 5, 7, 8, 12))
        p = sample_params(rng, n)
        if p is None:
            continue
        seen += 1
        params.append(p)
    for p in params:
        n = p.conductor
        rows_by_exp = {}
        for a in units(n):
            cls = classify_sigma(p, GaloisElement(n, a))
            rows_by_exp[a] = {m.row for m in cls.matched_rows}
        for a1 in units(n):
            for a2 in units(n):
                for r1 in rows_by_exp[a1]:
                    for r2 in rows_by_exp[a2]:
                        want = law.get(frozenset((r1, r2)))
                        if want is None or r1 == r2:
                            continue
                        prod = (a1 * a2) % n
                        assert want in rows_by_exp[prod], \
                            (n, a1, a2, r1, r2, rows_by_exp)
                        checked += 1
    assert checked > 0


def test_row_targets_witnesses_move_the_set():
    # every row's witness really does map the six points onto the twisted
    # six points when the row's formulas are taken as the twist
    p = validate(-4, make_element("2*z", 5), 2)
    lam, mu = p.lam, p.mu
    src = frozenset((INF, SpherePoint.of(0), SpherePoint.of(1),
                     SpherePoint.of(lam), SpherePoint.of(mu),
                     SpherePoint.of(-mu)))
    for row, sign, want_l, want_m, builder in row_targets(lam, mu):
        t = builder(want_l, want_m)
        tgt = frozenset((INF, SpherePoint.of(0), SpherePoint.of(1),
                         SpherePoint.of(want_l), SpherePoint.of(want_m),
                         SpherePoint.of(-want_m)))
        assert frozenset(t.apply(q) for q in src) == tgt, (row, sign)


def test_stabilizers_of_worked_examples():
    p3 = validate(-4, make_element("2*z", 3), 2)
    assert stabilizer(p3, 3) == frozenset({1, 2})
    p5 = validate(-4, make_element("2*z", 5), 2)
    assert stabilizer(p5, 5) == frozenset({1, 4})
    p8 = validate(-4, make_element("2*z", 8), 2)
    assert stabilizer(p8, 8) == frozenset({1, 3, 5, 7})


def test_field_of_moduli_p3():
    p = validate(-4, make_element("2*z", 3), 2)
    res = field_of_moduli(p, 3)
    assert res.moduli_field.degree == 1
    assert res.min_def_field.degree == 2
    assert res.degree_over_moduli == 2
    assert res.hypothesis_r4_rational and res.hypothesis_no_negation
    assert same_field(res.min_def_field.primitive, CycElt.zeta(3))


def test_field_of_moduli_p5():
    p = validate(-4, make_element("2*z", 5), 2)
    res = field_of_moduli(p, 5)
    assert res.moduli_field.degree == 2
    # the moduli field is the real quadratic field of zeta + zeta^4
    assert same_field(res.moduli_field.primitive,
                      make_element("z + z^4", 5))
    # its minimal polynomial has discriminant 5 times a square
    c0, c1, c2 = res.moduli_field.minpoly
    disc = c1 * c1 - 4 * c2 * c0
    assert disc > 0
    num, den = disc.numerator, disc.denominator
    assert num % 5 == 0
    side = Fraction(num, 5) / den
    assert (side.numerator * side.denominator) == \
        _integer_square(side.numerator * side.denominator)
    assert res.min_def_field.degree == 4
    assert same_field(res.min_def_field.primitive, CycElt.zeta(5))
    assert res.degree_over_moduli == 2
    assert res.hypothesis_r4_rational and res.hypothesis_no_negation


def _integer_square(n):
    r = int(round(n ** 0.5))
    for cand in (r - 1, r, r + 1):
        if cand * cand == n:
            return n
    return None


def test_field_of_moduli_eighth_roots():
    p = validate(-4, make_element("2*z", 8), 2)
    res = field_of_moduli(p, 8)
    assert res.moduli_field.degree == 1
    assert not res.hypothesis_no_negation       # sigma_5(mu) = -mu
    assert res.hypothesis_r4_rational
    assert res.min_def_field.degree == 4
    assert res.degree_over_moduli == 4    # quadratic-extension rule is off
    assert same_field(res.min_def_field.primitive, CycElt.zeta(8))


def test_no_negation_double_entry():
    # minimal-polynomial evaluation and unit enumeration agree on whether
    # some sigma sends mu to -mu
    p5 = validate(-4, make_element("2*z", 5), 2)
    mp = min_poly(p5.mu)
    assert all(p5.mu.galois_apply(a) != -p5.mu for a in units(5))
    from pseudoreal.cyclotomic import poly_eval
    assert not poly_eval(mp, -p5.mu).is_zero()

    p8 = validate(-4, make_element("2*z", 8), 2)
    mp = min_poly(p8.mu)
    assert any(p8.mu.galois_apply(a) == -p8.mu for a in units(8))
    assert poly_eval(mp, -p8.mu).is_zero()


def test_moduli_field_degree_equals_index():
    rng = random.Random(53)
    seen = 0
    while seen < 5:
        n = rng.choice((3, 5, 8, 12))
        p = sample_params(rng, n)
        if p is None:
            continue
        seen += 1
        res = field_of_moduli(p, n)
        assert res.moduli_field.degree == euler_phi(n) // len(res.stabilizer)
        prim = res.moduli_field.primitive
        assert all(prim.galois_apply(a) == prim for a in res.stabilizer)


def test_classify_requires_galois_element():
    p = validate(-4, make_element("2*z", 3), 2)
    with pytest.raises(TypeError):
        classify_sigma(p, 2)
