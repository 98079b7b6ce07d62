import itertools

import pytest

from pseudoreal.cyclotomic import CycElt, GaloisElement, make_element
from pseudoreal.family import validate
from pseudoreal.moebius import Moebius
from pseudoreal.descent import (
    MonomialIso,
    WeilDatum,
    cocycle_check,
    compose_twist,
    curve_rows,
    extend_cyclic,
    lift_to_monomial,
    transports_curve,
)


def pi4_params(m=16):
    """r = 2, theta = pi/4 inside Q(zeta_m): mu = 2 zeta_8."""
    if m == 16:
        return validate(-4, make_element("2*z^2", 16), 2)
    if m == 8:
        return validate(-4, make_element("2*z", 8), 2)
    raise ValueError(m)


def swap_iso(s2=1, s4=1):
    """The coordinate-swap isomorphism with scales
    (1, +-2i, 1, +-2i, sqrt2 w^(3/2), i sqrt2 w^(3/2)) over Q(zeta_16)."""
    i16 = make_element("z^4", 16)
    s5 = make_element("z + z^5", 16)
    return MonomialIso((1, 0, 3, 2, 4, 5),
                       [1, s2 * 2 * i16, 1, s4 * 2 * i16, s5, i16 * s5], 2)


def test_monomial_iso_projective_equality():
    f = MonomialIso(range(6), [2, 2, 2, 2, 2, 2], 2)
    assert f.is_identity
    g = MonomialIso((1, 0, 2, 3, 4, 5), [3, 6, 3, 3, 3, 3], 4)
    h = MonomialIso((1, 0, 2, 3, 4, 5), [1, 2, 1, 1, 1, 1], 4)
    assert g == h
    with pytest.raises(ValueError):
        MonomialIso(range(6), [0, 1, 1, 1, 1, 1], 2)
    with pytest.raises(ValueError):
        MonomialIso((0, 0, 2, 3, 4, 5), [1] * 6, 2)


def test_monomial_iso_composition():
    f = swap_iso()
    ident = MonomialIso.identity(2)
    assert f.compose(ident) == f
    assert ident.compose(f) == f
    # composing the swap with itself straightens the permutation
    ff = f.compose(f)
    assert ff.perm == tuple(range(6))


def test_curve_rows_shape():
    p = pi4_params()
    rows = curve_rows(p.lam, p.mu)
    assert len(rows) == 4 and all(len(r) == 6 for r in rows)
    assert rows[1][0] == p.lam
    assert rows[2][0] == p.mu
    assert rows[3][0] == -p.mu


def test_transports_identity_and_subgroup():
    p = pi4_params()
    one = GaloisElement(16, 1)
    assert transports_curve(MonomialIso.identity(2), p, one)
    # every scale pattern from the deck group transports for the identity
    for signs in itertools.product((1, -1), repeat=5):
        h = MonomialIso(range(6), [1, *signs], 2)
        assert transports_curve(h, p, one)


def test_transports_rejects_wrong_map():
    p = pi4_params()
    one = GaloisElement(16, 1)
    bad = MonomialIso(range(6), [1, 1, 1, 1, 2, 1], 2)
    assert not transports_curve(bad, p, one)
    # the coordinate-swap map transports for rho but not for the identity
    f = swap_iso()
    rho = GaloisElement(16, 3)
    assert transports_curve(f, p, rho)
    assert not transports_curve(f, p, one)


def test_lift_identity_contains_deck_translates():
    p = pi4_params()
    lift = lift_to_monomial(Moebius.identity(), p, GaloisElement(16, 1), 16)
    assert lift.ok
    assert len(lift.isos) == 32          # 2^6 sign patterns, projectively
    assert any(f.is_identity for f in lift.isos)
    assert all(f.perm == tuple(range(6)) for f in lift.isos)
    assert list(lift.powers) == [CycElt.one(16)] * 6


def test_lift_pi4_over_zeta16():
    p = pi4_params()
    rho = GaloisElement(16, 3)
    lift = lift_to_monomial(Moebius(0, -4, 1, 0), p, rho, 16)
    assert lift.ok and not lift.missing
    assert lift.perm == (1, 0, 3, 2, 4, 5)
    # solved scale powers: (1, lambda, 1, lambda, sigma(mu), -sigma(mu))
    smu = p.mu.galois_apply(rho)
    assert list(lift.powers) == [CycElt.one(16), p.lam.in_conductor(16),
                                 CycElt.one(16), p.lam.in_conductor(16),
                                 smu, -smu]
    assert len(lift.isos) == 32
    for s2, s4 in itertools.product((1, -1), repeat=2):
        assert swap_iso(s2, s4) in lift.isos
    for f in lift.isos:
        assert transports_curve(f, p, rho)


def test_lift_pi4_over_zeta8_reports_missing_radicals():
    p = pi4_params(8)
    rho = GaloisElement(8, 3)
    lift = lift_to_monomial(Moebius(0, -4, 1, 0), p, rho, 8)
    assert not lift.ok and lift.isos == ()
    coords = {miss.coordinate for miss in lift.missing}
    assert coords == {5, 6}
    for miss in lift.missing:
        assert miss.k == 2 and miss.conductor == 8
        assert "no 2-th root" in str(miss)
    # the blocked powers are sigma(mu) and -sigma(mu)
    smu = p.mu.galois_apply(rho)
    assert {m.value for m in lift.missing} == {smu, -smu}


def test_lift_requires_matching_mobius():
    p = pi4_params()
    with pytest.raises(ValueError):
        lift_to_monomial(Moebius(1, 1, 0, 1), p, GaloisElement(16, 3), 16)
    with pytest.raises(ValueError):
        lift_to_monomial(Moebius(0, -4, 1, 0, conj_first=True), p,
                         GaloisElement(16, 3), 16)


def test_compose_twist():
    p = pi4_params()
    f = swap_iso()
    ident = MonomialIso.identity(2)
    assert compose_twist(ident, f, GaloisElement(16, 1)) == f
    # twisting by -1 conjugates every scale
    tw = f.twist(GaloisElement(16, -1))
    for c, d in zip(f.scales, tw.scales):
        assert d == c.conjugate()
    # iterated twists compose exponents
    s = GaloisElement(16, 3)
    t = GaloisElement(16, 5)
    assert f.twist(s).twist(t) == f.twist(GaloisElement(16, 15))


def test_extend_cyclic_trivial():
    p = pi4_params()
    datum = extend_cyclic(MonomialIso.identity(2), 1, 1, p, 16)
    assert datum.closes
    assert cocycle_check(datum).ok


def test_extend_cyclic_validates_order():
    p = pi4_params()
    with pytest.raises(ValueError):
        extend_cyclic(swap_iso(), 3, 2, p, 16)  # <3> has order 4 mod 16
    with pytest.raises(ValueError):
        extend_cyclic(MonomialIso.identity(2), 3, 4, p, 16)  # no transport


def test_all_four_sign_pairs_close():
    # every sign choice closes f_rho^4 = I: sign flips are rational scales,
    # and along the four-step recursion each enters an even number of times
    p = pi4_params()
    closing = []
    for s2, s4 in itertools.product((1, -1), repeat=2):
        datum = extend_cyclic(swap_iso(s2, s4), 3, 4, p, 16)
        chk = cocycle_check(datum)
        assert datum.closes == chk.ok
        closing.append(chk.ok)
    assert closing == [True, True, True, True]


def test_closure_set_equals_cocycle_pass_set_by_exhaustion():
    # among every candidate lift, the data that close are exactly the data
    # whose full pair table passes
    p = pi4_params()
    rho = GaloisElement(16, 3)
    lift = lift_to_monomial(Moebius(0, -4, 1, 0), p, rho, 16)
    outcomes = set()
    for f in lift.isos:
        datum = extend_cyclic(f, 3, 4, p, 16)
        chk = cocycle_check(datum)
        assert chk.ok == datum.closes
        outcomes.add(chk.ok)
    assert outcomes == {True}


def test_cocycle_check_flags_tampered_datum():
    p = pi4_params()
    datum = extend_cyclic(swap_iso(), 3, 4, p, 16)
    # swap one interior map for a wrong one that still transports: the
    # deck-translate differs from the recursion's value
    i16 = make_element("z^4", 16)
    wrong = datum.maps[9].compose(
        MonomialIso(range(6), [1, -1, 1, 1, 1, 1], 2))
    tampered = WeilDatum(conductor=16, generator=3, order=4, params=p,
                         maps={**datum.maps, 9: wrong},
                         closure=datum.closure)
    chk = cocycle_check(tampered)
    assert not chk.ok
    assert chk.failing is not None
    tau, sigma = chk.failing
    assert tau in tampered.maps and sigma in tampered.maps

    # break transport instead: scale whose square is not 1
    broken = WeilDatum(conductor=16, generator=3, order=4, params=p,
                       maps={**datum.maps,
                             9: MonomialIso(range(6), [1, i16, 1, 1, 1, 1], 2)},
                       closure=datum.closure)
    chk = cocycle_check(broken)
    assert not chk.ok and chk.failing is None
    assert "transport" in chk.reason


def test_order_one_datum_requires_identity():
    # for the trivial group the only closing datum carries the identity
    p = pi4_params()
    h = MonomialIso(range(6), [1, -1, 1, 1, 1, 1], 2)
    datum = extend_cyclic(h, 1, 1, p, 16)
    assert not datum.closes
    chk = cocycle_check(datum)
    assert not chk.ok and "closure" in chk.reason
