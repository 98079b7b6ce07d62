"""The projective line over Q(zeta_n): points, (anti-)Moebius maps,
cross-ratios, generalized-circle membership, and exhaustive enumeration of
maps between six-point sets.

A transformation is stored as projective coefficients (a, b, c, d) for
z -> (a z + b)/(c z + d), normalized so the first nonzero coefficient is 1;
equality of transformations is equality of normalized coefficients.  An
anti-Moebius map conjugates its argument first: z -> (a conj(z) + b)/(c
conj(z) + d).  Composition is the usual right-to-left one: (F @ G)(z) =
F(G(z)).
"""

from __future__ import annotations

import itertools
import math
from typing import Optional

from .cyclotomic import CycElt

__all__ = [
    "SpherePoint",
    "INF",
    "Moebius",
    "cross_ratio",
    "g_orbit",
    "concircular",
    "moebius_from_triple",
    "set_maps",
]


class SpherePoint:
    """A point of the sphere: either infinity or a field element."""

    __slots__ = ("value",)

    def __init__(self, value: Optional[CycElt]):
        object.__setattr__(self, "value", value)

    def __setattr__(self, *a):
        raise AttributeError("SpherePoint is immutable")

    @classmethod
    def of(cls, x) -> "SpherePoint":
        if isinstance(x, SpherePoint):
            return x
        if isinstance(x, CycElt):
            return cls(x)
        return cls(CycElt.from_rational(x))

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def key(self):
        if self.value is None:
            return (0,)
        return (1, self.value.key())

    def conjugate(self) -> "SpherePoint":
        if self.value is None:
            return self
        return SpherePoint(self.value.conjugate())

    def __eq__(self, other):
        if not isinstance(other, SpherePoint):
            return NotImplemented
        if self.value is None or other.value is None:
            return self.value is None and other.value is None
        return self.value == other.value

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        return "inf" if self.value is None else str(self.value)

    def __repr__(self):
        return f"SpherePoint({str(self)!r})"


INF = SpherePoint(None)


def _as_points(items) -> list:
    return [SpherePoint.of(x) for x in items]


class Moebius:
    """Projective map z -> (a z + b)/(c z + d); anti-map if conj_first."""

    __slots__ = ("a", "b", "c", "d", "conj_first")

    def __init__(self, a, b, c, d, conj_first: bool = False):
        coeffs = [x if isinstance(x, CycElt) else CycElt.from_rational(x)
                  for x in (a, b, c, d)]
        m = 1
        for x in coeffs:
            m = m * x.n // math.gcd(m, x.n)
        coeffs = [x.embed(m) for x in coeffs]
        det = coeffs[0] * coeffs[3] - coeffs[1] * coeffs[2]
        if det.is_zero():
            raise ValueError("degenerate transformation (ad - bc = 0)")
        lead_inv = next(x for x in coeffs if not x.is_zero()).inverse()
        coeffs = [x * lead_inv for x in coeffs]
        for name, x in zip(("a", "b", "c", "d"), coeffs):
            object.__setattr__(self, name, x)
        object.__setattr__(self, "conj_first", bool(conj_first))

    def __setattr__(self, *a):
        raise AttributeError("Moebius is immutable")

    @classmethod
    def identity(cls) -> "Moebius":
        return cls(1, 0, 0, 1)

    @property
    def is_identity(self) -> bool:
        return (not self.conj_first and self.a == 1 and self.b.is_zero()
                and self.c.is_zero() and self.d == 1)

    def coefficients(self):
        return (self.a, self.b, self.c, self.d)

    def apply(self, p) -> SpherePoint:
        p = SpherePoint.of(p)
        if self.conj_first:
            p = p.conjugate()
        if p.is_infinity:
            if self.c.is_zero():
                return INF
            return SpherePoint(self.a / self.c)
        den = self.c * p.value + self.d
        if den.is_zero():
            return INF
        return SpherePoint((self.a * p.value + self.b) / den)

    __call__ = apply

    def compose(self, other: "Moebius") -> "Moebius":
        """(self @ other)(z) = self(other(z))."""
        oa, ob, oc, od = other.coefficients()
        if self.conj_first:
            oa, ob, oc, od = (x.conjugate() for x in (oa, ob, oc, od))
        return Moebius(
            self.a * oa + self.b * oc,
            self.a * ob + self.b * od,
            self.c * oa + self.d * oc,
            self.c * ob + self.d * od,
            conj_first=self.conj_first != other.conj_first,
        )

    __matmul__ = compose

    def inverse(self) -> "Moebius":
        a, b, c, d = self.d, -self.b, -self.c, self.a
        if self.conj_first:
            a, b, c, d = (x.conjugate() for x in (a, b, c, d))
        return Moebius(a, b, c, d, conj_first=self.conj_first)

    def square(self) -> "Moebius":
        return self.compose(self)

    def key(self):
        return (self.conj_first, self.a.key(), self.b.key(),
                self.c.key(), self.d.key())

    def __eq__(self, other):
        if not isinstance(other, Moebius):
            return NotImplemented
        return (self.conj_first == other.conj_first
                and self.a == other.a and self.b == other.b
                and self.c == other.c and self.d == other.d)

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        var = "conj(z)" if self.conj_first else "z"

        def side(u, v):
            if u.is_zero():
                return str(v)
            head = var if u == 1 else f"({u})*{var}"
            if v.is_zero():
                return head
            return f"{head} + ({v})"

        num = side(self.a, self.b)
        den = side(self.c, self.d)
        if self.c.is_zero() and self.d == 1:
            return f"z -> {num}"
        return f"z -> ({num})/({den})"

    def __repr__(self):
        return f"Moebius<{self}>"


def _require_distinct(pts):
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if pts[i] == pts[j]:
                raise ValueError("points must be pairwise distinct")


def cross_ratio(a, b, c, d) -> CycElt:
    """[a,b,c,d] = T(d) for the unique Moebius T with T(a)=inf, T(b)=0,
    T(c)=1; computed as ((c-a)/(c-b))*((d-b)/(d-a)) with the usual limits
    when one point is infinity (drop both factors containing it)."""
    a, b, c, d = _as_points((a, b, c, d))
    _require_distinct([a, b, c, d])
    if a.is_infinity:
        return (d.value - b.value) / (c.value - b.value)
    if b.is_infinity:
        return (c.value - a.value) / (d.value - a.value)
    if c.is_infinity:
        return (d.value - b.value) / (d.value - a.value)
    if d.is_infinity:
        return (c.value - a.value) / (c.value - b.value)
    return ((c.value - a.value) * (d.value - b.value)) / (
        (c.value - b.value) * (d.value - a.value))


def g_orbit(c: CycElt) -> list:
    """Orbit of a cross-ratio value under the six maps generated by
    z -> 1/z and z -> z/(z-1); at most six values, canonically sorted."""
    if not isinstance(c, CycElt):
        c = CycElt.from_rational(c)
    if c.is_zero() or c == 1:
        raise ValueError("orbit undefined for 0 and 1")
    one = CycElt.one(c.n)
    values = [c, one / c, one - c, one / (one - c), (c - one) / c, c / (c - one)]
    out = []
    seen = set()
    for v in values:
        k = v.key()
        if k not in seen:
            seen.add(k)
            out.append(v)
    out.sort(key=lambda v: v.key())
    return out


def concircular(a, b, c, d) -> bool:
    """True iff the four (distinct) points lie on a generalized circle,
    i.e. their cross-ratio is real."""
    value = cross_ratio(a, b, c, d)
    return value.conjugate() == value


def _std_raw(p, q, s):
    """Raw (non-normalized) matrix of the map p -> inf, q -> 0, s -> 1."""
    one = CycElt.one()
    zero = CycElt.zero()
    if p.is_infinity:
        return (one, -q.value, zero, s.value - q.value)
    if q.is_infinity:
        return (zero, s.value - p.value, one, -p.value)
    if s.is_infinity:
        return (one, -q.value, one, -p.value)
    return (s.value - p.value, -q.value * (s.value - p.value),
            s.value - q.value, -p.value * (s.value - q.value))


def _apply_raw(mat, p: SpherePoint) -> SpherePoint:
    a, b, c, d = mat
    if p.is_infinity:
        if c.is_zero():
            return INF
        return SpherePoint(a / c)
    den = c * p.value + d
    if den.is_zero():
        return INF
    return SpherePoint((a * p.value + b) / den)


def moebius_from_triple(src, dst) -> Moebius:
    """The unique Moebius map sending src[i] to dst[i] for i = 0, 1, 2."""
    src = _as_points(src)
    dst = _as_points(dst)
    if len(src) != 3 or len(dst) != 3:
        raise ValueError("need exactly three source and three target points")
    _require_distinct(src)
    _require_distinct(dst)
    sa, sb, sc, sd = _std_raw(*src)
    a, b, c, d = _std_raw(*dst)
    ia, ib, ic, id_ = d, -b, -c, a
    return Moebius(ia * sa + ib * sc, ia * sb + ib * sd,
                   ic * sa + id_ * sc, ic * sb + id_ * sd)


def unify_points(points):
    """Embed points into one common cyclotomic field; returns (m, list)."""
    pts = [SpherePoint.of(p) for p in points]
    m = 1
    for p in pts:
        if not p.is_infinity:
            m = m * p.value.n // math.gcd(m, p.value.n)
    out = [p if p.is_infinity else SpherePoint(p.value.embed(m))
           for p in pts]
    return m, out


def _raw_key(p: SpherePoint):
    # sort/dedup key valid among points of one common conductor
    return (0,) if p.is_infinity else (1, p.value.coeffs)


def set_maps(S, T, anti: bool = False) -> list:
    """All Moebius (or anti-Moebius) maps sending the six-point set S onto
    the six-point set T, by enumerating the 120 ordered triples of T as
    images of a fixed triple of S; duplicate-free and canonically sorted.
    An empty list means no such map exists.

    A candidate triple survives iff normalizing it to (inf, 0, 1) puts the
    three remaining target points at the same spots as the three remaining
    source points under the source normalization; the witness matrix is
    only assembled for survivors.
    """
    s_in, t_in = list(S), list(T)
    _, everything = unify_points(s_in + t_in)
    src = sorted({_raw_key(p): p for p in everything[:len(s_in)]}.values(),
                 key=_raw_key)
    tgt = sorted({_raw_key(p): p for p in everything[len(s_in):]}.values(),
                 key=_raw_key)
    if len(src) != 6 or len(tgt) != 6:
        raise ValueError("both sets must contain exactly six points")
    if anti:
        src = [p.conjugate() for p in src]
    base = src[:3]
    base_mat = _std_raw(*base)
    rest = src[3:]
    want = sorted(_raw_key(_apply_raw(base_mat, p)) for p in rest)
    found = {}
    for triple in itertools.permutations(tgt, 3):
        mat = _std_raw(*triple)
        chosen = set(map(_raw_key, triple))
        others = [p for p in tgt if _raw_key(p) not in chosen]
        got = sorted(_raw_key(_apply_raw(mat, p)) for p in others)
        if got != want:
            continue
        m = moebius_from_triple(base, triple)
        if anti:
            m = Moebius(*m.coefficients(), conj_first=True)
        key = (m.conj_first, m.a.coeffs, m.b.coeffs, m.c.coeffs, m.d.coeffs)
        found[key] = m
    return [found[k] for k in sorted(found)]
