"""Doubly-pointed genus-1 Heegaard diagrams on the flat torus R^2/Z^2.

A curve is stored as one lifted period of its preimage: a list of rational
vertices whose last entry equals the first translated by the (integral)
homology vector of the curve; consecutive vertices are joined by straight
segments.  The mod-1 reduction of the lift is the picture on the torus.
Keeping lifts makes universal-cover arguments (bigon embeddedness, strand
levels) exact and local.

Reduced diagrams are parametrized by four integers (p, q, r, s): p
intersections with the horizontal alpha circle, q nested rainbows per
family on each side, the w-rainbow block rotated by r, and the
top-to-bottom gluing twisted by s.  from_params realizes that
combinatorial description with explicit coordinates: alpha is the
horizontal circle at height 0, marked points sit at x = (2i+1)/(2p),
lower rainbows join marked points r+k and r+2q-1-k below height 1/4 with
w inside the innermost one, upper rainbows join top labels k and 2q-1-k
(drawn shifted by the gluing twist) with z inside, and the remaining
p-2q strands run across as parallel bands.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DisconnectedCurve, InvalidInput
from .geometry import (bbox, cross_point, on_segment, orient,
                       point_in_polygon, seg_param, segments_cross,
                       segments_touch)

Point = tuple  # (Fraction, Fraction)

F = Fraction


def _frac_point(p):
    return (Fraction(p[0]), Fraction(p[1]))


def _point_json(p):
    return [[p[0].numerator, p[0].denominator], [p[1].numerator, p[1].denominator]]


def _point_from_json(data):
    (xn, xd), (yn, yd) = data
    return (Fraction(int(xn), int(xd)), Fraction(int(yn), int(yd)))


def curve_segments(verts):
    """Segments of one lifted period."""
    return [(verts[i], verts[i + 1]) for i in range(len(verts) - 1)]


def curve_class(verts):
    """Homology vector: last vertex minus first; must be integral."""
    hx = verts[-1][0] - verts[0][0]
    hy = verts[-1][1] - verts[0][1]
    if hx.denominator != 1 or hy.denominator != 1:
        raise InvalidInput("curve does not close up to an integer translation")
    return (int(hx), int(hy))


def normalize_curve(verts):
    """Drop repeated vertices and collinear pass-through vertices."""
    pts = list(verts)
    changed = True
    while changed and len(pts) > 2:
        changed = False
        out = [pts[0]]
        for i in range(1, len(pts) - 1):
            a, b, c = out[-1], pts[i], pts[i + 1]
            if b == a or (orient(a, b, c) == 0 and on_segment(b, a, c)):
                changed = True
                continue
            out.append(b)
        out.append(pts[-1])
        pts = out
    return tuple(pts)


def rotate_curve(verts, start):
    """Reparametrize a closed lift to start at vertex index start."""
    h = curve_class(verts)
    core = list(verts[:-1])
    n = len(core)
    start %= n
    out = core[start:] + [(p[0] + h[0], p[1] + h[1]) for p in core[:start]]
    out.append((out[0][0] + h[0], out[0][1] + h[1]))
    return tuple(out)


@dataclass(frozen=True)
class CurveDiagram:
    """Doubly-pointed diagram (alpha, beta, w, z) with lifted polylines."""

    alpha: tuple
    beta: tuple
    w: Point
    z: Point

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(_frac_point(p) for p in self.alpha))
        object.__setattr__(self, "beta", tuple(_frac_point(p) for p in self.beta))
        object.__setattr__(self, "w", _frac_point(self.w))
        object.__setattr__(self, "z", _frac_point(self.z))
        if len(self.alpha) < 2 or len(self.beta) < 2:
            raise InvalidInput("curves need at least one segment")
        curve_class(self.alpha)
        curve_class(self.beta)

    def alpha_class(self):
        return curve_class(self.alpha)

    def beta_class(self):
        return curve_class(self.beta)

    def determinant(self):
        ax, ay = self.alpha_class()
        bx, by = self.beta_class()
        return ax * by - ay * bx

    def transformed(self, m, shift=(0, 0)):
        """Apply an integer unimodular map x -> M x + shift to the diagram."""
        (a, b), (c, d) = m
        if a * d - b * c not in (1, -1):
            raise InvalidInput("matrix is not unimodular")
        sx, sy = Fraction(shift[0]), Fraction(shift[1])

        def f(p):
            return (a * p[0] + b * p[1] + sx, c * p[0] + d * p[1] + sy)

        return CurveDiagram(
            alpha=tuple(f(p) for p in self.alpha),
            beta=tuple(f(p) for p in self.beta),
            w=f(self.w), z=f(self.z),
        )

    def with_beta_reversed(self):
        return CurveDiagram(alpha=self.alpha, beta=tuple(reversed(self.beta)),
                            w=self.w, z=self.z)

    def to_json(self):
        return {
            "alpha": [_point_json(p) for p in self.alpha],
            "beta": [_point_json(p) for p in self.beta],
            "w": _point_json(self.w),
            "z": _point_json(self.z),
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            alpha=tuple(_point_from_json(p) for p in data["alpha"]),
            beta=tuple(_point_from_json(p) for p in data["beta"]),
            w=_point_from_json(data["w"]),
            z=_point_from_json(data["z"]),
        )


def ambient(d):
    """Order of H_1 of the ambient manifold and whether it is S^3.

    The two curves are meridians of the two solid tori, so the manifold is
    the lens space of order |[alpha].[beta]|, with order 1 meaning S^3.
    """
    det = d.determinant()
    if det == 0:
        raise InvalidInput("degenerate diagram: zero intersection number")
    return {"order": abs(det), "is_s3": abs(det) == 1}


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def _int_range(lo, hi):
    return range(math.ceil(lo), math.floor(hi) + 1)


def _translate_range(box_moving, box_fixed):
    """Integer translations v with box_moving + v overlapping box_fixed."""
    lo_x = box_fixed[0] - box_moving[2]
    hi_x = box_fixed[2] - box_moving[0]
    lo_y = box_fixed[1] - box_moving[3]
    hi_y = box_fixed[3] - box_moving[1]
    return [(vx, vy) for vx in _int_range(lo_x, hi_x)
            for vy in _int_range(lo_y, hi_y)]


def _curve_embedded_on_torus(verts):
    segs = curve_segments(verts)
    h = curve_class(verts)
    n = len(segs)
    for i in range(n):
        a, b = segs[i]
        bi = bbox([a, b])
        for j in range(i, n):
            c0, d0 = segs[j]
            for (vx, vy) in _translate_range(bbox([c0, d0]), bi):
                if i == j and (vx, vy) == (0, 0):
                    continue
                c = (c0[0] + vx, c0[1] + vy)
                d = (d0[0] + vx, d0[1] + vy)
                if not segments_touch(a, b, c, d):
                    continue
                shared = None
                if (vx, vy) == (0, 0) and j == i + 1:
                    shared = b
                if i == 0 and j == n - 1 and (vx, vy) == (-h[0], -h[1]):
                    shared = a  # closing identification
                if n == 1 and (vx, vy) == (h[0], h[1]):
                    shared = b  # closing identification, other side
                if shared is None:
                    return False
                if segments_cross(a, b, c, d):
                    return False
                for p, seg in ((c, (a, b)), (d, (a, b)), (a, (c, d)), (b, (c, d))):
                    if p != shared and on_segment(p, *seg):
                        return False
    return True


def validate(d, full=True):
    """Check the diagram invariants; raise InvalidInput on failure."""
    ha = d.alpha_class()
    hb = d.beta_class()
    if ha == (0, 0) or hb == (0, 0):
        raise InvalidInput("curve classes must be nonzero")
    if gcd(ha[0], ha[1]) != 1 or gcd(hb[0], hb[1]) != 1:
        raise InvalidInput("curve classes must be primitive")
    if ha[0] * hb[1] - ha[1] * hb[0] == 0:
        raise InvalidInput("alpha and beta classes must be independent")
    if full:
        if not _curve_embedded_on_torus(d.alpha):
            raise InvalidInput("alpha is not embedded on the torus")
        if not _curve_embedded_on_torus(d.beta):
            raise InvalidInput("beta is not embedded on the torus")
    asegs = curve_segments(d.alpha)
    bsegs = curve_segments(d.beta)
    for a, b in asegs:
        bi = bbox([a, b])
        for c0, d0 in bsegs:
            for (vx, vy) in _translate_range(bbox([c0, d0]), bi):
                c = (c0[0] + vx, c0[1] + vy)
                e = (d0[0] + vx, d0[1] + vy)
                if segments_touch(a, b, c, e) and not segments_cross(a, b, c, e):
                    raise InvalidInput(
                        "alpha and beta have a non-transverse contact "
                        "(tangency, overlap or crossing at a vertex)")
    for name, pt in (("w", d.w), ("z", d.z)):
        for verts in (d.alpha, d.beta):
            for a, b in curve_segments(verts):
                for (vx, vy) in _translate_range(bbox([pt, pt]), bbox([a, b])):
                    q = (pt[0] + vx, pt[1] + vy)
                    if on_segment(q, a, b):
                        raise InvalidInput(f"basepoint {name} lies on a curve")
    return d


# ---------------------------------------------------------------------------
# crossings and strand structure
# ---------------------------------------------------------------------------


def _extended_gcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def alpha_frame(d):
    """Pair (h_alpha, u) of integer vectors with det(h_alpha, u) = 1.

    The preimage component of the translate of the stored alpha lift by v
    has index det(h_alpha, v), and det(v, u) is its offset in whole
    periods along the component.
    """
    ax, ay = d.alpha_class()
    g, x0, y0 = _extended_gcd(ax, ay)
    u = (-y0, x0)
    assert ax * u[1] - ay * u[0] == 1
    return (ax, ay), u


@dataclass(frozen=True)
class Crossing:
    """One alpha/beta intersection with lift data from the beta walk.

    beta_pos: parameter along the stored beta period (segment + fraction).
    alpha_pos: parameter in [0, 1) around the alpha circle.
    point: lifted coordinates on the stored beta period.
    level: index of the alpha preimage component the lift lies on.
    alpha_lift: position along that component, in whole periods.
    alpha_translate: integer translate of the stored alpha lift involved.
    sign: +1 if beta crosses alpha from its right side to its left side.
    """

    index: int
    beta_pos: Fraction
    alpha_pos: Fraction
    point: Point
    level: int
    alpha_lift: Fraction
    alpha_translate: tuple
    sign: int
    beta_seg: int
    alpha_seg: int


BAND_UP = "band_up"
BAND_DOWN = "band_down"
RAINBOW_W = "w_rainbow"
RAINBOW_Z = "z_rainbow"
RAINBOW_PLAIN = "rainbow"


@dataclass(frozen=True)
class IntersectionData:
    crossings: tuple        # Crossing, in beta order
    alpha_order: tuple      # crossing indices ordered around alpha
    strands: tuple          # strand class after each crossing, in beta order
    level_shift: int        # level change of the beta walk per beta period
    lift_shift: Fraction    # alpha_lift change per beta period
    sign_sum: int

    @property
    def count(self):
        return len(self.crossings)

    def signs_along_alpha(self):
        return [self.crossings[i].sign for i in self.alpha_order]

    def rainbow_count(self, kind):
        return sum(1 for s in self.strands if s == kind)


def compute_crossings(d):
    """All alpha/beta crossings with exact lift data, ordered along beta."""
    ha, u = alpha_frame(d)
    asegs = curve_segments(d.alpha)
    bsegs = curve_segments(d.beta)
    m = len(asegs)
    raw = []
    for j, (bstart, bend) in enumerate(bsegs):
        bbx = bbox([bstart, bend])
        for i, (astart, aend) in enumerate(asegs):
            for (vx, vy) in _translate_range(bbox([astart, aend]), bbx):
                a = (astart[0] + vx, astart[1] + vy)
                b = (aend[0] + vx, aend[1] + vy)
                if not segments_cross(a, b, bstart, bend):
                    continue
                pt = cross_point(a, b, bstart, bend)
                tb = seg_param(bstart, bend, pt)
                ta = seg_param(a, b, pt)
                level = ha[0] * vy - ha[1] * vx
                period = vx * u[1] - vy * u[0]
                s_alpha = period + (Fraction(i) + ta) / m
                alpha_pos = (Fraction(i) + ta) / m
                adx, ady = b[0] - a[0], b[1] - a[1]
                bdx, bdy = bend[0] - bstart[0], bend[1] - bstart[1]
                sgn = adx * bdy - ady * bdx
                raw.append((Fraction(j) + tb, alpha_pos, pt, level, s_alpha,
                            (vx, vy), 1 if sgn > 0 else -1, j, i))
    raw.sort(key=lambda r: r[0])
    return tuple(
        Crossing(index=k, beta_pos=r[0], alpha_pos=r[1], point=r[2],
                 level=r[3], alpha_lift=r[4], alpha_translate=r[5],
                 sign=r[6], beta_seg=r[7], alpha_seg=r[8])
        for k, r in enumerate(raw))


def shifted_crossing(d, data, k):
    """Crossing at walk index k, allowing k past one beta period: the copy
    of crossing k mod p translated by the period deck transformation."""
    crossings = data.crossings
    p = len(crossings)
    wraps, kk = divmod(k, p)
    c = crossings[kk]
    if wraps == 0:
        return c
    hb = d.beta_class()
    return dataclasses.replace(
        c,
        beta_pos=c.beta_pos + wraps * (len(d.beta) - 1),
        point=(c.point[0] + wraps * hb[0], c.point[1] + wraps * hb[1]),
        level=c.level + wraps * data.level_shift,
        alpha_lift=c.alpha_lift + wraps * data.lift_shift,
        alpha_translate=(c.alpha_translate[0] + wraps * hb[0],
                         c.alpha_translate[1] + wraps * hb[1]),
    )


def alpha_subpath(d, crossing, s_target):
    """Lifted polyline along crossing's alpha component from the crossing's
    own parameter to s_target (either direction), including the component's
    vertices strictly in between."""
    asegs = curve_segments(d.alpha)
    m = len(asegs)
    ha = d.alpha_class()
    s_from = crossing.alpha_lift
    v = crossing.alpha_translate
    t_seg = _alpha_seg_param(d, crossing)
    base_period = s_from - (Fraction(crossing.alpha_seg) + t_seg) / m

    def point_at(s):
        rel = s - base_period
        k = rel.__floor__()
        idx_f = (rel - k) * m
        idx = int(idx_f.__floor__())
        t = idx_f - idx
        if idx == m:
            idx, t, k = 0, Fraction(0), k + 1
        a, b = asegs[idx]
        return (a[0] + t * (b[0] - a[0]) + v[0] + k * ha[0],
                a[1] + t * (b[1] - a[1]) + v[1] + k * ha[1])

    step = Fraction(1, m)
    points = [crossing.point]
    if s_target > s_from:
        sv = ((s_from / step).__floor__() + 1) * step
        while sv < s_target:
            points.append(point_at(sv))
            sv += step
    else:
        sv = ((s_from / step).__ceil__() - 1) * step
        while sv > s_target:
            points.append(point_at(sv))
            sv -= step
    points.append(point_at(s_target))
    out = [points[0]]
    for q in points[1:]:
        if q != out[-1]:
            out.append(q)
    return out


def _alpha_seg_param(d, crossing):
    a, b = curve_segments(d.alpha)[crossing.alpha_seg]
    av = crossing.alpha_translate
    aa = (a[0] + av[0], a[1] + av[1])
    bb = (b[0] + av[0], b[1] + av[1])
    return seg_param(aa, bb, crossing.point)


def beta_subarc_points(d, data, i, j):
    """Lifted beta polyline from walk index i to walk index j > i."""
    crossings = data.crossings
    nseg = len(d.beta) - 1
    hb = d.beta_class()
    ci = shifted_crossing(d, data, i)
    cj = shifted_crossing(d, data, j)
    points = [ci.point]
    k = int(ci.beta_pos.__floor__()) + 1
    while Fraction(k) < cj.beta_pos:
        wraps, kk = divmod(k, nseg)
        vtx = d.beta[kk]
        points.append((vtx[0] + wraps * hb[0], vtx[1] + wraps * hb[1]))
        k += 1
    points.append(cj.point)
    out = [points[0]]
    for q in points[1:]:
        if q != out[-1]:
            out.append(q)
    return out


def translates_inside(pt, poly):
    """Does any integer translate of pt lie strictly inside the polygon?"""
    box = bbox(poly)
    hits = 0
    for (vx, vy) in _translate_range((pt[0], pt[1], pt[0], pt[1]), box):
        side = point_in_polygon((pt[0] + vx, pt[1] + vy), poly)
        if side == 0:
            raise AssertionError("basepoint on a region boundary")
        if side == 1:
            hits += 1
    return hits


def _classify_rainbow(d, data, k):
    """Label the same-level strand after crossing k by the basepoints under
    it: the bounded region between the strand and the alpha arc joining its
    feet.  Wide strands (feet more than a period apart) stay generic."""
    c1 = shifted_crossing(d, data, k)
    c2 = shifted_crossing(d, data, k + 1)
    if abs(c2.alpha_lift - c1.alpha_lift) >= 1:
        return RAINBOW_PLAIN
    strand = beta_subarc_points(d, data, k, k + 1)
    back = alpha_subpath(d, c2, c1.alpha_lift)
    poly = strand[:-1] + back[:-1]
    if len(poly) < 3:
        return RAINBOW_PLAIN
    has_w = translates_inside(d.w, poly)
    has_z = translates_inside(d.z, poly)
    if has_w and not has_z:
        return RAINBOW_W
    if has_z and not has_w:
        return RAINBOW_Z
    return RAINBOW_PLAIN


def analyze(d, *, validated=False):
    """Crossings in alpha and beta order with signs and strand classes."""
    if not validated:
        validate(d)
    crossings = compute_crossings(d)
    p = len(crossings)
    if p == 0:
        raise InvalidInput("alpha and beta do not intersect")
    ha = d.alpha_class()
    hb = d.beta_class()
    det = ha[0] * hb[1] - ha[1] * hb[0]
    sign_sum = sum(c.sign for c in crossings)
    if sign_sum != det:
        raise AssertionError(
            f"sign sum {sign_sum} disagrees with homology determinant {det}")
    _, u = alpha_frame(d)
    lift_shift = Fraction(hb[0] * u[1] - hb[1] * u[0])
    data = IntersectionData(crossings=crossings, alpha_order=(),
                            strands=(), level_shift=det,
                            lift_shift=lift_shift, sign_sum=sign_sum)
    strands = []
    for k in range(p):
        lev_k = shifted_crossing(d, data, k).level
        lev_n = shifted_crossing(d, data, k + 1).level
        dl = lev_n - lev_k
        if dl == 1:
            strands.append(BAND_UP)
        elif dl == -1:
            strands.append(BAND_DOWN)
        elif dl == 0:
            strands.append(_classify_rainbow(d, data, k))
        else:
            raise AssertionError("strand skips an alpha level")
    alpha_order = tuple(sorted(range(p), key=lambda k: crossings[k].alpha_pos))
    return dataclasses.replace(data, alpha_order=alpha_order,
                               strands=tuple(strands))


# ---------------------------------------------------------------------------
# the four-parameter family
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParamDiagram:
    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        if self.p < 1 or self.q < 0:
            raise InvalidInput("need p >= 1 and q >= 0")
        if 2 * self.q >= self.p:
            raise InvalidInput("need 2q < p (at least one band strand)")

    def to_json(self):
        return {"p": self.p, "q": self.q, "r": self.r, "s": self.s}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["p"]), int(data["q"]), int(data["r"]), int(data["s"]))


def _params_traversal(pd):
    """Trace the strand pattern as a single closed curve.

    Slots are bottom labels 0..p-1 and top labels 0..p-1; strands pair them
    and the gluing identifies top label i with bottom label i+s.  Returns
    the strands in traversal order as (kind, index, entry_slot) or raises
    DisconnectedCurve.
    """
    p, q, r, s = pd.p, pd.q, pd.r % pd.p, pd.s % pd.p
    bottom_partner = {}
    top_partner = {}
    for k in range(q):
        a, b = (r + k) % p, (r + 2 * q - 1 - k) % p
        bottom_partner[a] = ("lower", k, b)
        bottom_partner[b] = ("lower", k, a)
        a, b = k, 2 * q - 1 - k
        top_partner[a] = ("upper", k, b)
        top_partner[b] = ("upper", k, a)
    for j in range(p - 2 * q):
        bot = (r + 2 * q + j) % p
        top = 2 * q + j
        bottom_partner[bot] = ("band", j, top)
        top_partner[top] = ("band", j, bot)

    strands = []
    visited = set()
    slot = ("bottom", (r + 2 * q) % p)  # enter the first band going up
    while slot not in visited:
        visited.add(slot)
        side, label = slot
        if side == "bottom":
            kind, idx, other = bottom_partner[label]
            strands.append((kind, idx, ("bottom", label)))
            if kind == "band":
                slot = ("bottom", (other + s) % p)   # through the top gluing
            else:
                slot = ("top", (other - s) % p)      # back down through alpha
        else:
            kind, idx, other = top_partner[label]
            strands.append((kind, idx, ("top", label)))
            if kind == "band":
                slot = ("top", (other - s) % p)
            else:
                slot = ("bottom", (other + s) % p)
    if len(strands) != p:
        raise DisconnectedCurve(
            f"(p,q,r,s)=({p},{q},{r},{s}) traces {len(strands)} of {p} strands")
    return strands


def _strand_polyline(pd, kind, idx, entry):
    """Drawn polyline of a strand oriented from its entry slot.

    Bottom label i is drawn at x=(2i+1)/(2p) at height 0; top label i at
    x=(2(i+s')+1)/(2p) at height 1, where s' = r + ((s-r) mod p) realizes
    the gluing twist inside the standard torus with all bands parallel.
    """
    p, q, r, s = pd.p, pd.q, pd.r % pd.p, pd.s % pd.p
    sp = r + ((s - r) % p)
    if kind == "lower":
        k = idx
        xa = F(2 * (r + k) + 1, 2 * p)
        xb = F(2 * (r + 2 * q - 1 - k) + 1, 2 * p)
        h = F(2 * (q - k) - 1, 8 * q)
        pts = [(xa, F(0)), (xa, h), (xb, h), (xb, F(0))]
        entry_label = (r + k) % p
        if entry[1] != entry_label:
            pts = pts[::-1]
            entry_label = (r + 2 * q - 1 - k) % p
        want = F(2 * entry[1] + 1, 2 * p)
    elif kind == "upper":
        k = idx
        xa = F(2 * (k + sp) + 1, 2 * p)
        xb = F(2 * (2 * q - 1 - k + sp) + 1, 2 * p)
        h = 1 - F(2 * (q - k) - 1, 8 * q)
        pts = [(xa, F(1)), (xa, h), (xb, h), (xb, F(1))]
        entry_label = k
        if entry[1] != entry_label:
            pts = pts[::-1]
            entry_label = 2 * q - 1 - k
        want = F(2 * (entry[1] + sp) + 1, 2 * p)
    else:
        j = idx
        xb_ = F(2 * (r + 2 * q + j) + 1, 2 * p)
        xt_ = F(2 * (2 * q + j + sp) + 1, 2 * p)
        pts = [(xb_, F(0)), (xb_, F(1, 4)), (xt_, F(3, 4)), (xt_, F(1))]
        if entry[0] == "top":
            pts = pts[::-1]
            want = F(2 * (entry[1] + sp) + 1, 2 * p)
        else:
            want = F(2 * entry[1] + 1, 2 * p)
    shift = want - pts[0][0]
    assert shift.denominator == 1, "strand representative misaligned"
    return [(x + shift, y) for (x, y) in pts]


def from_params(pd):
    """Curve diagram realizing the four-parameter strand pattern.

    Rejects tuples whose strand pattern does not trace a single closed
    curve.  The result has exactly p transverse crossings with the
    horizontal alpha circle at height 0.
    """
    p, q, r, s = pd.p, pd.q, pd.r % pd.p, pd.s % pd.p
    strands = _params_traversal(pd)
    verts = []
    offset = (F(0), F(0))
    for kind, idx, entry in strands:
        pts = _strand_polyline(pd, kind, idx, entry)
        if verts:
            shift = (verts[-1][0] - (pts[0][0] + offset[0]),
                     verts[-1][1] - (pts[0][1] + offset[1]))
            offset = (offset[0] + shift[0], offset[1] + shift[1])
            pts = pts[1:]
        verts.extend((x + offset[0], y + offset[1]) for (x, y) in pts)
    # the walk seam sits on alpha; restart the period at an interior vertex
    beta = normalize_curve(rotate_curve(tuple(verts), 1))
    alpha = ((F(0), F(0)), (F(1), F(0)))
    sp = r + ((s - r) % p)
    if q > 0:
        w = (F(r + q, p), F(1, 16 * q))
        z = (F(q + sp, p), 1 - F(1, 16 * q))
    else:
        w = (F(r, p), F(1, 8))
        z = (F(sp, p), F(7, 8))
    d = CurveDiagram(alpha=alpha, beta=beta, w=w, z=z)
    return validate(d)
