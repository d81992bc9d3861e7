"""Embedded bigons of a diagram and removal of empty ones.

A bigon is a disk embedded in the torus whose boundary is one arc of beta
and one arc of alpha meeting at two crossings.  Candidates are found in
the universal cover: a beta subarc whose endpoints lie on the same lifted
alpha component, closed up by the alpha arc between them.  The lifted
boundary bounds a unique compact region; the bigon is embedded if and only
if that region is disjoint from all of its nonzero deck translates, which
reduces to (a) no crossing of the subarc landing in the interior of the
alpha arc modulo 1 and (b) no translate of the region nesting inside it.

Empty-bigon removal relies on a standard innermost argument: if a diagram
has a bigon free of basepoints, it has one whose interior meets neither
curve, and such a bigon joins crossings adjacent along both beta and the
alpha circle.  Removing it is then a local isotopy of beta across the
alpha arc, realized here by rerouting the strand through a thin sliver on
the other side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import (CurveDiagram, alpha_subpath, analyze, beta_subarc_points,
                      curve_segments, normalize_curve, rotate_curve,
                      shifted_crossing, validate, _translate_range)
from .errors import InvalidInput, InvariantViolation
from .geometry import bbox, on_segment, orient, point_in_polygon, seg_param, \
    segments_cross, segments_touch

F = Fraction


@dataclass(frozen=True)
class Bigon:
    """Embedded bigon between crossing start and end of the beta walk.

    beta_arc and alpha_arc are lifted polylines with common endpoints;
    basepoints_inside is a frozenset drawn from {"w", "z"}; coherent_under
    is the set of beta orientations (+1 stored, -1 reversed) under which
    the boundary orientations induced by the two curves agree.
    """

    start: int
    end: int
    level: int
    beta_arc: tuple
    alpha_arc: tuple
    basepoints_inside: frozenset
    coherent_under: frozenset

    @property
    def is_empty(self):
        return not self.basepoints_inside

    @property
    def polygon(self):
        return tuple(self.beta_arc[:-1]) + tuple(self.alpha_arc[:-1])


def _arc_contains_mod1(pos_lo, length, pos):
    delta = (pos - pos_lo) % 1
    return 0 < delta < length


def _region_translate_free(poly):
    """No nonzero integer translate of the region nests with it."""
    box = bbox(poly)
    probe = poly[0]
    for v in _translate_range(box, box):
        if v == (0, 0):
            continue
        side = point_in_polygon((probe[0] + v[0], probe[1] + v[1]), poly)
        if side == 0:
            raise AssertionError("region boundary touches its own translate")
        if side == 1:
            return False
    return True


def _basepoints_inside(d, poly):
    from .diagram import translates_inside
    names = set()
    nw = translates_inside(d.w, poly)
    nz = translates_inside(d.z, poly)
    if nw > 1 or nz > 1:
        raise AssertionError("several translates of a basepoint in one bigon")
    if nw:
        names.add("w")
    if nz:
        names.add("z")
    return frozenset(names)


def enumerate_bigons(d, data=None):
    """All embedded bigons, each once, keyed by its beta subarc."""
    if data is None:
        data = analyze(d)
    p = data.count
    crossings = data.crossings
    shifted = [shifted_crossing(d, data, k) for k in range(2 * p)]
    out = []
    for i in range(p):
        ci = shifted[i]
        for j in range(i + 1, i + p):
            cj = shifted[j]
            if cj.level != ci.level:
                continue
            s_i, s_j = ci.alpha_lift, cj.alpha_lift
            length = abs(s_j - s_i)
            if length >= 1:
                continue
            pos_lo = (min(s_i, s_j)) % 1
            if any(_arc_contains_mod1(pos_lo, length,
                                      crossings[k % p].alpha_pos)
                   for k in range(i + 1, j)):
                continue
            subarc = beta_subarc_points(d, data, i, j)
            chord_back = alpha_subpath(d, cj, s_i)
            if chord_back[-1] != ci.point:
                raise AssertionError("alpha chord does not land on the corner")
            poly = subarc[:-1] + chord_back[:-1]
            if len(poly) < 3:
                continue
            if not _region_translate_free(poly):
                continue
            out.append(Bigon(
                start=i, end=j, level=ci.level,
                beta_arc=tuple(subarc), alpha_arc=tuple(chord_back[::-1]),
                basepoints_inside=_basepoints_inside(d, poly),
                coherent_under=frozenset({1 if s_i > s_j else -1}),
            ))
    return out


def is_reduced(d, data=None):
    """True iff every embedded bigon contains a basepoint."""
    return all(not b.is_empty for b in enumerate_bigons(d, data))


# ---------------------------------------------------------------------------
# reduction
# ---------------------------------------------------------------------------


def _straighten_alpha_map(d):
    """Unimodular M sending the alpha class to (1, 0); requires the alpha
    lift to be a straight geodesic."""
    from .diagram import _extended_gcd
    a = d.alpha
    for k in range(2, len(a)):
        if orient(a[0], a[1], a[k]) != 0:
            raise InvalidInput("reduce requires alpha to be a straight geodesic")
    ax, ay = d.alpha_class()
    g, x0, y0 = _extended_gcd(ax, ay)
    m = ((x0, y0), (-ay, ax))
    minv = ((ax, -y0), (ay, x0))
    return m, minv


def _find_innermost_empty(d, data):
    """A basepoint-free bigon whose interior meets no curve, as a pair of
    consecutive beta crossings adjacent along the alpha circle; None if the
    diagram is reduced."""
    p = data.count
    positions = sorted(c.alpha_pos for c in data.crossings)
    for k in range(p):
        c1 = shifted_crossing(d, data, k)
        c2 = shifted_crossing(d, data, k + 1)
        if c1.level != c2.level:
            continue
        s1, s2 = c1.alpha_lift, c2.alpha_lift
        length = abs(s2 - s1)
        if length >= 1:
            continue
        pos_lo = min(s1, s2) % 1
        if any(_arc_contains_mod1(pos_lo, length, pos) for pos in positions):
            continue
        strand = beta_subarc_points(d, data, k, k + 1)
        chord_back = alpha_subpath(d, c2, s1)
        poly = strand[:-1] + chord_back[:-1]
        if len(poly) < 3:
            continue
        if not _region_translate_free(poly):
            continue
        if _basepoints_inside(d, poly):
            continue
        return k
    return None


def _splice_strand(d, data, k, verbose=False):
    """Remove the empty bigon after crossing k by rerouting the strand
    through a thin sliver on the other side of alpha.

    Assumes the horizontal frame (alpha class (1,0), alpha straight) and
    that the strand does not wrap past the stored beta seam.
    """
    c1 = shifted_crossing(d, data, k)
    c2 = shifted_crossing(d, data, k + 1)
    j1, j2 = c1.beta_seg, c2.beta_seg
    assert j1 < j2, "strand wraps the beta seam; rotate first"
    line_y = c1.point[1]
    assert c2.point[1] == line_y
    above = c1.sign == 1
    assert (c2.sign == -1) == above, "bigon corners must have opposite signs"
    bsegs = curve_segments(d.beta)
    start_vertex = d.beta[j1]          # below the line for an above-strand
    end_vertex = d.beta[j2 + 1]
    gap1 = abs(line_y - start_vertex[1])
    gap2 = abs(line_y - end_vertex[1])
    h = min(F(1, 4), gap1 / 2, gap2 / 2)
    others = []
    for idx, seg in enumerate(bsegs):
        if idx in (j1, j2):
            continue
        others.append(seg)
    hb = d.beta_class()

    for _ in range(80):
        new_y = line_y - h if above else line_y + h
        pm = _point_at_height(d.beta[j1], d.beta[j1 + 1], new_y)
        qm = _point_at_height(d.beta[j2], d.beta[j2 + 1], new_y)
        sliver = [c1.point, c2.point, qm, pm]
        ok = True
        # connector must clear every other beta segment (all translates)
        conn_box = bbox([pm, qm])
        for seg in others:
            for v in _translate_range(bbox(list(seg)), conn_box):
                a = (seg[0][0] + v[0], seg[0][1] + v[1])
                b = (seg[1][0] + v[0], seg[1][1] + v[1])
                if segments_touch(pm, qm, a, b):
                    ok = False
                    break
            if not ok:
                break
        # also against translates of the two trimmed segments themselves
        if ok:
            for seg in (bsegs[j1], bsegs[j2]):
                for v in _translate_range(bbox(list(seg)), conn_box):
                    if v == (0, 0):
                        continue
                    a = (seg[0][0] + v[0], seg[0][1] + v[1])
                    b = (seg[1][0] + v[0], seg[1][1] + v[1])
                    if segments_touch(pm, qm, a, b):
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            for base in (d.w, d.z):
                for v in _translate_range((base[0], base[1], base[0], base[1]),
                                          bbox(sliver)):
                    q = (base[0] + v[0], base[1] + v[1])
                    if point_in_polygon(q, sliver) >= 0:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            new_beta = list(d.beta[:j1 + 1]) + [pm, qm] + list(d.beta[j2 + 1:])
            return CurveDiagram(alpha=d.alpha,
                                beta=normalize_curve(tuple(new_beta)),
                                w=d.w, z=d.z)
        h = h / 2
    raise InvariantViolation("could not clear a sliver for bigon removal")


def _point_at_height(a, b, y):
    t = Fraction(y - a[1], b[1] - a[1])
    assert 0 < t < 1, "reroute height escapes the crossing segment"
    return (a[0] + t * (b[0] - a[0]), y)


def reduce_trace(d):
    """Remove empty bigons one at a time until the diagram is reduced.

    Returns the list of diagrams from the input to the reduced one (input
    coordinates throughout).  Each step removes exactly one empty bigon
    whose interior meets neither curve, so the crossing count drops by two
    per step and the loop ends within (initial count)/2 steps.
    """
    validate(d)
    m, minv = _straighten_alpha_map(d)
    cur = d.transformed(m)
    trace = [d]
    p0 = len(analyze(cur, validated=True).crossings)
    max_steps = p0 // 2 + 1
    steps = 0
    while True:
        data = analyze(cur, validated=True)
        k = _find_innermost_empty(cur, data)
        if k is None:
            break
        if k == data.count - 1 and data.count > 1:
            # strand wraps the stored seam; restart the period elsewhere
            j = data.crossings[0].beta_seg + 1
            cur = CurveDiagram(alpha=cur.alpha,
                               beta=rotate_curve(cur.beta, j),
                               w=cur.w, z=cur.z)
            continue
        cur = _splice_strand(cur, data, k)
        steps += 1
        trace.append(cur.transformed(minv))
        if steps > max_steps:
            raise InvariantViolation(
                f"bigon removal did not terminate in {max_steps} steps")
    return trace


def reduce(d):
    """The reduced diagram obtained by removing empty bigons."""
    return reduce_trace(d)[-1]
