"""Exact rational / integer planar primitives.

All predicates are exact: inputs are points with int or Fraction
coordinates and every test reduces to sign computations, so there are no
tolerance parameters anywhere.  Points are (x, y) tuples.  Polylines are
lists of points; polygons are closed polylines given without the repeated
first vertex.
"""

from __future__ import annotations

from fractions import Fraction


def cross(ox, oy, ax, ay, bx, by):
    """Sign quantity of the turn o->a->b: >0 left, <0 right, 0 collinear."""
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


def orient(o, a, b):
    c = cross(o[0], o[1], a[0], a[1], b[0], b[1])
    return (c > 0) - (c < 0)


def bbox(points):
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return min(xs), min(ys), max(xs), max(ys)


def boxes_overlap(b1, b2):
    return not (b1[2] < b2[0] or b2[2] < b1[0] or b1[3] < b2[1] or b2[3] < b1[1])


def on_segment(p, a, b):
    """True iff p lies on the closed segment [a, b]."""
    if orient(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segments_cross(a, b, c, d):
    """True iff open segments (a,b) and (c,d) meet in a single interior point
    of both.  Shared endpoints, endpoint-on-interior touches and collinear
    overlaps all return False; use segments_touch to detect those."""
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


def segments_touch(a, b, c, d):
    """True iff the closed segments intersect at all."""
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    if o1 == 0 and on_segment(c, a, b):
        return True
    if o2 == 0 and on_segment(d, a, b):
        return True
    if o3 == 0 and on_segment(a, c, d):
        return True
    if o4 == 0 and on_segment(b, c, d):
        return True
    return False


def cross_point(a, b, c, d):
    """Intersection point of the lines ab and cd as a Fraction pair.

    Caller must ensure the lines are not parallel.
    """
    d1x, d1y = b[0] - a[0], b[1] - a[1]
    d2x, d2y = d[0] - c[0], d[1] - c[1]
    denom = d1x * d2y - d1y * d2x
    s = ((c[0] - a[0]) * d2y - (c[1] - a[1]) * d2x)
    t = Fraction(s, denom)
    return (a[0] + t * d1x, a[1] + t * d1y)


def seg_param(a, b, p):
    """Parameter t in [0,1] with p = a + t*(b-a), for p on the line ab."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    if dx != 0:
        return Fraction(p[0] - a[0], dx)
    return Fraction(p[1] - a[1], dy)


def polygon_area2(poly):
    """Twice the signed area (positive for counterclockwise)."""
    s = 0
    n = len(poly)
    for i in range(n):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % n]
        s += x1 * y2 - x2 * y1
    return s


def point_in_polygon(p, poly):
    """Exact membership of p in a simple polygon.

    Returns 1 (strict interior), 0 (on the boundary) or -1 (exterior),
    by winding of a horizontal ray.
    """
    px, py = p
    n = len(poly)
    inside = False
    for i in range(n):
        a = poly[i]
        b = poly[(i + 1) % n]
        if on_segment(p, a, b):
            return 0
        ay, by = a[1], b[1]
        if (ay > py) != (by > py):
            # x-coordinate of the edge at height py, compared exactly
            # px < ax + (py-ay)*(bx-ax)/(by-ay)  without division
            lhs = (px - a[0]) * (by - ay)
            rhs = (py - ay) * (b[0] - a[0])
            if by > ay:
                if lhs < rhs:
                    inside = not inside
            else:
                if lhs > rhs:
                    inside = not inside
    return 1 if inside else -1


def polygons_disjoint(poly1, poly2):
    """True iff the closed regions bounded by two simple polygons are
    disjoint (no edge contact, neither contains the other)."""
    if not boxes_overlap(bbox(poly1), bbox(poly2)):
        return True
    n1, n2 = len(poly1), len(poly2)
    for i in range(n1):
        a, b = poly1[i], poly1[(i + 1) % n1]
        sb = bbox([a, b])
        for j in range(n2):
            c, d = poly2[j], poly2[(j + 1) % n2]
            if not boxes_overlap(sb, bbox([c, d])):
                continue
            if segments_touch(a, b, c, d):
                return False
    if point_in_polygon(poly1[0], poly2) >= 0:
        return False
    if point_in_polygon(poly2[0], poly1) >= 0:
        return False
    return True


def polyline_is_simple(points, closed=True):
    """True iff the polyline has no self-intersections.

    Consecutive segments may share only their common endpoint; for a closed
    polyline the last-to-first segment is included.
    """
    n = len(points)
    segs = []
    m = n if closed else n - 1
    for i in range(m):
        a = points[i]
        b = points[(i + 1) % n]
        if a == b:
            return False
        segs.append((a, b))
    for i in range(len(segs)):
        a, b = segs[i]
        for j in range(i + 1, len(segs)):
            c, d = segs[j]
            adjacent = (j == i + 1) or (closed and i == 0 and j == len(segs) - 1)
            if adjacent:
                # only the shared endpoint may be common
                shared = b if j == i + 1 else a
                other = (c, d) if j == i + 1 else (a, b)
                if segments_cross(a, b, c, d):
                    return False
                # collinear overlap through the shared vertex
                if orient(a, b, c if shared == c else d) == 0 and \
                        on_segment(c if shared != c else d, a, b):
                    return False
                for p in (c, d):
                    if p != shared and on_segment(p, a, b):
                        return False
                for p in (a, b):
                    if p != shared and on_segment(p, c, d):
                        return False
            else:
                if segments_touch(a, b, c, d):
                    return False
    return True


def scale_lcm(fractions):
    """Least common multiple of the denominators of an iterable of Fractions."""
    from math import lcm
    denoms = [f.denominator for f in fractions]
    return lcm(*denoms) if denoms else 1
