"""Mechanical word tracer for loops on the torus minus the bridge arc.

The knot group is assembled by van Kampen from the two solid-torus
complements of the bridge arcs; the amalgamating relators come from three
loops on the surface minus the bridge segment rho and the corner point
Q = (0,0): a small square around Q, a horizontal circuit, and a vertical
circuit.  Each loop is realized as a rational polyline; its x0/y0 word is
read from its crossings with the vertical lattice lines (sides split at
threshold eta) and its x1/y1 word from the horizontal lines (threshold
x_r), with exponents given by the crossing direction (+x and +y count
+1).  The relator of a loop is word_A * word_B^{-1}.

Circuits dodge the bridge segment by leaving the line just before a hit,
running parallel to the arc to its P end, U-turning around the end and
returning on the other side.  Homotopy classes only need continuity and
avoidance of rho and Q, so dodges share one offset and the polylines may
self-intersect.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvariantViolation

F = Fraction


def word_of_polyline(points, eta, x_r, closed=True):
    """Crossing letters of a polyline, in traversal order."""
    for (px, py) in points:
        if px.denominator == 1 or py.denominator == 1:
            raise InvariantViolation("polyline vertex on a lattice line")
    letters = []
    n = len(points) if closed else len(points) - 1
    for i in range(n):
        a = points[i]
        b = points[(i + 1) % len(points)]
        dx = b[0] - a[0]
        dy = b[1] - a[1]
        events = []
        if dx != 0:
            step = 1 if dx > 0 else -1
            k = a[0].__floor__() + 1 if dx > 0 else a[0].__ceil__() - 1
            while (F(k) < b[0]) if dx > 0 else (F(k) > b[0]):
                t = (k - a[0]) / dx
                y = a[1] + t * dy
                fr = y - y.__floor__()
                if fr == 0 or fr == eta:
                    raise InvariantViolation("degenerate vertical crossing")
                events.append((t, "x0" if fr < eta else "y0",
                               1 if dx > 0 else -1))
                k += step
        if dy != 0:
            step = 1 if dy > 0 else -1
            k = a[1].__floor__() + 1 if dy > 0 else a[1].__ceil__() - 1
            while (F(k) < b[1]) if dy > 0 else (F(k) > b[1]):
                t = (k - a[1]) / dy
                x = a[0] + t * dx
                fr = x - x.__floor__()
                if fr == 0 or fr == x_r:
                    raise InvariantViolation("degenerate horizontal crossing")
                events.append((t, "x1" if fr > x_r else "y1",
                               1 if dy > 0 else -1))
                k += step
        events.sort(key=lambda e: e[0])
        letters.extend((letter, sign) for _, letter, sign in events)
    return letters


def split_words(letters):
    """Free-group words of the two solid-torus readings of a traced loop."""
    from .knotgroup import free_reduce
    word_a = free_reduce([(g, e) for g, e in letters if g in ("x0", "y0")])
    word_b = free_reduce([(g, e) for g, e in letters if g in ("x1", "y1")])
    return word_a, word_b


def loop_relator(points, eta, x_r):
    """word_A(loop) * word_B(loop)^{-1}, freely reduced."""
    from .knotgroup import concat, inverse
    word_a, word_b = split_words(word_of_polyline(points, eta, x_r))
    return concat(word_a, inverse(word_b))


def _check_avoids(points, rho0, rho1, closed=True):
    """The polyline must avoid every translate of rho and of the corner."""
    from .geometry import bbox, on_segment, segments_touch
    from .diagram import _translate_range
    import math
    n = len(points) if closed else len(points) - 1
    for i in range(n):
        a = points[i]
        b = points[(i + 1) % len(points)]
        for (vx, vy) in _translate_range(bbox([rho0, rho1]), bbox([a, b])):
            c = (rho0[0] + vx, rho0[1] + vy)
            d = (rho1[0] + vx, rho1[1] + vy)
            if segments_touch(a, b, c, d):
                return False
        for qx in range(math.floor(min(a[0], b[0])) - 1,
                        math.floor(max(a[0], b[0])) + 2):
            for qy in range(math.floor(min(a[1], b[1])) - 1,
                            math.floor(max(a[1], b[1])) + 2):
                if on_segment((F(qx), F(qy)), a, b):
                    return False
    return True


def square_loop(center, eps, ccw=True):
    cx, cy = center
    pts = [(cx - eps, cy + eps), (cx - eps, cy - eps),
           (cx + eps, cy - eps), (cx + eps, cy + eps)]
    return pts if ccw else pts[::-1]


def circuit_with_dodges(bg, axis, level, start, eps):
    """Closed lattice-parallel circuit dodging the bridge arc at its P end.

    axis "h": from (start, level) once around in +x; axis "v": from
    (level, start) once around in +y.  Returns the polyline (closed: last
    point omitted, the closing segment returns to the first point via the
    deck translation being trivial on the torus since the circuit is drawn
    within one lifted period), or None when eps is too coarse.
    """
    from .diagram import _translate_range
    from .geometry import bbox, cross_point, seg_param, segments_cross
    rho0 = (bg.x_r, F(0))
    rho1 = (F(bg.bp.omega + 1), bg.bp.t + bg.eta)
    dxr = rho1[0] - rho0[0]
    dyr = rho1[1] - rho0[1]
    norm = dxr * dxr + dyr * dyr
    if axis == "h":
        a = (start, level)
        b = (start + 1, level)
    else:
        a = (level, start)
        b = (level, start + 1)
    hits = []
    for (vx, vy) in _translate_range(bbox([rho0, rho1]), bbox([a, b])):
        c = (rho0[0] + vx, rho0[1] + vy)
        d = (rho1[0] + vx, rho1[1] + vy)
        if segments_cross(a, b, c, d):
            pt = cross_point(a, b, c, d)
            hits.append((seg_param(a, b, pt), pt, (vx, vy)))
    hits.sort(key=lambda h: h[0])
    points = [a]
    for t, pt, (vx, vy) in hits:
        pend = (rho1[0] + vx, rho1[1] + vy)
        if axis == "h":
            before = (pt[0] - eps, level)
            after = (pt[0] + eps, level)
            ok = points[-1][0] < before[0] and after[0] < b[0]
        else:
            before = (level, pt[1] - eps)
            after = (level, pt[1] + eps)
            ok = points[-1][1] < before[1] and after[1] < b[1]
        if not ok:
            return None
        side_b = _side(rho0, dxr, dyr, before, (vx, vy))
        side_a = _side(rho0, dxr, dyr, after, (vx, vy))
        if side_b == 0 or side_a == 0 or side_b == side_a:
            return None
        pin = (pend[0] - dyr * side_b * eps / norm,
               pend[1] + dxr * side_b * eps / norm)
        pout = (pend[0] - dyr * side_a * eps / norm,
                pend[1] + dxr * side_a * eps / norm)
        beyond = (pend[0] + dxr * eps / norm, pend[1] + dyr * eps / norm)
        points.extend([before, pin, beyond, pout, after])
    points.append(b)
    # close the lifted circuit back to its start: on the torus the two
    # endpoints agree, so return the fundamental-domain polyline with the
    # closing segment handled by the caller through point identification
    return points


def _side(rho0, dxr, dyr, pt, v):
    rx = rho0[0] + v[0]
    ry = rho0[1] + v[1]
    c = dxr * (pt[1] - ry) - dyr * (pt[0] - rx)
    return (c > 0) - (c < 0)


def traced_relators(bg, eps=None):
    """Relators of the knot group from the three surface loops.

    Returns (rel_mu, rel_h, rel_v) where rel_mu comes from the square
    around the corner Q, rel_h from the horizontal circuit just below the
    next lattice line (its D0-crossing runs through the y0 side), and
    rel_v from the vertical circuit just left of the corner (D1-crossing
    through the x1 side).
    """
    bp = bg.bp
    rho0 = (bg.x_r, F(0))
    rho1 = (F(bp.omega + 1), bp.t + bg.eta)
    base_eps = eps or F(1, 16 * (bp.omega + 2) * (bp.t + 2))
    for _ in range(40):
        try:
            out = _trace_all(bg, rho0, rho1, base_eps)
        except InvariantViolation:
            out = None
        if out is not None:
            return out
        base_eps = base_eps / 2
    raise InvariantViolation("could not trace relator loops")


def _trace_all(bg, rho0, rho1, eps):
    sq = square_loop((F(0), F(0)), eps)
    if not _check_avoids(sq, rho0, rho1):
        return None
    level_h = 1 - eps          # fractional height of the horizontal circuit
    level_v = 1 - eps          # fractional x of the vertical circuit
    start_h = bg.x_r / 2
    start_v = bg.eta / 2
    ch = circuit_with_dodges(bg, "h", level_h, start_h, eps)
    cv = circuit_with_dodges(bg, "v", level_v, start_v, eps)
    if ch is None or cv is None:
        return None
    # the lifted circuits close through the deck translation, so only the
    # open polylines need to stay clear
    if not _check_avoids(ch, rho0, rho1, closed=False):
        return None
    if not _check_avoids(cv, rho0, rho1, closed=False):
        return None
    rel_mu = loop_relator(sq, bg.eta, bg.x_r)
    rel_h = _open_relator(ch, bg.eta, bg.x_r)
    rel_v = _open_relator(cv, bg.eta, bg.x_r)
    return rel_mu, rel_h, rel_v


def _open_relator(points, eta, x_r):
    """Relator of a circuit whose lift runs once across the fundamental
    domain (last point = first point + lattice vector)."""
    from .knotgroup import concat, inverse
    letters = word_of_polyline(points, eta, x_r, closed=False)
    word_a, word_b = split_words(letters)
    return concat(word_a, inverse(word_b))
