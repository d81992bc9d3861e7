"""Complement regions of a diagram and structures living on them.

The two curves cut the torus into p disk regions (p = crossing count):
V - E + F = 0 with V = p and E = 2p.  Faces are traced combinatorially
from the rotation system at the crossings and realized geometrically as
embedded polygons in the universal cover, which gives exact point
location for the basepoints and exact area bookkeeping.

On top of the face structure this module provides:

* the dual directed graph whose edges cross a curve from its right side
  to its left side, and shortest positive paths in it;
* relative Alexander gradings of the crossings, solved from the corner
  equations for domains connecting two crossings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import (alpha_subpath, analyze, beta_subarc_points,
                      curve_segments, shifted_crossing, translates_inside,
                      _translate_range)
from .errors import InvariantViolation, PositivePathNotFound
from .geometry import bbox, point_in_polygon, polygon_area2

F = Fraction

# half-edge encoding: (curve, arc_index, direction) with direction +1 along
# the curve orientation; alpha arc i runs from alpha_order[i] to
# alpha_order[i+1], beta arc k runs from crossing k to crossing k+1.


def _twin(h):
    return (h[0], h[1], -h[2])


@dataclass
class Arrangement:
    diagram: object
    data: object
    faces: tuple            # tuple of tuples of half-edges
    face_of: dict           # half-edge -> face index
    face_polygons: tuple    # lifted polygon per face
    w_face: int
    z_face: int
    alpha_rank: dict        # crossing index -> position in alpha_order

    @property
    def count(self):
        return len(self.faces)


def _rotation_lists(data):
    """CCW-ordered outgoing half-edges at every crossing."""
    p = data.count
    alpha_rank = {data.alpha_order[i]: i for i in range(p)}
    rot = {}
    for k in range(p):
        c = data.crossings[k]
        i = alpha_rank[k]
        a_out = ("a", i, 1)
        a_in_rev = ("a", (i - 1) % p, -1)
        b_out = ("b", k, 1)
        b_in_rev = ("b", (k - 1) % p, -1)
        if c.sign == 1:
            rot[k] = [a_out, b_out, a_in_rev, b_in_rev]
        else:
            rot[k] = [a_out, b_in_rev, a_in_rev, b_out]
    return rot, alpha_rank


def _halfedge_target(data, alpha_rank, h):
    curve, idx, direction = h
    p = data.count
    if curve == "a":
        rank = (idx + 1) % p if direction == 1 else idx
        return data.alpha_order[rank]
    return (idx + 1) % p if direction == 1 else idx


def _trace_faces(data):
    rot, alpha_rank = _rotation_lists(data)
    p = data.count
    ray_pos = {}
    for k, rays in rot.items():
        for pos, h in enumerate(rays):
            ray_pos[(k, h)] = pos
    halfedges = []
    for i in range(p):
        halfedges += [("a", i, 1), ("a", i, -1), ("b", i, 1), ("b", i, -1)]
    next_he = {}
    for h in halfedges:
        v = _halfedge_target(data, alpha_rank, h)
        tw = _twin(h)
        pos = ray_pos[(v, tw)]
        next_he[h] = rot[v][(pos - 1) % 4]
    faces = []
    face_of = {}
    seen = set()
    for h in halfedges:
        if h in seen:
            continue
        cycle = []
        cur = h
        while cur not in seen:
            seen.add(cur)
            face_of[cur] = len(faces)
            cycle.append(cur)
            cur = next_he[cur]
        if cur != h:
            raise AssertionError("face trace did not close")
        faces.append(tuple(cycle))
    if len(faces) != p:
        raise AssertionError(
            f"expected {p} regions, traced {len(faces)} (diagram not filling?)")
    return faces, face_of, alpha_rank


def _halfedge_polyline(d, data, alpha_rank, h):
    """Lifted polyline of a half-edge starting at its source crossing."""
    curve, idx, direction = h
    p = data.count
    if curve == "b":
        pts = beta_subarc_points(d, data, idx, idx + 1)
        return pts if direction == 1 else pts[::-1]
    u = data.alpha_order[idx]
    vrank = (idx + 1) % p
    v = data.alpha_order[vrank]
    cu = data.crossings[u]
    cv = data.crossings[v]
    # walk forward along alpha from cu to the next crossing position
    gap = (cv.alpha_pos - cu.alpha_pos) % 1
    if gap == 0:
        gap = Fraction(1)  # single crossing: full circle
    pts = alpha_subpath(d, cu, cu.alpha_lift + gap)
    return pts if direction == 1 else pts[::-1]


def _face_polygon(d, data, alpha_rank, cycle):
    pts = []
    offset = (F(0), F(0))
    for h in cycle:
        arc = _halfedge_polyline(d, data, alpha_rank, h)
        if pts:
            shift = (pts[-1][0] - (arc[0][0] + offset[0]),
                     pts[-1][1] - (arc[0][1] + offset[1]))
            offset = (offset[0] + shift[0], offset[1] + shift[1])
        seg = [(x + offset[0], y + offset[1]) for (x, y) in arc]
        if pts:
            seg = seg[1:]
        pts.extend(seg)
    first, last = pts[0], pts[-1]
    if (last[0] - first[0], last[1] - first[1]) != (0, 0):
        raise AssertionError("face boundary lift does not close")
    poly = pts[:-1]
    # drop repeated corner points (arcs meeting at crossings)
    out = [poly[0]]
    for q in poly[1:]:
        if q != out[-1]:
            out.append(q)
    if out[0] == out[-1]:
        out.pop()
    return tuple(out)


def build_arrangement(d, data=None):
    if data is None:
        data = analyze(d)
    faces, face_of, alpha_rank = _trace_faces(data)
    polys = tuple(_face_polygon(d, data, alpha_rank, cyc) for cyc in faces)
    total2 = sum(abs(polygon_area2(list(poly))) for poly in polys)
    if total2 != 2:
        raise AssertionError(
            f"face areas sum to {total2}/2, expected 1: bad arrangement")
    w_face = z_face = None
    for fi, poly in enumerate(polys):
        if translates_inside(d.w, list(poly)):
            if w_face is not None:
                raise AssertionError("w located in two faces")
            w_face = fi
        if translates_inside(d.z, list(poly)):
            if z_face is not None:
                raise AssertionError("z located in two faces")
            z_face = fi
    if w_face is None or z_face is None:
        raise AssertionError("basepoint not located in any face")
    return Arrangement(diagram=d, data=data, faces=faces, face_of=face_of,
                       face_polygons=polys, w_face=w_face, z_face=z_face,
                       alpha_rank=alpha_rank)


# ---------------------------------------------------------------------------
# positive paths
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PositivePath:
    """Dual-graph path from the w region to the z region all of whose
    crossings pass a curve from its right side to its left side."""

    region_sequence: tuple
    crossings: tuple     # half-edges ("a"/"b", arc index, +1), one per step

    def alpha_arcs_crossed(self):
        return [h[1] for h in self.crossings if h[0] == "a"]

    def beta_arcs_crossed(self):
        return [h[1] for h in self.crossings if h[0] == "b"]


def find_positive_path(arr):
    """Breadth-first search for a shortest positive path from the w region
    to the z region.  Raises PositivePathNotFound when unreachable (which
    Theorem-level reasoning only allows for incoherent diagrams)."""
    from collections import deque
    p = arr.count
    adj = [[] for _ in range(p)]
    for curve in ("a", "b"):
        for idx in range(arr.data.count):
            h = (curve, idx, 1)
            left = arr.face_of[h]
            right = arr.face_of[_twin(h)]
            adj[right].append((left, h))
    start, goal = arr.w_face, arr.z_face
    prev = {start: None}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if cur == goal:
            break
        for nxt, h in adj[cur]:
            if nxt not in prev:
                prev[nxt] = (cur, h)
                queue.append(nxt)
    if goal not in prev:
        raise PositivePathNotFound(
            "no right-to-left path from the w region to the z region")
    regions = []
    steps = []
    cur = goal
    while cur is not None:
        regions.append(cur)
        step = prev[cur]
        if step is None:
            break
        cur, h = step
        steps.append(h)
    return PositivePath(region_sequence=tuple(reversed(regions)),
                        crossings=tuple(reversed(steps)))


# ---------------------------------------------------------------------------
# relative Alexander gradings
# ---------------------------------------------------------------------------


def _corner_faces(arr, k):
    """Faces at the four sectors around crossing k, as (Q1, Q2, Q3, Q4):
    Q1 between alpha-out and beta-out rays, Q2 between beta-out and
    alpha-in, Q3 between alpha-in and beta-in, Q4 between beta-in and
    alpha-out.  The sector between a ray and its CCW successor is the face
    of the outgoing half-edge realizing the ray.
    """
    data = arr.data
    i = arr.alpha_rank[k]
    a_out = ("a", i, 1)
    a_in = ("a", (i - 1) % data.count, 1)
    b_out = ("b", k, 1)
    b_in = ("b", (k - 1) % data.count, 1)
    if data.crossings[k].sign == 1:
        # CCW rays: a_out, b_out, -a_in, -b_in
        q1 = arr.face_of[a_out]
        q2 = arr.face_of[b_out]
        q3 = arr.face_of[_twin(a_in)]
        q4 = arr.face_of[_twin(b_in)]
    else:
        # CCW rays: a_out, -b_in, -a_in, b_out
        q1 = arr.face_of[b_out]
        q2 = arr.face_of[_twin(a_in)]
        q3 = arr.face_of[_twin(b_in)]
        q4 = arr.face_of[a_out]
    return q1, q2, q3, q4


def relative_alexander_gradings(arr):
    """Grading A(crossing) - A(crossing 0) for every crossing, from domain
    corner equations: a 2-chain on the faces whose alpha-boundary runs from
    one crossing to another changes A by its multiplicity at z minus at w.

    The corner relation at a crossing v for a domain from x to y is
    (Q1 - Q2 + Q3 - Q4)(v) = sign(v) * (delta_x - delta_y)(v); the sign
    vector spans the cokernel, so these right-hand sides are exactly the
    consistent ones.
    """
    data = arr.data
    p = data.count
    if p == 1:
        return {0: Fraction(0)}
    # corner coefficient matrix: row per crossing, column per face
    rows = []
    for k in range(p):
        q1, q2, q3, q4 = _corner_faces(arr, k)
        row = [Fraction(0)] * p
        row[q1] += 1
        row[q2] -= 1
        row[q3] += 1
        row[q4] -= 1
        rows.append(row)
    # gauge: pin face 0 to multiplicity 0
    # solve rows * m = sign .* (e_x - e_0) for each x; one elimination,
    # many right-hand sides (column x holds sign(k) * delta_{k==x})
    n = p
    signs = [data.crossings[k].sign for k in range(p)]
    aug = [rows[k][:] + [Fraction(signs[k]) if k == x else Fraction(0)
                         for x in range(p)] for k in range(p)]
    # append gauge row: m_0 = 0
    aug.append([Fraction(1)] + [Fraction(0)] * (n - 1) + [Fraction(0)] * p)
    m_rows = len(aug)
    width = n + p
    piv_cols = []
    r = 0
    for col in range(n):
        piv = None
        for rr in range(r, m_rows):
            if aug[rr][col] != 0:
                piv = rr
                break
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [v * inv for v in aug[r]]
        for rr in range(m_rows):
            if rr != r and aug[rr][col] != 0:
                f = aug[rr][col]
                aug[rr] = [a - f * b for a, b in zip(aug[rr], aug[r])]
        piv_cols.append(col)
        r += 1
    rank = r
    grading = {0: Fraction(0)}
    for x in range(1, p):
        m = [Fraction(0)] * n
        ok = True
        for rr in range(rank):
            col = piv_cols[rr]
            m[col] = aug[rr][n + x] - aug[rr][n + 0]
        # verify (cheap): rows * m == sign .* (e_x - e_0)
        for k in range(p):
            s = sum(rows[k][c] * m[c] for c in range(n) if m[c] != 0)
            want = signs[k] * ((1 if k == x else 0) - (1 if k == 0 else 0))
            if s != want:
                raise InvariantViolation(
                    f"no domain connects crossing {x} to crossing 0")
        grading[x] = m[arr.z_face] - m[arr.w_face]
    return grading
