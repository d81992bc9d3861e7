"""Coherence of diagrams and the constructive pipeline built on it.

A diagram is coherent when some choice of orientations induces a
consistent boundary orientation on every embedded bigon.  With the alpha
orientation fixed, each bigon is coherent under exactly one of the two
beta orientations, so the diagram is coherent iff all bigons agree; a
conflicting pair is the witness otherwise.  Coherent reduced diagrams in
S^3 present L-space knots, positively or negatively according to the sign
of the intersection number under the coherent orientation.

The pipeline operations (positive paths between the basepoints, the
two-sided length inequality on band rectangles, the closed positive
curve) realize the constructive steps that turn a coherent reduced
diagram into a braid description, and are checked exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bigons import enumerate_bigons, is_reduced, reduce, reduce_trace
from .diagram import (BAND_DOWN, BAND_UP, RAINBOW_W, RAINBOW_Z, CurveDiagram,
                      ambient, analyze)
from .errors import (Incoherent, InvalidInput, InvariantViolation, NotReduced,
                     PositivePathNotFound)
from .regions import (Arrangement, PositivePath, build_arrangement, _twin)

F = Fraction


@dataclass(frozen=True)
class CoherenceVerdict:
    """Outcome of the bigon orientation check.

    When coherent: beta_orientation is the choice (+1 stored, -1 reversed)
    under which every bigon boundary is consistently oriented, and sign is
    the sign of the alpha.beta intersection number under that choice.
    When incoherent: witness is a pair of bigons demanding opposite beta
    orientations (with the alpha orientation fixed, a single bigon is
    coherent under exactly one choice, so incoherence is always witnessed
    by a conflicting pair).
    """

    coherent: bool
    beta_orientation: int | None = None
    sign: int | None = None
    witness: tuple | None = None
    bigon_count: int = 0


def check_coherence(d, data=None, bigons=None):
    """Try both beta orientations against the embedded bigons."""
    if data is None:
        data = analyze(d)
    if bigons is None:
        bigons = enumerate_bigons(d, data)
    base_sign = 1 if data.sign_sum > 0 else -1
    demands = {}
    for b in bigons:
        (o,) = b.coherent_under
        demands.setdefault(o, b)
    if len(demands) <= 1:
        orientation = next(iter(demands), 1)
        return CoherenceVerdict(coherent=True, beta_orientation=orientation,
                                sign=base_sign * orientation,
                                bigon_count=len(bigons))
    return CoherenceVerdict(coherent=False,
                            witness=(demands[1], demands[-1]),
                            bigon_count=len(bigons))


def verified_reduce(d):
    """Reduce the diagram, checking after every single bigon removal that
    the coherence verdict (coherent flag and sign) is unchanged.

    Returns (trace, verdicts); raises InvariantViolation if any step
    changes the verdict.
    """
    trace = reduce_trace(d)
    verdicts = [check_coherence(step) for step in trace]
    first = verdicts[0]
    for i, v in enumerate(verdicts[1:], start=1):
        if v.coherent != first.coherent or (
                v.coherent and v.sign != first.sign):
            raise InvariantViolation(
                f"bigon removal step {i} changed the coherence verdict "
                f"from {(first.coherent, first.sign)} to "
                f"{(v.coherent, v.sign)}")
    return trace, verdicts


# ---------------------------------------------------------------------------
# positive paths
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrientedPositivePath:
    """Positive path together with the beta orientation it is positive for
    (the alpha orientation is always the stored one)."""

    path: PositivePath
    beta_orientation: int
    arrangement: Arrangement


def find_positive_path(d, data=None, require_reduced=True):
    """Shortest path of regions from w to z crossing every curve from its
    right side to its left side.

    Tries the stored beta orientation first, then the reversed one (the
    guaranteed orientation makes every rainbow run against the coherent
    one).  Failure of both is only legal for incoherent diagrams; on a
    coherent diagram it aborts loudly.
    """
    if data is None:
        data = analyze(d)
    if require_reduced and not is_reduced(d, data):
        raise NotReduced("positive paths are built on reduced diagrams")
    arr = build_arrangement(d, data)
    last_exc = None
    for orientation in (1, -1):
        try:
            path = _positive_bfs(arr, orientation)
            return OrientedPositivePath(path=path,
                                        beta_orientation=orientation,
                                        arrangement=arr)
        except PositivePathNotFound as exc:
            last_exc = exc
    verdict = check_coherence(d, data)
    if verdict.coherent:
        raise InvariantViolation(
            "no positive path on a coherent reduced diagram: this "
            "contradicts the rectangle-growth argument and is a defect")
    raise last_exc


def _positive_bfs(arr, beta_orientation):
    from collections import deque
    adj = [[] for _ in range(arr.count)]
    for curve in ("a", "b"):
        o = 1 if curve == "a" else beta_orientation
        for idx in range(arr.data.count):
            h = (curve, idx, o)
            left = arr.face_of[h]
            right = arr.face_of[_twin(h)]
            adj[right].append((left, (curve, idx, 1)))
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
    regions = [goal]
    steps = []
    cur = goal
    while prev[cur] is not None:
        cur, h = prev[cur]
        regions.append(cur)
        steps.append(h)
    return PositivePath(region_sequence=tuple(reversed(regions)),
                        crossings=tuple(reversed(steps)))


# ---------------------------------------------------------------------------
# rectangle inequality
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BandRectangle:
    down_strand: int
    up_strand: int
    l3: int
    l4: int


def check_rectangle_inequality(d, opath=None, data=None):
    """Lengths of the two alpha edges of every rectangle spanned by a
    downward and an upward band strand, under the assignment giving unit
    length to plain inter-crossing segments and length 2q+1 to segments
    met by the positive path.

    Raises InvariantViolation if any rectangle has l3 > l4; for coherent
    reduced diagrams the inequality always holds.
    """
    if data is None:
        data = analyze(d)
    if opath is None:
        opath = find_positive_path(d, data)
    path = opath.path
    p = data.count
    q_w = data.rainbow_count(RAINBOW_W)
    q_z = data.rainbow_count(RAINBOW_Z)
    q = max(q_w, q_z)
    positions = sorted((data.crossings[k].alpha_pos, k) for k in range(p))
    pos_rank = {k: i for i, (_, k) in enumerate(positions)}
    crossed_arc_ranks = {h[1] for h in path.crossings if h[0] == "a"}
    # segment i runs from positions[i] to positions[i+1]; its alpha-arc
    # index in the arrangement equals i via alpha_order ranks
    seg_len = [1 + 2 * q * (1 if i in crossed_arc_ranks else 0)
               for i in range(p)]

    def arc_length(rank_from, rank_to):
        """Total assigned length going in the alpha direction."""
        total = 0
        i = rank_from
        while i != rank_to:
            total += seg_len[i]
            i = (i + 1) % p
        return total

    ups = [k for k in range(p) if data.strands[k] == BAND_UP]
    downs = [k for k in range(p) if data.strands[k] == BAND_DOWN]
    out = []
    for e1 in downs:
        # lower foot of a downward strand is its endpoint, crossing e1+1
        e1_bottom = pos_rank[(e1 + 1) % p]
        e1_top = pos_rank[e1]
        for e2 in ups:
            e2_bottom = pos_rank[e2]
            e2_top = pos_rank[(e2 + 1) % p]
            l3 = arc_length(e1_bottom, e2_bottom)
            l4 = arc_length(e1_top, e2_top)
            out.append(BandRectangle(down_strand=e1, up_strand=e2,
                                     l3=l3, l4=l4))
    bad = [r for r in out if r.l3 > r.l4]
    if bad:
        raise InvariantViolation(
            f"rectangle inequality fails for {len(bad)} band pairs, "
            f"first: {bad[0]}")
    return out
