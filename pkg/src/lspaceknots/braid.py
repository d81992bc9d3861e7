"""Braid words for the one-bridge normal form of positive (1,1) L-space
knots in S^3.

A normal form is a tuple (omega, t, b0, b1) with 1 <= b0 <= omega and
1 <= b1 <= t; it stands for the positive braid

    (s_omega ... s_{omega-b0+1}) (s_omega ... s_1)^b1 (s_{omega-1} ... s_1)^(t-b1)

in B_{omega+1}, whose closure is required to be a knot.  Two rewrites
remove zero values of b0/b1 at the cost of shrinking t or omega; tuples
with b0 = b1 = 0 never close up to a knot.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InvalidInput, NotAKnot
from .laurent import LaurentPolynomial


@dataclass(frozen=True)
class BraidParams:
    omega: int
    t: int
    b0: int
    b1: int

    def __post_init__(self):
        for name in ("omega", "t", "b0", "b1"):
            v = getattr(self, name)
            if not isinstance(v, int):
                raise InvalidInput(f"{name} must be an integer, got {v!r}")

    def is_normalized(self):
        return (self.omega >= 1 and self.t >= 1
                and 1 <= self.b0 <= self.omega and 1 <= self.b1 <= self.t)

    def as_tuple(self):
        return (self.omega, self.t, self.b0, self.b1)


@dataclass(frozen=True)
class BraidWord:
    strand_count: int
    letters: tuple  # of (index, sign) with 1 <= index < strand_count

    def __post_init__(self):
        if self.strand_count < 1:
            raise InvalidInput("strand_count must be positive")
        for i, s in self.letters:
            if not 1 <= i < self.strand_count:
                raise InvalidInput(f"letter index {i} out of range")
            if s not in (1, -1):
                raise InvalidInput(f"letter sign must be +-1, got {s}")

    def writhe(self):
        return sum(s for _, s in self.letters)

    def permutation(self):
        """Image of each strand under the braid, as a tuple (0-based)."""
        perm = list(range(self.strand_count))
        for i, _ in self.letters:
            perm[i - 1], perm[i] = perm[i], perm[i - 1]
        return tuple(perm)

    def text(self):
        return " ".join(f"s{i}" if s == 1 else f"s{i}^-1" for i, s in self.letters)

    @classmethod
    def parse(cls, text, strand_count=None):
        letters = []
        top = 1
        for tok in text.split():
            if not tok.startswith("s"):
                raise InvalidInput(f"bad braid token {tok!r}")
            body = tok[1:]
            if body.endswith("^-1"):
                i, s = int(body[:-3]), -1
            else:
                i, s = int(body), 1
            letters.append((i, s))
            top = max(top, i + 1)
        return cls(strand_count or top, tuple(letters))

    def to_json(self):
        return {"strands": self.strand_count,
                "letters": [[i, s] for i, s in self.letters]}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["strands"]),
                   tuple((int(i), int(s)) for i, s in data["letters"]))


def normalize_params(omega, t, b0, b1):
    """Rewrite (omega, t, b0, b1) into the normal form 1<=b0<=omega,
    1<=b1<=t, shrinking t+omega as far as the two rewrites allow."""
    for v in (omega, t, b0, b1):
        if v < 0:
            raise InvalidInput("parameters must be nonnegative")
    while True:
        if b0 == 0 and b1 == 0:
            raise InvalidInput("b0 = b1 = 0 gives an unknot component")
        if b0 == 0:
            if t == 0 or b1 == 0:
                raise InvalidInput("cannot normalize: t or b1 exhausted")
            t, b1, b0 = t - 1, b1 - 1, omega
            continue
        if b1 == 0:
            if omega == 0 or b0 == 0:
                raise InvalidInput("cannot normalize: omega or b0 exhausted")
            omega, b0, b1 = omega - 1, b0 - 1, t
            continue
        break
    bp = BraidParams(omega, t, b0, b1)
    if not bp.is_normalized():
        raise InvalidInput(f"parameters {bp.as_tuple()} out of range after rewrites")
    return bp


def braid_from_params(bp):
    """The positive braid word of a normal form."""
    if not bp.is_normalized():
        raise InvalidInput(f"{bp.as_tuple()} is not normalized")
    w, t, b0, b1 = bp.omega, bp.t, bp.b0, bp.b1
    letters = []
    letters += [(i, 1) for i in range(w, w - b0, -1)]
    for _ in range(b1):
        letters += [(i, 1) for i in range(w, 0, -1)]
    for _ in range(t - b1):
        letters += [(i, 1) for i in range(w - 1, 0, -1)]
    word = BraidWord(w + 1, tuple(letters))
    expected = b0 + b1 * w + (t - b1) * (w - 1)
    if len(letters) != expected:
        raise AssertionError("letter count mismatch against closed form")
    return word


def closure_components(word):
    """Number of components of the braid closure."""
    perm = word.permutation()
    seen = [False] * word.strand_count
    count = 0
    for i in range(word.strand_count):
        if not seen[i]:
            count += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return count


def is_knot(bp):
    return closure_components(braid_from_params(bp)) == 1


def require_knot(bp):
    n = closure_components(braid_from_params(bp))
    if n != 1:
        raise NotAKnot(f"closure of {bp.as_tuple()} has {n} components")


@dataclass(frozen=True)
class BraidStats:
    genus: int
    crossings: int
    k0: int


def genus_stats(bp):
    """Seifert genus of the closure with crossing and framing counts.

    g = (t*omega - t - omega + b0 + b1) / 2, the Bennequin bound attained
    by positive braid closures; k0 = crossings + t is the power of the
    meridian relating the bridge word h_omega g_1 to the longitude.
    """
    if not bp.is_normalized():
        raise InvalidInput(f"{bp.as_tuple()} is not normalized")
    require_knot(bp)
    w, t, b0, b1 = bp.as_tuple()
    crossings = b0 + b1 * w + (t - b1) * (w - 1)
    num = t * w - t - w + b0 + b1
    if num % 2 != 0:
        raise AssertionError("odd genus numerator for a knot closure")
    g = num // 2
    if g != (crossings - (w + 1) + 1) // 2 or (crossings - w) % 2 != 0:
        raise AssertionError("genus formula disagrees with Seifert count")
    k0 = t * w + b0 + b1
    if k0 != crossings + t:
        raise AssertionError("k0 disagrees with crossings + t")
    return BraidStats(genus=g, crossings=crossings, k0=k0)


def lspace_surgery_range(bp):
    """Threshold 2g-1: rational surgeries with slope >= 2g-1 give L-spaces."""
    g = genus_stats(bp).genus
    return {
        "threshold": 2 * g - 1,
        "statement": f"p/q surgery yields an L-space if and only if p/q >= {2 * g - 1}",
    }


def normalized_knot_params(max_sum):
    """All normalized knot-valid (omega, t, b0, b1) with t + omega <= max_sum,
    in lexicographic order of (omega + t, omega, b0, b1)."""
    out = []
    for total in range(2, max_sum + 1):
        for w in range(1, total):
            t = total - w
            for b0 in range(1, w + 1):
                for b1 in range(1, t + 1):
                    bp = BraidParams(w, t, b0, b1)
                    if is_knot(bp):
                        out.append(bp)
    return out


def torus_specialization(bp):
    """For b0 = omega, b1 = t the word is (s_omega ... s_1)^(t+1); its closure
    is the (omega+1, t+1) torus link, a knot iff gcd(omega+1, t+1) = 1."""
    if bp.b0 != bp.omega or bp.b1 != bp.t:
        return None
    p, q = bp.omega + 1, bp.t + 1
    return (p, q) if gcd(p, q) == 1 else None
