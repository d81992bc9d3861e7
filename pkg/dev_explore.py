"""Dev exploration: find the convention combo making Fox = Burau."""
from fractions import Fraction as F
from itertools import product

from lspaceknots.braid import BraidParams, braid_from_params, is_knot
from lspaceknots.knotgroup import _raw_geometry, MU, MU_ALT, free_reduce, inverse, concat, power
from lspaceknots.invariants import burau_alexander, fox_alexander
from lspaceknots.laurent import LaurentPolynomial


class Pres:
    def __init__(self, gens, degrees, relators):
        self.generators = gens
        self.degrees = degrees
        self.relators = relators


def build(bp, d0, d1, knobs):
    (g_rev, h_rev, relg_desc, relh_desc, g_shape, h_shape,
     mu_alt_flip, x0_low, x1_high) = knobs
    w, t = bp.omega, bp.t

    def letter0(l):
        if x0_low:
            return l
        return "x0" if l == "y0" else "y0"

    def letter1(l):
        if x1_high:
            return l
        return "x1" if l == "y1" else "y1"

    g_words = []
    for i in range(1, t + 1):
        tau_i = d1[i - 1][0]
        letters = [letter0(l) for tau, l in d0 if tau > tau_i]
        if g_rev:
            letters = letters[::-1]
        g_words.append(tuple((g, 1) for g in letters))
    h_words = []
    for i in range(1, w + 1):
        tau_i = d0[i - 1][0]
        letters = [letter1(l) for tau, l in d1 if tau < tau_i]
        if h_rev:
            letters = letters[::-1]
        h_words.append(tuple((g, 1) for g in letters))
    gs = g_words[::-1] if relg_desc else g_words
    hs = h_words[::-1] if relh_desc else h_words
    if g_shape:
        factors_g = [concat(g, MU, inverse(g)) for g in gs]
    else:
        factors_g = [concat(inverse(g), MU, g) for g in gs]
    if h_shape:
        factors_h = [concat(inverse(h), MU, h) for h in hs]
    else:
        factors_h = [concat(h, MU, inverse(h)) for h in hs]
    rel_g = concat((("y0", -1),), *factors_g)
    rel_h = concat((("y1", -1),), *factors_h)
    mualt = MU_ALT if not mu_alt_flip else free_reduce((("x1", 1), ("y1", -1)))
    rel_mu = concat(MU, inverse(mualt))
    degrees = {"x0": t + 1, "y0": t, "x1": w + 1, "y1": w}
    for rel in (rel_g, rel_h, rel_mu):
        if sum(e * degrees[g] for g, e in rel) != 0:
            return None
    return Pres(("x0", "y0", "x1", "y1"), degrees,
                (rel_g, rel_h, rel_mu)), g_words, h_words


def explore(bp, knob_list=None, max_wins=None):
    target = burau_alexander(braid_from_params(bp))
    w, t = bp.omega, bp.t
    N = 2 * (w + 1) * (t + 1)
    placements = []
    for i in range(1, N):
        for j in range(1, N):
            raw = _raw_geometry(bp, F(i, N), F(j, N))
            if raw is not None:
                placements.append((F(i, N), F(j, N), raw))
    wins = []
    combos = knob_list or list(product([0, 1], repeat=9))
    for knobs in combos:
        for x_r, eta, (d0, d1) in placements:
            got = build(bp, d0, d1, knobs)
            if got is None:
                continue
            pres, g_words, h_words = got
            lam = concat(power(MU, -(t * w + bp.b0 + bp.b1)),
                         h_words[-1], g_words[0])
            if sum(e * pres.degrees[g] for g, e in lam) != 0:
                continue
            try:
                fx = fox_alexander(pres)
            except Exception:
                continue
            if fx == target:
                a0 = sum(1 for _, l in d0 if l == "x0")
                a1 = sum(1 for _, l in d1 if l == "x1")
                wins.append((knobs, x_r, eta, a0, a1))
                if max_wins and len(wins) >= max_wins:
                    return wins
    return wins


if __name__ == "__main__":
    import sys
    tup = tuple(int(x) for x in sys.argv[1:5]) if len(sys.argv) > 4 else (1, 2, 1, 2)
    bp = BraidParams(*tup)
    wins = explore(bp)
    from collections import Counter
    combos = Counter(w[0] for w in wins)
    print(f"{tup}: {len(wins)} wins across {len(combos)} knob combos")
    for combo, cnt in combos.most_common(20):
        print("  knobs", combo, "x", cnt)
