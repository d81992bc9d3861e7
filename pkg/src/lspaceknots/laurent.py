"""Integer Laurent polynomials in one variable t.

Coefficients are a sparse {exponent: coefficient} map.  Values are
immutable; arithmetic returns new objects.  Alexander polynomials are kept
in the symmetric normalization: invariant under t -> 1/t with value +1 at
t = 1.
"""

from __future__ import annotations


class LaurentPolynomial:

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            for e, c in coeffs.items():
                if c != 0:
                    data[int(e)] = int(c)
        self.coeffs = data

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def t_power(cls, e, c=1):
        return cls({e: c})

    @classmethod
    def from_list(cls, coeffs, low=0):
        """Polynomial with the given coefficients starting at exponent low."""
        return cls({low + i: c for i, c in enumerate(coeffs)})

    # -- basic queries ------------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        """Top exponent; None for the zero polynomial."""
        return max(self.coeffs) if self.coeffs else None

    def valuation(self):
        return min(self.coeffs) if self.coeffs else None

    def __getitem__(self, e):
        return self.coeffs.get(e, 0)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        return isinstance(other, LaurentPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self.coeffs.items()})
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by t^k."""
        return LaurentPolynomial({e + k: c for e, c in self.coeffs.items()})

    def reciprocal(self):
        """Substitute t -> 1/t."""
        return LaurentPolynomial({-e: c for e, c in self.coeffs.items()})

    def __call__(self, value):
        return sum(c * value ** e for e, c in self.coeffs.items())

    def divide_exact(self, other):
        """Quotient self/other when the division is exact; raises otherwise."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPolynomial.zero()
        rem = dict(self.coeffs)
        db, vb = other.degree(), other.valuation()
        lead = other.coeffs[db]
        out = {}
        while rem:
            dr = max(rem)
            c, r = divmod(rem[dr], lead)
            if r != 0:
                raise ValueError("inexact Laurent division")
            e = dr - db
            out[e] = c
            for eb, cb in other.coeffs.items():
                k = eb + e
                v = rem.get(k, 0) - cb * c
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPolynomial(out)

    # -- normalization ------------------------------------------------------

    def is_symmetric(self):
        return self.coeffs == self.reciprocal().coeffs

    def symmetric_normalized(self):
        """Unit-normalize: shift by t^k and negate so the result is symmetric
        under t -> 1/t and evaluates to +1 at t = 1.

        Raises if no unit multiple is symmetric or the value at 1 is not
        a unit (neither happens for Alexander polynomials of knots).
        """
        if self.is_zero():
            raise ValueError("zero polynomial cannot be normalized")
        d, v = self.degree(), self.valuation()
        if (d + v) % 2 != 0:
            raise ValueError("no symmetric unit multiple: odd exponent span")
        p = self.shift(-(d + v) // 2)
        if not p.is_symmetric():
            raise ValueError("polynomial is not symmetric up to units")
        at1 = p(1)
        if at1 == 1:
            return p
        if at1 == -1:
            return -p
        raise ValueError(f"value at t=1 is {at1}, not a unit")

    # -- text form ----------------------------------------------------------

    def text(self):
        """Canonical text form, ascending exponents: 't^-1 - 1 + t'."""
        if self.is_zero():
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                body = str(abs(c))
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    @classmethod
    def parse(cls, text):
        """Inverse of text()."""
        text = text.strip()
        if text == "0":
            return cls.zero()
        tokens = text.replace("- ", "-").replace("+ ", "").split()
        coeffs = {}
        for tok in tokens:
            sign = 1
            if tok.startswith("-"):
                sign = -1
                tok = tok[1:]
            if "*" in tok:
                mag, var = tok.split("*")
                c = int(mag)
            elif tok.startswith("t"):
                c, var = 1, tok
            else:
                c, var = int(tok), None
            if var is None:
                e = 0
            elif var == "t":
                e = 1
            else:
                e = int(var[2:])
            coeffs[e] = coeffs.get(e, 0) + sign * c
        return cls(coeffs)

    def to_json(self):
        return {str(e): c for e, c in sorted(self.coeffs.items())}

    @classmethod
    def from_json(cls, data):
        return cls({int(e): int(c) for e, c in data.items()})

    def __repr__(self):
        return f"LaurentPolynomial({self.text()!r})"


def poly_content(p):
    """gcd of the integer coefficients (positive), 0 for the zero polynomial."""
    from math import gcd
    g = 0
    for c in p.coeffs.values():
        g = gcd(g, abs(c))
    return g


def laurent_gcd(polys):
    """gcd of integer Laurent polynomials, up to the unit normalization
    +-t^k (returned with positive leading coefficient and valuation 0).

    Computed as gcd of contents times the primitive part of a monic
    rational gcd, which is enough over Z[t, 1/t] at this scale.
    """
    from math import gcd as int_gcd
    from fractions import Fraction

    nonzero = [p for p in polys if not p.is_zero()]
    if not nonzero:
        return LaurentPolynomial.zero()

    def to_dense(p):
        v = p.valuation()
        d = p.degree()
        return [Fraction(p[e]) for e in range(v, d + 1)]

    def trim(a):
        while a and a[-1] == 0:
            a.pop()
        return a

    def poly_mod(a, b):
        a = a[:]
        while len(a) >= len(b) and trim(a):
            f = a[-1] / b[-1]
            off = len(a) - len(b)
            for i, cb in enumerate(b):
                a[off + i] -= f * cb
            a = trim(a)
        return a

    dense = trim(to_dense(nonzero[0]))
    for p in nonzero[1:]:
        other = trim(to_dense(p))
        while other:
            dense, other = other, poly_mod(dense, other)
    # primitive integer form
    den_lcm = 1
    for c in dense:
        den_lcm = den_lcm * c.denominator // int_gcd(den_lcm, c.denominator)
    ints = [int(c * den_lcm) for c in dense]
    g = 0
    for c in ints:
        g = int_gcd(g, abs(c))
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    prim = LaurentPolynomial.from_list(ints, 0)
    content = 0
    for p in nonzero:
        content = int_gcd(content, poly_content(p))
    return prim * content
