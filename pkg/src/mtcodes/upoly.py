"""Univariate polynomials over GF(q).

Coefficients are stored low degree first with no trailing zeros, so the
degree of the zero polynomial is the explicit sentinel NEG_INF rather than
-1.  Polynomials are immutable; arithmetic returns new objects.

The text form is ``c0 + c1*x + c2*x^2 + ...`` with zero terms omitted and
unit coefficients contracted (``w + x``, ``x^6 + 1``).  The parser accepts
the same grammar plus binary/unary minus, arbitrary whitespace, and terms in
any order.

Factorization is square-free split, then distinct-degree, then randomized
equal-degree splitting.  The random choices come from a generator seeded per
call, so identical inputs always factor identically; the seed participates
in any report that includes a factorization.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import ParseError
from .gf import Field, _split_sum

NEG_INF = float("-inf")

# Seed for the equal-degree splitting RNG; recorded in CLI reports.
FACTOR_SEED = 2024


class Poly:
    """Immutable univariate polynomial over a Field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not 0 <= c < field.q:
                raise ValueError(f"coefficient {c} not in GF({field.q})")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(field: Field) -> "Poly":
        return Poly(field, ())

    @staticmethod
    def one(field: Field) -> "Poly":
        return Poly(field, (1,))

    @staticmethod
    def constant(field: Field, c: int) -> "Poly":
        return Poly(field, (c,))

    @staticmethod
    def x(field: Field) -> "Poly":
        return Poly(field, (0, 1))

    @staticmethod
    def monomial(field: Field, degree: int, c: int = 1) -> "Poly":
        return Poly(field, (0,) * degree + (c,))

    @staticmethod
    def binomial(field: Field, m: int, lam: int) -> "Poly":
        """x^m - lam, the block modulus of a twisted block."""
        if m < 1:
            raise ValueError("degree must be positive")
        return Poly(field, (field.neg(lam),) + (0,) * (m - 1) + (1,))

    # -- basics ---------------------------------------------------------------

    @property
    def degree(self):
        """Degree as an int, or NEG_INF for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lead(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        add = f.add
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return Poly(f, out)

    def __neg__(self) -> "Poly":
        f = self.field
        return Poly(f, (f.neg(c) for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(f)
        out = [0] * (len(a) + len(b) - 1)
        add, mul = f.add, f.mul
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = add(out[i + j], mul(ai, bj))
        return Poly(f, out)

    def scale(self, c: int) -> "Poly":
        f = self.field
        if c == 0:
            return Poly.zero(f)
        mul = f.mul
        return Poly(f, (mul(c, a) for a in self.coeffs))

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if self.is_zero() or k == 0:
            return self
        return Poly(self.field, (0,) * k + self.coeffs)

    def __divmod__(self, other: "Poly"):
        f = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        if len(rem) - 1 < db:
            return Poly.zero(f), self
        inv_lead = f.inv(other.lead)
        quot = [0] * (len(rem) - db)
        sub, mul = f.sub, f.mul
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            qc = mul(c, inv_lead)
            quot[k - db] = qc
            for i, bi in enumerate(other.coeffs):
                if bi:
                    rem[k - db + i] = sub(rem[k - db + i], mul(qc, bi))
        return Poly(f, quot), Poly(f, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def monic(self) -> "Poly":
        if self.is_zero() or self.lead == 1:
            return self
        return self.scale(self.field.inv(self.lead))

    def pow_mod(self, n: int, mod: "Poly") -> "Poly":
        result = Poly.one(self.field)
        base = self % mod
        while n:
            if n & 1:
                result = (result * base) % mod
            base = (base * base) % mod
            n >>= 1
        return result

    def evaluate(self, a: int) -> int:
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, a), c)
        return acc

    def derivative(self) -> "Poly":
        f = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            # i * c means c added to itself i times: (i mod p) scalar
            out.append(f.mul(i % f.p, self.coeffs[i]))
        return Poly(f, out)

    def map_coeffs(self, fn) -> "Poly":
        return Poly(self.field, (fn(c) for c in self.coeffs))

    def frobenius(self, k: int) -> "Poly":
        """Apply sigma^k to every coefficient."""
        f = self.field
        return self.map_coeffs(lambda c: f.frobenius(c, k))

    def pth_root(self) -> "Poly":
        """Inverse of g -> g^p; valid when the derivative vanishes."""
        f = self.field
        p = f.p
        out = []
        for i in range(0, len(self.coeffs), p):
            out.append(f.frobenius(self.coeffs[i], f.e - 1))
        return Poly(f, out)

    # -- text form --------------------------------------------------------

    def __str__(self):
        if self.is_zero():
            return "0"
        f = self.field
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            lit = f.format_element(c)
            if i == 0:
                terms.append(lit)
            else:
                xpart = "x" if i == 1 else f"x^{i}"
                terms.append(xpart if c == 1 else f"{lit}*{xpart}")
        return " + ".join(terms)

    def __repr__(self):
        return f"Poly({self})"

    @staticmethod
    def parse(field: Field, text: str) -> "Poly":
        coeffs: list[int] = []
        for sign, term in _split_sum(text):
            c, d = _parse_poly_term(field, term)
            if sign < 0:
                c = field.neg(c)
            while len(coeffs) <= d:
                coeffs.append(0)
            coeffs[d] = field.add(coeffs[d], c)
        return Poly(field, coeffs)


def _parse_poly_term(field: Field, term: str) -> tuple[int, int]:
    """One additive term -> (coefficient, degree)."""
    term = term.strip()
    # Split a trailing x-part off; the coefficient may itself contain '*'
    # (e.g. "2*w^3*x^2") or parentheses ("(1+w)*x").
    xpart = None
    body = term
    star = term.rfind("*")
    if term == "x" or term.startswith("x^") or term.startswith("x "):
        xpart, body = term, ""
    elif star != -1 and term[star + 1 :].strip().startswith("x"):
        xpart = term[star + 1 :].strip()
        body = term[:star].strip()
    if xpart is None:
        return field.parse_element(term), 0
    if xpart == "x":
        d = 1
    elif xpart.startswith("x^"):
        try:
            d = int(xpart[2:])
        except ValueError:
            raise ParseError(f"bad power {xpart!r}") from None
        if d < 0:
            raise ParseError("negative powers are not allowed")
    else:
        raise ParseError(f"bad term {term!r}")
    c = 1 if body == "" else field.parse_element(body)
    return c, d


def reciprocal_poly(f: Poly, m: int) -> Poly:
    """x^m * f(1/x): the coefficient list reversed within m+1 slots.

    Requires deg f <= m; maps 0 to 0.
    """
    if f.is_zero():
        return f
    if f.degree > m:
        raise ValueError(f"degree {f.degree} exceeds reversal window {m}")
    out = [0] * (m + 1)
    for i, c in enumerate(f.coeffs):
        out[m - i] = c
    return Poly(f.field, out)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_ext_gcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """(g, s, t) with s*a + t*b = g, g monic (or zero)."""
    f = a.field
    r0, r1 = a, b
    s0, s1 = Poly.one(f), Poly.zero(f)
    t0, t1 = Poly.zero(f), Poly.one(f)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    c = f.inv(r0.lead)
    return r0.scale(c), s0.scale(c), t0.scale(c)


def lcm_poly(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly.zero(a.field)
    return (a * b).exact_div(poly_gcd(a, b)).monic()


@dataclass(frozen=True)
class Factorization:
    """unit * prod(f_i ^ m_i) with the f_i monic irreducible, sorted by
    (degree, coefficient tuple)."""

    field: Field
    unit: int
    factors: tuple[tuple[Poly, int], ...]
    seed: int

    def expand(self) -> Poly:
        acc = Poly.constant(self.field, self.unit)
        for f, m in self.factors:
            for _ in range(m):
                acc = acc * f
        return acc

    def __iter__(self):
        return iter(self.factors)

    def is_squarefree(self) -> bool:
        return all(m == 1 for _, m in self.factors)


def _prime_divisors(n: int) -> list[int]:
    out = []
    k = 2
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f: Poly) -> bool:
    """Rabin irreducibility test over GF(q)."""
    d = f.degree
    if d is NEG_INF or d == 0:
        return False
    if d == 1:
        return True
    fld = f.field
    q = fld.q
    x = Poly.x(fld)
    if x.pow_mod(q**d, f) != x % f:
        return False
    for r in _prime_divisors(d):
        g = poly_gcd(x.pow_mod(q ** (d // r), f) - x, f)
        if g.degree is not NEG_INF and g.degree > 0:
            return False
    return True


def _squarefree_parts(f: Poly) -> list[tuple[Poly, int]]:
    """Classical char-p square-free decomposition of a monic f."""
    fld = f.field
    out: list[tuple[Poly, int]] = []
    df = f.derivative()
    if df.is_zero():
        for g, m in _squarefree_parts(f.pth_root()):
            out.append((g, m * fld.p))
        return out
    c = poly_gcd(f, df)
    w = f.exact_div(c)
    i = 1
    while not w.is_one():
        y = poly_gcd(w, c)
        z = w.exact_div(y)
        if not z.is_one():
            out.append((z, i))
        w = y
        c = c.exact_div(y)
        i += 1
    if not c.is_one():
        for g, m in _squarefree_parts(c.pth_root()):
            out.append((g, m * fld.p))
    return out


def _distinct_degree(f: Poly) -> list[tuple[Poly, int]]:
    """Split a monic square-free f into (product of degree-d irreducibles, d)."""
    fld = f.field
    q = fld.q
    out = []
    x = Poly.x(fld)
    h = x % f
    d = 0
    rest = f
    while rest.degree >= 2 * (d + 1):
        d += 1
        h = h.pow_mod(q, rest)
        g = poly_gcd(h - x, rest)
        if not g.is_one():
            out.append((g, d))
            rest = rest.exact_div(g)
            h = h % rest
    if rest.degree is not NEG_INF and rest.degree > 0:
        out.append((rest, rest.degree))
    return out


def _random_poly(fld: Field, max_deg: int, rng: random.Random) -> Poly:
    return Poly(fld, [rng.randrange(fld.q) for _ in range(max_deg + 1)])


def _equal_degree(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus split of a monic square-free product of degree-d
    irreducibles."""
    if f.degree == d:
        return [f]
    fld = f.field
    q = fld.q
    while True:
        a = _random_poly(fld, f.degree - 1, rng)
        if a.degree is NEG_INF or a.degree < 1:
            continue
        g = poly_gcd(a, f)
        if not g.is_one():
            break
        if fld.p == 2:
            # Trace map to GF(2) splits with probability about 1/2.
            t = Poly.zero(fld)
            b = a % f
            for _ in range(fld.e * d):
                t = t + b
                b = (b * b) % f
            g = poly_gcd(t, f)
        else:
            b = a.pow_mod((q**d - 1) // 2, f)
            g = poly_gcd(b - Poly.one(fld), f)
        if g.degree is not NEG_INF and 0 < g.degree < f.degree:
            break
    return _equal_degree(g, d, rng) + _equal_degree(f.exact_div(g), d, rng)


def factor(f: Poly, seed: int = FACTOR_SEED) -> Factorization:
    """Full factorization into monic irreducibles.

    The equal-degree stage is randomized; `seed` fixes its choices so equal
    inputs give byte-equal factor lists.  Factors are sorted by degree, then
    by coefficient tuple.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    unit = f.lead
    rng = random.Random(seed)
    work = f.monic()
    found: list[tuple[Poly, int]] = []
    if work.degree == 0:
        return Factorization(f.field, unit, (), seed)
    for part, mult in _squarefree_parts(work):
        for prod, d in _distinct_degree(part):
            for irr in _equal_degree(prod, d, rng):
                found.append((irr, mult))
    found.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return Factorization(f.field, unit, tuple(found), seed)
