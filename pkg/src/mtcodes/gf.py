"""Exact arithmetic in GF(p^e).

Field elements are plain ints in ``range(q)``.  The base-p digits of the int
are the coordinates of the element in the polynomial basis 1, w, w^2, ...,
w^(e-1), where w is the class of x modulo the field's irreducible modulus.
All arithmetic goes through a :class:`Field` instance, which owns the modulus
and, for small q, dense lookup tables.  0 and 1 always encode the additive
and multiplicative identities, and for prime fields the encoding is just the
usual residue.

Keeping elements as bare ints (rather than wrapper objects) makes vectors and
polynomial coefficient lists cheap and hashable; the cost is that every
operation needs the field in hand, which in practice every caller already
has.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import ParseError

# Largest q for which dense add/mul tables are precomputed.
_TABLE_LIMIT = 256


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Polynomials over GF(p) as plain int tuples, low degree first.  Only used
# for modulus bookkeeping (irreducibility, default-modulus search); the
# general-purpose polynomial type over GF(q) lives in upoly.
# ---------------------------------------------------------------------------

def _pp_trim(a: tuple[int, ...]) -> tuple[int, ...]:
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def _pp_mul(p: int, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pp_trim(tuple(out))


def _pp_mod(p: int, a: tuple[int, ...], m: tuple[int, ...]) -> tuple[int, ...]:
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < dm:
            break
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
    return _pp_trim(tuple(a))


def _pp_pow_mod(p: int, a: tuple[int, ...], n: int, m: tuple[int, ...]) -> tuple[int, ...]:
    result: tuple[int, ...] = (1,)
    a = _pp_mod(p, a, m)
    while n:
        if n & 1:
            result = _pp_mod(p, _pp_mul(p, result, a), m)
        a = _pp_mod(p, _pp_mul(p, a, a), m)
        n >>= 1
    return result


def _pp_gcd(p: int, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    while b:
        a, b = b, _pp_mod(p, a, b)
    return a


def _pp_is_irreducible(p: int, f: tuple[int, ...]) -> bool:
    # Rabin's test: x^(p^d) == x mod f, and x^(p^(d/r)) - x coprime to f
    # for every prime r dividing d.
    d = len(f) - 1
    if d < 1:
        return False
    x = (0, 1)
    if _pp_pow_mod(p, x, p**d, f) != _pp_mod(p, x, f):
        return False
    for r in _prime_factors(d):
        h = _pp_pow_mod(p, x, p ** (d // r), f)
        diff = _pp_trim(tuple((hi - xi) % p for hi, xi in itertools.zip_longest(h, x, fillvalue=0)))
        g = _pp_gcd(p, f, diff)
        if len(g) - 1 > 0:
            return False
    return True


def default_modulus(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree e over GF(p).

    Candidates are compared by their coefficient tuples read from the
    constant term upward; the leading 1 is implied.  For e = 1 this is x.
    """
    for tail in itertools.product(range(p), repeat=e):
        f = tail + (1,)
        if _pp_is_irreducible(p, f):
            return f
    raise AssertionError("no irreducible polynomial found")  # unreachable


class Field:
    """GF(p^e) with an explicit irreducible modulus over GF(p).

    Parameters
    ----------
    p : characteristic, prime.
    e : extension degree, >= 1.
    modulus : optional coefficient tuple (low degree first, length e+1,
        monic).  Defaults to the lexicographically least monic irreducible.

    Instances are immutable after construction and safe to share.
    """

    def __init__(self, p: int, e: int = 1, modulus=None):
        if not _is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if e < 1:
            raise ValueError(f"extension degree must be >= 1, got {e}")
        if modulus is None:
            modulus = default_modulus(p, e)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree e")
            if not _pp_is_irreducible(p, modulus):
                raise ValueError("modulus is reducible")
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = modulus
        # w = class of x; for prime fields the modulus is x and w = 0.
        self.omega = p % self.q if e > 1 else None
        self._powers_of_omega: dict[int, int] | None = None
        if self.q <= _TABLE_LIMIT:
            self._build_tables()
        else:
            self._add_table = None
            self._mul_table = None
            self._inv_table = None

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def of_order(q: int, modulus=None) -> "Field":
        """Build GF(q) from the prime power q."""
        for p in range(2, q + 1):
            if _is_prime(p) and q % p == 0:
                e = 0
                m = q
                while m % p == 0:
                    m //= p
                    e += 1
                if m != 1:
                    raise ValueError(f"{q} is not a prime power")
                return Field(p, e, modulus)
        raise ValueError(f"{q} is not a prime power")

    # -- encoding ------------------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Base-p digits of a: coordinates in the basis 1, w, ..., w^(e-1)."""
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def from_coeffs(self, cs) -> int:
        a = 0
        for c in reversed(list(cs)):
            a = a * self.p + (int(c) % self.p)
        return a

    def elements(self):
        return range(self.q)

    # -- arithmetic ----------------------------------------------------------

    def _build_tables(self):
        q = self.q
        add = [[0] * q for _ in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                s = self._raw_add(a, b)
                add[a][b] = s
                add[b][a] = s
                m = self._raw_mul(a, b)
                mul[a][b] = m
                mul[b][a] = m
        inv = [0] * q
        for a in range(1, q):
            row = mul[a]
            inv[a] = row.index(1)
        self._add_table = add
        self._mul_table = mul
        self._inv_table = inv

    def _raw_add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mult = 1
        while a or b:
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def _raw_mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a * b) % self.p
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = _pp_mul(self.p, ca, cb)
        return self.from_coeffs(_pp_mod(self.p, prod, self.modulus))

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._raw_add(a, b)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return self.from_coeffs((-c) % self.p for c in self.coeffs(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._raw_mul(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        result = 1
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def frobenius(self, a: int, k: int = 1) -> int:
        """sigma^k(a) = a^(p^k); k is reduced mod e."""
        k %= self.e
        return self.pow(a, self.p**k)

    def mult_order(self, a: int) -> int:
        """Least t >= 1 with a^t = 1; error on 0."""
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        t = 1
        b = a
        while b != 1:
            b = self.mul(b, a)
            t += 1
        return t

    # -- text forms ----------------------------------------------------------

    def _omega_log(self, a: int) -> int | None:
        if self.omega is None or self.omega == 0:
            return None
        if self._powers_of_omega is None:
            table = {}
            b = 1
            for j in range(self.mult_order(self.omega)):
                table.setdefault(b, j)
                b = self.mul(b, self.omega)
            self._powers_of_omega = table
        return self._powers_of_omega.get(a)

    def format_element(self, a: int) -> str:
        """Canonical literal: a digit for prime-subfield values, else a power
        of w, else a parenthesized polynomial in w."""
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of {self}")
        if a < self.p:
            return str(a)
        j = self._omega_log(a)
        if j == 1:
            return "w"
        if j is not None:
            return f"w^{j}"
        terms = []
        for i, c in enumerate(self.coeffs(a)):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                wpart = "w" if i == 1 else f"w^{i}"
                terms.append(wpart if c == 1 else f"{c}*{wpart}")
        return "(" + "+".join(terms) + ")"

    def parse_element(self, text: str) -> int:
        """Inverse of format_element; also accepts any w-power or sum form."""
        s = text.strip()
        if not s:
            raise ParseError("empty field element")
        if s.startswith("(") and s.endswith(")"):
            s = s[1:-1]
        total = 0
        for sign, piece in _split_sum(s):
            val = self._parse_term(piece)
            total = self.add(total, val if sign > 0 else self.neg(val))
        return total

    def _parse_term(self, term: str) -> int:
        term = term.strip()
        if not term:
            raise ParseError("empty term in field element")
        coef = 1
        if "*" in term:
            digits, _, term = term.partition("*")
            digits = digits.strip()
            if not digits.isdigit():
                raise ParseError(f"bad coefficient {digits!r}")
            coef = int(digits)
            if coef >= self.p:
                raise ParseError(f"coefficient {coef} out of range for GF({self.p}^{self.e})")
            term = term.strip()
        if term.isdigit():
            v = int(term)
            if v >= self.p:
                raise ParseError(f"constant {v} out of range; prime subfield has {self.p} elements")
            return self.mul(coef, v)
        if term == "w" or term.startswith("w^"):
            if self.omega is None:
                raise ParseError(f"w is undefined in the prime field GF({self.p})")
            k = 1
            if term != "w":
                try:
                    k = int(term[2:])
                except ValueError:
                    raise ParseError(f"bad element literal {term!r}") from None
            return self.mul(coef, self.pow(self.omega, k))
        raise ParseError(f"bad element literal {term!r}")

    def header(self) -> str:
        """Field line as written at the top of a code document."""
        if self.e == 1:
            return f"GF({self.p})"
        mod = " ".join(str(c) for c in self.modulus)
        return f"GF({self.p}^{self.e}) mod {mod}"

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.e == other.e
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        return f"Field({self.header()!r})"


def _split_sum(s: str) -> list[tuple[int, str]]:
    """Split a +/- separated expression into (sign, term) pairs.

    Leading and doubled signs act as unary minus; dangling operators raise.
    """
    out: list[tuple[int, str]] = []
    sign = 1
    cur = ""
    expecting = True
    for ch in s:
        if ch in "+-":
            if cur.strip():
                out.append((sign, cur.strip()))
                cur = ""
                sign = 1
            if ch == "-":
                sign = -sign
            expecting = True
        else:
            cur += ch
            if not ch.isspace():
                expecting = False
    if cur.strip():
        out.append((sign, cur.strip()))
    elif expecting:
        raise ParseError(f"dangling operator in {s!r}")
    if not out:
        raise ParseError("empty expression")
    return out


@lru_cache(maxsize=None)
def _cached_field(p: int, e: int, modulus: tuple[int, ...] | None) -> Field:
    return Field(p, e, modulus)


def field(p: int, e: int = 1, modulus=None) -> Field:
    """Memoized Field constructor; identical parameters share one instance."""
    key = tuple(modulus) if modulus is not None else None
    return _cached_field(p, e, key)
