"""Linear codes over GF(q) with exact structured operations.

A code is stored as its reduced row echelon generator, which makes equality
a tuple comparison and membership a short reduction.  The parity check
matrix comes from the pivot/free column split of the RREF.  Intersections,
Galois duals and hulls, reversals, and the reversible-subcode extraction
all follow the parity-check recipes; none of them enumerates codewords.

Scalar matrices are plain tuples of tuples of field ints.  The handful of
matrix helpers here (rref, mat_mul, ...) are shared with the twisted-code
layer and the enumeration oracle.
"""

from __future__ import annotations

import math
from functools import cached_property

from .errors import BudgetError, ParseError
from .gf import Field

# Default ceiling on q^k enumerations for minimum distance.
DISTANCE_BUDGET = 2**24

Matrix = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# scalar matrix helpers
# ---------------------------------------------------------------------------

def rref(field: Field, rows) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns; zero rows dropped."""
    work = [list(r) for r in rows]
    n_cols = len(work[0]) if work else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = field.inv(work[r][c])
        work[r] = [field.mul(inv, e) for e in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def mat_mul(field: Field, a, b) -> Matrix:
    bt = list(zip(*b)) if b else []
    out = []
    for row in a:
        orow = []
        for col in bt:
            acc = 0
            for x, y in zip(row, col):
                if x and y:
                    acc = field.add(acc, field.mul(x, y))
            orow.append(acc)
        out.append(tuple(orow))
    return tuple(out)


def mat_rank(field: Field, rows) -> int:
    if not rows:
        return 0
    return len(rref(field, rows)[0])


def frobenius_rows(field: Field, rows, k: int) -> Matrix:
    return tuple(tuple(field.frobenius(e, k) for e in row) for row in rows)


def reverse_columns(rows) -> Matrix:
    return tuple(tuple(reversed(row)) for row in rows)


def parse_matrix_block(field: Field, lines, start: int) -> tuple[Matrix, int]:
    """Parse 'matrix R C' plus R rows starting at lines[start].

    Returns the matrix and the index one past the parsed block.  Line
    numbers in errors are 1-based offsets into the full document, which the
    caller encodes by passing (text, lineno) pairs.
    """
    text, lineno = lines[start]
    parts = text.split()
    if len(parts) != 3 or parts[0] != "matrix":
        raise ParseError("expected 'matrix <rows> <cols>'", lineno)
    try:
        n_rows, n_cols = int(parts[1]), int(parts[2])
    except ValueError:
        raise ParseError("matrix dimensions must be integers", lineno) from None
    if n_rows < 1 or n_cols < 1:
        raise ParseError("matrix dimensions must be positive", lineno)
    rows = []
    for i in range(n_rows):
        if start + 1 + i >= len(lines):
            raise ParseError(f"matrix needs {n_rows} rows, found {i}", lineno)
        rtext, rline = lines[start + 1 + i]
        cells = rtext.split()
        if len(cells) != n_cols:
            raise ParseError(f"expected {n_cols} entries, found {len(cells)}", rline)
        try:
            rows.append(tuple(field.parse_element(c) for c in cells))
        except ParseError as exc:
            raise ParseError(str(exc), rline) from None
    return tuple(rows), start + 1 + n_rows


def format_matrix_block(field: Field, rows) -> str:
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    body = "\n".join(" ".join(field.format_element(e) for e in row) for row in rows)
    head = f"matrix {n_rows} {n_cols}"
    return head + ("\n" + body if body else "")


# ---------------------------------------------------------------------------
# the code itself
# ---------------------------------------------------------------------------

class LinearCode:
    """A k-dimensional linear code of length n over GF(q)."""

    def __init__(self, field: Field, length: int, rows=()):
        if length < 1:
            raise ValueError("length must be positive")
        for row in rows:
            if len(row) != length:
                raise ValueError("generator rows must have the code length")
        self.field = field
        self.n = length
        self.gen, self._pivots = rref(field, [[int(e) for e in row] for row in rows])

    @staticmethod
    def zero(field: Field, length: int) -> "LinearCode":
        return LinearCode(field, length)

    @staticmethod
    def full(field: Field, length: int) -> "LinearCode":
        rows = [[1 if i == j else 0 for j in range(length)] for i in range(length)]
        return LinearCode(field, length, rows)

    @property
    def k(self) -> int:
        return len(self.gen)

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and self.n == other.n
            and self.gen == other.gen
        )

    def __hash__(self):
        return hash((self.field, self.n, self.gen))

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}] over {self.field.header()})"

    @cached_property
    def parity(self) -> Matrix:
        """(n-k) x n check matrix from the pivot/free split of the RREF."""
        field = self.field
        free = [c for c in range(self.n) if c not in set(self._pivots)]
        rows = []
        for j, fc in enumerate(free):
            row = [0] * self.n
            row[fc] = 1
            for i, pc in enumerate(self._pivots):
                row[pc] = field.neg(self.gen[i][fc])
            rows.append(tuple(row))
        return tuple(rows)

    # -- membership --------------------------------------------------------

    def contains_word(self, vec) -> bool:
        field = self.field
        v = [int(e) for e in vec]
        if len(v) != self.n:
            raise ValueError("vector length mismatch")
        for i, pc in enumerate(self._pivots):
            if v[pc] != 0:
                f = v[pc]
                v = [field.sub(a, field.mul(f, b)) for a, b in zip(v, self.gen[i])]
        return not any(v)

    def contains_code(self, other: "LinearCode") -> bool:
        self._check_compatible(other)
        return all(self.contains_word(row) for row in other.gen)

    def _check_compatible(self, other: "LinearCode"):
        if self.field != other.field or self.n != other.n:
            raise ValueError("codes live in different spaces")

    # -- duals ---------------------------------------------------------------

    def dual(self) -> "LinearCode":
        return LinearCode(self.field, self.n, self.parity)

    def galois_dual(self, kappa: int = 0) -> "LinearCode":
        """The kappa-Galois dual: everything v with sum_i c_i sigma^kappa(v_i) = 0.

        Generated by sigma^(e-kappa) applied entrywise to the parity check.
        """
        self._check_kappa(kappa)
        field = self.field
        rows = frobenius_rows(field, self.parity, field.e - kappa)
        return LinearCode(field, self.n, rows)

    def _check_kappa(self, kappa: int):
        if not 0 <= kappa < self.field.e:
            raise ValueError(f"kappa must lie in [0, {self.field.e}), got {kappa}")

    # -- intersections ---------------------------------------------------

    def intersect(self, other: "LinearCode") -> "LinearCode":
        """Parity-check route: rows of P @ G2 where P checks the code
        spanned by H1 @ G2^T."""
        self._check_compatible(other)
        field = self.field
        if other.k == 0:
            return other
        q_rows, _ = rref(field, mat_mul(field, self.parity, _transpose(other.gen)))
        p = _parity_for(field, q_rows, other.k)
        return LinearCode(field, self.n, mat_mul(field, p, other.gen))

    def trivially_intersects(self, other: "LinearCode") -> bool:
        """True when the intersection is {0}: rank(H1 @ G2^T) = k2."""
        self._check_compatible(other)
        prod = mat_mul(self.field, self.parity, _transpose(other.gen))
        return mat_rank(self.field, prod) == other.k

    def galois_intersect(self, other: "LinearCode", kappa: int = 0) -> "LinearCode":
        """self^(perp kappa) intersected with other, without forming the dual:
        the check matrix of the Galois dual is sigma^(e-kappa)(G1)."""
        self._check_compatible(other)
        self._check_kappa(kappa)
        field = self.field
        if other.k == 0:
            return other
        lifted = frobenius_rows(field, self.gen, field.e - kappa)
        q_rows, _ = rref(field, mat_mul(field, lifted, _transpose(other.gen)))
        p = _parity_for(field, q_rows, other.k)
        return LinearCode(field, self.n, mat_mul(field, p, other.gen))

    def hull(self, kappa: int = 0) -> "LinearCode":
        """self intersect self^(perp kappa)."""
        return self.galois_intersect(self, kappa)

    # -- reversal ------------------------------------------------------------

    def reversed_code(self) -> "LinearCode":
        return LinearCode(self.field, self.n, reverse_columns(self.gen))

    def is_reversible(self) -> bool:
        return self.reversibility()[0]

    def reversibility(self) -> tuple[bool, "LinearCode"]:
        """(is reversible, largest reversible subcode).

        The subcode generator is P @ G where P checks the span of
        H @ J_n @ G^T; when that span already has full rank k the subcode is
        the zero code, and when it is zero the code itself is reversible.
        """
        field = self.field
        if self.k == 0:
            return True, self
        flipped = reverse_columns(self.gen)  # rows of G @ J_n
        prod = mat_mul(field, self.parity, _transpose(flipped))
        q_rows, _ = rref(field, prod)
        if not q_rows:
            return True, self
        p = _parity_for(field, q_rows, self.k)
        sub = LinearCode(field, self.n, mat_mul(field, p, self.gen))
        return False, sub

    # -- metrics -----------------------------------------------------------

    def min_distance(self, budget: int | None = None) -> float:
        """Exact minimum weight by enumerating all q^k codewords.

        Returns math.inf for the zero code.  Raises BudgetError when q^k
        exceeds the budget (default 2**24).
        """
        if self.k == 0:
            return math.inf
        budget = DISTANCE_BUDGET if budget is None else budget
        field = self.field
        if field.q**self.k > budget:
            raise BudgetError(
                f"enumerating {field.q}^{self.k} codewords exceeds budget {budget}"
            )
        best = self.n + 1
        add = field.add
        scaled = [
            [tuple(field.mul(c, e) for e in row) for c in range(field.q)]
            for row in self.gen
        ]
        def walk(i, vec, nonzero):
            nonlocal best
            if i == len(scaled):
                if nonzero:
                    w = sum(1 for e in vec if e)
                    if w < best:
                        best = w
                return
            for c in range(field.q):
                if c == 0:
                    walk(i + 1, vec, nonzero)
                else:
                    nxt = tuple(add(a, b) for a, b in zip(vec, scaled[i][c]))
                    walk(i + 1, nxt, True)
        walk(0, (0,) * self.n, False)
        return best


def _transpose(rows) -> Matrix:
    return tuple(zip(*rows)) if rows else ()


def _parity_for(field: Field, rref_rows: Matrix, length: int) -> Matrix:
    """Check matrix for the span of rref_rows inside GF(q)^length."""
    if not rref_rows:
        return tuple(
            tuple(1 if i == j else 0 for j in range(length)) for i in range(length)
        )
    code = LinearCode(field, length, rref_rows)
    return code.parity
