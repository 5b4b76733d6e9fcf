"""Multi-twisted codes represented by generator polynomial matrices.

A code of index ell with block lengths (m_1, ..., m_ell) and nonzero shift
constants (lam_1, ..., lam_ell) is a linear code invariant under the twisted
shift T that rotates each block one step and multiplies the wrapped symbol
by its block's shift.  Codewords correspond to length-ell polynomial
vectors, componentwise modulo x^m_i - lam_i, and the code corresponds to an
F_q[x]-submodule containing diag(x^m_i - lam_i).

Every such module is generated by the ell rows of a square generator
polynomial matrix (GPM) G, and there is a unique companion A with
A @ G = diag(x^m_i - lam_i): the identical equation.  Everything in this
module works through G and A:

* duals and Galois duals (via the reciprocal transform of A),
* reversed codes and the block-reversal map (via the dual companion B),
* intersections of codes sharing a profile (via an auxiliary quasi-cyclic
  code of co-index N = lcm(t_i * m_i), t_i the order of lam_i),
* trivial-intersection and Galois LCD tests via ranks modulo the
  irreducible factors of x^N - 1, with a chain-ring layer analysis when
  x^N - 1 is not square-free,
* Galois self-orthogonality, dual-containment, and reversibility as exact
  polynomial congruences modulo x^N - 1.

Binary operations other than the structure advisor require identical
profiles; unequal shift vectors generically force trivial blocks and can
break the MT structure of an intersection, so the advisor is the only place
where mixed shifts are meaningful.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import reduce

from .errors import BudgetError, DomainError
from .gf import Field
from .lincode import LinearCode
from .pmat import PolyMatrix, chain_type, deg_det, rank_mod, reduce_to_gpm, solve_identical
from .upoly import FACTOR_SEED, Poly, factor, reciprocal_poly

ADVISOR_BUDGET = 4096


@dataclass(frozen=True)
class MTProfile:
    """Index, block lengths, and shift constants of a multi-twisted family."""

    field: Field
    blocks: tuple[int, ...]
    shifts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(int(m) for m in self.blocks))
        object.__setattr__(self, "shifts", tuple(int(s) for s in self.shifts))
        if len(self.blocks) != len(self.shifts) or not self.blocks:
            raise ValueError("need matching, nonempty block and shift tuples")
        if any(m < 1 for m in self.blocks):
            raise ValueError("block lengths must be positive")
        if any(not 0 < s < self.field.q for s in self.shifts):
            raise ValueError("shift constants must be nonzero field elements")

    @property
    def ell(self) -> int:
        return len(self.blocks)

    @property
    def n(self) -> int:
        return sum(self.blocks)

    @property
    def orders(self) -> tuple[int, ...]:
        """Multiplicative orders t_i of the shift constants."""
        return tuple(self.field.mult_order(s) for s in self.shifts)

    @property
    def period(self) -> int:
        """N = lcm(t_i * m_i): the order of the twisted shift map."""
        return reduce(math.lcm, (t * m for t, m in zip(self.orders, self.blocks)))

    def moduli(self) -> tuple[Poly, ...]:
        return tuple(
            Poly.binomial(self.field, m, s) for m, s in zip(self.blocks, self.shifts)
        )

    def modulus_diag(self) -> PolyMatrix:
        return PolyMatrix.diagonal(self.moduli())

    def annihilator(self) -> Poly:
        """x^N - 1."""
        return Poly.binomial(self.field, self.period, 1)

    def cofactors(self) -> tuple[Poly, ...]:
        """(x^N - 1) / (x^m_i - lam_i), one per block."""
        ann = self.annihilator()
        return tuple(ann.exact_div(m) for m in self.moduli())

    def cofactor_diag(self) -> PolyMatrix:
        return PolyMatrix.diagonal(self.cofactors())

    # -- derived profiles --------------------------------------------------

    def dual_profile(self) -> "MTProfile":
        f = self.field
        return MTProfile(f, self.blocks, tuple(f.inv(s) for s in self.shifts))

    def galois_dual_profile(self, kappa: int) -> "MTProfile":
        f = self.field
        shifts = tuple(f.frobenius(f.inv(s), f.e - kappa) for s in self.shifts)
        return MTProfile(f, self.blocks, shifts)

    def reversed_profile(self) -> "MTProfile":
        f = self.field
        return MTProfile(
            f,
            tuple(reversed(self.blocks)),
            tuple(f.inv(s) for s in reversed(self.shifts)),
        )

    # -- coordinate plumbing -----------------------------------------------

    def split_blocks(self, vec) -> list[tuple[int, ...]]:
        vec = tuple(vec)
        if len(vec) != self.n:
            raise ValueError("vector length does not match the profile")
        out = []
        at = 0
        for m in self.blocks:
            out.append(vec[at : at + m])
            at += m
        return out

    def apply_shift(self, vec) -> tuple[int, ...]:
        """The twisted shift T: rotate each block, scaling the wrap-around."""
        f = self.field
        out = []
        for s, block in zip(self.shifts, self.split_blocks(vec)):
            out.extend((f.mul(s, block[-1]),) + block[:-1])
        return tuple(out)

    def reverse_blockwise(self, vec) -> tuple[int, ...]:
        """The map sending block (a_0, ..., a_{m-1}) to (a_{m-1}, ..., a_0)."""
        out = []
        for block in self.split_blocks(vec):
            out.extend(reversed(block))
        return tuple(out)

    def polys_from_vector(self, vec) -> list[Poly]:
        return [Poly(self.field, block) for block in self.split_blocks(vec)]

    def vector_from_polys(self, polys) -> tuple[int, ...]:
        out = []
        for p, m, modulus in zip(polys, self.blocks, self.moduli()):
            p = p % modulus
            out.extend(p.coeff(i) for i in range(m))
        return tuple(out)

    def describe(self) -> str:
        f = self.field
        shifts = ", ".join(f.format_element(s) for s in self.shifts)
        blocks = ", ".join(str(m) for m in self.blocks)
        return f"({shifts})-MT, blocks ({blocks})"


def reciprocal_columns(mat: PolyMatrix, profile: MTProfile) -> PolyMatrix:
    """M(1/x) @ diag(x^m_j) for a matrix whose columns follow the blocks.

    Entry (i, j) is first reduced modulo x^m_j - lam_j, then reversed inside
    a degree-m_j window.  The reduction changes each entry by a multiple of
    its block modulus, which downstream congruences absorb (the transform of
    that multiple is a multiple of x^m_j - lam_j^-1, and every use either
    multiplies by the matching cofactor or stacks the dual moduli).
    """
    moduli = profile.moduli()
    rows = []
    for row in mat.rows:
        rows.append(
            [
                reciprocal_poly(e % moduli[j], profile.blocks[j])
                for j, e in enumerate(row)
            ]
        )
    return PolyMatrix(mat.field, rows)


class MTCode:
    """A multi-twisted code, canonically held as its reduced GPM."""

    def __init__(self, profile: MTProfile, rows=()):
        """Build the code whose module is generated by the given polynomial
        rows together with diag(x^m_i - lam_i).  rows may be a PolyMatrix,
        an iterable of Poly rows, or empty for the zero code."""
        self.profile = profile
        if isinstance(rows, PolyMatrix):
            row_list = [list(r) for r in rows.rows]
        else:
            row_list = [list(r) for r in rows]
        diag = profile.modulus_diag()
        stack = PolyMatrix(profile.field, row_list + [list(r) for r in diag.rows])
        try:
            self.gpm = reduce_to_gpm(stack, profile.moduli())
            self.companion = solve_identical(self.gpm, profile.moduli())
        except ValueError as exc:
            raise DomainError(str(exc)) from exc
        self._linear: LinearCode | None = None
        self._dual: MTCode | None = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(profile: MTProfile) -> "MTCode":
        return MTCode(profile)

    @staticmethod
    def full(profile: MTProfile) -> "MTCode":
        return MTCode(profile, PolyMatrix.identity(profile.field, profile.ell))

    @staticmethod
    def from_linear(profile: MTProfile, code: LinearCode) -> "MTCode":
        """Adopt a linear code as multi-twisted; it must be shift-invariant."""
        if code.field != profile.field or code.n != profile.n:
            raise DomainError("code length does not match the profile")
        for row in code.gen:
            if not code.contains_word(profile.apply_shift(row)):
                raise DomainError(
                    "code is not invariant under the profile's twisted shift"
                )
        mt = MTCode(profile, [profile.polys_from_vector(row) for row in code.gen])
        if mt.to_linear() != code:
            raise AssertionError("GPM expansion does not reproduce the code")
        return mt

    # -- basic views ---------------------------------------------------------

    @property
    def field(self) -> Field:
        return self.profile.field

    @property
    def dim(self) -> int:
        return deg_det(self.companion)

    @property
    def n(self) -> int:
        return self.profile.n

    def __eq__(self, other):
        return (
            isinstance(other, MTCode)
            and self.profile == other.profile
            and self.gpm == other.gpm
        )

    def __hash__(self):
        return hash((self.profile, self.gpm))

    def __repr__(self):
        return f"MTCode([{self.n},{self.dim}] {self.profile.describe()})"

    def to_linear(self) -> LinearCode:
        """Expand the GPM rows under the shift action to a scalar generator."""
        if self._linear is None:
            prof = self.profile
            rows = []
            for prow in self.gpm.rows:
                vec = prof.vector_from_polys(prow)
                for _ in range(prof.period):
                    rows.append(vec)
                    vec = prof.apply_shift(vec)
            code = LinearCode(self.field, prof.n, rows)
            if code.k != self.dim:
                raise AssertionError(
                    "scalar expansion rank disagrees with deg det of the companion"
                )
            self._linear = code
        return self._linear

    def min_distance(self, budget: int | None = None) -> float:
        return self.to_linear().min_distance(budget)

    def contains_word(self, vec) -> bool:
        return self.to_linear().contains_word(vec)

    def _require_same_profile(self, other: "MTCode"):
        if self.profile != other.profile:
            raise DomainError("operation requires identical profiles")

    # -- duals -----------------------------------------------------------

    def dual(self) -> "MTCode":
        """Euclidean dual: a lam^-1-twisted code built from the reciprocal
        transform of the companion."""
        if self._dual is None:
            top = reciprocal_columns(self.companion.transpose(), self.profile)
            self._dual = MTCode(self.profile.dual_profile(), top)
        return self._dual

    def galois_dual(self, kappa: int = 0) -> "MTCode":
        self._check_kappa(kappa)
        base = self.dual()
        k = self.field.e - kappa
        return MTCode(self.profile.galois_dual_profile(kappa), base.gpm.frobenius(k))

    def _check_kappa(self, kappa: int):
        if not 0 <= kappa < self.field.e:
            raise DomainError(
                f"kappa must lie in [0, {self.field.e}), got {kappa}"
            )

    # -- reversal and block maps ---------------------------------------------

    def reversed_code(self) -> "MTCode":
        """The coordinate-reversed code, multi-twisted for the reversed
        profile; its GPM is B^T @ J_ell for the dual companion B."""
        b = self.dual().companion
        j = PolyMatrix.backward_identity(self.field, self.profile.ell)
        return MTCode(self.profile.reversed_profile(), b.transpose() @ j)

    def block_reversed_code(self) -> "MTCode":
        """Reverse coordinates inside each block: a lam^-1-twisted code with
        GPM B^T."""
        b = self.dual().companion
        return MTCode(self.profile.dual_profile(), b.transpose())

    # -- containment and intersections -----------------------------------

    def is_subcode_of(self, other: "MTCode") -> bool:
        self._require_same_profile(other)
        prof = self.profile
        ann = prof.annihilator()
        prod = self.gpm @ prof.cofactor_diag() @ other.companion
        return prod.mod_entries(ann).is_zero()

    def intersect(self, other: "MTCode") -> "MTCode":
        return self.intersection_details(other).code

    def intersection_details(self, other: "MTCode") -> "GpmIntersection":
        self._require_same_profile(other)
        prof = self.profile
        top = self.companion.transpose() @ prof.cofactor_diag() @ other.gpm.transpose()
        return _qc_intersection(top, prof, other)

    def galois_intersect(self, other: "MTCode", kappa: int = 0) -> "MTCode":
        return self.galois_intersection_details(other, kappa).code

    def galois_intersection_details(self, other: "MTCode", kappa: int = 0) -> "GpmIntersection":
        """Details of self^(perp kappa) intersect other.

        Requires compatible shifts: sigma^(e-kappa)(lam_i^-1) = delta_i.
        """
        self._check_kappa(kappa)
        f = self.field
        if self.profile.blocks != other.profile.blocks or f != other.field:
            raise DomainError("operation requires identical block lengths")
        want = self.profile.galois_dual_profile(kappa).shifts
        if want != other.profile.shifts:
            raise DomainError(
                "shift constants are not Galois-dual compatible: "
                f"expected ({', '.join(f.format_element(s) for s in want)})"
            )
        # The twisted-shift orders agree (inversion and Frobenius preserve
        # multiplicative order), so both profiles share one period.
        if self.profile.period != other.profile.period:
            raise AssertionError("profile periods diverged")
        k = f.e - kappa
        top = (
            reciprocal_columns(self.gpm, self.profile).frobenius(k)
            @ other.profile.cofactor_diag()
            @ other.gpm.transpose()
        )
        return _qc_intersection(top, other.profile, other)

    def galois_hull_details(self, kappa: int = 0) -> "GpmIntersection":
        return self.galois_intersection_details(self, kappa)

    def trivially_intersects(self, other: "MTCode") -> bool:
        return self.trivial_intersection_evidence(other).verdict

    def trivial_intersection_evidence(self, other: "MTCode") -> "LayerTable":
        """Factor-by-factor dimension count for dim(C1 cap C2) = 0.

        The auxiliary quasi-cyclic code Q generated by
        A1^T @ diag((x^N-1)/(x^m_i-lam_i)) @ G2^T has dim(Q) = dim(C2) -
        dim(C1 cap C2); its dimension is read off per irreducible factor
        p_j of x^N - 1, by rank when f_j = 1 and by chain-ring type
        otherwise.
        """
        self._require_same_profile(other)
        prof = self.profile
        mat = self.companion.transpose() @ prof.cofactor_diag() @ other.gpm.transpose()
        return _layer_table(mat, prof, target=other.dim)

    # -- property checks ---------------------------------------------------

    def property_check(self, prop: str, kappa: int = 0) -> "PropertyCheck":
        """Necessary-and-sufficient test of a named property.

        prop is one of 'self_orthogonal', 'dual_containing', 'lcd',
        'reversible'.  A failed precondition is reported as holds=None with
        a note, distinct from a definite False.
        """
        if prop == "reversible":
            return self._check_reversible()
        if prop == "self_orthogonal":
            return self._check_congruence_property(prop, kappa, use_companion=False)
        if prop == "dual_containing":
            return self._check_congruence_property(prop, kappa, use_companion=True)
        if prop == "lcd":
            return self._check_lcd(kappa)
        raise ValueError(f"unknown property {prop!r}")

    def _galois_precondition(self, kappa: int) -> str | None:
        f = self.field
        want = self.profile.galois_dual_profile(kappa).shifts
        if want != self.profile.shifts:
            lits = ", ".join(f.format_element(s) for s in want)
            return (
                "precondition unmet: the kappa-Galois dual has shift "
                f"constants ({lits}), not the code's own"
            )
        return None

    def _check_congruence_property(self, prop: str, kappa: int, use_companion: bool) -> "PropertyCheck":
        self._check_kappa(kappa)
        note = self._galois_precondition(kappa)
        if note is not None:
            return PropertyCheck(prop, kappa, None, note, None, None)
        prof = self.profile
        f = self.field
        k = f.e - kappa
        if use_companion:
            left = reciprocal_columns(self.companion.transpose(), prof).frobenius(k)
            right = self.companion
        else:
            left = reciprocal_columns(self.gpm, prof).frobenius(k)
            right = self.gpm.transpose()
        residue = (left @ prof.cofactor_diag() @ right).mod_entries(prof.annihilator())
        return PropertyCheck(prop, kappa, residue.is_zero(), None, residue, None)

    def _check_lcd(self, kappa: int) -> "PropertyCheck":
        self._check_kappa(kappa)
        note = self._galois_precondition(kappa)
        if note is not None:
            return PropertyCheck("lcd", kappa, None, note, None, None)
        prof = self.profile
        k = self.field.e - kappa
        mat = (
            reciprocal_columns(self.gpm, prof).frobenius(k)
            @ prof.cofactor_diag()
            @ self.gpm.transpose()
        )
        table = _layer_table(mat, prof, target=self.dim)
        return PropertyCheck("lcd", kappa, table.verdict, None, None, table)

    def _check_reversible(self) -> "PropertyCheck":
        prof = self.profile
        f = self.field
        ell = prof.ell
        palindromic = all(
            prof.blocks[i] == prof.blocks[ell - 1 - i]
            and prof.shifts[i] == f.inv(prof.shifts[ell - 1 - i])
            for i in range(ell)
        )
        if not palindromic:
            return PropertyCheck(
                "reversible",
                None,
                None,
                "precondition unmet: blocks must be palindromic with "
                "shift constants satisfying lam_i = lam_(ell+1-i)^-1",
                None,
                None,
            )
        j = PolyMatrix.backward_identity(f, ell)
        residue = (
            reciprocal_columns(self.gpm, prof) @ j @ prof.cofactor_diag() @ self.companion
        ).mod_entries(prof.annihilator())
        return PropertyCheck("reversible", None, residue.is_zero(), None, residue, None)


# ---------------------------------------------------------------------------
# intersection machinery
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GpmIntersection:
    """Intersection result plus the auxiliary quasi-cyclic pair (Q, P)."""

    code: MTCode
    qc_gpm: PolyMatrix
    qc_companion: PolyMatrix


def _qc_intersection(top: PolyMatrix, profile: MTProfile, second: MTCode) -> GpmIntersection:
    ann = profile.annihilator()
    qc_moduli = [ann] * profile.ell
    stack = PolyMatrix.stack(top, PolyMatrix.diagonal(qc_moduli))
    q = reduce_to_gpm(stack, qc_moduli)
    p = solve_identical(q, qc_moduli)
    code = MTCode(profile, p.transpose() @ second.gpm)
    return GpmIntersection(code, q, p)


@dataclass(frozen=True)
class FactorLayer:
    """Dimension contribution of one irreducible factor of x^N - 1."""

    factor: Poly
    power: int
    type_vector: tuple[int, ...]

    @property
    def weighted(self) -> int:
        d = self.factor.degree
        return d * sum((self.power - h) * r for h, r in enumerate(self.type_vector))


@dataclass(frozen=True)
class LayerTable:
    """Per-factor evidence that an auxiliary code reaches a target dimension."""

    layers: tuple[FactorLayer, ...]
    target: int
    factor_seed: int

    @property
    def total(self) -> int:
        return sum(layer.weighted for layer in self.layers)

    @property
    def verdict(self) -> bool:
        return self.total == self.target


def _layer_table(mat: PolyMatrix, profile: MTProfile, target: int) -> LayerTable:
    fac = factor(profile.annihilator(), seed=FACTOR_SEED)
    layers = []
    for p_j, f_j in fac:
        if f_j == 1:
            tv = (rank_mod(mat, p_j),)
        else:
            tv = chain_type(mat, p_j, f_j).type_vector
        layers.append(FactorLayer(p_j, f_j, tv))
    return LayerTable(tuple(layers), target, fac.seed)


@dataclass(frozen=True)
class PropertyCheck:
    """Outcome of a property test; holds=None means a precondition failed."""

    prop: str
    kappa: int | None
    holds: bool | None
    note: str | None
    residue: PolyMatrix | None
    table: LayerTable | None


# ---------------------------------------------------------------------------
# intersection structure advisor
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StructureAdvice:
    """What shift vectors, if any, make the intersection multi-twisted.

    admitted lists every certified Gamma; exhaustive says whether all
    (q-1)^ell shift vectors were tried or only the listed candidates.
    notes narrate the distance-bound cases that apply.
    """

    blocks: tuple[int, ...]
    shifts1: tuple[int, ...]
    shifts2: tuple[int, ...]
    intersection: LinearCode
    admitted: tuple[tuple[int, ...], ...]
    candidates: tuple[tuple[int, ...], ...]
    exhaustive: bool
    differing: int
    zero_projection_blocks: tuple[int, ...]
    d1: float | None
    d2: float | None
    notes: tuple[str, ...]


def advise_intersection_structure(
    code1: MTCode,
    code2: MTCode,
    budget: int = ADVISOR_BUDGET,
    distance_budget: int | None = None,
) -> StructureAdvice:
    """Compute C1 cap C2 linearly and search for shift vectors under which
    it is multi-twisted.

    The two codes may carry different shift constants but must share block
    lengths.  Candidates always include both codes' shifts; when (q-1)^ell
    fits the budget every nonzero shift vector is tried, otherwise the
    report flags itself as inconclusive beyond the tested set.
    """
    f = code1.field
    if f != code2.field or code1.profile.blocks != code2.profile.blocks:
        raise DomainError("advisor requires identical block lengths")
    blocks = code1.profile.blocks
    ell = len(blocks)
    lin1, lin2 = code1.to_linear(), code2.to_linear()
    inter = lin1.intersect(lin2)

    shifts1, shifts2 = code1.profile.shifts, code2.profile.shifts
    differing = sum(1 for a, b in zip(shifts1, shifts2) if a != b)

    nonzero = range(1, f.q)
    exhaustive = (f.q - 1) ** ell <= budget
    candidates: list[tuple[int, ...]] = []
    if exhaustive:
        candidates.extend(itertools.product(nonzero, repeat=ell))
    else:
        candidates.append(shifts1)
        if shifts2 != shifts1:
            candidates.append(shifts2)

    admitted = []
    for gamma in candidates:
        prof = MTProfile(f, blocks, gamma)
        if all(inter.contains_word(prof.apply_shift(row)) for row in inter.gen):
            admitted.append(tuple(gamma))

    # Projection of the intersection onto each block.
    zero_projection = []
    at = 0
    for i, m in enumerate(blocks):
        if all(all(e == 0 for e in row[at : at + m]) for row in inter.gen):
            zero_projection.append(i)
        at += m

    d1 = d2 = None
    try:
        d1 = lin1.min_distance(distance_budget)
        d2 = lin2.min_distance(distance_budget)
    except BudgetError:
        pass

    notes = _advice_notes(shifts1, shifts2, ell, differing, d1, d2, admitted, zero_projection, exhaustive)
    return StructureAdvice(
        blocks=blocks,
        shifts1=shifts1,
        shifts2=shifts2,
        intersection=inter,
        admitted=tuple(admitted),
        candidates=tuple(candidates),
        exhaustive=exhaustive,
        differing=differing,
        zero_projection_blocks=tuple(zero_projection),
        d1=d1,
        d2=d2,
        notes=tuple(notes),
    )


def _advice_notes(shifts1, shifts2, ell, differing, d1, d2, admitted, zero_projection, exhaustive):
    notes = []
    if shifts1 == shifts2:
        notes.append(
            "shared shift constants: the intersection is multi-twisted "
            "for them unconditionally"
        )
        return notes
    notes.append(f"shift vectors differ at {differing} of {ell} indices")
    if d1 is None or d2 is None:
        notes.append("minimum distances unavailable within budget; "
                     "distance-bound case analysis skipped")
    else:
        if d1 > ell:
            notes.append(
                f"first code's distance {d1} > {ell}: an MT structure, if "
                "any, must use the first code's shifts"
            )
        if d2 > ell:
            notes.append(
                f"second code's distance {d2} > {ell}: an MT structure, if "
                "any, must use the second code's shifts"
            )
        if d1 <= ell and d2 <= ell:
            notes.append(
                f"distances {d1} and {d2} are both <= {ell}: a different "
                "shift vector Gamma can work only when each code's distance "
                "is at most the number of blocks where Gamma differs from "
                "that code's shifts"
            )
        if d1 > ell and d2 > ell:
            diff_blocks = [i for i, (a, b) in enumerate(zip(shifts1, shifts2)) if a != b]
            ok = set(diff_blocks) <= set(zero_projection)
            notes.append(
                "both distances exceed the index: an MT structure exists iff "
                "every block where the shifts differ projects to zero; "
                f"{'holds' if ok else 'fails'} here"
            )
    if not exhaustive:
        notes.append("inconclusive beyond tested set (exhaustive search over budget)")
    if not admitted:
        notes.append("no tested shift vector admits an MT structure")
    return notes
