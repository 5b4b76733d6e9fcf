"""Command-line front end.

Reads code documents, runs the requested operation, and prints a report in
text or JSON form.  A document is a plain-text file:

    GF(4)                     field header, or GF(p^e) mod c0 c1 ... ce
    code C1                   a named block: either a scalar matrix ...
    matrix 2 3
    1 0 w
    0 1 w^2
    code C2                   ... or a multi-twisted description
    mt 2
    blocks 6 2
    shifts 1 w
    gpm                       'gpm' + ell polynomial rows ('|'-separated),
    w + x | w                 or 'gen' + a scalar matrix block
    0 | w^2 + x

'#' starts a comment; blank lines are ignored.  Exit status is 0 on
success, 1 on domain errors (incompatible inputs, unmet preconditions,
oracle mismatch), 2 on parse or usage errors.  Reports are deterministic:
identical inputs give byte-identical output, and every JSON report records
the polynomial factorization seed.  The environment variable
MTCODES_ENUM_BUDGET overrides the enumeration budget used for minimum
distances and --oracle cross-checks.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import oracle
from .errors import BudgetError, DomainError, ParseError
from .gf import Field, field
from .lincode import LinearCode, parse_matrix_block
from .mtcode import MTCode, MTProfile, advise_intersection_structure
from .pmat import PolyMatrix
from .upoly import FACTOR_SEED, Poly

ENV_BUDGET = "MTCODES_ENUM_BUDGET"

_FIELD_RE = re.compile(r"^GF\((\d+)(?:\^(\d+))?\)$")
_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


# ---------------------------------------------------------------------------
# document parsing
# ---------------------------------------------------------------------------

def parse_field_header(text: str, lineno: int) -> Field:
    parts = text.split()
    m = _FIELD_RE.match(parts[0])
    if not m:
        raise ParseError("expected field header 'GF(q)' or 'GF(p^e) mod ...'", lineno)
    base, exp = int(m.group(1)), m.group(2)
    if len(parts) == 1:
        try:
            if exp is None:
                return Field.of_order(base)
            return field(base, int(exp))
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    if parts[1] != "mod":
        raise ParseError("expected 'mod' before modulus coefficients", lineno)
    try:
        coeffs = tuple(int(c) for c in parts[2:])
    except ValueError:
        raise ParseError("modulus coefficients must be integers", lineno) from None
    try:
        if exp is None:
            f = Field.of_order(base)
            p, e = f.p, f.e
        else:
            p, e = base, int(exp)
        return field(p, e, coeffs)
    except ValueError as exc:
        raise ParseError(str(exc), lineno) from None


class CodeDocument:
    """A parsed document: the field plus named codes in file order."""

    def __init__(self, fld: Field, codes: dict):
        self.field = fld
        self.codes = codes

    def get(self, name: str):
        if name not in self.codes:
            known = ", ".join(self.codes) or "none"
            raise DomainError(f"no code named {name!r} (defined: {known})")
        return self.codes[name]


def parse_document(text: str) -> CodeDocument:
    lines = []
    for i, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append((stripped, i))
    if not lines:
        raise ParseError("empty document", 1)
    fld = parse_field_header(*lines[0])
    codes: dict = {}
    at = 1
    while at < len(lines):
        head, lineno = lines[at]
        parts = head.split()
        if parts[0] != "code" or len(parts) != 2:
            raise ParseError("expected 'code <name>'", lineno)
        name = parts[1]
        if not _NAME_RE.match(name):
            raise ParseError(f"invalid code name {name!r}", lineno)
        if name in codes:
            raise ParseError(f"duplicate code name {name!r}", lineno)
        if at + 1 >= len(lines):
            raise ParseError(f"code {name!r} has no body", lineno)
        body, body_line = lines[at + 1]
        if body.startswith("matrix"):
            rows, at = parse_matrix_block(fld, lines, at + 1)
            codes[name] = LinearCode(fld, len(rows[0]), rows)
        elif body.startswith("mt"):
            codes[name], at = _parse_mt_block(fld, lines, at + 1)
        else:
            raise ParseError("expected 'matrix <r> <c>' or 'mt <ell>'", body_line)
    return CodeDocument(fld, codes)


def _parse_mt_block(fld: Field, lines, start: int) -> tuple[MTCode, int]:
    text, lineno = lines[start]
    parts = text.split()
    if len(parts) != 2 or parts[0] != "mt":
        raise ParseError("expected 'mt <ell>'", lineno)
    try:
        ell = int(parts[1])
    except ValueError:
        raise ParseError("index must be an integer", lineno) from None
    if ell < 1:
        raise ParseError("index must be positive", lineno)

    def keyword_line(idx, key):
        if idx >= len(lines):
            raise ParseError(f"missing '{key}' line", lineno)
        text, ln = lines[idx]
        parts = text.split()
        if parts[0] != key:
            raise ParseError(f"expected '{key} ...'", ln)
        if len(parts) != ell + 1:
            raise ParseError(f"'{key}' needs {ell} entries", ln)
        return parts[1:], ln

    raw_blocks, ln = keyword_line(start + 1, "blocks")
    try:
        blocks = tuple(int(b) for b in raw_blocks)
    except ValueError:
        raise ParseError("block lengths must be integers", ln) from None
    raw_shifts, ln = keyword_line(start + 2, "shifts")
    try:
        shifts = tuple(fld.parse_element(s) for s in raw_shifts)
    except ParseError as exc:
        raise ParseError(str(exc), ln) from None
    try:
        profile = MTProfile(fld, blocks, shifts)
    except ValueError as exc:
        raise ParseError(str(exc), ln) from None

    if start + 3 >= len(lines):
        raise ParseError("expected 'gpm' or 'gen' after shifts", lineno)
    mode, mode_line = lines[start + 3]
    if mode == "gpm":
        rows = []
        for i in range(ell):
            if start + 4 + i >= len(lines):
                raise ParseError(f"gpm needs {ell} rows, found {i}", mode_line)
            rtext, rline = lines[start + 4 + i]
            cells = [c.strip() for c in rtext.split("|")]
            if len(cells) != ell:
                raise ParseError(f"expected {ell} polynomials, found {len(cells)}", rline)
            try:
                rows.append([Poly.parse(fld, c) for c in cells])
            except ParseError as exc:
                raise ParseError(str(exc), rline) from None
        return MTCode(profile, rows), start + 4 + ell
    if mode == "gen":
        rows, nxt = parse_matrix_block(fld, lines, start + 4)
        try:
            code = MTCode.from_linear(profile, LinearCode(fld, len(rows[0]), rows))
        except (ValueError, DomainError) as exc:
            raise ParseError(str(exc), mode_line) from None
        return code, nxt
    raise ParseError("expected 'gpm' or 'gen'", mode_line)


def load_document(path: str) -> CodeDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_document(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}", 0) from None


# ---------------------------------------------------------------------------
# payload construction and rendering
# ---------------------------------------------------------------------------

def scalar_rows(fld: Field, rows) -> list[str]:
    return [" ".join(fld.format_element(e) for e in row) for row in rows]


def poly_rows(mat: PolyMatrix) -> list[str]:
    return [" | ".join(str(e) for e in row) for row in mat.rows]


def _distance(code, budget) -> int | None:
    try:
        return _finite(code.min_distance(budget))
    except BudgetError:
        return None


def _finite(d) -> int | None:
    return None if d is None or d == float("inf") else int(d)


def code_payload(name, code, budget, with_distance: bool = True) -> dict:
    if isinstance(code, MTCode):
        prof = code.profile
        out = {
            "name": name,
            "kind": "mt",
            "length": prof.n,
            "dimension": code.dim,
        }
        if with_distance:
            out["distance"] = _distance(code, budget)
        out["blocks"] = list(prof.blocks)
        out["shifts"] = [prof.field.format_element(s) for s in prof.shifts]
        out["period"] = prof.period
        out["gpm"] = poly_rows(code.gpm)
        out["companion"] = poly_rows(code.companion)
        out["generator"] = scalar_rows(code.field, code.to_linear().gen)
        return out
    out = {
        "name": name,
        "kind": "linear",
        "length": code.n,
        "dimension": code.k,
    }
    if with_distance:
        out["distance"] = _distance(code, budget)
    out["generator"] = scalar_rows(code.field, code.gen)
    return out


def render_lines(obj, indent: int = 0) -> list[str]:
    """Text rendering of a JSON payload: 'key: value' lines, nested blocks
    indented.  Both report forms derive from one payload, so their contents
    always agree."""
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key, value in obj.items():
            if isinstance(value, dict) or _is_block_list(value):
                lines.append(f"{pad}{key}:")
                lines.extend(render_lines(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar_text(value)}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(render_lines(item, indent + 1))
            else:
                lines.append(f"{pad}{_scalar_text(item)}")
    else:
        lines.append(f"{pad}{_scalar_text(obj)}")
    return lines


def _is_block_list(value) -> bool:
    if not isinstance(value, list):
        return False
    return any(
        isinstance(v, (dict, list)) or (isinstance(v, str) and (" " in v or "|" in v))
        for v in value
    )


def _scalar_text(value) -> str:
    if value is None:
        return "none"
    if value is True:
        return "true"
    if value is False:
        return "false"
    if isinstance(value, list):
        return " ".join(str(v) for v in value) if value else "(empty)"
    return str(value)


def emit(payload: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(render_lines(payload)))


def base_payload(command: str, doc: CodeDocument) -> dict:
    return {
        "schema": 1,
        "command": command,
        "field": doc.field.header(),
        "factor_seed": FACTOR_SEED,
    }


def _as_linear(code) -> LinearCode:
    return code.to_linear() if isinstance(code, MTCode) else code


# ---------------------------------------------------------------------------
# oracle cross-checks
# ---------------------------------------------------------------------------

def _oracle_note(fn) -> str:
    try:
        return "confirmed" if fn() else "MISMATCH"
    except BudgetError:
        return "skipped (budget exceeded)"


def _oracle_intersection(lin1, lin2, result, kappa, budget):
    def run():
        if kappa is None:
            words = oracle.intersect_codes(lin1, lin2, budget)
        else:
            words = oracle.galois_dual_set(lin1, kappa, budget) & oracle.enumerate_code(
                lin2, budget
            )
        return oracle.same_code(_as_linear(result), words, budget)

    return _oracle_note(run)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_info(args, budget) -> int:
    doc = load_document(args.file)
    names = [args.name] if args.name else list(doc.codes)
    if args.name:
        doc.get(args.name)
    payload = base_payload("info", doc)
    payload["codes"] = [code_payload(n, doc.codes[n], budget) for n in names]
    emit(payload, args.json)
    return 0


def cmd_intersect(args, budget) -> int:
    doc = load_document(args.file)
    c1, c2 = doc.get(args.first), doc.get(args.second)
    both_mt = isinstance(c1, MTCode) and isinstance(c2, MTCode)
    if args.mt and not both_mt:
        raise DomainError("--mt requires two multi-twisted codes")
    use_mt = both_mt and not args.linear
    if use_mt and args.galois is None and c1.profile != c2.profile:
        if args.mt:
            raise DomainError(
                "profiles differ; the GPM route needs identical shift "
                "constants and block lengths (try 'check --advisor')"
            )
        use_mt = False
    payload = base_payload("intersect", doc)
    payload["first"] = args.first
    payload["second"] = args.second
    payload["kappa"] = args.galois
    payload["route"] = "gpm" if use_mt else "linear"

    if use_mt:
        if args.galois is None:
            details = c1.intersection_details(c2)
        else:
            details = c1.galois_intersection_details(c2, args.galois)
        payload["qc_gpm"] = poly_rows(details.qc_gpm)
        payload["qc_companion"] = poly_rows(details.qc_companion)
        payload["intersection"] = code_payload("intersection", details.code, budget)
        result = details.code
    else:
        lin1, lin2 = _as_linear(c1), _as_linear(c2)
        if args.galois is None:
            result = lin1.intersect(lin2)
        else:
            result = lin1.galois_intersect(lin2, args.galois)
        payload["intersection"] = code_payload("intersection", result, budget)

    if args.oracle:
        payload["oracle"] = _oracle_intersection(
            _as_linear(c1), _as_linear(c2), result, args.galois, budget
        )
        emit(payload, args.json)
        return 1 if payload["oracle"] == "MISMATCH" else 0
    emit(payload, args.json)
    return 0


def _layers_payload(table) -> dict:
    return {
        "layers": [
            {
                "factor": str(layer.factor),
                "power": layer.power,
                "type": list(layer.type_vector),
                "weighted": layer.weighted,
            }
            for layer in table.layers
        ],
        "total": table.total,
        "target": table.target,
    }


def _property_payload(check) -> dict:
    out = {"holds": check.holds}
    if check.kappa is not None:
        out["kappa"] = check.kappa
    if check.note is not None:
        out["note"] = check.note
    if check.residue is not None:
        out["residue"] = poly_rows(check.residue)
    if check.table is not None:
        out.update(_layers_payload(check.table))
    return out


def _oracle_property(code, prop: str, kappa: int, verdict: bool, budget) -> str:
    lin = _as_linear(code)

    def run():
        words = oracle.enumerate_code(lin, budget)
        if prop == "reversible":
            return (oracle.reverse_words(words) == words) == verdict
        dual = oracle.galois_dual_set(lin, kappa, budget)
        if prop == "self_orthogonal":
            return (words <= dual) == verdict
        if prop == "dual_containing":
            return (dual <= words) == verdict
        return ((words & dual) == {(0,) * lin.n}) == verdict

    return _oracle_note(run)


def _linear_property(lin: LinearCode, prop: str, kappa: int):
    if prop == "reversible":
        return lin.is_reversible()
    dual = lin.galois_dual(kappa)
    if prop == "self_orthogonal":
        return dual.contains_code(lin)
    if prop == "dual_containing":
        return lin.contains_code(dual)
    return lin.galois_intersect(lin, kappa).k == 0


def cmd_check(args, budget) -> int:
    doc = load_document(args.file)
    code = doc.get(args.name)
    payload = base_payload("check", doc)
    payload["name"] = args.name

    if args.advisor is not None:
        other = doc.get(args.advisor)
        if not isinstance(code, MTCode) or not isinstance(other, MTCode):
            raise DomainError("--advisor requires two multi-twisted codes")
        advice = advise_intersection_structure(code, other, distance_budget=budget)
        payload["check"] = "advisor"
        payload["other"] = args.advisor
        payload["advice"] = {
            "blocks": list(advice.blocks),
            "shifts_first": [doc.field.format_element(s) for s in advice.shifts1],
            "shifts_second": [doc.field.format_element(s) for s in advice.shifts2],
            "intersection_dimension": advice.intersection.k,
            "intersection_generator": scalar_rows(doc.field, advice.intersection.gen),
            "admitted_shifts": [
                [doc.field.format_element(s) for s in gamma] for gamma in advice.admitted
            ],
            "exhaustive": advice.exhaustive,
            "differing_blocks": advice.differing,
            "zero_projection_blocks": list(advice.zero_projection_blocks),
            "distance_first": _finite(advice.d1),
            "distance_second": _finite(advice.d2),
            "notes": list(advice.notes),
        }
        emit(payload, args.json)
        return 0

    if args.hull is not None:
        return _cmd_check_hull(args, doc, code, payload, budget)
    if args.reverse:
        return _cmd_reverse_payload(args, doc, code, payload, budget)

    prop, kappa = _selected_property(args)
    payload["check"] = prop
    if isinstance(code, MTCode):
        check = code.property_check(prop, kappa) if kappa is not None else code.property_check(prop)
        payload["result"] = _property_payload(check)
        verdict = check.holds
    else:
        verdict = _linear_property(code, prop, kappa or 0)
        payload["result"] = {"holds": verdict}
        if kappa is not None:
            payload["result"]["kappa"] = kappa

    if prop == "reversible" and verdict is False:
        lin = _as_linear(code)
        _, subcode = lin.reversibility()
        payload["largest_reversible_subcode"] = {
            "dimension": subcode.k,
            "generator": scalar_rows(doc.field, subcode.gen),
        }

    if verdict is None:
        emit(payload, args.json)
        return 1
    if args.oracle:
        payload["oracle"] = _oracle_property(code, prop, kappa or 0, verdict, budget)
        emit(payload, args.json)
        return 1 if payload["oracle"] == "MISMATCH" else 0
    emit(payload, args.json)
    return 0


def _selected_property(args) -> tuple[str, int | None]:
    if args.so is not None:
        return "self_orthogonal", args.so
    if args.dc is not None:
        return "dual_containing", args.dc
    if args.lcd is not None:
        return "lcd", args.lcd
    return "reversible", None


def _cmd_check_hull(args, doc, code, payload, budget) -> int:
    kappa = args.hull
    payload["check"] = "hull"
    payload["kappa"] = kappa
    if isinstance(code, MTCode):
        try:
            details = code.galois_hull_details(kappa)
        except DomainError as exc:
            payload["note"] = f"GPM route unavailable: {exc}; using the linear route"
        else:
            payload["qc_gpm"] = poly_rows(details.qc_gpm)
            payload["qc_companion"] = poly_rows(details.qc_companion)
            payload["hull"] = code_payload("hull", details.code, budget)
            if args.oracle:
                payload["oracle"] = _oracle_intersection(
                    _as_linear(code), _as_linear(code), details.code, kappa, budget
                )
                emit(payload, args.json)
                return 1 if payload["oracle"] == "MISMATCH" else 0
            emit(payload, args.json)
            return 0
    lin = _as_linear(code)
    hull = lin.hull(kappa)
    payload["hull"] = code_payload("hull", hull, budget)
    if args.oracle:
        payload["oracle"] = _oracle_intersection(lin, lin, hull, kappa, budget)
        emit(payload, args.json)
        return 1 if payload["oracle"] == "MISMATCH" else 0
    emit(payload, args.json)
    return 0


def _cmd_reverse_payload(args, doc, code, payload, budget) -> int:
    payload["check"] = "reverse"
    if isinstance(code, MTCode):
        rev = code.reversed_code()
        payload["reversed"] = code_payload("reversed", rev, budget)
        payload["equals_original"] = rev.to_linear() == code.to_linear()
    else:
        rev = code.reversed_code()
        payload["reversed"] = code_payload("reversed", rev, budget)
        payload["equals_original"] = rev == code
    if args.oracle:
        lin = _as_linear(code)

        def run():
            words = oracle.reverse_words(oracle.enumerate_code(lin, budget))
            return oracle.same_code(_as_linear(rev), words, budget)

        payload["oracle"] = _oracle_note(run)
        emit(payload, args.json)
        return 1 if payload["oracle"] == "MISMATCH" else 0
    emit(payload, args.json)
    return 0


def cmd_dual(args, budget) -> int:
    doc = load_document(args.file)
    code = doc.get(args.name)
    payload = base_payload("dual", doc)
    payload["name"] = args.name
    payload["kappa"] = args.galois
    dual = code.dual() if args.galois is None else code.galois_dual(args.galois)
    payload["dual"] = code_payload("dual", dual, budget)
    if args.oracle:
        lin = _as_linear(code)

        def run():
            words = oracle.galois_dual_set(lin, args.galois or 0, budget)
            return oracle.same_code(_as_linear(dual), words, budget)

        payload["oracle"] = _oracle_note(run)
        emit(payload, args.json)
        return 1 if payload["oracle"] == "MISMATCH" else 0
    emit(payload, args.json)
    return 0


def cmd_reverse(args, budget) -> int:
    doc = load_document(args.file)
    code = doc.get(args.name)
    payload = base_payload("reverse", doc)
    payload["name"] = args.name
    return _cmd_reverse_payload(args, doc, code, payload, budget)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mtcodes",
        description="exact operations on linear and multi-twisted codes",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    def common(p):
        p.add_argument("file", help="code document")
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--oracle", action="store_true",
                       help="cross-check against brute-force enumeration")

    p = sub.add_parser("info", help="describe codes in a document")
    common(p)
    p.add_argument("name", nargs="?", help="code name (default: all)")
    p.set_defaults(run=cmd_info)

    p = sub.add_parser("intersect", help="intersection of two codes")
    common(p)
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--galois", type=int, metavar="K",
                   help="intersect the K-Galois dual of the first code with the second")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--mt", action="store_true", help="require the GPM route")
    mode.add_argument("--linear", action="store_true", help="force the linear route")
    p.set_defaults(run=cmd_intersect)

    p = sub.add_parser("check", help="test a property of a code")
    common(p)
    p.add_argument("name")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--so", type=int, metavar="K", help="K-Galois self-orthogonal")
    which.add_argument("--dc", type=int, metavar="K", help="K-Galois dual-containing")
    which.add_argument("--lcd", type=int, metavar="K", help="K-Galois complementary dual")
    which.add_argument("--reversible", action="store_true",
                       help="reversibility; reports the largest reversible subcode if not")
    which.add_argument("--hull", type=int, metavar="K", help="K-Galois hull")
    which.add_argument("--reverse", action="store_true", help="the reversed code")
    which.add_argument("--advisor", metavar="OTHER",
                       help="shift constants under which the intersection with OTHER is MT")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("dual", help="dual or Galois dual of a code")
    common(p)
    p.add_argument("name")
    p.add_argument("--galois", type=int, metavar="K", help="K-Galois dual")
    p.set_defaults(run=cmd_dual)

    p = sub.add_parser("reverse", help="reversed code")
    common(p)
    p.add_argument("name")
    p.set_defaults(run=cmd_reverse)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    budget = None
    raw = os.environ.get(ENV_BUDGET)
    if raw is not None:
        try:
            budget = int(raw)
        except ValueError:
            print(f"error: {ENV_BUDGET} must be an integer", file=sys.stderr)
            return 2
    try:
        return args.run(args, budget)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
