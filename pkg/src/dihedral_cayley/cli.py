"""Command-line front end.

Exit codes: 0 certified / success, 2 invalid input or generating set,
3 diameter larger than expected, 4 infeasible request or search cap,
5 generating set does not generate the group.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import bounds_primes as bp
from . import diameter_checker as dc
from . import field_construction as fc
from . import search_oracle as so
from .group_core import GDElement, GroupError, GroupSpec

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_DIAMETER = 3
EXIT_INFEASIBLE = 4
EXIT_DISCONNECTED = 5

CSV_COLUMNS = ("d", "p", "actual_degree", "constructed_order", "dihedral_upper", "moore", "ratio")


class CLIError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _fmt_diameter(x: float) -> str:
    return "not-connected" if x == dc.NOT_CONNECTED else str(x)


# --- construct ------------------------------------------------------------

def construct(p: int, pad_to: int | None = None):
    """Build, optionally pad, and certify.

    Returns ``(FieldGenSet, labelled generators, spec, elements, diameter)``;
    raises ``CLIError`` instead of returning an uncertified set.
    """
    try:
        S = fc.build_generating_set(p)
    except fc.FieldConstructionError as exc:
        raise CLIError(str(exc), EXIT_INVALID) from None
    g = fc.find_primitive_root(p)
    gens = list(S.generators)
    elems = fc.transported_set(S, g)
    spec = S.spec
    if pad_to is not None:
        try:
            padded = bp.pad_with_involutions(spec, elems, pad_to)
        except bp.InfeasibleError as exc:
            raise CLIError(str(exc), EXIT_INFEASIBLE) from None
        for k, x in enumerate(padded[len(elems):], start=1):
            gens.append(fc.LabelledGenerator("P", k, fc.from_gd_element(p, x, g)))
        elems = padded
    problems = dc.validate_generating_set(spec, elems)
    if problems:
        raise CLIError("construction failed validation: " + "; ".join(problems), EXIT_INVALID)
    diam = dc.diameter(spec, elems)
    if diam == dc.NOT_CONNECTED or diam > 2 or not dc.is_diameter_two(spec, elems)[0]:
        raise CLIError(f"construction not certified: diameter {_fmt_diameter(diam)}", EXIT_DIAMETER)
    return S, gens, spec, elems, diam


def cmd_construct(args) -> int:
    S, gens, spec, elems, diam = construct(args.p, args.pad_to)
    text = fc.format_genset(args.p, gens)
    if args.out == "-":
        sys.stdout.write(text)
    elif args.out:
        Path(args.out).write_text(text)
    m1, m2 = dc.split_counts(spec, elems)
    print(f"p={args.p} group={spec} order={spec.order} nominal_degree={S.nominal_degree} "
          f"actual_degree={S.actual_degree} degree={len(elems)} m1={m1} m2={m2} diameter={diam}",
          file=sys.stderr if args.out == "-" else sys.stdout)
    return EXIT_OK


# --- verify ---------------------------------------------------------------

def load_set(path: str, spec_text: str | None) -> tuple[GroupSpec, list[GDElement]]:
    """Read either a labelled generating-set file or one element per line."""
    text = Path(path).read_text()
    body = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if body and body[0].startswith("p="):
        p, gens = fc.parse_genset(text)
        spec = GroupSpec((p, p - 1))
        if spec_text is not None and GroupSpec.parse(spec_text) != spec:
            raise CLIError(f"--spec {spec_text} does not match p={p} (expected {p},{p - 1})", EXIT_INVALID)
        g = fc.find_primitive_root(p)
        return spec, [fc.to_gd_element(p, gen.element, g) for gen in gens]
    if spec_text is None:
        raise CLIError("--spec is required for element-list set files", EXIT_INVALID)
    spec = GroupSpec.parse(spec_text)
    return spec, [GDElement.from_text(ln) for ln in body]


def cmd_verify(args) -> int:
    try:
        spec, S = load_set(args.set, args.spec)
    except (GroupError, fc.FieldConstructionError, ValueError) as exc:
        raise CLIError(f"cannot read set: {exc}", EXIT_INVALID) from None
    problems = dc.validate_generating_set(spec, S)
    if problems:
        for msg in problems:
            print(f"violation: {msg}")
        print(f"group={spec} order={spec.order} degree={len(S)} INVALID")
        return EXIT_INVALID
    diam = dc.diameter(spec, S)
    m1, m2 = dc.split_counts(spec, S)
    line = f"group={spec} order={spec.order} degree={len(S)} m1={m1} m2={m2} diameter={_fmt_diameter(diam)}"
    if diam == dc.NOT_CONNECTED:
        print(line + " not connected")
        return EXIT_DISCONNECTED
    if diam > args.expect:
        print(line + f" MISMATCH expected<={args.expect}")
        return EXIT_DIAMETER
    print(line + " OK")
    return EXIT_OK


# --- bounds ---------------------------------------------------------------

def parse_range(text: str) -> range:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise CLIError(f"bad range {text!r}; expected a..b", EXIT_INVALID) from None
    if hi < lo:
        raise CLIError(f"empty range {text!r}", EXIT_INVALID)
    return range(lo, hi + 1)


def table_rows(degrees, exact_small: bool = False) -> list[bp.BoundReport]:
    out = []
    for d in degrees:
        try:
            out.append(bp.build_report(d, exact_small=exact_small))
        except ValueError as exc:
            raise CLIError(str(exc), EXIT_INVALID) from None
    return out


def _row_fields(r: bp.BoundReport) -> dict:
    return {
        "d": r.d,
        "p": r.p,
        "actual_degree": r.actual_degree,
        "constructed_order": r.constructed_order,
        "dihedral_upper": r.dihedral_upper,
        "moore": r.moore,
        "ratio": f"{r.ratio:.6f}",
    }


def render_csv(rows: list[bp.BoundReport]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: ("" if v is None else v) for k, v in _row_fields(r).items()})
    return buf.getvalue()


def render_json(rows: list[bp.BoundReport], with_set: bool = False) -> str:
    out = []
    for r in rows:
        rec = _row_fields(r)
        rec["ratio"] = float(rec["ratio"])
        if r.exact_order is not None:
            rec["exact_order"] = r.exact_order
        if with_set and r.p is not None and r.p >= fc.MIN_PRIME:
            _, gens, _, elems, _ = construct(r.p, r.d)
            rec["generating_set"] = [x.to_text() for x in elems]
        out.append(rec)
    return json.dumps(out, indent=2) + "\n"


def cmd_bounds(args) -> int:
    degrees = [args.d] if args.d is not None else parse_range(args.range)
    rows = table_rows(degrees, exact_small=args.exact_small)
    if args.format == "csv":
        sys.stdout.write(render_csv(rows))
    else:
        sys.stdout.write(render_json(rows, with_set=args.with_set))
    return EXIT_OK


# --- search ---------------------------------------------------------------

def _witness_text(S) -> str:
    return " ".join(x.to_text() for x in S)


def cmd_search(args) -> int:
    try:
        if args.exact_dc is not None:
            res = so.exact_dc(args.exact_dc, args.group_class)
            ok = so.verify_witness(res.spec, res.witness)
            upper = bp.dihedral_upper_bound(res.d)
            print(f"d={res.d} class={res.group_class} DC={res.order} group={res.spec} "
                  f"upper={upper} examined={res.sets_examined} verified={'yes' if ok else 'no'}")
            print(f"witness {_witness_text(res.witness)}")
            return EXIT_OK if ok else EXIT_DIAMETER
        if args.max_order > so.SEARCH_ORDER_CAP:
            raise so.SearchCapError(f"--max-order is capped at {so.SEARCH_ORDER_CAP}")
        for order in range(2, args.max_order + 1, 2):
            for spec in so.specs_of_order(order, args.group_class):
                res = so.min_degree_diameter2(spec, start_at_bound=args.start_at_bound)
                m1, m2 = res.split
                print(f"order={order} group={spec} d_min={res.d_min} bound={bp.min_degree_bound(spec.n)} "
                      f"m1={m1} m2={m2} examined={res.sets_examined} witness={_witness_text(res.witness)}")
        return EXIT_OK
    except so.SearchCapError as exc:
        raise CLIError(str(exc), EXIT_INFEASIBLE) from None


# --- entry point ----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dihedral-cayley",
        description="Diameter-2 Cayley graphs of dihedral groups: constructions, checks and bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build the GF(p) generating set and certify diameter 2")
    p.add_argument("--p", type=int, required=True, help="prime >= 5")
    p.add_argument("--pad-to", type=int, help="pad with involutions up to this degree")
    p.add_argument("--out", help="write the labelled set here ('-' for stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="compute the diameter of a Cayley graph from a set file")
    p.add_argument("--spec", help="cyclic factor orders of H, e.g. 5,4")
    p.add_argument("--set", required=True, help="set file (labelled or element-per-line)")
    p.add_argument("--expect", type=int, default=2, help="maximum acceptable diameter (default 2)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="tabulate lower/upper bounds on DC(d,2)")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--d", type=int)
    g.add_argument("--range", help="a..b inclusive")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--with-set", action="store_true", help="inline the padded generating set (json)")
    p.add_argument("--exact-small", action="store_true",
                   help="attach exhaustive DC values for degrees where p < 5")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", help="exhaustive small-case certification")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--max-order", type=int, help="minimum diameter-2 degree for every order up to this")
    g.add_argument("--exact-dc", type=int, help="exact DC(d,2) for small d")
    p.add_argument("--class", dest="group_class", choices=("dihedral", "generalised"), default="dihedral")
    p.add_argument("--start-at-bound", action="store_true",
                   help="skip sizes below the counting bound (faster, not a certificate of the bound)")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
