"""Command line front end.

Examples::

    berezinmult --algebra A2 --highest 4,2 --weight -2,-1
    berezinmult --algebra A2 --highest 4,2 --all --verify --json
    berezinmult --algebra C2 --highest 1,1 --weight -1,0 --dump-form

Exit status is 0 on success, 2 for usage or domain errors and 3 when an
internal consistency check fails (including a disagreement with the
Freudenthal oracle in ``--verify`` mode).
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .berezin import HermitianForm, Kernel, kernel_for_highest_weight, multiplicity
from .liealg import (
    ConsistencyError,
    DomainError,
    GroupSpec,
    UnsupportedAlgebra,
    Weight,
    build_rep,
    build_root_datum,
)
from .oracle import weight_system, weyl_dimension
from .polyalg import Monomial, render_monomial

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INTERNAL = 3


@dataclass(frozen=True)
class Request:
    algebra: GroupSpec
    highest_weight: Weight
    target: Optional[Weight]  # None means sweep the whole weight system
    verify: bool = False
    dump_kernel: bool = False
    dump_form: bool = False
    output_format: str = "table"


def parse_weight(text: str) -> Weight:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"weight {text!r} must be comma-separated integers") from None


def parse_algebra(text: str) -> GroupSpec:
    try:
        return GroupSpec.parse(text)
    except UnsupportedAlgebra as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="berezinmult",
        description="Weight multiplicities as ranks of rational Hermitian forms.")
    p.add_argument("--algebra", required=True, type=parse_algebra,
                   help="family and rank, e.g. A2 or C2")
    p.add_argument("--highest", required=True, type=parse_weight,
                   help="dominant highest weight in Dynkin labels, e.g. 4,2")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--weight", type=parse_weight, help="target weight, e.g. -2,-1")
    target.add_argument("--all", action="store_true", help="sweep the full weight system")
    p.add_argument("--verify", action="store_true",
                   help="compare against the Freudenthal recursion")
    p.add_argument("--dump-kernel", action="store_true",
                   help="print the reproducing kernel polynomial")
    p.add_argument("--dump-form", action="store_true",
                   help="print the Hermitian form of every target weight")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    return p


_WEIGHT_OPTS = ("--weight", "--highest")


def _attach_values(argv: Sequence[str]) -> list[str]:
    # "--weight -2,-1" would otherwise be read as an unknown option
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _WEIGHT_OPTS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def parse_request(argv: Optional[Sequence[str]] = None) -> Request:
    """Parse argv into a :class:`Request`; exits with status 2 on bad input."""
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    args = parser.parse_args(_attach_values(argv))
    datum = build_root_datum(args.algebra)
    for name, w in (("--highest", args.highest), ("--weight", args.weight)):
        if w is not None and len(w) != datum.rank:
            parser.error(f"{name} needs {datum.rank} labels for {args.algebra}")
    if not datum.is_dominant(args.highest):
        parser.error(f"highest weight {args.highest} is not dominant")
    return Request(
        algebra=args.algebra,
        highest_weight=args.highest,
        target=None if args.all else args.weight,
        verify=args.verify,
        dump_kernel=args.dump_kernel,
        dump_form=args.dump_form,
        output_format="json" if args.json else "table",
    )


def _frac(x) -> str:
    return f"{x.numerator}/{x.denominator}"


def _form_json(form: HermitianForm) -> dict:
    return {
        "basis": [list(b) for b in form.basis],
        "matrix": [[_frac(x) for x in row] for row in form.matrix],
    }


def _form_text(form: HermitianForm) -> str:
    if not form.size:
        return "  (empty form)"
    nvars = len(form.basis[0])
    lines = ["  basis:"]
    for i, b in enumerate(form.basis, start=1):
        lines.append(f"    u{i} = {render_monomial(Monomial(b, (0,) * nvars))}")
    lines.append("  matrix:")
    for row in form.matrix:
        lines.append("    " + "  ".join(_frac(x) for x in row))
    return "\n".join(lines)


def _fmt_weight(w) -> str:
    return "(" + ",".join(str(x) for x in w) + ")"


def execute(request: Request, out=None) -> int:
    """Run a parsed request, writing to ``out``; returns the exit status."""
    out = sys.stdout if out is None else out
    spec = request.algebra
    datum = build_root_datum(spec)
    lam = request.highest_weight
    try:
        kernel: Kernel = kernel_for_highest_weight(build_rep(spec), datum, lam)
        dimension = weyl_dimension(datum, lam)
        system = weight_system(datum, lam) if (request.target is None or request.verify) else None
        targets = system.weights() if request.target is None else [request.target]
        results = [multiplicity(spec, lam, m, kernel=kernel, keep_form=request.dump_form,
                                check_psd=True) for m in targets]
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConsistencyError, ArithmeticError) as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL

    status = EXIT_OK
    mismatches = []
    if request.verify:
        for r in results:
            expected = system.entries.get(r.weight, 0)
            if expected != r.multiplicity:
                mismatches.append((r.weight, r.multiplicity, expected))
        if request.target is None and sum(r.multiplicity for r in results) != dimension:
            mismatches.append(("sum", sum(r.multiplicity for r in results), dimension))
        if mismatches:
            status = EXIT_INTERNAL

    if request.output_format == "json":
        doc = {
            "algebra": str(spec),
            "highest_weight": list(lam),
            "dimension": dimension,
            "results": [],
        }
        for r in results:
            item = {"weight": list(r.weight), "multiplicity": r.multiplicity,
                    "basis_size": r.basis_size}
            if request.verify:
                item["oracle_multiplicity"] = system.entries.get(r.weight, 0)
            if request.dump_form:
                item["form"] = _form_json(r.form)
            doc["results"].append(item)
        if request.target is None:
            doc["multiplicity_sum"] = sum(r.multiplicity for r in results)
        if request.dump_kernel:
            doc["kernel"] = kernel.poly.render().split("\n")
        json.dump(doc, out, indent=2)
        out.write("\n")
    else:
        print(f"algebra {spec}  highest weight {_fmt_weight(lam)}  dimension {dimension}",
              file=out)
        if request.dump_kernel:
            print(f"kernel ({len(kernel.poly)} terms):", file=out)
            print(kernel.poly.render(), file=out)
        if request.target is not None and not request.dump_form and not request.verify:
            r = results[0]
            print(f"weight {_fmt_weight(r.weight)}  multiplicity {r.multiplicity}"
                  f"  (basis size {r.basis_size})", file=out)
        else:
            header = f"{'weight':>12}  {'mult':>4}  {'basis':>5}"
            if request.verify:
                header += f"  {'oracle':>6}"
            print(header, file=out)
            for r in results:
                line = f"{_fmt_weight(r.weight):>12}  {r.multiplicity:>4}  {r.basis_size:>5}"
                if request.verify:
                    line += f"  {system.entries.get(r.weight, 0):>6}"
                print(line, file=out)
                if request.dump_form:
                    print(_form_text(r.form), file=out)
            if request.target is None:
                print(f"sum of multiplicities {sum(r.multiplicity for r in results)}"
                      f"  Weyl dimension {dimension}", file=out)
    for w, got, want in mismatches:
        print(f"MISMATCH at {w}: berezin {got}, oracle {want}", file=sys.stderr)
    return status


def main(argv: Optional[Sequence[str]] = None) -> int:
    request = parse_request(argv)
    return execute(request)


if __name__ == "__main__":
    sys.exit(main())
