"""Command line front end: ``tiealg <command> ...``.

Exit codes: 0 success, 2 input error, 3 budget exhausted or unsupported
request, 4 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import diagram, hyperoct, relations, rewrite
from .completion import RewriteBudgetExceeded
from .scalars import PoleAtPoint, RationalSyntaxError
from .specht import Partition
from .symgroup import CaseViolation
from .words import Element, ElementSyntaxError, IndexOutOfRange

SCHEMA = "tiealg/1"

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_INVARIANT = 4


class InputError(ValueError):
    pass


class InvariantError(RuntimeError):
    pass


def _dump(data: dict) -> str:
    return json.dumps({"schema": SCHEMA, **data}, indent=2) + "\n"


def _parse(text: str, n: int) -> Element:
    try:
        return Element.parse(text, n)
    except ElementSyntaxError as exc:
        pos = getattr(exc, "position", None)
        where = f" at position {pos}" if pos is not None else ""
        raise InputError(f"syntax error{where}: {exc}\n  {text}\n  {' ' * (pos or 0)}^") from exc
    except (IndexOutOfRange, RationalSyntaxError) as exc:
        raise InputError(str(exc)) from exc


def cmd_nf(args) -> str:
    a = _parse(args.element, args.n)
    r = rewrite.normal_form(a)
    if args.format == "json":
        return _dump({"n": args.n, "input": args.element, "element": str(r)})
    return f"{r}\n"


def cmd_dim(args) -> str:
    dim, cert = rewrite.dimension(args.n)
    if args.format == "json":
        data = {"n": args.n, "dimension": dim, "certificate": cert.value}
        if cert is rewrite.Certificate.LowerBound:
            data["upper_bound"] = rewrite.reduced_words_upper_bound(args.n)
        return _dump(data)
    return f"{dim} {cert.value}\n"


def cmd_check(args) -> str:
    try:
        results = relations.check_suite(args.n, args.suite)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    failed = [x for x, ok in results if not ok]
    if args.format == "json":
        text = _dump({"n": args.n, "suite": args.suite, "total": len(results),
                      "failed": [str(x) for x in failed],
                      "results": [{"name": x.name, "ok": ok} for x, ok in results]})
    else:
        lines = [f"{'ok  ' if ok else 'FAIL'} {x}" for x, ok in results]
        lines.append(f"{len(results) - len(failed)}/{len(results)} identities hold"
                     f" (n={args.n}, suite={args.suite})")
        text = "\n".join(lines) + "\n"
    if failed:
        raise InvariantError(text)
    return text


def _which(spec: str, n: int) -> list:
    spec = spec.strip()
    try:
        if spec == "list":
            if n == 2:
                return list(hyperoct.irreps_E2())
            if n == 3:
                return list(hyperoct.irreps_E3())
            raise rewrite.Unsupported("the irreducible list is tabulated for n in {2, 3}")
        kind, _, arg = spec.partition(":")
        if kind == "bip":
            bp = hyperoct.Bipartition.parse(arg)
            if bp.n != n:
                raise InputError(f"bipartition {bp.label()} has size {bp.n}, expected {n}")
            return [hyperoct.to_erep(hyperoct.induced_rep(bp))]
        if kind == "plusminus":
            alpha = Partition.parse(arg)
            if 2 * alpha.size != n:
                raise InputError(f"plusminus needs |alpha| = n/2, got {alpha}")
            return list(hyperoct.plus_minus_split(alpha))
        if kind in ("phi0", "phi1"):
            alpha = Partition.parse(arg)
            if alpha.size != n:
                raise InputError(f"{alpha} is not a partition of {n}")
            return [(hyperoct.phi0_rep if kind == "phi0" else hyperoct.phi1_rep)(alpha)]
    except (ValueError, json.JSONDecodeError) as exc:
        if isinstance(exc, (InputError, rewrite.Unsupported)):
            raise
        raise InputError(f"bad --which {spec!r}: {exc}") from exc
    raise InputError(f"bad --which {spec!r}; expected list, bip:A,B, plusminus:A, phi0:A or phi1:A")


def cmd_repr(args) -> str:
    if args.n > 4:
        raise rewrite.Unsupported("representations are built for n <= 4")
    reps = _which(args.which, args.n)
    return _dump({"n": args.n, "dims": [r.dim for r in reps], "reps": [r.to_json() for r in reps]})


def cmd_diagram(args) -> str:
    a = _parse(args.element, args.n)
    if not a.is_single_word():
        raise InputError("diagrams render single words only")
    word = next(iter(a))
    d = diagram.to_diagram(word, args.n)
    if args.format == "json":
        return _dump(d.to_json())
    return diagram.render(d, args.format)


def cmd_certify(args) -> str:
    cert = hyperoct.semisimplicity_certificate()
    if cert.rank != len(rewrite.span_basis(3)):
        raise InvariantError(f"rank {cert.rank} != 30")
    if args.format == "json":
        return json.dumps(cert.to_json(), indent=2) + "\n"
    return (
        f"rank {cert.rank} of the (phi0 + psi) image of the 30 span words (30 x 54, exact)\n"
        f"phi0 block rank {cert.phi0_rank}\n"
        f"psi-only rank {cert.psi_only_rank}\n"
        f"witness columns {' '.join(map(str, cert.witness_columns))}\n"
    )


def cmd_structure(args) -> str:
    return rewrite.structure_constants(args.n).dumps() + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tiealg", description="Exact computations in E_n(u).")
    p.add_argument("--out", help="write output to this file instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, formats=("text", "json")):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.add_argument("--out", default=argparse.SUPPRESS,
                        help="write output to this file instead of stdout")
        return sp

    sp = add("nf", cmd_nf, "normal form of an element")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("element")

    sp = add("dim", cmd_dim, "dimension with its certificate")
    sp.add_argument("--n", type=int, required=True)

    sp = add("check", cmd_check, "verify a suite of identities")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--suite", default="all")

    sp = add("repr", cmd_repr, "representation matrices of E_n(1)", formats=("json",))
    sp.add_argument("--n", type=int, default=3)
    sp.add_argument("--which", default="list")

    sp = add("diagram", cmd_diagram, "draw a word as a tied braid diagram",
             formats=("ascii", "svg", "json"))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("element")

    add("certify", cmd_certify, "rank certificate for dim E_3(1) = 30")

    sp = add("structure", cmd_structure, "structure constants as JSON", formats=("json",))
    sp.add_argument("--n", type=int, required=True)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if getattr(args, "n", 2) < 2:
        print("error: n must be at least 2", file=sys.stderr)
        return EXIT_INPUT
    code = EXIT_OK
    try:
        text = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (RewriteBudgetExceeded, rewrite.Unsupported) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except PoleAtPoint as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantError as exc:
        text = str(exc)
        code = EXIT_INVARIANT
    except (hyperoct.RelationViolation, hyperoct.IntertwinerFailure, hyperoct.NotInvariant,
            hyperoct.RankDeficient, CaseViolation) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
