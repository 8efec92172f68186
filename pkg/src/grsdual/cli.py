"""Command-line interface.

Exit codes: 0 success / claim confirmed, 1 claim refuted, 2 bad input or
parameters, 3 a construction produced a non-residue it should not have.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .census import run_census
from .codespec import CLAIM_OF_KIND, CodeSpec, CodeSpecError, load
from .construct import (
    KINDS,
    ConstructionContradiction,
    ParameterError,
    build,
    case_for,
    enumerate_lengths,
    odd_square_root,
)
from .gf import FieldError, field_of_order
from .grs import CodeError, generator_matrix
from .ortho import BudgetError
from .verify import VerifyError, auto_mds_mode, report_matrix

EXIT_OK, EXIT_REFUTED, EXIT_USAGE, EXIT_CONTRADICTION = 0, 1, 2, 3


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def _fail(msg: str, code: int = EXIT_USAGE) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


def cmd_enumerate(args) -> int:
    try:
        rows = enumerate_lengths(args.q, args.kind)
    except ParameterError as exc:
        return _fail(str(exc))
    payload = {
        "q": args.q,
        "kind": args.kind,
        "count": len(rows),
        "lengths": [{"n": w.n, "s": w.s, "t": w.t} for w in rows],
    }
    lines = [f"{'n':>8} {'s':>5} {'t':>5}"]
    lines += [f"{w.n:>8} {w.s:>5} {w.t:>5}" for w in rows]
    lines.append(f"total: {len(rows)} lengths ({args.kind}, q={args.q})")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_build(args) -> int:
    if args.out and os.path.exists(args.out) and not args.force:
        return _fail(f"{args.out} exists; pass --force to overwrite")
    try:
        field = field_of_order(args.q)
        r = odd_square_root(args.q)
        code = build(field, args.kind, args.s, args.t, args.k)
    except (ParameterError, FieldError, CodeError) as exc:
        return _fail(str(exc))
    except ConstructionContradiction as exc:
        return _fail(str(exc), EXIT_CONTRADICTION)
    construction = {"kind": args.kind, "case": case_for(args.kind, r), "r": r, "s": args.s, "t": args.t, "k": code.k}
    spec = CodeSpec(code, CLAIM_OF_KIND[args.kind], construction, include_matrix=args.matrix)
    text = spec.dumps()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    F = field
    lines = [
        f"{construction['case']}: [{code.length},{code.k}] code over GF({F.q}) (r={r}, s={args.s}, t={args.t})",
        "a: " + " ".join(F.describe(x) for x in code.points.a),
        "v: " + " ".join(F.describe(x) for x in code.v),
    ]
    if args.out:
        lines.append(f"wrote {args.out}")
    elif not args.json:
        lines.append(text.rstrip())
    _emit(args, spec.to_dict(), lines)
    return EXIT_OK


def _parse_mds(value: str) -> tuple[str, int]:
    if value in ("exhaustive", "skip", "auto"):
        return value, 10_000
    if value.startswith("sampled="):
        try:
            count = int(value.split("=", 1)[1])
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad sample count in {value!r}")
        if count < 1:
            raise argparse.ArgumentTypeError("sample count must be positive")
        return "sampled", count
    if value == "sampled":
        return "sampled", 10_000
    raise argparse.ArgumentTypeError(f"--mds must be exhaustive, sampled=N, skip or auto, not {value!r}")


def cmd_verify(args) -> int:
    try:
        spec = load(args.infile)
    except (OSError, CodeSpecError) as exc:
        return _fail(f"cannot read {args.infile}: {exc}")
    mode, samples = args.mds
    code = spec.code
    G = generator_matrix(code)
    if mode == "auto":
        mode = auto_mds_mode(code.length, code.k)
    try:
        rep = report_matrix(spec.field, G, code.k, mode, samples, args.seed)
    except VerifyError as exc:
        return _fail(str(exc))
    matrix_ok = spec.matrix_matches()
    confirmed = getattr(rep, spec.claim) and rep.mds != "disproved" and matrix_ok
    payload = {"file": args.infile, "claim": spec.claim, "confirmed": confirmed,
               "stored_matrix_matches": matrix_ok, **rep.as_dict()}
    lines = [
        f"code: [{rep.length},{rep.k}] over GF({spec.field.q}), claim {spec.claim}",
        f"gram_zero: {rep.gram_zero}",
        f"rank: {rep.rank}  dual_dim: {rep.dual_dim}",
        f"self_orthogonal: {rep.self_orthogonal}  self_dual: {rep.self_dual}  "
        f"almost_self_dual: {rep.almost_self_dual}",
        f"mds: {rep.mds} ({rep.mds_checked} column subsets)"
        + (f", dependent columns {list(rep.mds_witness)}" if rep.mds_witness else ""),
    ]
    if not matrix_ok:
        lines.append("stored generator_matrix does not match (a, v)")
    lines.append("CONFIRMED" if confirmed else "REFUTED")
    _emit(args, payload, lines)
    return EXIT_OK if confirmed else EXIT_REFUTED


def cmd_census(args) -> int:
    try:
        field = field_of_order(args.q)
        res = run_census(field, args.n, args.k, args.extended)
    except (FieldError, CodeError, BudgetError) as exc:
        return _fail(str(exc))
    payload = res.as_dict()
    payload["disagreements"] = [[list(a), list(v)] for a, v in res.disagreements[:20]]
    payload["bad_certificates"] = [[list(a), list(v), list(c)] for a, v, c in res.bad_certificates[:20]]
    tag = " --extended" if args.extended else ""
    lines = [
        f"census q={args.q} n={args.n} k={args.k}{tag}",
        f"point sets (up to order): {res.point_sets}",
        f"point sets admitting a self-orthogonal scaling: {res.achievable_sets}",
        f"scalings examined: {res.scalings}  self-orthogonal: {res.self_orthogonal}",
        f"agreement (Gram test vs lambda criterion): {100 * res.agreement:.2f}%"
        + (" (vacuous)" if res.scalings == 0 else ""),
        f"recovered certificates with the expected shape: {res.certificate_shape_ok}/{res.self_orthogonal}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK if res.ok else EXIT_REFUTED


def cmd_export(args) -> int:
    try:
        spec = load(args.infile)
    except (OSError, CodeSpecError) as exc:
        return _fail(f"cannot read {args.infile}: {exc}")
    G = generator_matrix(spec.code)
    F = spec.field
    lines = [" ".join(f"{x:>{len(str(F.q - 1))}}" for x in row) for row in G.tolist()]
    _emit(args, {"q": F.q, "rows": G.tolist()}, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grsdual", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = common(sub.add_parser("enumerate", help="list achievable lengths over GF(q)"))
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--kind", choices=KINDS, default="selfdual")
    p.set_defaults(func=cmd_enumerate)

    p = common(sub.add_parser("build", help="construct a code and write a code-spec file"))
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--out")
    p.add_argument("--force", action="store_true", help="overwrite an existing --out file")
    p.add_argument("--matrix", action="store_true", help="embed the generator matrix")
    p.set_defaults(func=cmd_build)

    p = common(sub.add_parser("verify", help="independently check a code-spec file"))
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--mds", type=_parse_mds, default=("auto", 10_000),
                   help="exhaustive | sampled=N | skip | auto (default)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = common(sub.add_parser("census", help="exhaustive Gram-test vs lambda-criterion comparison"))
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--extended", action="store_true")
    p.set_defaults(func=cmd_census)

    p = common(sub.add_parser("export", help="print the generator matrix of a code-spec file"))
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
