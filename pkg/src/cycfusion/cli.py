"""Command-line interface: generate matrices, compute fusion rings,
run verifications, and scan parameter ranges.

Exit codes: 0 success, 1 verification failure, 2 usage error.
All output is deterministic for fixed arguments.

Heavy imports happen after thread-count handling so that --threads (or
CYCFUSION_THREADS) can cap the BLAS worker pool.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

_THREAD_VARS = (
    "OMP_NUM_THREADS",
    "OPENBLAS_NUM_THREADS",
    "MKL_NUM_THREADS",
    "NUMEXPR_NUM_THREADS",
)


def _usage(msg: str) -> SystemExit:
    print(f"usage error: {msg}", file=sys.stderr)
    return SystemExit(2)


def _set_threads(n: str) -> None:
    for var in _THREAD_VARS:
        os.environ[var] = str(n)


def _tuplify(x):
    if isinstance(x, list):
        return tuple(_tuplify(v) for v in x)
    return x


def _parse_unit(text: str):
    if text == "auto":
        return "auto"
    try:
        return _tuplify(json.loads(text))
    except json.JSONDecodeError:
        raise _usage(f"cannot parse unit label {text!r} (use JSON or 'auto')")


def _auto_unit(M):
    lab0 = M.labels[0]
    if isinstance(lab0, int):
        return 0
    if hasattr(lab0, "tilde"):
        # affine weight labels: the unit is lambda = 0, tilde = (1..l)
        return lab0
    if isinstance(lab0, tuple) and lab0 and isinstance(lab0[0], int):
        n = len(lab0)
        for cand in (tuple(range(n)), tuple(range(1, n + 1))):
            if cand in M.labels:
                return cand
        raise _usage("no obvious unit label found; pass --unit")
    # symbol labels: lexicographically smallest one whose blocks are all
    # consecutive runs
    from .combin import SymbolRep

    for lab in sorted(
        l.blocks if isinstance(l, SymbolRep) else l for l in M.labels
    ):
        if all(b == tuple(range(b[0], b[0] + len(b))) for b in lab):
            return lab
    raise _usage("no consecutive-block unit label found; pass --unit")


def _load_matrix(source: str):
    from .smatrix import ScaledMatrix

    if source == "-":
        return ScaledMatrix.from_json(json.load(sys.stdin))
    if os.path.exists(source):
        with open(source) as fh:
            return ScaledMatrix.from_json(json.load(fh))
    if ":" in source:
        return _gen_from_spec(source)
    raise _usage(f"--in {source!r}: no such file and not a gen-spec")


def _gen_from_spec(spec: str):
    """Inline generator spec: 'smatrix:e=4,n=2', 'fourier:e=3,m=1,mult=2+1'
    or 'kp:type=cl,level=1,rank=2'."""
    kind, _, rest = spec.partition(":")
    opts = {}
    for item in rest.split(","):
        if not item:
            continue
        key, _, val = item.partition("=")
        opts[key.strip()] = val.strip()
    try:
        if kind == "smatrix":
            from .smatrix import dft_smatrix, exterior_dft

            e = int(opts["e"])
            n = int(opts.get("n", 1))
            return exterior_dft(e, n) if n > 1 else dft_smatrix(e)
        if kind == "fourier":
            from .smatrix import fourier_block

            mult = tuple(int(v) for v in opts["mult"].split("+"))
            return fourier_block(int(opts["e"]), int(opts["m"]), mult)
        if kind == "kp":
            from .kacpeterson import kp_a1, kp_cl

            if opts.get("type", "a1") == "a1":
                return kp_a1(int(opts["level"]))
            return kp_cl(int(opts["rank"]), int(opts["level"]))
    except (KeyError, ValueError) as exc:
        raise _usage(f"bad gen-spec {spec!r}: {exc}")
    raise _usage(f"unknown gen-spec kind {kind!r}")


def _emit(data) -> None:
    sys.stdout.write(json.dumps(data, separators=(",", ":"), sort_keys=False))
    sys.stdout.write("\n")


def _parse_mult(text: str):
    try:
        return tuple(int(v) for v in text.replace("+", ",").split(","))
    except ValueError:
        raise _usage(f"cannot parse multiplicities {text!r}")


# -- command handlers ------------------------------------------------------


def _cmd_gen(args) -> int:
    if args.target == "smatrix":
        from .smatrix import dft_smatrix, exterior_dft

        M = exterior_dft(args.e, args.exterior) if args.exterior else dft_smatrix(args.e)
    elif args.target == "fourier":
        from .smatrix import fourier_block

        M = fourier_block(args.e, args.m, _parse_mult(args.mult))
    else:
        from .kacpeterson import kp_a1, kp_cl

        if args.type == "a1":
            M = kp_a1(args.level)
        else:
            if args.rank is None:
                raise _usage("gen kp --type cl requires --rank")
            M = kp_cl(args.rank, args.level)
    _emit(M.to_json())
    return 0


def _cmd_fusion(args) -> int:
    from .fusion import normalize_signs, verlinde

    M = _load_matrix(args.infile)
    unit = _parse_unit(args.unit)
    if unit == "auto":
        unit = _auto_unit(M)
    norm = None
    if args.normalize:
        norm = normalize_signs(M, unit)
        M = norm.matrix
    report = verlinde(M, unit)
    ring = report.ring
    if norm is not None:
        ring.involution = norm.involution
        ring.signs = norm.signs
    if args.format == "json":
        data = ring.to_json()
        if not report.all_integer:
            data["violations"] = [
                [i, j, l, str(v)] for (i, j, l, v) in report.violations
            ]
        _emit(data)
    elif args.format == "csv":
        sys.stdout.write("i,j,k,N\n")
        for i, j, k, v in sorted(
            (int(a), int(b), int(c), int(ring.tensor[a, b, c]))
            for a, b, c in zip(*__import__("numpy").nonzero(ring.tensor))
        ):
            sys.stdout.write(f"{i},{j},{k},{v}\n")
    else:
        for i in range(ring.size):
            sys.stdout.write(f"b_{i} = {ring.labels[i]!r}\n")
        for i in range(ring.size):
            for j in range(ring.size):
                terms = [
                    (int(ring.tensor[i, j, k]), k)
                    for k in range(ring.size)
                    if ring.tensor[i, j, k]
                ]
                rhs = " + ".join(
                    (f"{c}*b_{k}" if c != 1 else f"b_{k}") for c, k in terms
                ) or "0"
                sys.stdout.write(f"b_{i} * b_{j} = {rhs}\n")
    return 0 if report.all_integer else 1


def _cmd_verify(args) -> int:
    if args.check == "kp-equiv":
        if args.rank is None or args.level is None:
            raise _usage("verify kp-equiv requires --rank and --level")
    elif args.e is None:
        raise _usage(f"verify {args.check} requires --e")
    if args.check == "integrality":
        from .fusion import integrality_check

        summary = integrality_check([args.e], [args.n] if args.n else None)
        for row in summary.rows:
            status = "ok" if not row.violations else "VIOLATION"
            print(
                f"e={row.e} n={row.n} basis={row.basis} max|N|={row.max_abs} {status}"
            )
        print("all integer" if summary.ok else "non-integer constants found")
        return 0 if summary.ok else 1

    if args.check == "based-ring":
        from .fusion import based_ring_axioms, normalize_signs, verlinde

        M, unit = _verify_matrix(args)
        norm = normalize_signs(M, unit)
        report = verlinde(norm.matrix, unit)
        if not report.all_integer:
            print(f"FAIL non-integer constants: {report.violations[:3]}")
            return 1
        ax = based_ring_axioms(report.ring)
        if ax.ok:
            print("PASS all based-ring axioms")
            return 0
        print(f"FAIL axioms: {ax.witnesses}")
        return 1

    if args.check == "orthogonality":
        from .smatrix import orthogonality_check

        M, _ = _verify_matrix(args)
        rep = orthogonality_check(M)
        if rep.ok:
            print(f"PASS unitary ({rep.size} x {rep.size})")
            return 0
        print(f"FAIL offending index pairs: {rep.offenders[:10]}")
        return 1

    if args.check == "modular":
        from .modular import (
            ModularDatum,
            exterior_t,
            gauss_sum_identity,
            sl2z_check,
            t_matrix_cyclic,
        )
        from .smatrix import dft_smatrix, exterior_dft

        T = t_matrix_cyclic(args.e)
        if args.exterior:
            D = ModularDatum(
                S=exterior_dft(args.e, args.exterior),
                T=exterior_t(T, args.e, args.exterior),
            )
        else:
            D = ModularDatum(S=dft_smatrix(args.e), T=T)
        rep = sl2z_check(D)
        g = gauss_sum_identity(args.e)
        if rep.ok and g.ok:
            print("PASS S^4, (ST)^3, [S^2,T], conjugation, Gauss sum")
            return 0
        print(f"FAIL {rep.failed + ([] if g.ok else ['Gauss sum'])}")
        return 1

    if args.check == "kp-equiv":
        from .kacpeterson import equiv_check

        rep = equiv_check(args.rank, args.level)
        if rep.ok:
            print(f"PASS ratio={rep.ratio} tensors coincide")
            return 0
        print(
            f"FAIL labels_match={rep.labels_match} "
            f"ratio={rep.ratio} tensors_match={rep.tensors_match}"
        )
        return 1
    raise _usage(f"unknown verification {args.check!r}")


def _verify_matrix(args):
    if getattr(args, "mult", None):
        from .smatrix import fourier_block, unit_symbol

        mult = _parse_mult(args.mult)
        return (
            fourier_block(args.e, args.m, mult),
            unit_symbol(args.e, args.m, mult),
        )
    from .smatrix import dft_smatrix, exterior_dft

    n = getattr(args, "n", None) or getattr(args, "exterior", None)
    if n and n > 1:
        return exterior_dft(args.e, n), tuple(range(n))
    return dft_smatrix(args.e), 0


def _cmd_scan(args) -> int:
    from .fusion import neg_scan

    result = neg_scan(args.max_basis)
    print("e n basis raw_negative has_negative predicted")
    for r in result.rows:
        print(
            f"{r.e} {r.n} {r.basis} "
            f"{str(r.raw_negative).lower()} {str(r.has_negative).lower()} "
            f"{str(r.predicted).lower()}"
        )
    print(
        "classification matches predicate"
        if result.matches_predicate
        else "classification DIFFERS from predicate"
    )
    return 0 if result.matches_predicate else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cycfusion",
        description="Exact fusion-ring computations for cyclotomic S-matrices.",
    )
    ap.add_argument(
        "--threads",
        default=None,
        help="cap the BLAS/OpenMP worker count (or set CYCFUSION_THREADS)",
    )
    sub = ap.add_subparsers(dest="verb", required=True)

    gen = sub.add_parser("gen", help="emit a serialized matrix")
    gsub = gen.add_subparsers(dest="target", required=True)
    g1 = gsub.add_parser("smatrix")
    g1.add_argument("--e", type=int, required=True)
    g1.add_argument("--exterior", type=int, default=None)
    g2 = gsub.add_parser("fourier")
    g2.add_argument("--e", type=int, required=True)
    g2.add_argument("--m", type=int, required=True)
    g2.add_argument("--mult", required=True, help="comma-separated multiplicities")
    g3 = gsub.add_parser("kp")
    g3.add_argument("--type", choices=("a1", "cl"), required=True)
    g3.add_argument("--level", type=int, required=True)
    g3.add_argument("--rank", type=int, default=None)
    gen.set_defaults(func=_cmd_gen)

    fus = sub.add_parser("fusion", help="compute a fusion ring")
    fus.add_argument(
        "--in",
        dest="infile",
        required=True,
        help="matrix JSON file, '-' for stdin, or an inline gen-spec "
        "such as smatrix:e=4,n=2",
    )
    fus.add_argument("--unit", default="auto", help="unit label as JSON, or 'auto'")
    fus.add_argument("--normalize", action="store_true")
    fus.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    fus.set_defaults(func=_cmd_fusion)

    ver = sub.add_parser("verify", help="run a verification, exit 1 on failure")
    ver.add_argument(
        "check",
        choices=("integrality", "based-ring", "orthogonality", "modular", "kp-equiv"),
    )
    ver.add_argument("--e", type=int, default=None)
    ver.add_argument("--n", type=int, default=None)
    ver.add_argument("--exterior", type=int, default=None)
    ver.add_argument("--m", type=int, default=1)
    ver.add_argument("--mult", default=None)
    ver.add_argument("--rank", type=int, default=None)
    ver.add_argument("--level", type=int, default=None)
    ver.set_defaults(func=_cmd_verify)

    sc = sub.add_parser("scan", help="parameter surveys")
    ssub = sc.add_subparsers(dest="target", required=True)
    s1 = ssub.add_parser("neg")
    s1.add_argument("--max-basis", type=int, default=50)
    s1.set_defaults(func=_cmd_scan)

    return ap


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if "--threads" in argv:
        idx = argv.index("--threads")
        if idx + 1 < len(argv):
            _set_threads(argv[idx + 1])
    elif os.environ.get("CYCFUSION_THREADS"):
        _set_threads(os.environ["CYCFUSION_THREADS"])
    ap = build_parser()
    args = ap.parse_args(argv)
    from .errors import CycFusionError

    try:
        return args.func(args)
    except CycFusionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
