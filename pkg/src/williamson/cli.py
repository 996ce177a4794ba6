"""Command-line interface.

Exit status: 0 success, 1 class-membership rejection, 2 I/O or input
errors, 3 numerical failure.  Results go to standard output, residual
diagnostics to standard error.
"""

import argparse
import csv
import io
import sys

import numpy as np

from . import __version__
from .classify import check_eigsps_membership, check_pd, check_sppsd, verify_certificate
from .decompose import decompose, symplectic_spectrum_eigsps
from .errors import MatrixFormatError, MembershipError, NumericalError, WilliamsonError
from .generate import GeneratorSpec, gen_eigsps, gen_pd, gen_sppsd, perturb
from .linalg import NORM_KINDS, RANK_TOL, norm_kind
from .matrixio import format_matrix, read_matrix, read_symmetric, write_matrix
from .perturbation import bound_main, d_hat, fmt, sweep
from .symplectic import SYMP_TOL

EXIT_OK, EXIT_MEMBERSHIP, EXIT_INPUT, EXIT_NUMERICAL = 0, 1, 2, 3


class InputError(Exception):
    pass


def _human(x):
    return f"{float(x):.12g}"


def _bool(x):
    return "true" if x else "false"


def _csv(rows):
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _load(path, out_err):
    a, asym = read_symmetric(path)
    if a.shape[0] % 2:
        raise InputError(f"{path}: dimension {a.shape[0]} is odd")
    if asym > 1e-10 * max(1.0, np.linalg.norm(a)):
        raise InputError(f"{path}: matrix is not symmetric (max asymmetry {asym:.3e})")
    if asym:
        print(f"{path}: symmetrized, max asymmetry {asym:.3e}", file=out_err)
    return a


def cmd_decompose(args, out, err):
    a = _load(args.file, err)
    dec = decompose(a, args.rank_tol, args.symp_tol)
    if args.format == "csv":
        out.write(_csv([("index", "d")] + [(i + 1, fmt(x)) for i, x in enumerate(dec.d)]))
    else:
        print("D: " + " ".join(_human(x) for x in dec.d), file=out)
    if args.output_m:
        write_matrix(args.output_m, dec.m)
    print(f"residual |M^T A M - D+D|_F = {dec.residual(a):.3e}", file=err)
    print(f"residual |M^T J M - J|_F = {dec.symplectic_residual():.3e}", file=err)
    print(f"cond(M) = {dec.cond:.3e}", file=err)
    return EXIT_OK


def cmd_spectrum(args, out, err):
    a = _load(args.file, err)
    d = symplectic_spectrum_eigsps(a, args.rank_tol, args.symp_tol).values
    if args.format == "csv":
        out.write(_csv([("index", "d")] + [(i + 1, fmt(x)) for i, x in enumerate(d)]))
    else:
        print("D: " + " ".join(_human(x) for x in d), file=out)
    return EXIT_OK


def _cert_part(path, dim):
    if path == "-":
        return None
    m = read_matrix(path)
    if m.shape[0] != dim:
        raise InputError(f"{path}: basis has {m.shape[0]} rows, expected {dim}")
    return m


def cmd_classify(args, out, err):
    a = _load(args.file, err)
    reports = [
        check_pd(a, args.rank_tol),
        check_sppsd(a, args.rank_tol, args.symp_tol),
        check_eigsps_membership(a, args.rank_tol, args.symp_tol),
    ]
    if args.certificate:
        parts = [_cert_part(p, a.shape[0]) for p in args.certificate]
        reports.append(verify_certificate(a, *parts, rank_tol=args.rank_tol, symp_tol=args.symp_tol))
    accepted = reports[-1].verdict
    if args.format == "csv":
        rows = [("class", "verdict", "condition", "name", "value", "threshold", "rule", "passed", "message")]
        for r in reports:
            for c in r.conditions:
                rows.append((r.cls, _bool(r.verdict), c.condition, c.name, fmt(c.value), fmt(c.threshold),
                             c.rule, _bool(c.passed), c.message))
        out.write(_csv(rows))
    else:
        nu, xi, pi = reports[0].inertia
        print(f"inertia: nu={nu} xi={xi} pi={pi}", file=out)
        for r in reports:
            text = r.describe()
            if r.cls == "EigSpSm" and args.certificate:
                text = text.replace("\n  SpSm: undetermined without certificate", "")
            print(text, file=out)
    if not accepted:
        print("rejected: " + "; ".join(c.message or c.name for c in reports[-1].failed()), file=err)
    return EXIT_OK if accepted else EXIT_MEMBERSHIP


def cmd_dhat(args, out, err):
    a = _load(args.file, err)
    v = d_hat(a, args.rank_tol).values
    if args.format == "csv":
        out.write(_csv([("index", "value")] + [(i + 1, fmt(x)) for i, x in enumerate(v)]))
    else:
        print("Dhat: " + " ".join(_human(x) for x in v), file=out)
    return EXIT_OK


def cmd_bound(args, out, err):
    a = _load(args.file_a, err)
    b = _load(args.file_b, err)
    if a.shape != b.shape:
        raise InputError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    rep = bound_main(a, b, args.norm, args.rank_tol)
    if args.format == "csv":
        out.write(_csv([
            ("norm_kind", "lhs", "rhs", "term_pos", "term_neg", "pass"),
            (rep.kind, fmt(rep.lhs), fmt(rep.rhs), fmt(rep.term_pos), fmt(rep.term_neg),
             _bool(rep.passed)),
        ]))
    else:
        print(f"norm={rep.kind} lhs={_human(rep.lhs)} rhs={_human(rep.rhs)} "
              f"pass={_bool(rep.passed)}", file=out)
    return EXIT_OK


def cmd_sweep(args, out, err):
    a = _load(args.file, err)
    if args.direction:
        e = _load(args.direction, err)
        if e.shape != a.shape:
            raise InputError("direction has the wrong dimension")
    else:
        e = perturb(np.zeros_like(a), 1.0, args.seed)
    table = sweep(a, e, args.eps, args.norms or NORM_KINDS, args.rank_tol)
    if args.format == "csv":
        out.write(table.to_csv())
    else:
        for r in table.rows:
            print(f"eps={_human(r.epsilon)} {r.kind:<9} lhs={_human(r.lhs)} rhs={_human(r.rhs)} "
                  f"ratio={_human(r.ratio)}", file=out)
    return EXIT_OK


def _ints(text):
    return [int(t) for t in text.replace(",", " ").split()]


def _floats(text):
    return [float(t) for t in text.replace(",", " ").split()]


def cmd_gen(args, out, err):
    n = args.n
    header = [f"# class: {args.cls} n: {n} seed: {args.seed}"]
    if args.cls == "pd":
        a = gen_pd(n, args.seed, args.conditioning)
    elif args.cls == "sppsd":
        rank = 2 * n if args.rank is None else args.rank
        a = gen_sppsd(n, rank, args.seed, args.conditioning)
    else:
        if args.signature:
            sig = _ints(args.signature)
        elif args.spectrum:
            d = np.array(_floats(args.spectrum))
            sig = [2 * int(np.sum(d < 0)), 2 * int(np.sum(d == 0)), 2 * int(np.sum(d > 0))]
        else:
            sig = [0, 0, 2 * n]
        if len(sig) != 3:
            raise InputError("signature must be three integers nu,xi,pi")
        spectrum = _floats(args.spectrum) if args.spectrum else None
        inst = gen_eigsps(GeneratorSpec(n, sig, args.seed, spectrum, args.conditioning))
        a = inst.a
        header.append("# D: " + " ".join(fmt(x) for x in inst.truth.values))
    text = "\n".join(header) + "\n" + format_matrix(a)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        out.write(text)
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rank-tol", type=float, default=RANK_TOL,
                        help="relative cutoff for zero eigenvalues (default %(default)s)")
    common.add_argument("--symp-tol", type=float, default=SYMP_TOL,
                        help="tolerance for symplecticity tests (default %(default)s)")
    common.add_argument("--format", choices=("text", "csv"), default="text")

    p = argparse.ArgumentParser(prog="williamson", description="Williamson-type symplectic decompositions.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("decompose", parents=[common], help="compute M and D with M^T A M = D+D")
    s.add_argument("file")
    s.add_argument("--output-m", metavar="PATH", help="write M to PATH")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("spectrum", parents=[common], help="symplectic eigenvalues of an EigSpSm matrix")
    s.add_argument("file")
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("classify", parents=[common], help="class membership reports")
    s.add_argument("file")
    s.add_argument("--certificate", nargs=3, metavar=("NEG", "ZERO", "POS"),
                   help="basis files for a subspace certificate ('-' for the zero subspace)")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("dhat", parents=[common], help="paired diagonal built from the parts of A")
    s.add_argument("file")
    s.set_defaults(func=cmd_dhat)

    s = sub.add_parser("bound", parents=[common], help="perturbation bound for a pair A, B")
    s.add_argument("file_a")
    s.add_argument("file_b")
    s.add_argument("--norm", type=norm_kind, default="operator", help="op, fro or trace")
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("sweep", parents=[common], help="bound along A + eps E")
    s.add_argument("file")
    s.add_argument("--eps", type=float, nargs="+", required=True)
    s.add_argument("--direction", help="file holding E (default: random, unit Frobenius norm)")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--norm", dest="norms", type=norm_kind, action="append")
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("gen", parents=[common], help="random instance in the matrix file format")
    s.add_argument("--class", dest="cls", choices=("pd", "sppsd", "eigsps"), required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--signature", help="nu,xi,pi (eigsps)")
    s.add_argument("--spectrum", help="comma-separated symplectic eigenvalues (eigsps)")
    s.add_argument("--rank", type=int, help="rank of the sppsd matrix (default 2n)")
    s.add_argument("--conditioning", type=float, default=10.0)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)
    return p


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out, err)
    except MembershipError as e:
        print(f"error: {e}", file=err)
        return EXIT_MEMBERSHIP
    except NumericalError as e:
        print(f"error: {e}", file=err)
        return EXIT_NUMERICAL
    except (OSError, MatrixFormatError, InputError, WilliamsonError, ValueError) as e:
        print(f"error: {e}", file=err)
        return EXIT_INPUT


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
