"""Command-line surface: certificates, audits, matrix construction/verify.

Exit codes are stable: 0 success, 1 domain/input error, 2 verification
failure, 3 resource cap exceeded.
"""

import argparse
import csv
import io
import json
import sys
import time

from . import exponents, hadamard, matrix_io
from .errors import DomainError, FormatError, ResourceCapError, VerificationError

CSV_COLUMNS = [
    "v",
    "residue",
    "g",
    "d",
    "N",
    "k",
    "t",
    "order_exponent",
    "t_min",
    "bound_claimed",
    "bound_corrected",
    "k_paper",
    "t_paper",
    "violates_claimed",
]

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_VERIFY = 2
EXIT_CAP = 3


def _bool(v: bool) -> str:
    return "true" if v else "false"


def _row_record(row: exponents.AuditRow) -> dict:
    return {
        "v": row.v,
        "residue": row.residue_class,
        "g": row.g,
        "d": row.d,
        "N": row.N,
        "k": row.k,
        "t": row.t,
        "order_exponent": row.order_exponent,
        "t_min": row.t_min,
        "bound_claimed": row.bound_claimed,
        "bound_corrected": row.bound_corrected,
        "k_paper": row.k_paper,
        "t_paper": row.t_paper,
        "violates_claimed": _bool(row.violates_claimed),
    }


def cmd_cert(args) -> int:
    cert = exponents.corollary7_certificate(args.v)
    if args.json:
        obj = {
            "v": cert.v,
            "g": cert.g,
            "d": cert.d,
            "N": cert.N,
            "k": cert.k,
            "t": cert.t,
            "a": cert.a,
            "b": cert.b,
            "identity": cert.identity(),
        }
        print(json.dumps(obj, sort_keys=True))
    else:
        print(f"v={cert.v} g={cert.g} d={cert.d} N={cert.N} k={cert.k} t={cert.t} a={cert.a} b={cert.b}")
        print(cert.identity())
    return EXIT_OK


def cmd_audit(args) -> int:
    rows = list(
        exponents.audit_range(
            args.from_v, args.to_v, primes_only=args.primes, residue_filter=args.residue
        )
    )
    buf = io.StringIO(newline="")
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(_row_record(row))
    if args.out:
        with open(args.out, "w", newline="") as f:
            f.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    summary = exponents.summarize(rows)
    print(f"violations={summary.violations} max_gap={summary.max_gap}")
    return EXIT_OK


def cmd_construct(args) -> int:
    start = time.perf_counter()
    if args.kind == "sylvester":
        if len(args.params) != 1:
            raise DomainError("construct sylvester takes one parameter: k")
        matrix = hadamard.sylvester(int(args.params[0]))
    elif args.kind == "paley":
        if len(args.params) != 1:
            raise DomainError("construct paley takes one parameter: q")
        matrix = hadamard.paley_i(int(args.params[0]))
    else:
        if len(args.params) != 2:
            raise DomainError("construct kronecker takes two .had files")
        a = matrix_io.load_verified(args.params[0])
        b = matrix_io.load_verified(args.params[1])
        matrix = hadamard.kronecker(a, b)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    info = f"order={matrix.n} verify_ms={elapsed_ms:.2f}"
    if args.out:
        matrix_io.write_text(args.out, matrix)
        print(info)
    else:
        sys.stdout.write(matrix_io.to_text(matrix.n, matrix.rows))
        print(info, file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    n, rows = matrix_io.read_text(args.file)
    pair = hadamard.find_violation(n, rows)
    if pair is None:
        print(f"HADAMARD order={n}")
        return EXIT_OK
    print(f"NOT HADAMARD violated at rows ({pair[0]},{pair[1]})")
    return EXIT_VERIFY


def cmd_mult_check(args) -> int:
    if args.max < 5:
        raise DomainError(f"--max must be at least 5, got {args.max}")
    model = exponents.BoundModel(args.model)
    count = 0
    for p in range(5, args.max + 1):
        for q in range(p, args.max + 1):
            if not exponents.multiplicativity_check(p, q, model):
                bp = exponents.bound_value(model, p)
                bq = exponents.bound_value(model, q)
                bpq = exponents.bound_value(model, p * q)
                print(f"violation p={p} q={q}: {bp} + {bq} > {bpq}")
                count += 1
    print(f"violations={count}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coinmard")
    sub = parser.add_subparsers(dest="command", required=True)

    p_cert = sub.add_parser("cert", help="print the exponent certificate for odd v")
    p_cert.add_argument("v", type=int)
    p_cert.add_argument("--json", action="store_true")
    p_cert.set_defaults(func=cmd_cert)

    p_audit = sub.add_parser("audit", help="audit a range of v against both bounds")
    p_audit.add_argument("--from", dest="from_v", type=int, required=True)
    p_audit.add_argument("--to", dest="to_v", type=int, required=True)
    p_audit.add_argument("--primes", action="store_true")
    p_audit.add_argument("--residue", type=int, choices=(1, 3))
    p_audit.add_argument("--out")
    p_audit.set_defaults(func=cmd_audit)

    p_con = sub.add_parser("construct", help="build and verify a Hadamard matrix")
    p_con.add_argument("kind", choices=("sylvester", "paley", "kronecker"))
    p_con.add_argument("params", nargs="+")
    p_con.add_argument("--out")
    p_con.set_defaults(func=cmd_construct)

    p_ver = sub.add_parser("verify", help="verify a .had matrix file")
    p_ver.add_argument("file")
    p_ver.set_defaults(func=cmd_verify)

    p_mult = sub.add_parser("mult-check", help="scan the bound-multiplicativity inequality")
    p_mult.add_argument("--model", choices=("claimed", "corrected"), required=True)
    p_mult.add_argument("--max", type=int, required=True)
    p_mult.set_defaults(func=cmd_mult_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        where = f" (line {exc.line})" if exc.line is not None else ""
        print(f"error: {exc}{where}", file=sys.stderr)
        return EXIT_DOMAIN
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
