"""``ospinv <omega|verify|decompose|tensor> [flags]``.

Exit status: 0 when every check passes, 1 on any failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys

from .invariants import CapExceeded
from .parallel import default_workers
from .pfaffian import NilpotencyError, omega, omega_signature
from .report import SuiteReport
from .serialize import dumps, polynomial_document
from .suites import SUITES, UsageError, run_suite
from .tensor import tensor_invariants

OMEGA_MAX_DEGREE = 15  # m(2n+1); (3,2) already has thousands of terms


def _common(p: argparse.ArgumentParser, *names):
    if "m" in names:
        p.add_argument("--m", type=int, default=None)
    if "n" in names:
        p.add_argument("--n", type=int, default=None)
    if "bign" in names:
        p.add_argument("--bign", type=int, default=None, help="number of copies N")
    if "power" in names:
        p.add_argument("--power", type=int, default=None)
    if "degree" in names:
        p.add_argument("--degree", type=int, default=None)
    if "max_k" in names:
        p.add_argument("--max-k", dest="max_k", type=int, default=None)
    if "max_ell" in names:
        p.add_argument("--max-ell", dest="max_ell", type=int, default=None)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", default=None, help="write the output to FILE instead of stdout")
    p.add_argument("--threads", type=int, default=None,
                   help="worker processes (default: $OSPINV_THREADS or 1)")
    p.add_argument("--timing", action="store_true", help="include elapsed_ms in the report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ospinv", description="super Pfaffian toolkit")
    sub = parser.add_subparsers(dest="command", required=True)
    _common(sub.add_parser("omega", help="print the super Pfaffian"), "m", "n")
    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True)
    _common(v, "m", "n", "bign", "power", "degree", "max_k", "max_ell")
    _common(sub.add_parser("decompose", help="invariant dimensions per degree"),
            "m", "n", "bign", "degree")
    _common(sub.add_parser("tensor", help="invariants in a tensor power of V"), "m", "n", "power")
    return parser


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_omega(m: int, n: int, fmt: str = "json") -> str:
    if m is None or n is None or m < 1 or n < 0:
        raise UsageError("omega needs --m >= 1 and --n >= 0")
    if m * (2 * n + 1) > OMEGA_MAX_DEGREE:
        raise UsageError(f"degree m(2n+1) = {m * (2 * n + 1)} exceeds the cap {OMEGA_MAX_DEGREE}")
    f = omega(omega_signature(m, n))
    if fmt == "json":
        return dumps(polynomial_document(f))
    lead = f.leading_term()
    return (f"Omega (m={m}, n={n})\ndegree: {f.degree()}\nterms: {len(f.terms)}\n"
            f"leading term: {lead}\n{f}\n")


def cmd_verify(suite: str, workers: int = 1, **params) -> SuiteReport:
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    return run_suite(suite, workers=workers, **params)


def cmd_decompose(m, n, bign, degree, workers: int = 1) -> SuiteReport:
    if None in (m, n, bign, degree):
        raise UsageError("decompose needs --m, --n, --bign and --degree")
    rep = run_suite("decomposition", workers=workers, m=m, n=n, bign=bign, degree=degree)
    rep.suite = "decompose"
    return rep


def cmd_tensor(m, n, power, workers: int = 1) -> SuiteReport:
    if None in (m, n, power):
        raise UsageError("tensor needs --m, --n and --power")
    rep = run_suite("tensor", workers=workers, m=m, n=n, power=power)
    res = tensor_invariants(m, n, power)

    def words(vs):
        return [[{"word": list(w), "coeff": str(c)} for w, c in sorted(v.coeffs.items())]
                for v in vs]

    rep.suite = "tensor"
    rep.extra.update({"dim_inv": res.dim_inv, "dim_pseudo": res.dim_pseudo,
                      "inv_basis": words(res.inv), "pseudo_basis": words(res.pseudo)})
    return rep


def _positive(name, value):
    if value is not None and value < 0:
        raise UsageError(f"--{name} must be nonnegative")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    workers = args.threads if args.threads is not None else default_workers()
    try:
        for name in ("m", "n", "bign", "power", "degree", "max_k", "max_ell"):
            _positive(name.replace("_", "-"), getattr(args, name, None))
        if workers < 1:
            raise UsageError("--threads must be positive")
        if args.command == "omega":
            _emit(cmd_omega(args.m, args.n, args.format), args.out)
            return 0
        if args.command == "verify":
            params = {k: getattr(args, k) for k in
                      ("m", "n", "bign", "power", "degree", "max_k", "max_ell")}
            rep = cmd_verify(args.suite, workers, **params)
        elif args.command == "decompose":
            rep = cmd_decompose(args.m, args.n, args.bign, args.degree, workers)
        else:
            rep = cmd_tensor(args.m, args.n, args.power, workers)
    except (UsageError, CapExceeded, NilpotencyError, ValueError, IndexError) as exc:
        print(f"ospinv: error: {exc}", file=sys.stderr)
        return 2
    text = rep.to_json(args.timing) + "\n" if args.format == "json" \
        else rep.to_text(args.timing) + "\n"
    _emit(text, args.out)
    return 0 if rep.ok else 1


if __name__ == "__main__":
    sys.exit(main())
