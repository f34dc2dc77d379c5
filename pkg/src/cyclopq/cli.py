"""Command-line front end.

Exit codes: 0 success, 1 bad input or capacity, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from .cyclotomic import METHODS, PHI_METHODS, factor_x_ab_minus_1, prime_pairs, sweep
from .errors import CapacityError, CyclopqError, InvariantViolation, ValidationError
from .modular import WORD_LIMIT, CoprimePair, PrimePair, is_prime, reduction_params
from .polynomial import SparsePoly, from_dense, from_terms, to_dense

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFY = 2

FORMATS = ("dense", "sparse", "latex", "json")
DEFAULT_MAX_DEGREE = 10**6


# -- rendering ---------------------------------------------------------------


def render_dense(f: SparsePoly, cap: int = DEFAULT_MAX_DEGREE) -> str:
    return json.dumps(to_dense(f, cap), separators=(", ", ": "))


def render_sparse(f: SparsePoly) -> str:
    return json.dumps([[e, c] for e, c in f.terms], separators=(", ", ": "))


def parse_dense(text: str) -> SparsePoly:
    return from_dense(json.loads(text))


def parse_sparse(text: str) -> SparsePoly:
    return from_terms((e, c) for e, c in json.loads(text))


def render_latex(f: SparsePoly) -> str:
    if f.is_zero:
        return "0"
    parts = []
    for e, c in reversed(f.terms):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            var = "X" if e == 1 else f"X^{{{e}}}"
            body = var if mag == 1 else f"{mag}{var}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts)


def _json_dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def phi_json(pair: PrimePair, method: str, f: SparsePoly, cap: int = DEFAULT_MAX_DEGREE) -> str:
    return _json_dumps(
        {"p": pair.p, "q": pair.q, "method": method, "degree": f.degree, "coeffs": to_dense(f, cap)}
    )


def factor_json(result, cap: int = DEFAULT_MAX_DEGREE) -> str:
    return _json_dumps(
        {
            "a": result.a,
            "b": result.b,
            "swapped": result.swapped,
            "factors": [{"label": lbl, "coeffs": to_dense(f, cap)} for lbl, f in result.factors],
        }
    )


def render(f: SparsePoly, fmt: str, cap: int = DEFAULT_MAX_DEGREE) -> str:
    if fmt == "dense":
        return render_dense(f, cap)
    if fmt == "sparse":
        return render_sparse(f)
    if fmt == "latex":
        return render_latex(f)
    raise ValueError(f"unknown format {fmt!r}")


# -- commands ----------------------------------------------------------------


def _prime_pair(args) -> PrimePair:
    for name in ("p", "q"):
        v = getattr(args, name)
        if v >= WORD_LIMIT or not is_prime(v):
            raise ValidationError(f"argument {name}={v} is not a prime below 2^64")
    if args.p == args.q:
        raise ValidationError(f"p and q must be distinct primes, got {args.p} twice")
    return PrimePair.of(args.p, args.q)


def _check_capacity(degree: int, cap: int) -> None:
    if degree > cap:
        raise CapacityError(f"degree {degree} exceeds --max-degree {cap}; try --format sparse")


def cmd_phi(args, out) -> int:
    pair = _prime_pair(args)
    if args.format in ("dense", "json"):
        _check_capacity(pair.degree, args.max_degree)
    methods = METHODS if args.method == "all" else (args.method,)
    polys = {m: PHI_METHODS[m](pair) for m in methods}
    for m, f in polys.items():
        if args.format == "json":
            text = phi_json(pair, m, f, args.max_degree)
        else:
            text = render(f, args.format, args.max_degree)
        print(f"{m}: {text}" if args.method == "all" and args.format != "json" else text, file=out)
    if args.method == "all":
        first = next(iter(polys.values()))
        print("AGREE" if all(f == first for f in polys.values()) else "DISAGREE", file=out)
    return EXIT_OK


def cmd_factor(args, out) -> int:
    pair = CoprimePair.of(args.a, args.b)
    if args.format in ("dense", "json"):
        _check_capacity(pair.a * pair.b, args.max_degree)
    result = factor_x_ab_minus_1(pair)
    if args.format == "json":
        print(factor_json(result, args.max_degree), file=out)
        return EXIT_OK
    print(f"X^{result.a * result.b} - 1 with a={result.a} b={result.b}", file=out)
    if result.swapped:
        print(f"swapped: arguments reordered to a={result.a} b={result.b}", file=out)
    for label, f in result.factors:
        print(f"{label}: {render(f, args.format, args.max_degree)}", file=out)
    # factor_x_ab_minus_1 raises if the product check fails
    print("verified: true", file=out)
    return EXIT_OK


def cmd_params(args, out) -> int:
    pair = _prime_pair(args)
    prm = reduction_params(pair)
    p, q = pair.p, pair.q
    print(f"p={p} q={q}", file=out)
    print(f"lambda={prm.lam} mu={prm.mu} r={prm.r} s={prm.s}", file=out)
    print(f"r*p + s*q = (p-1)*(q-1): {prm.r * p + prm.s * q} = {(p - 1) * (q - 1)}", file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.max_pq < 6:
        raise ValidationError(f"--max-pq must be >= 6, got {args.max_pq}")
    reports = sweep(args.max_pq, jobs=args.jobs)
    n_fail = 0
    for rep in reports:
        pr = rep.pair
        if rep.passed:
            print(f"PASS p={pr.p} q={pr.q} degree={pr.degree} terms={rep.term_count}", file=out)
        else:
            n_fail += 1
            print(f"FAIL p={pr.p} q={pr.q} {'; '.join(rep.failures)}", file=out)
    print(f"pairs={len(reports)} passed={len(reports) - n_fail} failed={n_fail}", file=out)
    return EXIT_VERIFY if n_fail else EXIT_OK


def bench_rows(max_pq: int, reps: int):
    """Yield (p, q, method, ns, terms), ns being the minimum over ``reps`` runs."""
    for pair in prime_pairs(max_pq):
        for m in METHODS:
            fn = PHI_METHODS[m]
            best = None
            for _ in range(reps):
                t0 = time.perf_counter_ns()
                f = fn(pair)
                dt = time.perf_counter_ns() - t0
                best = dt if best is None else min(best, dt)
            yield pair.p, pair.q, m, max(best, 1), len(f)


def cmd_bench(args, out) -> int:
    if args.max_pq < 6:
        raise ValidationError(f"--max-pq must be >= 6, got {args.max_pq}")
    if args.reps < 1:
        raise ValidationError(f"--reps must be >= 1, got {args.reps}")
    print("p,q,method,ns,terms", file=out)
    for row in bench_rows(args.max_pq, args.reps):
        print(",".join(map(str, row)), file=out)
    return EXIT_OK


# -- parser ------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; 2 is reserved for verification failure
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _natural(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a natural number") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"{text!r} is not a natural number")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cyclopq", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("phi", help="compute Phi_pq")
    sp.add_argument("p", type=_natural)
    sp.add_argument("q", type=_natural)
    sp.add_argument("--method", choices=(*METHODS, "all"), default="closed")
    sp.add_argument("--format", choices=FORMATS, default="dense")
    sp.add_argument("--max-degree", type=_natural, default=DEFAULT_MAX_DEGREE)
    sp.set_defaults(func=cmd_phi)

    sp = sub.add_parser("factor", help="factor X^ab - 1 for coprime a, b")
    sp.add_argument("a", type=_natural)
    sp.add_argument("b", type=_natural)
    sp.add_argument("--format", choices=FORMATS, default="dense")
    sp.add_argument("--max-degree", type=_natural, default=DEFAULT_MAX_DEGREE)
    sp.set_defaults(func=cmd_factor)

    sp = sub.add_parser("params", help="print lambda, mu, r, s")
    sp.add_argument("p", type=_natural)
    sp.add_argument("q", type=_natural)
    sp.set_defaults(func=cmd_params)

    sp = sub.add_parser("verify", help="cross-check every prime pair with pq <= N")
    sp.add_argument("--max-pq", type=_natural, required=True)
    sp.add_argument("--jobs", type=_natural, default=1)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bench", help="time each method, CSV on stdout")
    sp.add_argument("--max-pq", type=_natural, required=True)
    sp.add_argument("--reps", type=_natural, default=5)
    sp.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        return args.func(args, out)
    except InvariantViolation as exc:
        print(f"error: internal check failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (ValidationError, CapacityError, CyclopqError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
