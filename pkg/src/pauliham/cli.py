"""Command-line front end.

Exit codes for ``solve``: 0 = YES, 1 = NO, 2 = input or promise error,
3 = cross-check disagreement (with ``--check``).  ``verify`` exits 0 for
valid evidence, 1 for invalid, 2 for malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import _kernels as kernels
from . import oracle
from .errors import PauliHamError
from .instances import random_commuting, toric_code, toric_code_flipped
from .solver import Verdict, decide, kernel_decide, verify_certificate, verify_witness
from .tableau import format_instance, parse_instance, read_instance


def _load_instance(path: str):
    if path == "-":
        return parse_instance(sys.stdin.read(), label="<stdin>")
    return read_instance(path)


def _render_text(doc: dict) -> str:
    lines = [
        f"answer {doc['answer']}",
        f"n {doc['n']}",
        f"r {doc['r']}",
        f"k {doc['k'] if doc['k'] is not None else '-'}",
        f"k_prime {doc['k_prime'] if doc['k_prime'] is not None else '-'}",
        f"gate_count {doc['gate_count']}",
        f"row_op_count {doc['row_op_count']}",
    ]
    if doc["certificate"] is not None:
        lines.append("certificate " + " ".join(str(i) for i in doc["certificate"]))
    if doc["witness"] is not None:
        lines.extend(f"witness {w}" for w in doc["witness"])
    return "\n".join(lines) + "\n"


def _render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    return _render_text(doc)


def _cross_check(inst, verdict, dense_limit: int) -> list[str]:
    """Independent re-derivations of the answer; returns disagreements."""
    problems = []
    alt = kernel_decide(inst)
    if alt.answer != verdict.answer:
        problems.append(f"kernel_decide says {alt.answer}, decide says {verdict.answer}")
    if verdict.is_yes:
        if verdict.witness is None or not verify_witness(inst, verdict.witness):
            problems.append("emitted witness fails verification")
    else:
        if verdict.certificate is None or not verify_certificate(
            inst, verdict.certificate
        ):
            problems.append("emitted certificate fails verification")
    if inst.n <= dense_limit:
        dim = oracle.groundspace_dim(inst, limit=dense_limit)
        if (dim > 0) != verdict.is_yes:
            problems.append(f"oracle ground-space dimension {dim} contradicts answer")
        if oracle.closure_contains_minus_identity(inst) == verdict.is_yes:
            problems.append("group closure -I membership contradicts answer")
    return problems


def _cmd_solve(args) -> int:
    try:
        inst = _load_instance(args.path)
        verdict = decide(inst)
    except PauliHamError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    doc = verdict.to_doc()
    if args.no_witness:
        doc["witness"] = None
    if args.no_certificate:
        doc["certificate"] = None
    sys.stdout.write(_render(doc, args.format))
    if args.check:
        problems = _cross_check(inst, verdict, args.dense_limit)
        if problems:
            for p in problems:
                print(f"cross-check failure: {p}", file=sys.stderr)
            return 3
    return 0 if verdict.is_yes else 1


def _cmd_verify(args) -> int:
    try:
        inst = _load_instance(args.instance)
        with open(args.verdict, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        verdict = Verdict.from_doc(doc)
    except (PauliHamError, OSError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if verdict.answer == "YES":
        ok = verdict.witness is not None and verify_witness(inst, verdict.witness)
    elif verdict.answer == "NO":
        ok = verdict.certificate is not None and verify_certificate(
            inst, verdict.certificate
        )
    else:
        print(f"error: unknown answer {verdict.answer!r}", file=sys.stderr)
        return 2
    print("valid" if ok else "invalid")
    return 0 if ok else 1


def _cmd_gen(args) -> int:
    try:
        if args.kind == "toric":
            inst = toric_code(args.size)
        elif args.kind == "toric-flipped":
            if args.flip is None:
                raise ValueError("toric-flipped needs --flip")
            inst = toric_code_flipped(args.size, args.flip - 1)
        else:
            inst = random_commuting(args.qubits, args.rows, args.seed, args.force)
    except (ValueError, PauliHamError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(format_instance(inst, comments=[inst.label]))
    return 0


def _cmd_oracle(args) -> int:
    try:
        inst = _load_instance(args.path)
        dim = oracle.groundspace_dim(inst, limit=args.dense_limit)
        minus = oracle.closure_contains_minus_identity(inst, bound=args.closure_bound)
    except PauliHamError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"groundspace_dim {dim}")
    print(f"contains_minus_identity {'true' if minus else 'false'}")
    print(f"answer {'YES' if dim > 0 else 'NO'}")
    return 0 if dim > 0 else 1


def _cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    if args.backends == "auto":
        backends = list(kernels.available_backends())
    else:
        backends = [b.strip() for b in args.backends.split(",") if b.strip()]
    saved = kernels.active_backend()
    results = {b: [] for b in backends}
    try:
        for backend in backends:
            kernels.set_backend(backend)
            # warm-up: trigger any JIT compilation outside the timed region
            decide(random_commuting(16, 16, args.seed, force="yes"))
            for size in sizes:
                inst = random_commuting(size, size, args.seed + size, force="yes")
                start = time.perf_counter()
                verdict = decide(inst)
                elapsed = time.perf_counter() - start
                results[backend].append(elapsed)
                print(
                    f"{backend:>6}  n=r={size:<6} {elapsed * 1e3:10.1f} ms   "
                    f"answer={verdict.answer}"
                )
    finally:
        kernels.set_backend(saved)
    if len(sizes) >= 2:
        import math

        for backend in backends:
            ts = results[backend]
            xs = [math.log(s) for s in sizes]
            ys = [math.log(t) for t in ts]
            mx = sum(xs) / len(xs)
            my = sum(ys) / len(ys)
            slope = sum((a - mx) * (b - my) for a, b in zip(xs, ys)) / sum(
                (a - mx) ** 2 for a in xs
            )
            print(f"{backend:>6}  log-log slope {slope:.2f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pauliham",
        description="Decide common +1 eigenstates of commuting signed Pauli words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve an instance file ('-' for stdin)")
    p_solve.add_argument("path")
    p_solve.add_argument("--format", choices=("text", "json"), default="text")
    p_solve.add_argument("--no-witness", action="store_true", help="omit the witness")
    p_solve.add_argument(
        "--no-certificate", action="store_true", help="omit the certificate"
    )
    p_solve.add_argument(
        "--check", action="store_true", help="cross-check against independent paths"
    )
    p_solve.add_argument("--dense-limit", type=int, default=oracle.DEFAULT_DENSE_LIMIT)
    p_solve.set_defaults(func=_cmd_solve)

    p_verify = sub.add_parser("verify", help="re-check a verdict document")
    p_verify.add_argument("instance")
    p_verify.add_argument("verdict", help="JSON verdict file from 'solve --format json'")
    p_verify.set_defaults(func=_cmd_verify)

    p_gen = sub.add_parser("gen", help="generate an instance file on stdout")
    p_gen.add_argument("kind", choices=("toric", "toric-flipped", "random"))
    p_gen.add_argument("--size", "-L", type=int, default=2, help="lattice size L")
    p_gen.add_argument(
        "--flip", type=int, default=None, help="1-based generator index to negate"
    )
    p_gen.add_argument("--qubits", "-n", type=int, default=8)
    p_gen.add_argument("--rows", "-r", type=int, default=8)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--force", choices=("yes", "no"), default=None)
    p_gen.set_defaults(func=_cmd_gen)

    p_oracle = sub.add_parser("oracle", help="brute-force answer at desk scale")
    p_oracle.add_argument("path")
    p_oracle.add_argument("--dense-limit", type=int, default=oracle.DEFAULT_DENSE_LIMIT)
    p_oracle.add_argument("--closure-bound", type=int, default=1 << 20)
    p_oracle.set_defaults(func=_cmd_oracle)

    p_bench = sub.add_parser("bench", help="time the solver across backends")
    p_bench.add_argument("--sizes", default="250,500,1000")
    p_bench.add_argument("--seed", type=int, default=7)
    p_bench.add_argument(
        "--backends", default="auto", help="comma list, or 'auto' for all available"
    )
    p_bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
