"""Command-line front end: ``qshuffle <command> ... [--braiding B] [--format F]``.

Exit codes: 0 success, 2 parse error, 3 braiding error, 4 degenerate
specialization, 5 internal invariant violation, 6 term limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import render, serialize
from .bases import (
    alpha_leading,
    basis_matrix,
    check_root_degeneracy,
    express_in_lyndon_basis,
    serre_element,
    x_of,
)
from .config import ENV_VAR, load_braiding
from .errors import (
    BraidingError,
    DegenerateBasisError,
    InvariantViolation,
    TermLimitExceeded,
    WordError,
)
from .shuffle import DEFAULT_MAX_TERMS, MAX_WORKERS, shuffle_product
from .tensor import TensorExpr
from .words import ContentVector, enumerate_primes, parse_word, prime_factorization

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_BRAIDING = 3
EXIT_DEGENERATE = 4
EXIT_INVARIANT = 5
EXIT_TERM_LIMIT = 6


def _word(text):
    try:
        return parse_word(text)
    except WordError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _content(text):
    try:
        return ContentVector.parse(text)
    except WordError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _letter(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"letter must be a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"letter must be a positive integer, got {text!r}")
    return value


def _positive(text):
    value = _nonnegative(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _nonnegative(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return value


def _workers(text):
    value = _nonnegative(text)
    if value > MAX_WORKERS:
        raise argparse.ArgumentTypeError(f"parallelism is capped at {MAX_WORKERS}")
    return value


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--braiding",
        default=None,
        help=f"symbolic, classical, cartan:<file or type>, or a config file (default: ${ENV_VAR} or symbolic)",
    )
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")
    common.add_argument(
        "--parallelism", type=_workers, default=1, help=f"worker processes, 0 = one per CPU (max {MAX_WORKERS})"
    )
    common.add_argument(
        "--max-terms", type=_positive, default=DEFAULT_MAX_TERMS, help="abort a shuffle expansion above this many terms"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="qshuffle", description="Quantum shuffle products and Lyndon bases.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factorize", parents=[common], help="unique prime factorization of a word")
    p.add_argument("word", type=_word)
    p = sub.add_parser("shuffle", parents=[common], help="quantum shuffle product of two words")
    p.add_argument("word_a", type=_word)
    p.add_argument("word_b", type=_word)
    p = sub.add_parser("xa", parents=[common], help="X_a, the shuffle product of the primes of a")
    p.add_argument("word", type=_word)
    p = sub.add_parser("alpha", parents=[common], help="leading coefficient of X_a")
    p.add_argument("word", type=_word)
    p = sub.add_parser("express", parents=[common], help="write v_a in the X basis")
    p.add_argument("word", type=_word)
    p = sub.add_parser("matrix", parents=[common], help="basis matrix over a grading class")
    p.add_argument("content", type=_content)
    p = sub.add_parser("primes", parents=[common], help="primes over letters 1..k up to length n")
    p.add_argument("k", type=_positive)
    p.add_argument("n", type=_nonnegative)
    p = sub.add_parser("serre", parents=[common], help="quantum Serre element for letters i, j")
    p.add_argument("i", type=_letter)
    p.add_argument("j", type=_letter)
    p = sub.add_parser("rootcheck", parents=[common], help="leading coefficients vanishing at a root of unity")
    p.add_argument("content", type=_content)
    p.add_argument("l", type=_positive)
    return parser


def _braiding(args):
    descriptor = args.braiding or os.environ.get(ENV_VAR) or "symbolic"
    return load_braiding(descriptor)


def _emit_tensor(expr: TensorExpr, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(serialize.tensor_to_json(expr))
    if fmt == "latex":
        return render.tensor_latex(expr)
    return render.tensor_text(expr)


def _emit_coeff(c, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(serialize.coeff_to_json(c))
    if fmt == "latex":
        return render.coeff_latex(c)
    return render.coeff_text(c)


def _limits(args):
    return {"max_terms": args.max_terms, "workers": args.parallelism}


def cmd_factorize(args) -> str:
    f = prime_factorization(args.word)
    if args.format == "json":
        return json.dumps(serialize.factorization_to_json(f))
    if args.format == "latex":
        return r" \, ".join(
            "(" + ",".join(map(str, p)) + ")" + (f"^{{{n}}}" if n > 1 else "") for p, n in f.factors
        )
    return str(f)


def cmd_shuffle(args) -> str:
    b = _braiding(args)
    expr = shuffle_product(TensorExpr.basis(args.word_a), TensorExpr.basis(args.word_b), b, **_limits(args))
    return _emit_tensor(expr, args.format)


def cmd_xa(args) -> str:
    return _emit_tensor(x_of(args.word, _braiding(args), **_limits(args)), args.format)


def cmd_alpha(args) -> str:
    if not args.word:
        raise WordError("alpha needs a nonempty word")
    return _emit_coeff(alpha_leading(args.word, _braiding(args)), args.format)


def cmd_express(args) -> str:
    e = express_in_lyndon_basis(args.word, _braiding(args), **_limits(args))
    if args.format == "json":
        return json.dumps(serialize.expansion_to_json(e))
    if args.format == "latex":
        return render.expansion_latex(e)
    return render.expansion_text(e)


def cmd_matrix(args) -> str:
    m = basis_matrix(args.content, _braiding(args), **_limits(args))
    if args.format == "json":
        return json.dumps(serialize.matrix_to_json(m))
    if args.format == "latex":
        body = r" \\ ".join(" & ".join(render.coeff_latex(c) for c in row) for row in m.rows)
        return r"\begin{pmatrix} " + body + r" \end{pmatrix}"
    lines = ["\t".join(str(w) for w in m.words)]
    lines += ["\t".join(render.coeff_text(c) for c in row) for row in m.rows]
    return "\n".join(lines)


def cmd_primes(args) -> str:
    table = enumerate_primes(args.k, args.n)
    if args.format == "json":
        return json.dumps({str(n): [list(p) for p in ps] for n, ps in table.items()})
    if args.format == "latex":
        return "\n".join(
            f"{n}: " + ", ".join("(" + ",".join(map(str, p)) + ")" for p in ps) for n, ps in table.items()
        )
    return "\n".join(f"{n}: " + " ".join(str(p) for p in ps) for n, ps in table.items())


def cmd_serre(args) -> str:
    return _emit_tensor(serre_element(args.i, args.j, _braiding(args)), args.format)


def cmd_rootcheck(args) -> str:
    verdicts = check_root_degeneracy(args.content, _braiding(args), args.l)
    if args.format == "json":
        return json.dumps([{"word": list(w), "degenerate": d} for w, d in verdicts])
    return "\n".join(f"{w}: {'DEGENERATE' if d else 'ok'}" for w, d in verdicts)


COMMANDS = {
    "factorize": cmd_factorize,
    "shuffle": cmd_shuffle,
    "xa": cmd_xa,
    "alpha": cmd_alpha,
    "express": cmd_express,
    "matrix": cmd_matrix,
    "primes": cmd_primes,
    "serre": cmd_serre,
    "rootcheck": cmd_rootcheck,
}


def run(argv=None) -> tuple[int, str, str]:
    """Run one command; returns ``(exit code, stdout text, stderr text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), "", ""
    try:
        return EXIT_OK, COMMANDS[args.command](args), ""
    except DegenerateBasisError as exc:
        return EXIT_DEGENERATE, "", f"error: {exc}"
    except InvariantViolation as exc:
        return EXIT_INVARIANT, "", f"internal invariant violated: {exc}"
    except TermLimitExceeded as exc:
        return EXIT_TERM_LIMIT, "", f"error: {exc} (raise --max-terms to allow it)"
    except BraidingError as exc:
        return EXIT_BRAIDING, "", f"braiding error: {exc}"
    except (WordError, ValueError) as exc:
        return EXIT_PARSE, "", f"error: {exc}"


def main(argv=None) -> int:
    code, out, err = run(argv)
    if out:
        print(out)
    if err:
        print(err, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
