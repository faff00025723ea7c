"""
Command-line front end.

    python -m sl2q build --family LnC --n 3 --c 2 --out lnc.json
    python -m sl2q verify lnc.json
    python -m sl2q classify --field root4 --mu 3 --c 0
    python -m sl2q gram --family LnC --n 4 --c 2
    python -m sl2q casimir lnc.json
    python -m sl2q eval lnc.json --q 1.1 --orthonormal

Exit codes: 0 success, 1 a verification check failed, 2 usage or precondition error.
"""

import argparse
import json
import logging
import sys

from pydantic import ValidationError

from .constants import JSON_INDENT, LOG_LEVEL, SEARCH_BOUND
from ._errors import DivisionByZero, FieldMismatch, NotScalar, PreconditionError
from ._irreps import (
    Family,
    build_family,
    casimir_eigenvalue,
    evaluate_representation,
    full_report,
    gram_from_definition,
    gram_L_n_c,
    gram_TL_n_eps,
    lnc_weight,
    numeric_to_json,
    orthonormal_numeric,
    representation_from_json,
    representation_to_json,
)
from ._scalars import FieldSpec, parse_scalar
from ._verma import HighestWeight, chain_to_dot, classify_weight, embedding_chain, render_chain, restricted_weights

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

SCALAR_FLAGS = ("--c", "--mu")


def _dump(document) -> str:
    return json.dumps(document, sort_keys=True, indent=JSON_INDENT, ensure_ascii=False)


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def _write_or_print(text: str, out):
    if out:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text + "\n")
    else:
        print(text)


def _family_field(args) -> FieldSpec:
    return FieldSpec.root_of_unity(args.N) if args.N is not None else FieldSpec.generic()


def cmd_build(args) -> int:
    field = _family_field(args)
    c = parse_scalar(args.c, field) if args.c is not None else None
    mu = parse_scalar(args.mu, field) if args.mu is not None else None
    rep = build_family(args.family, n=args.n, N=args.N, c=c, mu=mu, eps=args.eps)
    _write_or_print(representation_to_json(rep), args.out)
    # stdout carries the JSON when no --out is given
    print(f"Built {rep.family.value}: dim {rep.dim}", file=sys.stdout if args.out else sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    rep = representation_from_json(_read(args.path))
    report = full_report(rep)
    for check in report.checks:
        print(check.render())
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_classify(args) -> int:
    field = FieldSpec.from_label(args.field)
    hw = HighestWeight(parse_scalar(args.mu, field), parse_scalar(args.c, field), field)
    classification = classify_weight(hw, search_bound=args.bound)
    graph = embedding_chain(classification)
    report = {
        "class": classification.label,
        "singular_levels": [level.to_json() for level in classification.levels],
        "embedding_chain": render_chain(graph),
    }
    print(_dump(report))
    if args.dot:
        _write_or_print(chain_to_dot(graph), args.dot)
    return EXIT_OK


def cmd_gram(args) -> int:
    field = _family_field(args)
    family = Family(args.family)
    if family is Family.LnC:
        if args.n is None or args.c is None:
            raise PreconditionError("gram --family LnC needs --n and --c")
        c = parse_scalar(args.c, field)
        gram = gram_L_n_c(args.n, c, field)
        oracle = gram_from_definition(args.n, lnc_weight(args.n, c, field))
    elif family in (Family.TLnEps, Family.TLnEpsN):
        if args.n is None or args.eps is None:
            raise PreconditionError("gram --family TLnEps needs --n and --eps")
        gram = gram_TL_n_eps(args.n, args.eps, field)
        oracle = gram_from_definition(args.n, restricted_weights(args.n, args.eps, field))
    else:
        raise PreconditionError(f"gram is available for LnC and TLnEps, not {family.value}")
    document = gram.to_json()
    document["oracle_agrees"] = gram == oracle
    print(_dump(document))
    return EXIT_OK if document["oracle_agrees"] else EXIT_FAILED


def cmd_casimir(args) -> int:
    rep = representation_from_json(_read(args.path))
    value = casimir_eigenvalue(rep)
    print(_dump({"casimir": value.to_json(), "text": value.render()}))
    return EXIT_OK


def cmd_eval(args) -> int:
    rep = representation_from_json(_read(args.path))
    if args.orthonormal:
        if args.q is None:
            raise PreconditionError("eval --orthonormal needs --q")
        numeric = orthonormal_numeric(rep, args.q)
    else:
        numeric = evaluate_representation(rep, args.q)
    print(_dump(numeric_to_json(numeric)))
    return EXIT_OK


def join_scalar_flags(argv):
    """
    Attach the value of each scalar flag as ``--flag=value``.

    Scalars such as ``-3/2`` or ``-q`` would otherwise be read as option strings.
    """
    joined = []
    tokens = iter(argv)
    for token in tokens:
        if token in SCALAR_FLAGS:
            value = next(tokens, None)
            joined.append(token if value is None else f"{token}={value}")
        else:
            joined.append(token)
    return joined


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sl2q", description="Exact irreps of the algebra sl(2)_q")
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def family_flags(sub):
        sub.add_argument("--family", required=True, choices=[f.value for f in Family])
        sub.add_argument("--n", type=int, help="Dimension or singular level")
        sub.add_argument("--N", type=int, help="Root of unity q = exp(i*pi/N)")
        sub.add_argument("--c", help="Value of C, e.g. 2, 3/2, q-q^-1")
        sub.add_argument("--mu", help="Value of X0 on the highest-weight vector")
        sub.add_argument("--eps", type=int, choices=[1, -1], help="Sign of the restricted weight")

    build = subparsers.add_parser("build", help="Build a representation and write it as JSON")
    family_flags(build)
    build.add_argument("--out", help="Output path (stdout when omitted)")
    build.set_defaults(handler=cmd_build)

    verify = subparsers.add_parser("verify", help="Check relations and weights of a representation file")
    verify.add_argument("path")
    verify.set_defaults(handler=cmd_verify)

    classify = subparsers.add_parser("classify", help="Classify a highest weight")
    classify.add_argument("--field", default="generic", help="'generic' or 'rootN'")
    classify.add_argument("--mu", required=True)
    classify.add_argument("--c", required=True)
    classify.add_argument("--bound", type=int, default=SEARCH_BOUND, help="Largest singular level searched")
    classify.add_argument("--dot", help="Write the embedding chain as a DOT file")
    classify.set_defaults(handler=cmd_classify)

    gram = subparsers.add_parser("gram", help="Shapovalov form of LnC or TLnEps")
    family_flags(gram)
    gram.set_defaults(handler=cmd_gram)

    casimir = subparsers.add_parser("casimir", help="Value of C2 on a representation file")
    casimir.add_argument("path")
    casimir.set_defaults(handler=cmd_casimir)

    evaluate = subparsers.add_parser("eval", help="Evaluate a representation file numerically")
    evaluate.add_argument("path")
    evaluate.add_argument("--q", type=float, help="Value of q (omit at a root of unity)")
    evaluate.add_argument("--orthonormal", action="store_true", help="Use the orthonormal basis (LnC, TLnEps)")
    evaluate.set_defaults(handler=cmd_eval)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(join_scalar_flags(sys.argv[1:] if argv is None else argv))

    if args.debug:
        logging.basicConfig(level=logging.DEBUG)
    else:
        logging.basicConfig(level=getattr(logging, LOG_LEVEL.upper(), logging.WARNING))

    try:
        return args.handler(args)
    except NotScalar as error:
        print(f"FAIL: {error}")
        return EXIT_FAILED
    except (PreconditionError, DivisionByZero, FieldMismatch, ValidationError, ValueError, OSError) as error:
        logger.debug(f"[main] {type(error).__name__}: {error}")
        print(f"error: {error}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
